use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactfield::RatFunc;
use crate::field::Field;
use crate::symbolalg::{char_forms, SymbolAlgebra, Verdict};
use crate::{Algebra, EElem, Elem};

use super::form::{dlog, DiffForm, Differentiable};

/// `a dlog(b_1) ^ ... ^ dlog(b_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolForm {
    a: RatFunc,
    bs: Vec<RatFunc>,
}

impl SymbolForm {
    pub fn new(a: RatFunc, bs: Vec<RatFunc>) -> Result<Self> {
        if bs.iter().any(|b| b.is_zero()) {
            return Err(Error::Precondition("symbol entries must be nonzero".into()));
        }
        Ok(SymbolForm { a, bs })
    }

    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    pub fn bs(&self) -> &[RatFunc] {
        &self.bs
    }

    pub fn degree(&self) -> usize {
        self.bs.len()
    }

    pub fn expand(&self) -> DiffForm<RatFunc> {
        expand_symbol(&self.a, &self.bs)
    }
}

fn expand_symbol<S: Differentiable>(a: &S, bs: &[S]) -> DiffForm<S> {
    let mut out = DiffForm::function(a.clone());
    for b in bs {
        out = out.wedge(&dlog(b).expect("nonzero symbol entry"));
    }
    out
}

/// Representative `(a^3 - a) dlog(b_1) ^ ... ^ dlog(b_n)` of the image under
/// the Artin-Schreier map; exact forms are not quotiented out.
pub fn artin_schreier_image(s: &SymbolForm) -> DiffForm<RatFunc> {
    let a = s.a.cube() - s.a.clone();
    expand_symbol(&a, &s.bs)
}

/// `a dlog(b) -> [a, b)`.
pub fn symbol_to_algebra(s: &SymbolForm) -> Result<Algebra> {
    if s.degree() != 1 {
        return Err(Error::Precondition(format!(
            "symbol of degree {} has no algebra",
            s.degree()
        )));
    }
    SymbolAlgebra::new(s.a.clone(), s.bs[0].clone())
}

/// Certifies triviality of `alpha dlog(beta) ^ dlog(gamma)` by a norm witness.
pub fn triviality_by_witness(
    alpha: &RatFunc,
    beta: &RatFunc,
    gamma: &RatFunc,
    r: &Elem,
) -> Result<Verdict> {
    let alg = r.algebra();
    if alg.alpha() != alpha || alg.beta() != beta {
        return Err(Error::ParentMismatch);
    }
    let norm = char_forms(r)?.norm;
    Ok(if &norm == gamma {
        Verdict::Verified
    } else {
        Verdict::Refuted("N(r) differs from gamma".into())
    })
}

/// One literal form identity checked over E.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainStep {
    pub label: &'static str,
    pub holds: bool,
}

/// The mechanical identities behind the reverse direction of the linkage
/// argument, over E with `zc = N(lambda) gamma`:
/// swapping the dlog factors flips the sign, dlog is additive on
/// `N(lambda) gamma`, and the self-wedge `delta dlog(zc) ^ dlog(zc)` vanishes.
pub fn reverse_chain(
    alpha: &EElem,
    beta: &EElem,
    gamma: &EElem,
    norm_lambda: &EElem,
    delta: &EElem,
) -> Result<Vec<ChainStep>> {
    let dl_beta = dlog(beta)?;
    let dl_gamma = dlog(gamma)?;
    let dl_norm = dlog(norm_lambda)?;
    let zc = norm_lambda.clone() * gamma.clone();
    let dl_zc = dlog(&zc)?;

    let lhs = dl_beta.wedge(&dl_gamma).scale(alpha);
    let rhs = dl_gamma.wedge(&dl_beta).scale(alpha).neg();
    let swap = lhs == rhs;

    let additive = dl_zc == dl_norm.add(&dl_gamma);

    let self_wedge = dl_zc.wedge(&dl_zc).scale(delta).is_zero();

    let omega = dl_beta.wedge(&dl_gamma).scale(alpha);
    let doubled = dl_beta
        .wedge(&dl_gamma)
        .scale(&(alpha.clone() + alpha.clone()));
    let doubling = doubled == omega.neg();

    Ok(vec![
        ChainStep {
            label: "alpha dlog(beta)^dlog(gamma) = -alpha dlog(gamma)^dlog(beta)",
            holds: swap,
        },
        ChainStep {
            label: "dlog(N(lambda)*gamma) = dlog(N(lambda)) + dlog(gamma)",
            holds: additive,
        },
        ChainStep {
            label: "delta dlog(z^3)^dlog(z^3) = 0",
            holds: self_wedge,
        },
        ChainStep {
            label: "2 alpha dlog(beta)^dlog(gamma) = -alpha dlog(beta)^dlog(gamma)",
            holds: doubling,
        },
    ])
}
