use crate::error::{Error, Result};
use crate::exactfield::Gf3;
use crate::field::Field;
use crate::linalg;
use crate::towers::{Cubic, CubicModulus};

use super::algebra::{AlgElem, SymbolAlgebra};

/// Coefficients of the reduced characteristic polynomial
/// `t^3 - tr t^2 - sigma t - norm`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharForms<S> {
    pub tr: S,
    pub sigma: S,
    pub norm: S,
}

impl<S: Field> CharForms<S> {
    /// `a^3 - tr a^2 - sigma a - norm` (zero when the forms are right).
    pub fn cayley_hamilton_residual(&self, a: &AlgElem<S>) -> AlgElem<S> {
        let alg = a.algebra();
        let a2 = a * a;
        let a3 = &a2 * a;
        let t = a2.scale_by(&self.tr);
        let s = a.scale_by(&self.sigma);
        let n = alg.scalar(self.norm.clone());
        &(&(&a3 - &t) - &s) - &n
    }
}

/// Reduced trace, norm and middle form of `a`.
///
/// Over an algebraic closure the left regular representation is three
/// copies of the reduced one, so its characteristic polynomial is
/// `(t^3 - Tr t^2 - sigma t - N)^3 = t^9 - Tr^3 t^6 - sigma^3 t^3 - N^3`
/// in characteristic 3. The forms are read off by cube roots; any other
/// shape means the arithmetic is wrong.
pub fn char_forms<S: Field>(a: &AlgElem<S>) -> Result<CharForms<S>> {
    let m = a.algebra().regular_rep(a);
    let cp = linalg::berkowitz(&m);
    debug_assert_eq!(cp.len(), 10);
    for (deg, c) in cp.iter().enumerate() {
        // cp[i] is the coefficient of t^(9 - i)
        if deg % 3 != 0 && !c.is_zero() {
            return Err(Error::Inconsistent(format!(
                "regular characteristic polynomial has a nonzero coefficient at t^{}",
                9 - deg
            )));
        }
    }
    let root = |idx: usize, name: &str| -> Result<S> {
        (-cp[idx].clone())
            .cube_root()
            .ok_or_else(|| Error::Inconsistent(format!("coefficient giving {name} is not a cube")))
    };
    Ok(CharForms {
        tr: root(3, "Tr")?,
        sigma: root(6, "sigma")?,
        norm: root(9, "N")?,
    })
}

/// Reduced trace from coordinates: `Tr(sum a_ij x^i y^j) = Tr_K(a_00 + a_10 x + a_20 x^2) = 2 a_20`.
pub fn reduced_trace<S: Field>(a: &AlgElem<S>) -> S {
    a.get(2, 0).scale(Gf3::TWO)
}

/// `sigma(a) = (Tr(a^2) - Tr(a)^2) / 2`, and `1/2 = 2` in GF(3).
pub fn reduced_sigma<S: Field>(a: &AlgElem<S>) -> S {
    let t = reduced_trace(a);
    let t2 = reduced_trace(&(a * a));
    (t2 - t.square()).scale(Gf3::TWO)
}

pub fn reduced_norm<S: Field>(a: &AlgElem<S>) -> Result<S> {
    char_forms(a).map(|f| f.norm)
}

/// Two-sided inverse, or `None` exactly when the reduced norm vanishes.
pub fn inverse<S: Field>(a: &AlgElem<S>) -> Option<AlgElem<S>> {
    let alg = a.algebra();
    let m = alg.regular_rep(a);
    let mut e1 = vec![S::zero(); 9];
    e1[0] = S::one();
    let sol = linalg::solve(&m, &e1)?;
    let coords: [S; 9] = sol.try_into().ok()?;
    Some(alg.element(coords))
}

/// A claimed reason why `[alpha, beta)` splits.
#[derive(Clone, Debug)]
pub enum SplitWitness<S> {
    /// `lambda` in `K = F[x]/(x^3 - x - alpha)` with `N(lambda) = beta`.
    Norm(Cubic<S>),
    /// `lambda` in F with `lambda^3 - lambda = alpha`.
    ArtinSchreier(S),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Refuted(String),
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }
}

/// Checks a splitting certificate. Never searches.
pub fn is_split_certificate<S: Field>(
    alg: &SymbolAlgebra<S>,
    witness: &SplitWitness<S>,
) -> Result<Verdict> {
    match witness {
        SplitWitness::Norm(lambda) => {
            match lambda.modulus().map(|m| m.as_ref()) {
                Some(CubicModulus::ArtinSchreier(a)) if a == alg.alpha() => {}
                None if lambda.in_base() => {}
                _ => {
                    return Err(Error::MalformedWitness(
                        "norm witness does not live in F[x]/(x^3 - x - alpha)".into(),
                    ))
                }
            }
            let lambda = Cubic::new(lambda.coords().clone(), alg.k_modulus().clone());
            let n = lambda.field_norm();
            Ok(if &n == alg.beta() {
                Verdict::Verified
            } else {
                Verdict::Refuted("N(lambda) != beta".into())
            })
        }
        SplitWitness::ArtinSchreier(l) => {
            let image = l.cube() - l.clone();
            Ok(if &image == alg.alpha() {
                Verdict::Verified
            } else {
                Verdict::Refuted("lambda^3 - lambda != alpha".into())
            })
        }
    }
}
