use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::RatFunc;
use crate::field::Field;
use crate::katomilne::reverse_chain;
use crate::linalg::solve_fraction_free;
use crate::symbolalg::{char_forms, reduced_sigma, reduced_trace, AlgElem, SymbolAlgebra, Verdict};
use crate::towers::{Cubic, ExtDescriptor};
use crate::{EElem, Elem, ElemE, LElem};

use super::construct::{
    algebra_over_e, construct_inseparable_subfield, embed, lift, Construction, Degenerate,
    InseparableSlot, NormWitness,
};

/// `u` with `z u z^-1 = u + 1` and `u^3 - u = delta`.
#[derive(Clone)]
pub struct Complement<S> {
    pub u: AlgElem<S>,
    pub delta: S,
}

impl<S: Field> fmt::Debug for Complement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complement")
            .field("u", &self.u)
            .field("delta", &self.delta)
            .finish()
    }
}

/// Certificate that `[alpha, beta)` and `[alpha, gamma)` share the purely
/// inseparable splitting field `E(z)`, `z^3 = zc = N(lambda) gamma`.
///
/// Elements are stored by coordinates; verification rebuilds every algebra
/// from `alpha`, `beta`, `gamma` and the quadratic datum.
#[derive(Clone, Debug)]
pub struct LinkageCertificate {
    pub alpha: RatFunc,
    pub beta: RatFunc,
    pub gamma: RatFunc,
    /// `r` in `[alpha, beta)` over F with `N(r) = gamma`.
    pub r: Elem,
    /// `E = F(sqrt(d))`, or F when absent.
    pub e_datum: Option<RatFunc>,
    pub lambda: LElem,
    /// `z = lambda r` in `[alpha, beta)` over E.
    pub z: ElemE,
    pub zc: EElem,
    /// `w = lambda y` in `[alpha, gamma)` over E.
    pub w: ElemE,
    pub complement: Option<Complement<EElem>>,
}

impl PartialEq for LinkageCertificate {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha
            && self.beta == other.beta
            && self.gamma == other.gamma
            && self.r.coords() == other.r.coords()
            && self.e_datum == other.e_datum
            && self.lambda.coords() == other.lambda.coords()
            && self.z.coords() == other.z.coords()
            && self.zc == other.zc
            && self.w.coords() == other.w.coords()
            && match (&self.complement, &other.complement) {
                (None, None) => true,
                (Some(a), Some(b)) => a.u.coords() == b.u.coords() && a.delta == b.delta,
                _ => false,
            }
    }
}

impl LinkageCertificate {
    pub fn ext(&self) -> Result<ExtDescriptor> {
        match &self.e_datum {
            None => Ok(ExtDescriptor::trivial()),
            Some(d) => ExtDescriptor::quadratic(d.clone()),
        }
    }
}

impl LinkageCertificate {
    /// Fills in the separable complement if it is missing.
    pub fn with_complement(mut self) -> Result<Self> {
        if self.complement.is_none() {
            self.complement = Some(find_separable_complement(&self.z)?);
        }
        Ok(self)
    }
}

#[derive(Clone, Debug)]
pub enum BuildOutcome {
    Certificate(Box<LinkageCertificate>),
    Degenerate(Degenerate),
}

/// What [`build_certificate_with`] computes beyond the slot and `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Solve for the separable complement `u`. This is by far the most
    /// expensive step on witnesses with non-constant coefficients.
    pub complement: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { complement: true }
    }
}

/// Runs the construction and assembles the certificate, including
/// `w = lambda y_B` in `B = [alpha, gamma)` over E and the separable
/// complement `u`.
pub fn build_certificate(
    alpha: &RatFunc,
    beta: &RatFunc,
    gamma: &RatFunc,
    r: &Elem,
) -> Result<BuildOutcome> {
    build_certificate_with(alpha, beta, gamma, r, BuildOptions::default())
}

pub fn build_certificate_with(
    alpha: &RatFunc,
    beta: &RatFunc,
    gamma: &RatFunc,
    r: &Elem,
    options: BuildOptions,
) -> Result<BuildOutcome> {
    let alg = r.algebra();
    if alg.alpha() != alpha || alg.beta() != beta {
        return Err(Error::ParentMismatch);
    }
    let witness = NormWitness::new(r.clone(), gamma.clone())?;
    let slot = match construct_inseparable_subfield(&witness)? {
        Construction::Slot(s) => s,
        Construction::Degenerate(d) => return Ok(BuildOutcome::Degenerate(d)),
    };
    let e_datum = slot.ext.quadratic_datum().cloned();
    let d = e_datum.clone().map(Arc::new);
    let alg_b = algebra_over_e(alpha, gamma, d.as_ref())?;
    let w = &alg_b.from_k(&slot.lambda) * &alg_b.y();
    if w.pow(3) != alg_b.scalar(slot.zc.clone()) {
        return Err(Error::Inconsistent("w^3 differs from z^3".into()));
    }
    let complement = if options.complement {
        Some(find_separable_complement(&slot.z)?)
    } else {
        None
    };
    Ok(BuildOutcome::Certificate(Box::new(LinkageCertificate {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        r: r.clone(),
        e_datum,
        lambda: slot.lambda,
        z: slot.z,
        zc: slot.zc,
        w,
        complement,
    })))
}

/// Solves `z u - u z = z` for `u`, so `z u z^-1 = u + 1` and `u^3 - u` is
/// central.
///
/// The system is solved fraction-free: `u = X / det` with free coordinates
/// zero, so `u = x` for `z = y`.
pub fn find_separable_complement<S: Field>(z: &AlgElem<S>) -> Result<Complement<S>> {
    let alg = z.algebra();
    if z.as_scalar().is_some() {
        return Err(Error::Precondition("z is central".into()));
    }
    match (&(z * z) * z).as_scalar() {
        None => return Err(Error::Precondition("z^3 is not central".into())),
        Some(c) if c.is_zero() => return Err(Error::Precondition("z is not invertible".into())),
        Some(_) => {}
    }
    let left = alg.regular_rep(z);
    let right = alg.right_rep(z);
    let mut rows = Vec::with_capacity(9);
    let mut rhs = Vec::with_capacity(9);
    for k in 0..9 {
        let mut row: Vec<S> = (0..9)
            .map(|j| left[k][j].clone() - right[k][j].clone())
            .collect();
        let mut b = z.coords()[k].clone();
        let mut den = S::one();
        for e in row.iter().chain(std::iter::once(&b)) {
            den = den.clone() * (e.clone() * den.clone()).denominator();
        }
        if !den.is_one() {
            row.iter_mut().for_each(|e| *e = e.clone() * den.clone());
            b = b * den;
        }
        rows.push(row);
        rhs.push(b);
    }
    let (x, det) = solve_fraction_free(&rows, &rhs)
        .ok_or_else(|| Error::Inconsistent("z u - u z = z has no solution".into()))?;
    let x: [S; 9] = x
        .try_into()
        .map_err(|_| Error::Inconsistent("bad solution".into()))?;
    let det_inv = det.inv().expect("nonzero");
    let u = alg.element(x.map(|c| c * det_inv.clone()));
    let (big, den) = clear_denominators(&u);
    if z * &big != &(&big + &alg.scalar(den.clone())) * z {
        return Err(Error::Inconsistent("z u z^-1 differs from u + 1".into()));
    }
    let d2 = den.square();
    let delta = (&big.pow(3) - &big.scale_by(&d2))
        .as_scalar()
        .ok_or_else(|| Error::Inconsistent("u^3 - u is not central".into()))?
        .exact_div(&(d2 * den));
    Ok(Complement { u, delta })
}

/// `(D u, D)` with `D` clearing the denominators of the coordinates of `u`.
fn clear_denominators<S: Field>(u: &AlgElem<S>) -> (AlgElem<S>, S) {
    let mut den = S::one();
    for c in u.coords() {
        den = den.clone() * (c.clone() * den.clone()).denominator();
    }
    (u.scale_by(&den), den)
}

/// Outcome of [`verify_certificate`]: one transcript line per equation,
/// stopping at the first failure.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub transcript: Vec<String>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.verdict.is_verified()
    }

    pub fn render(&self) -> String {
        let mut out = self.transcript.join("\n");
        out.push('\n');
        match &self.verdict {
            Verdict::Verified => out.push_str("verdict: verified\n"),
            Verdict::Refuted(why) => out.push_str(&format!("verdict: refuted ({why})\n")),
        }
        out
    }
}

struct Transcript {
    lines: Vec<String>,
}

impl Transcript {
    fn check(&mut self, label: &str, ok: bool) -> std::result::Result<(), String> {
        if ok {
            self.lines.push(format!("ok    {label}"));
            Ok(())
        } else {
            self.lines.push(format!("FAIL  {label}"));
            Err(label.to_string())
        }
    }

    fn note(&mut self, text: &str) {
        self.lines.push(format!("note  {text}"));
    }
}

/// Re-checks every claim of the certificate by exact arithmetic.
pub fn verify_certificate(cert: &LinkageCertificate) -> VerificationReport {
    let mut t = Transcript { lines: Vec::new() };
    let verdict = match run_checks(cert, &mut t) {
        Ok(()) => Verdict::Verified,
        Err(label) => Verdict::Refuted(label),
    };
    VerificationReport {
        transcript: t.lines,
        verdict,
    }
}

/// Checks a slot against its witness: the slot equations only, without `w`
/// or a complement.
pub fn verify_slot(witness: &NormWitness, slot: &InseparableSlot) -> VerificationReport {
    let mut t = Transcript { lines: Vec::new() };
    let verdict = match run_slot_checks(witness, slot, &mut t) {
        Ok(()) => Verdict::Verified,
        Err(label) => Verdict::Refuted(label),
    };
    VerificationReport {
        transcript: t.lines,
        verdict,
    }
}

fn run_slot_checks(
    witness: &NormWitness,
    slot: &InseparableSlot,
    t: &mut Transcript,
) -> std::result::Result<(), String> {
    let ext = &slot.ext;
    t.check(
        "[E:F] in {1, 2}",
        matches!(ext.degree(), 1 | 2) && ext.is_field_e(),
    )?;
    let d = ext.e_modulus();
    let d = d.as_ref();
    let r = witness.r();
    let alg_e = algebra_over_e(r.algebra().alpha(), r.algebra().beta(), d).expect("beta != 0");
    t.check("lambda != 0", !slot.lambda.is_zero())?;
    t.check(
        "z = lambda*r",
        slot.z == &alg_e.from_k(&slot.lambda) * &lift(r, &alg_e, d),
    )?;
    t.check("Tr(z) = 0", reduced_trace(&slot.z).is_zero())?;
    t.check("sigma(z) = 0", reduced_sigma(&slot.z).is_zero())?;
    let target = slot.lambda.field_norm() * embed(witness.gamma(), d);
    t.check("z^3 = N(lambda)*gamma", slot.zc == target)?;
    t.check(
        "z*z*z = z^3 * 1",
        slot.z.pow(3) == alg_e.scalar(slot.zc.clone()),
    )?;
    t.check("z is not in E", slot.z.as_scalar().is_none())?;
    Ok(())
}

fn run_checks(cert: &LinkageCertificate, t: &mut Transcript) -> std::result::Result<(), String> {
    t.check("E descriptor: d is not a square in F", cert.ext().is_ok())?;
    let d = cert.e_datum.clone().map(Arc::new);
    let d = d.as_ref();

    let alg = SymbolAlgebra::new(cert.alpha.clone(), cert.beta.clone());
    t.check("A = [alpha, beta) is well formed (beta != 0)", alg.is_ok())?;
    let alg = alg.expect("checked");
    t.check("gamma != 0", !cert.gamma.is_zero())?;
    t.check("gamma is not a cube in F", cert.gamma.cube_root().is_none())?;
    let r = alg.element(cert.r.coords().clone());
    let norm_r = char_forms(&r).map(|f| f.norm);
    t.check(
        "N(r) = gamma",
        norm_r.as_ref().is_ok_and(|n| n == &cert.gamma),
    )?;

    let alg_e = algebra_over_e(&cert.alpha, &cert.beta, d).expect("beta != 0");
    let alg_b = algebra_over_e(&cert.alpha, &cert.gamma, d).expect("gamma != 0");
    let rebase = |e: &EElem| match d {
        Some(d) => e.clone().with_modulus(d),
        None => e.clone(),
    };
    let lambda = Cubic::new(
        cert.lambda.coords().clone().map(|c| rebase(&c)),
        alg_e.k_modulus().clone(),
    );
    t.check("lambda != 0", !lambda.is_zero())?;
    let gamma_e = embed(&cert.gamma, d);
    let norm_lambda = lambda.field_norm();
    let zc = rebase(&cert.zc);
    t.check(
        "z^3 = N(lambda)*gamma",
        zc == norm_lambda.clone() * gamma_e.clone(),
    )?;

    let z = alg_e.element(cert.z.coords().clone().map(|c| rebase(&c)));
    let r_e = lift(&r, &alg_e, d);
    t.check("z = lambda*r", z == &alg_e.from_k(&lambda) * &r_e)?;
    t.check("Tr(z) = 0", reduced_trace(&z).is_zero())?;
    t.check("sigma(z) = 0", reduced_sigma(&z).is_zero())?;
    t.check("z*z*z = z^3 * 1", z.pow(3) == alg_e.scalar(zc.clone()))?;
    t.check("z is not in E", z.as_scalar().is_none())?;
    t.check("z^3 is not a cube in E", zc.cube_root().is_none())?;

    let w = alg_b.element(cert.w.coords().clone().map(|c| rebase(&c)));
    t.check(
        "w = lambda*y in [alpha, gamma) over E",
        w == &alg_b.from_k(&lambda) * &alg_b.y(),
    )?;
    t.check("w*w*w = z^3 * 1", w.pow(3) == alg_b.scalar(zc.clone()))?;

    let delta = match &cert.complement {
        Some(c) => {
            let u = alg_e.element(c.u.coords().clone().map(|x| rebase(&x)));
            let delta = rebase(&c.delta);
            // both identities are checked on U = D u with D clearing denominators
            let (big, den) = clear_denominators(&u);
            let d2 = den.square();
            t.check(
                "u^3 - u = delta",
                &big.pow(3) - &big.scale_by(&d2) == alg_e.scalar(delta.clone() * d2 * den.clone()),
            )?;
            t.check(
                "z*u*z^-1 = u + 1",
                &z * &big == &(&big + &alg_e.scalar(den)) * &z,
            )?;
            delta
        }
        None => {
            t.note("no separable complement recorded");
            EElem::one()
        }
    };

    let alpha_e = embed(&cert.alpha, d);
    let beta_e = embed(&cert.beta, d);
    match reverse_chain(&alpha_e, &beta_e, &gamma_e, &norm_lambda, &delta) {
        Ok(steps) => {
            for step in steps {
                t.check(step.label, step.holds)?;
            }
        }
        Err(_) => t.check("dlog arguments are nonzero", false)?,
    }
    Ok(())
}
