use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::{gcd, Gf3, MPoly, RatFunc};
use crate::field::Field;
use crate::symbolalg::{char_forms, reduced_sigma, reduced_trace};
use crate::towers::{Cubic, ExtDescriptor, Quad};
use crate::{AlgebraE, EElem, Elem, ElemE, LElem};

/// Sweep budget when every vector of V is isotropic.
const SWEEP_LIMIT: usize = 2000;

/// `r` in `[alpha, beta)` with `N(r) = gamma`, `gamma` not a cube.
#[derive(Clone, Debug)]
pub struct NormWitness {
    r: Elem,
    gamma: RatFunc,
}

impl NormWitness {
    pub fn new(r: Elem, gamma: RatFunc) -> Result<Self> {
        if gamma.is_zero() {
            return Err(Error::Precondition("gamma must be nonzero".into()));
        }
        if gamma.cube_root().is_some() {
            return Err(Error::Precondition("gamma is a cube in F".into()));
        }
        if char_forms(&r)?.norm != gamma {
            return Err(Error::Precondition("N(r) differs from gamma".into()));
        }
        Ok(NormWitness { r, gamma })
    }

    pub fn r(&self) -> &Elem {
        &self.r
    }

    pub fn gamma(&self) -> &RatFunc {
        &self.gamma
    }
}

/// `q(u, v) = a u^2 + b uv + c v^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
}

impl BinaryForm {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// `b^2 - 4ac`, and `4 = 1`.
    pub fn discriminant(&self) -> RatFunc {
        self.b.square() - self.a.clone() * self.c.clone()
    }
}

/// The field E, `lambda` in `L = E[x]/(x^3 - x - alpha)` and `z = lambda r`
/// with `z^3 = zc` central.
#[derive(Clone, Debug)]
pub struct InseparableSlot {
    pub ext: ExtDescriptor,
    pub lambda: LElem,
    pub z: ElemE,
    pub zc: EElem,
    pub form: BinaryForm,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DegenerateReason {
    /// `lambda r = scalar`, so `r = scalar / lambda` lies in `K_E`.
    Central { scalar: EElem, norm_confirmed: bool },
    /// `z^3 = root^3` with `root` in E.
    CubeInE { root: EElem },
}

#[derive(Clone, Debug)]
pub struct Degenerate {
    pub ext: ExtDescriptor,
    pub lambda: LElem,
    pub reason: DegenerateReason,
    pub attempts: usize,
}

#[derive(Clone, Debug)]
pub enum Construction {
    Slot(InseparableSlot),
    Degenerate(Degenerate),
}

pub(crate) fn embed(f: &RatFunc, d: Option<&Arc<RatFunc>>) -> EElem {
    Quad::embed(f.clone(), d)
}

pub(crate) fn algebra_over_e(
    alpha: &RatFunc,
    beta: &RatFunc,
    d: Option<&Arc<RatFunc>>,
) -> Result<AlgebraE> {
    AlgebraE::new(embed(alpha, d), embed(beta, d))
}

pub(crate) fn lift(r: &Elem, alg: &AlgebraE, d: Option<&Arc<RatFunc>>) -> ElemE {
    r.map_into(alg, |c| embed(c, d))
}

/// Least common multiple of the denominators, making `v` polynomial.
fn clear_denominators(v: [RatFunc; 3]) -> [RatFunc; 3] {
    let mut l = MPoly::one();
    for c in &v {
        let g = gcd(&l, c.den());
        l = &l * &c.den().div_exact(&g).expect("gcd divides");
    }
    let l = RatFunc::from_poly(l);
    v.map(|c| c * l.clone())
}

/// Basis of `ker f1` in `K = span(1, x, x^2)`, or `(1, x)` when `f1 = 0`.
fn kernel_basis(t: &[RatFunc; 3]) -> [[RatFunc; 3]; 2] {
    let z = RatFunc::zero;
    let Some(p) = t.iter().position(|c| !c.is_zero()) else {
        return [[RatFunc::one(), z(), z()], [z(), RatFunc::one(), z()]];
    };
    let inv = t[p].inv().expect("nonzero pivot");
    let mut out = Vec::with_capacity(2);
    for f in (0..3).filter(|&f| f != p) {
        let mut v = [z(), z(), z()];
        v[f] = RatFunc::one();
        v[p] = -(t[f].clone() * inv.clone());
        out.push(clear_denominators(v));
    }
    out.try_into()
        .unwrap_or_else(|_| unreachable!("two kernel vectors"))
}

/// The quadratic form `c -> sigma(c r)` on K through its polar values.
struct SigmaForm {
    diag: [RatFunc; 3],
    polar: [[RatFunc; 3]; 3],
}

impl SigmaForm {
    fn eval(&self, c: &[RatFunc; 3]) -> RatFunc {
        let mut acc = RatFunc::zero();
        for i in 0..3 {
            if c[i].is_zero() {
                continue;
            }
            acc = acc + c[i].square() * self.diag[i].clone();
            for j in i + 1..3 {
                if !c[j].is_zero() {
                    acc = acc + c[i].clone() * c[j].clone() * self.polar[i][j].clone();
                }
            }
        }
        acc
    }
}

fn add3(a: &[RatFunc; 3], b: &[RatFunc; 3]) -> [RatFunc; 3] {
    std::array::from_fn(|i| a[i].clone() + b[i].clone())
}

/// Runs the construction: `f1(lambda) = Tr(lambda r)`, its kernel V, the
/// form `f2(lambda) = sigma(lambda r)` on V, an isotropic `lambda` over E,
/// and `z = lambda r`.
pub fn construct_inseparable_subfield(witness: &NormWitness) -> Result<Construction> {
    let r = witness.r();
    let alg = r.algebra();
    let powers: Vec<Elem> = (0..3).map(|i| alg.basis(i, 0)).collect();
    let prods: Vec<Elem> = powers.iter().map(|p| p * r).collect();

    let forms: Vec<_> = prods.iter().map(char_forms).collect::<Result<_>>()?;
    let t: [RatFunc; 3] = std::array::from_fn(|i| forms[i].tr.clone());
    let diag: [RatFunc; 3] = std::array::from_fn(|i| forms[i].sigma.clone());
    let mut polar: [[RatFunc; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in i + 1..3 {
            let s = char_forms(&(&prods[i] + &prods[j]))?.sigma;
            polar[i][j] = s - diag[i].clone() - diag[j].clone();
        }
    }
    let sigma = SigmaForm { diag, polar };

    let [v1, v2] = kernel_basis(&t);
    let a = sigma.eval(&v1);
    let c = sigma.eval(&v2);
    let b = sigma.eval(&add3(&v1, &v2)) - a.clone() - c.clone();
    let form = BinaryForm { a, b, c };

    let mut search = Search {
        witness,
        v1: &v1,
        v2: &v2,
        form: &form,
        attempts: 0,
        first_degenerate: None,
    };

    let one = RatFunc::one;
    let zero = RatFunc::zero;
    let (a, b, c) = (&form.a, &form.b, &form.c);
    if form.is_zero() {
        let ext = ExtDescriptor::trivial();
        let points = [(1, 0), (0, 1), (1, 1), (1, 2)];
        for (u, v) in points {
            let (u, v) = (RatFunc::from_int(u), RatFunc::from_int(v));
            if let Some(slot) = search.try_candidate(&ext, None, u, v)? {
                return Ok(Construction::Slot(slot));
            }
        }
        if let Some(slot) = search.sweep(&ext)? {
            return Ok(Construction::Slot(slot));
        }
        return search.give_up();
    }
    if a.is_zero() || c.is_zero() {
        let ext = ExtDescriptor::trivial();
        let mut cands = Vec::new();
        if a.is_zero() {
            cands.push((one(), zero()));
            if !b.is_zero() {
                cands.push((c.clone(), -b.clone()));
            }
        } else {
            cands.push((zero(), one()));
            if !b.is_zero() {
                cands.push((-b.clone(), a.clone()));
            }
        }
        for (u, v) in cands {
            if let Some(slot) = search.try_candidate(&ext, None, u, v)? {
                return Ok(Construction::Slot(slot));
            }
        }
        return search.give_up();
    }

    let disc = form.discriminant();
    let two_a = a.scale(Gf3::TWO);
    if disc.is_zero() {
        let ext = ExtDescriptor::trivial();
        if let Some(slot) = search.try_candidate(&ext, None, -b.clone(), two_a)? {
            return Ok(Construction::Slot(slot));
        }
        return search.give_up();
    }
    if let Some(s) = disc.sqrt() {
        let ext = ExtDescriptor::trivial();
        for root in [s.clone(), -s] {
            let u = root - b.clone();
            if let Some(slot) = search.try_candidate_e(
                &ext,
                None,
                Quad::from_base(u),
                Quad::from_base(two_a.clone()),
            )? {
                return Ok(Construction::Slot(slot));
            }
        }
        return search.give_up();
    }
    // d = disc * den^2 is a polynomial; the candidate scales by den
    let den = RatFunc::from_poly(disc.den().clone());
    let d = Arc::new(disc * den.square());
    let ext = ExtDescriptor::quadratic((*d).clone())?;
    let s = Quad::sqrt_of(d.clone());
    for root in [s.clone(), -s] {
        let u = root - embed(&(b.clone() * den.clone()), Some(&d));
        let v = embed(&(two_a.clone() * den.clone()), Some(&d));
        if let Some(slot) = search.try_candidate_e(&ext, Some(&d), u, v)? {
            return Ok(Construction::Slot(slot));
        }
    }
    search.give_up()
}

struct Search<'a> {
    witness: &'a NormWitness,
    v1: &'a [RatFunc; 3],
    v2: &'a [RatFunc; 3],
    form: &'a BinaryForm,
    attempts: usize,
    first_degenerate: Option<Degenerate>,
}

impl Search<'_> {
    fn try_candidate(
        &mut self,
        ext: &ExtDescriptor,
        d: Option<&Arc<RatFunc>>,
        u: RatFunc,
        v: RatFunc,
    ) -> Result<Option<InseparableSlot>> {
        self.try_candidate_e(ext, d, embed(&u, d), embed(&v, d))
    }

    fn try_candidate_e(
        &mut self,
        ext: &ExtDescriptor,
        d: Option<&Arc<RatFunc>>,
        u: EElem,
        v: EElem,
    ) -> Result<Option<InseparableSlot>> {
        self.attempts += 1;
        let r = self.witness.r();
        let alg = r.algebra();
        let alg_e = algebra_over_e(alg.alpha(), alg.beta(), d)?;
        let r_e = lift(r, &alg_e, d);
        let coords: [EElem; 3] = std::array::from_fn(|i| {
            u.clone() * embed(&self.v1[i], d) + v.clone() * embed(&self.v2[i], d)
        });
        let lambda = Cubic::new(coords, alg_e.k_modulus().clone());
        if lambda.is_zero() {
            return Ok(None);
        }
        let z = &alg_e.from_k(&lambda) * &r_e;
        let gamma_e = embed(self.witness.gamma(), d);

        if let Some(scalar) = z.as_scalar() {
            let norm_confirmed = confirm_norm(&lambda, scalar, &r_e, &gamma_e);
            self.record(Degenerate {
                ext: ext.clone(),
                lambda,
                reason: DegenerateReason::Central {
                    scalar: scalar.clone(),
                    norm_confirmed,
                },
                attempts: 0,
            });
            return Ok(None);
        }

        if !reduced_trace(&z).is_zero() {
            return Err(Error::Inconsistent(
                "Tr(lambda r) is nonzero on an isotropic vector".into(),
            ));
        }
        if !reduced_sigma(&z).is_zero() {
            return Err(Error::Inconsistent(
                "sigma(lambda r) is nonzero on an isotropic vector".into(),
            ));
        }
        let zc = lambda.field_norm() * gamma_e;
        if z.pow(3) != alg_e.scalar(zc.clone()) {
            return Err(Error::Inconsistent(
                "z^3 differs from N(lambda) gamma".into(),
            ));
        }
        if let Some(root) = zc.cube_root() {
            self.record(Degenerate {
                ext: ext.clone(),
                lambda,
                reason: DegenerateReason::CubeInE { root },
                attempts: 0,
            });
            return Ok(None);
        }
        Ok(Some(InseparableSlot {
            ext: ext.clone(),
            lambda,
            z,
            zc,
            form: self.form.clone(),
        }))
    }

    fn record(&mut self, deg: Degenerate) {
        if self.first_degenerate.is_none() {
            self.first_degenerate = Some(deg);
        }
    }

    /// Coefficients of degree at most one in the variables that occur.
    fn sweep(&mut self, ext: &ExtDescriptor) -> Result<Option<InseparableSlot>> {
        let r = self.witness.r();
        let alg = r.algebra();
        let nvars = r
            .coords()
            .iter()
            .chain([alg.alpha(), alg.beta(), self.witness.gamma()])
            .filter_map(|c| c.max_var())
            .max()
            .map_or(0, |m| m + 1);
        let monos: Vec<RatFunc> = std::iter::once(RatFunc::one())
            .chain((0..nvars).map(RatFunc::var))
            .collect();
        let digits = 2 * monos.len();
        let total = 3usize.saturating_pow(digits as u32);
        for code in 1..total {
            if self.attempts >= SWEEP_LIMIT {
                break;
            }
            let mut k = code;
            let mut coeffs = Vec::with_capacity(digits);
            for _ in 0..digits {
                coeffs.push(Gf3::new((k % 3) as i64));
                k /= 3;
            }
            let constant_only = coeffs
                .iter()
                .enumerate()
                .all(|(i, c)| i % monos.len() == 0 || *c == Gf3::ZERO);
            if constant_only {
                continue;
            }
            let comb = |cs: &[Gf3]| {
                cs.iter()
                    .zip(&monos)
                    .fold(RatFunc::zero(), |acc, (c, m)| acc + m.scale(*c))
            };
            let u = comb(&coeffs[..monos.len()]);
            let v = comb(&coeffs[monos.len()..]);
            if let Some(slot) = self.try_candidate(ext, None, u, v)? {
                return Ok(Some(slot));
            }
        }
        Ok(None)
    }

    fn give_up(self) -> Result<Construction> {
        let attempts = self.attempts;
        match self.first_degenerate {
            Some(mut deg) => {
                deg.attempts = attempts;
                Ok(Construction::Degenerate(deg))
            }
            None if attempts >= SWEEP_LIMIT => Err(Error::BudgetExceeded(format!(
                "no candidate among the first {SWEEP_LIMIT} isotropic vectors"
            ))),
            None => Err(Error::Inconsistent(
                "no isotropic vector produced a candidate".into(),
            )),
        }
    }
}

/// `z = c` forces `r = c / lambda` in `K_E` and `gamma = N(c / lambda)`.
fn confirm_norm(lambda: &LElem, scalar: &EElem, r_e: &ElemE, gamma_e: &EElem) -> bool {
    let Some(inv) = lambda.inv() else {
        return false;
    };
    let mu = inv.scale_by(scalar);
    r_e.as_k().is_some_and(|k| k == mu) && &mu.field_norm() == gamma_e
}
