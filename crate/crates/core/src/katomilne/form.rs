use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactfield::{Gf3, RatFunc};
use crate::field::Field;
use crate::towers::Quad;

/// Scalars with partial derivatives in each variable of the base field.
pub trait Differentiable: Field {
    fn partial(&self, var: usize) -> Self;
    /// Largest variable index the value depends on.
    fn max_var(&self) -> Option<usize>;
}

impl Differentiable for RatFunc {
    fn partial(&self, var: usize) -> Self {
        self.derivative(var)
    }

    fn max_var(&self) -> Option<usize> {
        RatFunc::max_var(self)
    }
}

/// On `F(s)` with `s^2 = d`: `ds = dd / (2s) = s dd / (2d)`, hence
/// `d(p + q s) = dp + s (dq + q dd / (2d))`, and `1/2 = 2` in GF(3).
impl Differentiable for Quad<RatFunc> {
    fn partial(&self, var: usize) -> Self {
        let dp = self.c0().derivative(var);
        let Some(d) = self.modulus().filter(|_| !self.c1().is_zero()) else {
            return Quad::embed(dp, self.modulus());
        };
        let q = self.c1();
        let dd = d.derivative(var);
        let ds_part = if dd.is_zero() {
            RatFunc::zero()
        } else {
            (q.clone() * dd * d.inv().expect("nonzero d")).scale(Gf3::TWO)
        };
        Quad::new(dp, q.derivative(var) + ds_part, d.clone())
    }

    fn max_var(&self) -> Option<usize> {
        let own = self.c0().max_var().max(self.c1().max_var());
        own.max(self.modulus().and_then(|d| d.max_var()))
    }
}

/// A differential form `sum f_I dv_I` of fixed degree.
///
/// Index tuples are strictly increasing; zero coefficients are dropped.
#[derive(Clone, PartialEq)]
pub struct DiffForm<S> {
    degree: usize,
    terms: BTreeMap<Vec<usize>, S>,
}

impl<S: Differentiable> DiffForm<S> {
    pub fn zero(degree: usize) -> Self {
        DiffForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn function(f: S) -> Self {
        let mut w = DiffForm::zero(0);
        w.insert(Vec::new(), f);
        w
    }

    /// The basic form `dv_var`.
    pub fn dv(var: usize) -> Self {
        let mut w = DiffForm::zero(1);
        w.insert(vec![var], S::one());
        w
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: &[usize]) -> S {
        self.terms.get(idx).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, idx: Vec<usize>, f: S) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            Some(old) => {
                let sum = old + f;
                if !sum.is_zero() {
                    self.terms.insert(idx, sum);
                }
            }
            None => {
                self.terms.insert(idx, f);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "adding forms of different degree"
        );
        let mut out = self.clone();
        for (idx, f) in &other.terms {
            out.insert(idx.clone(), f.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, f: &S) -> Self {
        let mut out = DiffForm::zero(self.degree);
        for (idx, g) in &self.terms {
            out.insert(idx.clone(), g.clone() * f.clone());
        }
        out
    }

    /// Exterior product with sign bookkeeping; repeated indices vanish.
    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = DiffForm::zero(self.degree + other.degree);
        for (i1, f) in &self.terms {
            for (i2, g) in &other.terms {
                let mut idx: Vec<usize> = i1.iter().chain(i2).copied().collect();
                let Some(sign) = sort_with_sign(&mut idx) else {
                    continue;
                };
                out.insert(idx, (f.clone() * g.clone()).scale(sign));
            }
        }
        out
    }

    /// Exterior derivative `d(sum f_I dv_I) = sum df_I ^ dv_I`.
    pub fn exterior_d(&self) -> Self {
        let mut out = DiffForm::zero(self.degree + 1);
        for (idx, f) in &self.terms {
            let df = d(f);
            let mut basic = DiffForm::function(S::one());
            for &v in idx {
                basic = basic.wedge(&DiffForm::dv(v));
            }
            out = out.add(&df.wedge(&basic));
        }
        out
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .iter()
            .flat_map(|(idx, f)| idx.iter().copied().max().into_iter().chain(f.max_var()))
            .max()
    }
}

/// Bubble sort returning the permutation sign, `None` on a repeated index.
fn sort_with_sign(idx: &mut [usize]) -> Option<Gf3> {
    let mut sign = Gf3::ONE;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

impl<S: Differentiable> fmt::Debug for DiffForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let ds: Vec<String> = idx.iter().map(|v| format!("d(v{v})")).collect();
                if ds.is_empty() {
                    format!("{c:?}")
                } else {
                    format!("{c:?} * {}", ds.join("^"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `df = sum (df/dv_i) dv_i`.
pub fn d<S: Differentiable>(f: &S) -> DiffForm<S> {
    let mut out = DiffForm::zero(1);
    if let Some(top) = f.max_var() {
        for v in 0..=top {
            out.insert(vec![v], f.partial(v));
        }
    }
    out
}

/// `dlog(f) = df / f`.
pub fn dlog<S: Differentiable>(f: &S) -> Result<DiffForm<S>> {
    let inv = f
        .inv()
        .ok_or_else(|| Error::Precondition("dlog of zero".into()))?;
    Ok(d(f).scale(&inv))
}

pub fn wedge<S: Differentiable>(a: &DiffForm<S>, b: &DiffForm<S>) -> DiffForm<S> {
    a.wedge(b)
}
