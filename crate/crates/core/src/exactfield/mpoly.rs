use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gf3::Gf3;
use super::monomial::{Monomial, MAX_VARS};

/// A multivariate polynomial over GF(3).
///
/// Terms are kept sorted by descending graded-lex monomial with no zero
/// coefficients, so structural equality is value equality. Variable names
/// are not stored here; they live in [`crate::syntax::Vars`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Gf3)>,
}

impl MPoly {
    pub fn constant(c: Gf3) -> MPoly {
        if c.is_zero() {
            MPoly::default()
        } else {
            MPoly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(var: usize) -> MPoly {
        MPoly::monomial(Monomial::var(var), Gf3::ONE)
    }

    pub fn monomial(m: Monomial, c: Gf3) -> MPoly {
        if c.is_zero() {
            MPoly::default()
        } else {
            MPoly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Gf3)>) -> MPoly {
        let mut v: Vec<(Monomial, Gf3)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MPoly {
            terms: combine_sorted(v),
        }
    }

    pub fn terms(&self) -> &[(Monomial, Gf3)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == Gf3::ONE
    }

    /// The constant term's coefficient.
    pub fn constant_coeff(&self) -> Gf3 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => Gf3::ZERO,
        }
    }

    pub fn leading(&self) -> Option<(Monomial, Gf3)> {
        self.terms.first().copied()
    }

    pub fn leading_coeff(&self) -> Gf3 {
        self.terms.first().map(|t| t.1).unwrap_or(Gf3::ZERO)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(var)).max().unwrap_or(0)
    }

    /// Lowest exponent of `var` over all terms; `None` for zero.
    pub fn order_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.0.exp(var)).min()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.iter().filter_map(|t| t.0.max_var()).max()
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(var) != 0)
    }

    pub fn scale(&self, c: Gf3) -> MPoly {
        if c.is_zero() {
            return MPoly::default();
        }
        MPoly {
            terms: self.terms.iter().map(|&(m, k)| (m, k * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        match self.leading_coeff().inverse() {
            Some(inv) => self.scale(inv),
            None => MPoly::default(),
        }
    }

    pub fn mul_term(&self, m: Monomial, c: Gf3) -> MPoly {
        if c.is_zero() {
            return MPoly::default();
        }
        MPoly {
            terms: self.terms.iter().map(|&(n, k)| (n.mul(m), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Frobenius: `f^3` computed by tripling exponents.
    pub fn frobenius(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|&(m, c)| (m.pow(3).expect("monomial exponent overflow"), c))
                .collect(),
        }
    }

    /// The polynomial `g` with `g^3 = self`, when all exponents are multiples of 3.
    pub fn cube_root(&self) -> Option<MPoly> {
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| m.root(3).map(|r| (r, c)))
            .collect::<Option<Vec<_>>>()?;
        Some(MPoly { terms })
    }

    /// Square root with leading coefficient 1, by peeling leading terms.
    pub fn sqrt(&self) -> Option<MPoly> {
        if self.is_zero() {
            return Some(MPoly::default());
        }
        let (lm, lc) = self.leading()?;
        // squares in GF(3) are 0 and 1
        if lc != Gf3::ONE {
            return None;
        }
        let lead = lm.root(2)?;
        let mut root = MPoly::monomial(lead, Gf3::ONE);
        // self - root^2, updated incrementally
        let mut rest = self - &(&root * &root);
        // 2 * lead, inverse of 2 is 2
        while let Some((m, c)) = rest.leading() {
            if !lead.divides(m) {
                return None;
            }
            let q = lead.quotient_of(m);
            if q >= lead {
                return None;
            }
            let coeff = c * Gf3::TWO;
            let t = MPoly::monomial(q, coeff);
            // (root + t)^2 = root^2 + 2 root t + t^2
            let delta = &(&root * &t).scale(Gf3::TWO) + &(&t * &t);
            rest = &rest - &delta;
            root = &root + &t;
        }
        Some(root)
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter_map(|&(m, c)| {
            let e = m.exp(var);
            let k = c * Gf3::new(e as i64);
            (!k.is_zero()).then(|| (m.with_exp(var, e - 1), k))
        }))
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &MPoly) -> Option<MPoly> {
        let (glm, glc) = g.leading()?;
        if g.len() == 1 {
            let inv = glc.inverse()?;
            let mut terms = Vec::with_capacity(self.len());
            for &(m, c) in &self.terms {
                if !glm.divides(m) {
                    return None;
                }
                terms.push((glm.quotient_of(m), c * inv));
            }
            return Some(MPoly { terms });
        }
        let inv = glc.inverse()?;
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rest.leading() {
            if !glm.divides(m) {
                return None;
            }
            let q = glm.quotient_of(m);
            let k = c * inv;
            quot.push((q, k));
            rest = &rest - &g.mul_term(q, k);
        }
        // quotient terms are produced in strictly descending order
        Some(MPoly { terms: quot })
    }

    /// Coefficients of `self` viewed as a polynomial in `var`, index = power.
    pub fn to_univariate(&self, var: usize) -> Vec<MPoly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, Gf3)>> = vec![Vec::new(); deg + 1];
        for &(m, c) in &self.terms {
            let e = m.exp(var);
            buckets[e as usize].push((m.with_exp(var, 0), c));
        }
        buckets.into_iter().map(MPoly::from_terms).collect()
    }

    pub fn from_univariate(coeffs: &[MPoly], var: usize) -> MPoly {
        let x = Monomial::var(var);
        let mut terms = Vec::new();
        let mut xp = Monomial::ONE;
        for (i, c) in coeffs.iter().enumerate() {
            if i > 0 {
                xp = xp.mul(x);
            }
            terms.extend(c.terms.iter().map(|&(m, k)| (m.mul(xp), k)));
        }
        MPoly::from_terms(terms)
    }

    /// Evaluates at a point of GF(3)^n.
    pub fn eval(&self, point: &[Gf3]) -> Gf3 {
        let mut acc = Gf3::ZERO;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &p) in point.iter().enumerate().take(MAX_VARS) {
                // p^e in GF(3): 0 for p = 0, and p^(e mod 2) otherwise
                match m.exp(i) {
                    0 => {}
                    e if p.is_zero() || e % 2 == 1 => v *= p,
                    _ => {}
                }
            }
            acc += v;
        }
        acc
    }
}

fn combine_sorted(v: Vec<(Monomial, Gf3)>) -> Vec<(Monomial, Gf3)> {
    let mut out: Vec<(Monomial, Gf3)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 += c,
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|t| t.1.is_zero()) {
        out.pop();
    }
    out
}

fn merge(a: &[(Monomial, Gf3)], b: &[(Monomial, Gf3)], negate_b: bool) -> MPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: Gf3| if negate_b { -c } else { c };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, fix(b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1 + fix(b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(m, c)| (m, fix(c))));
    MPoly { terms: out }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::default();
        }
        if rhs.len() == 1 {
            return self.mul_term(rhs.terms[0].0, rhs.terms[0].1);
        }
        if self.len() == 1 {
            return rhs.mul_term(self.terms[0].0, self.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.len() * rhs.len());
        for &(m, c) in &self.terms {
            for &(n, k) in &rhs.terms {
                prods.push((m.mul(n), c * k));
            }
        }
        prods.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MPoly {
            terms: combine_sorted(prods),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(Gf3::TWO)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Gf3::ONE)
    }
}
