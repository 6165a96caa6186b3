use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exactfield::Gf3;
use crate::field::Field;

/// An element `c0 + c1 * s` of `S[s]/(s^2 - d)`.
///
/// Elements of the base (`c1 = 0`) may omit `d`, which lets `zero()` and
/// `one()` exist without context; so the same type also models the trivial
/// extension `E = F`. Multiplying two elements with nonzero `s`-parts requires
/// at least one of them to carry `d`.
#[derive(Clone)]
pub struct Quad<S> {
    c0: S,
    c1: S,
    d: Option<Arc<S>>,
}

impl<S: Field> Quad<S> {
    pub fn new(c0: S, c1: S, d: Arc<S>) -> Self {
        Quad { c0, c1, d: Some(d) }
    }

    pub fn from_base(c: S) -> Self {
        Quad {
            c0: c,
            c1: S::zero(),
            d: None,
        }
    }

    /// Embeds a base element, remembering `d` when one is given.
    pub fn embed(c: S, d: Option<&Arc<S>>) -> Self {
        Quad {
            c0: c,
            c1: S::zero(),
            d: d.cloned(),
        }
    }

    /// The generator `s` with `s^2 = d`.
    pub fn sqrt_of(d: Arc<S>) -> Self {
        Quad {
            c0: S::zero(),
            c1: S::one(),
            d: Some(d),
        }
    }

    pub fn c0(&self) -> &S {
        &self.c0
    }

    pub fn c1(&self) -> &S {
        &self.c1
    }

    pub fn modulus(&self) -> Option<&Arc<S>> {
        self.d.as_ref()
    }

    pub fn in_base(&self) -> bool {
        self.c1.is_zero()
    }

    pub fn base_value(&self) -> Option<&S> {
        self.in_base().then_some(&self.c0)
    }

    pub fn with_modulus(mut self, d: &Arc<S>) -> Self {
        self.d = Some(d.clone());
        self
    }

    fn pick_d(&self, other: &Self) -> Option<Arc<S>> {
        self.d.clone().or_else(|| other.d.clone())
    }

    fn d_value(&self) -> &S {
        self.d
            .as_deref()
            .expect("quadratic element with nonzero s-part but no modulus")
    }

    pub fn conj(&self) -> Self {
        Quad {
            c0: self.c0.clone(),
            c1: -self.c1.clone(),
            d: self.d.clone(),
        }
    }

    /// `N(p + q s) = p^2 - d q^2`.
    pub fn norm(&self) -> S {
        if self.c1.is_zero() {
            return self.c0.square();
        }
        self.c0.square() - self.d_value().clone() * self.c1.square()
    }

    /// `Tr(p + q s) = 2p`.
    pub fn trace(&self) -> S {
        self.c0.clone() + self.c0.clone()
    }

    /// Matrix of multiplication by `self` on the basis `(1, s)`.
    pub fn mult_matrix(&self) -> Vec<Vec<S>> {
        let dq = if self.c1.is_zero() {
            S::zero()
        } else {
            self.d_value().clone() * self.c1.clone()
        };
        vec![
            vec![self.c0.clone(), dq],
            vec![self.c1.clone(), self.c0.clone()],
        ]
    }
}

impl<S: Field> PartialEq for Quad<S> {
    fn eq(&self, other: &Self) -> bool {
        self.c0 == other.c0 && self.c1 == other.c1
    }
}

impl<S: fmt::Debug + Zero> fmt::Debug for Quad<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{:?}", self.c0)
        } else {
            write!(f, "({:?} + {:?}*s)", self.c0, self.c1)
        }
    }
}

impl<S: Field> Add for Quad<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.pick_d(&rhs);
        Quad {
            c0: self.c0 + rhs.c0,
            c1: self.c1 + rhs.c1,
            d,
        }
    }
}

impl<S: Field> Sub for Quad<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.pick_d(&rhs);
        Quad {
            c0: self.c0 - rhs.c0,
            c1: self.c1 - rhs.c1,
            d,
        }
    }
}

impl<S: Field> Neg for Quad<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Quad {
            c0: -self.c0,
            c1: -self.c1,
            d: self.d,
        }
    }
}

impl<S: Field> Mul for Quad<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.pick_d(&rhs);
        if self.c1.is_zero() {
            return Quad {
                c0: self.c0.clone() * rhs.c0,
                c1: if rhs.c1.is_zero() {
                    S::zero()
                } else {
                    self.c0 * rhs.c1
                },
                d,
            };
        }
        if rhs.c1.is_zero() {
            return Quad {
                c0: self.c0 * rhs.c0.clone(),
                c1: self.c1 * rhs.c0,
                d,
            };
        }
        let dv = d
            .as_deref()
            .expect("quadratic element with nonzero s-part but no modulus")
            .clone();
        let c0 = self.c0.clone() * rhs.c0.clone() + dv * (self.c1.clone() * rhs.c1.clone());
        let c1 = self.c0 * rhs.c1 + self.c1 * rhs.c0;
        Quad { c0, c1, d }
    }
}

impl<S: Field> Zero for Quad<S> {
    fn zero() -> Self {
        Quad::from_base(S::zero())
    }
    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
}

impl<S: Field> One for Quad<S> {
    fn one() -> Self {
        Quad::from_base(S::one())
    }
}

impl<S: Field> Field for Quad<S> {
    fn inv(&self) -> Option<Self> {
        if self.c1.is_zero() {
            return self.c0.inv().map(|c| Quad::embed(c, self.d.as_ref()));
        }
        let n = self.norm().inv()?;
        Some(Quad {
            c0: self.c0.clone() * n.clone(),
            c1: -self.c1.clone() * n,
            d: self.d.clone(),
        })
    }

    /// `(u + v s)^3 = u^3 + v^3 d s`, so both parts are recovered from cube
    /// roots in the base.
    fn cube_root(&self) -> Option<Self> {
        let u = self.c0.cube_root()?;
        if self.c1.is_zero() {
            return Some(Quad::embed(u, self.d.as_ref()));
        }
        let d = self.d_value();
        let v = self.c1.checked_div(d)?.cube_root()?;
        Some(Quad {
            c0: u,
            c1: v,
            d: self.d.clone(),
        })
    }

    fn from_gf3(c: Gf3) -> Self {
        Quad::from_base(S::from_gf3(c))
    }

    fn denominator(&self) -> Self {
        let d0 = self.c0.denominator();
        let d1 = (self.c1.clone() * d0.clone()).denominator();
        Quad::from_base(d0 * d1)
    }

    /// Divides through `rhs * conj(rhs) = N(rhs)` in the base.
    fn exact_div(&self, rhs: &Self) -> Self {
        let (num, den) = if rhs.c1.is_zero() {
            (self.clone(), rhs.c0.clone())
        } else {
            (self.clone() * rhs.conj(), rhs.norm())
        };
        let d = num.d.or_else(|| rhs.d.clone());
        Quad {
            c0: num.c0.exact_div(&den),
            c1: num.c1.exact_div(&den),
            d,
        }
    }

    fn weight(&self) -> usize {
        self.c0.weight() + self.c1.weight()
    }

    fn scale(&self, c: Gf3) -> Self {
        Quad {
            c0: self.c0.scale(c),
            c1: self.c1.scale(c),
            d: self.d.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::RatFunc;
    use crate::linalg;

    fn d() -> Arc<RatFunc> {
        Arc::new(RatFunc::var(0))
    }

    #[test]
    fn generator_squares_to_d() {
        let s = Quad::sqrt_of(d());
        assert_eq!(s.clone() * s, Quad::from_base(RatFunc::var(0)));
    }

    #[test]
    fn norm_matches_determinant() {
        let u = Quad::new(RatFunc::var(1), RatFunc::from_int(2), d());
        assert_eq!(u.norm(), linalg::determinant(&u.mult_matrix()));
        let p = u.c0().clone();
        let q = u.c1().clone();
        assert_eq!(u.norm(), p.square() - RatFunc::var(0) * q.square());
    }

    #[test]
    fn inverse_and_cube_root() {
        let u = Quad::new(RatFunc::var(1), RatFunc::one(), d());
        let inv = u.inv().unwrap();
        assert_eq!(u.clone() * inv, Quad::one());
        let c = u.cube();
        assert_eq!(c.cube_root(), Some(u));
        // s itself is not a cube: s = 0 + 1*s needs cbrt(1/a)
        assert_eq!(Quad::sqrt_of(d()).cube_root(), None);
    }
}
