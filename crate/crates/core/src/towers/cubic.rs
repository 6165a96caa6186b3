use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;

/// Defining relation of a degree-3 extension.
#[derive(Clone, Debug, PartialEq)]
pub enum CubicModulus<S> {
    /// `x^3 = x + alpha`, cyclic with generator `x -> x + 1`.
    ArtinSchreier(S),
    /// `z^3 = c`, purely inseparable.
    Inseparable(S),
}

impl<S: Field> CubicModulus<S> {
    pub fn datum(&self) -> &S {
        match self {
            CubicModulus::ArtinSchreier(a) | CubicModulus::Inseparable(a) => a,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CubicModulus::ArtinSchreier(_) => "artin-schreier",
            CubicModulus::Inseparable(_) => "inseparable",
        }
    }
}

/// An element `c0 + c1 g + c2 g^2` of a cubic extension with generator `g`.
///
/// As with [`super::Quad`], elements of the base may omit the modulus.
#[derive(Clone)]
pub struct Cubic<S> {
    coords: [S; 3],
    modulus: Option<Arc<CubicModulus<S>>>,
}

impl<S: Field> Cubic<S> {
    pub fn new(coords: [S; 3], modulus: Arc<CubicModulus<S>>) -> Self {
        Cubic {
            coords,
            modulus: Some(modulus),
        }
    }

    pub fn from_base(c: S) -> Self {
        Cubic {
            coords: [c, S::zero(), S::zero()],
            modulus: None,
        }
    }

    pub fn generator(modulus: Arc<CubicModulus<S>>) -> Self {
        Cubic::new([S::zero(), S::one(), S::zero()], modulus)
    }

    pub fn coords(&self) -> &[S; 3] {
        &self.coords
    }

    pub fn modulus(&self) -> Option<&Arc<CubicModulus<S>>> {
        self.modulus.as_ref()
    }

    pub fn in_base(&self) -> bool {
        self.coords[1].is_zero() && self.coords[2].is_zero()
    }

    fn pick(&self, other: &Self) -> Option<Arc<CubicModulus<S>>> {
        self.modulus.clone().or_else(|| other.modulus.clone())
    }

    fn require_modulus(&self) -> &CubicModulus<S> {
        self.modulus
            .as_deref()
            .expect("cubic element outside the base but no modulus")
    }

    /// The Galois generator `x -> x + 1` of an Artin-Schreier extension.
    pub fn galois_sigma(&self) -> Result<Self> {
        if self.in_base() {
            return Ok(self.clone());
        }
        match self.require_modulus() {
            CubicModulus::ArtinSchreier(_) => {}
            CubicModulus::Inseparable(_) => {
                return Err(Error::WrongExtensionKind {
                    expected: "artin-schreier",
                })
            }
        }
        let [c0, c1, c2] = self.coords.clone();
        // c0 + c1 (x+1) + c2 (x^2 + 2x + 1)
        let two_c2 = c2.clone() + c2.clone();
        Ok(Cubic {
            coords: [c0 + c1.clone() + c2.clone(), c1 + two_c2, c2],
            modulus: self.modulus.clone(),
        })
    }

    /// Matrix of multiplication by `self` on the basis `(1, g, g^2)`.
    pub fn mult_matrix(&self) -> Vec<Vec<S>> {
        let basis: Vec<Cubic<S>> = (0..3)
            .map(|i| {
                let mut c = [S::zero(), S::zero(), S::zero()];
                c[i] = S::one();
                Cubic {
                    coords: c,
                    modulus: self.modulus.clone(),
                }
            })
            .collect();
        let cols: Vec<[S; 3]> = basis
            .into_iter()
            .map(|e| (self.clone() * e).coords)
            .collect();
        (0..3)
            .map(|r| (0..3).map(|c| cols[c][r].clone()).collect())
            .collect()
    }

    /// Determinant of the multiplication matrix.
    pub fn field_norm(&self) -> S {
        linalg::determinant(&self.mult_matrix())
    }

    /// Trace of the multiplication matrix.
    pub fn field_trace(&self) -> S {
        let m = self.mult_matrix();
        m[0][0].clone() + m[1][1].clone() + m[2][2].clone()
    }

    /// `u * sigma(u) * sigma^2(u)`, which lies in the base.
    pub fn conjugate_norm(&self) -> Result<Self> {
        let s1 = self.galois_sigma()?;
        let s2 = s1.galois_sigma()?;
        Ok(self.clone() * s1 * s2)
    }

    pub fn conjugate_trace(&self) -> Result<Self> {
        let s1 = self.galois_sigma()?;
        let s2 = s1.galois_sigma()?;
        Ok(self.clone() + s1 + s2)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.in_base() {
            let c = self.coords[0].inv()?;
            let mut out = Cubic::from_base(c);
            out.modulus = self.modulus.clone();
            return Some(out);
        }
        let m = self.mult_matrix();
        let e0 = vec![S::one(), S::zero(), S::zero()];
        let sol = linalg::solve(&m, &e0)?;
        let [a, b, c]: [S; 3] = sol.try_into().ok()?;
        Some(Cubic {
            coords: [a, b, c],
            modulus: self.modulus.clone(),
        })
    }

    pub fn scale_by(&self, k: &S) -> Self {
        Cubic {
            coords: self.coords.clone().map(|c| c * k.clone()),
            modulus: self.modulus.clone(),
        }
    }
}

impl<S: Field> PartialEq for Cubic<S> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<S: fmt::Debug> fmt::Debug for Cubic<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}, {:?}, {:?}]",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl<S: Field> Add for Cubic<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let modulus = self.pick(&rhs);
        let [a0, a1, a2] = self.coords;
        let [b0, b1, b2] = rhs.coords;
        Cubic {
            coords: [a0 + b0, a1 + b1, a2 + b2],
            modulus,
        }
    }
}

impl<S: Field> Sub for Cubic<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Field> Neg for Cubic<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Cubic {
            coords: self.coords.map(|c| -c),
            modulus: self.modulus,
        }
    }
}

impl<S: Field> Mul for Cubic<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let modulus = self.pick(&rhs);
        let mut prod: [S; 5] = [S::zero(), S::zero(), S::zero(), S::zero(), S::zero()];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        let [p0, p1, p2, p3, p4] = prod;
        if p3.is_zero() && p4.is_zero() {
            return Cubic {
                coords: [p0, p1, p2],
                modulus,
            };
        }
        let coords = match modulus
            .as_deref()
            .expect("cubic product leaves the base but no modulus")
        {
            // g^3 = g + a, g^4 = g^2 + a g
            CubicModulus::ArtinSchreier(a) => [
                p0 + p3.clone() * a.clone(),
                p1 + p3 + p4.clone() * a.clone(),
                p2 + p4,
            ],
            // g^3 = c, g^4 = c g
            CubicModulus::Inseparable(c) => [p0 + p3 * c.clone(), p1 + p4 * c.clone(), p2],
        };
        Cubic { coords, modulus }
    }
}

impl<S: Field> Zero for Cubic<S> {
    fn zero() -> Self {
        Cubic::from_base(S::zero())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl<S: Field> One for Cubic<S> {
    fn one() -> Self {
        Cubic::from_base(S::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::RatFunc;

    fn k() -> Arc<CubicModulus<RatFunc>> {
        Arc::new(CubicModulus::ArtinSchreier(RatFunc::var(0)))
    }

    fn el(c: [i64; 3], m: &Arc<CubicModulus<RatFunc>>) -> Cubic<RatFunc> {
        Cubic::new(c.map(RatFunc::from_int), m.clone())
    }

    #[test]
    fn sigma_examples() {
        let m = k();
        let x = el([0, 1, 0], &m);
        assert_eq!(x.galois_sigma().unwrap(), el([1, 1, 0], &m));
        let x2 = el([0, 0, 1], &m);
        assert_eq!(x2.galois_sigma().unwrap(), el([1, 2, 1], &m));
        let c = Cubic::new(
            [RatFunc::var(1), RatFunc::zero(), RatFunc::zero()],
            m.clone(),
        );
        assert_eq!(c.galois_sigma().unwrap(), c);
        let s3 = x
            .galois_sigma()
            .unwrap()
            .galois_sigma()
            .unwrap()
            .galois_sigma()
            .unwrap();
        assert_eq!(s3, x);
    }

    #[test]
    fn norm_and_trace_of_generator() {
        let m = k();
        let x = el([0, 1, 0], &m);
        assert_eq!(x.field_norm(), RatFunc::var(0));
        assert_eq!(
            x.conjugate_norm().unwrap(),
            Cubic::from_base(RatFunc::var(0))
        );
        assert_eq!(x.field_trace(), RatFunc::zero());
        let x2 = el([0, 0, 1], &m);
        assert_eq!(x2.field_trace(), RatFunc::from_int(2));
        let c = Cubic::new([RatFunc::var(1), RatFunc::zero(), RatFunc::zero()], m);
        assert_eq!(c.field_norm(), RatFunc::var(1).cube());
        assert_eq!(c.field_trace(), RatFunc::zero());
    }

    #[test]
    fn inseparable_generator_norm() {
        let m = Arc::new(CubicModulus::Inseparable(RatFunc::var(1)));
        let z = Cubic::generator(m.clone());
        assert_eq!(z.field_norm(), RatFunc::var(1));
        assert_eq!(
            z.galois_sigma().unwrap_err(),
            Error::WrongExtensionKind {
                expected: "artin-schreier"
            }
        );
        let z3 = z.clone() * z.clone() * z;
        assert_eq!(z3, Cubic::from_base(RatFunc::var(1)));
    }

    #[test]
    fn inverse() {
        let m = k();
        let u = el([1, 1, 0], &m);
        let inv = u.inv().unwrap();
        assert_eq!(u * inv, Cubic::one());
    }
}
