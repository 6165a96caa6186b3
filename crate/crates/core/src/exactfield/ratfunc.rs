use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::gf3::Gf3;
use super::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::field::Field;

/// A rational function over GF(3) in canonical form.
///
/// `gcd(num, den) = 1` and the leading coefficient of `den` is 1, so two
/// values are equal exactly when their representations are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

/// Brings `num / den` into canonical form.
pub fn normalize(num: MPoly, den: MPoly) -> Result<RatFunc> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RatFunc::zero());
    }
    let (num, den) = if den.is_constant() {
        (num, den)
    } else {
        let g = gcd(&num, &den);
        if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        }
    };
    Ok(RatFunc::with_unit_fixed(num, den))
}

impl RatFunc {
    /// Caller guarantees the parts are coprime and `den` is nonzero.
    fn with_unit_fixed(num: MPoly, den: MPoly) -> RatFunc {
        let lc = den.leading_coeff();
        if lc == Gf3::ONE {
            RatFunc { num, den }
        } else {
            // lc is 2, its own inverse
            RatFunc {
                num: num.scale(lc),
                den: den.scale(lc),
            }
        }
    }

    pub fn new(num: MPoly, den: MPoly) -> Result<RatFunc> {
        normalize(num, den)
    }

    pub fn from_poly(p: MPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn var(i: usize) -> RatFunc {
        RatFunc::from_poly(MPoly::var(i))
    }

    pub fn constant(c: Gf3) -> RatFunc {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub fn from_int(c: i64) -> RatFunc {
        RatFunc::constant(Gf3::new(c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn pow(&self, k: i32) -> Result<RatFunc> {
        if k < 0 {
            let inv = self.inv().ok_or(Error::DivisionByZero)?;
            return inv.pow(-k);
        }
        let k = k as u32;
        Ok(RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        })
    }

    /// `g` with `g^3 = self`. In lowest terms a cube is a cube of numerator
    /// over a cube of denominator, and a polynomial over GF(3) is a cube
    /// exactly when all its exponents are multiples of 3.
    pub fn cube_root(&self) -> Option<RatFunc> {
        Some(RatFunc {
            num: self.num.cube_root()?,
            den: self.den.cube_root()?,
        })
    }

    /// `g` with `g^2 = self` whose numerator has leading coefficient 1.
    pub fn sqrt(&self) -> Option<RatFunc> {
        Some(RatFunc {
            num: self.num.sqrt()?,
            den: self.den.sqrt()?,
        })
    }

    pub fn frobenius(&self) -> RatFunc {
        RatFunc {
            num: self.num.frobenius(),
            den: self.den.frobenius(),
        }
    }

    pub fn derivative(&self, var: usize) -> RatFunc {
        if self.den.is_one() {
            return RatFunc::from_poly(self.num.derivative(var));
        }
        let n = &(&self.num.derivative(var) * &self.den) - &(&self.num * &self.den.derivative(var));
        let d = &self.den * &self.den;
        normalize(n, d).expect("nonzero denominator")
    }

    pub fn max_var(&self) -> Option<usize> {
        self.num.max_var().max(self.den.max_var())
    }

    pub fn eval(&self, point: &[Gf3]) -> Option<Gf3> {
        let d = self.den.eval(point);
        d.inverse().map(|i| self.num.eval(point) * i)
    }

    fn mul_ref(&self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RatFunc::with_unit_fixed(&n1 * &n2, &d1 * &d2)
    }

    fn add_ref(&self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return normalize(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let g = gcd(&self.den, &rhs.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        let den = &(&d1 * &d2) * &g;
        if g.is_one() {
            // coprime denominators leave nothing to cancel
            RatFunc::with_unit_fixed(num, den)
        } else {
            normalize(num, den).expect("nonzero")
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_ref(rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_ref(&-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_ref(rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Panics on division by zero; use [`Field::checked_div`] for the checked form.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.mul_ref(&rhs.inv().expect("division by zero"))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(MPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(MPoly::one())
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(RatFunc::with_unit_fixed(self.den.clone(), self.num.clone()))
    }

    fn cube_root(&self) -> Option<Self> {
        RatFunc::cube_root(self)
    }

    fn from_gf3(c: Gf3) -> Self {
        RatFunc::constant(c)
    }

    fn square(&self) -> Self {
        RatFunc {
            num: &self.num * &self.num,
            den: &self.den * &self.den,
        }
    }

    fn cube(&self) -> Self {
        self.frobenius()
    }

    fn weight(&self) -> usize {
        self.num.len() + self.den.len()
    }

    fn denominator(&self) -> Self {
        RatFunc::from_poly(self.den.clone())
    }

    fn exact_div(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            if let Some(q) = self.num.div_exact(&rhs.num) {
                return RatFunc::from_poly(q);
            }
        }
        self / rhs
    }

    fn scale(&self, c: Gf3) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}
