use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::field::Field;

/// An element of the prime field with three elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const TWO: Gf3 = Gf3(2);
    pub const ALL: [Gf3; 3] = [Gf3(0), Gf3(1), Gf3(2)];

    pub fn new(v: i64) -> Self {
        Gf3(v.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inverse(self) -> Option<Gf3> {
        // 1*1 = 1 and 2*2 = 4 = 1
        (self.0 != 0).then_some(self)
    }
}

impl fmt::Debug for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    fn add(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + rhs.0) % 3)
    }
}

impl Sub for Gf3 {
    type Output = Gf3;
    fn sub(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for Gf3 {
    type Output = Gf3;
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl Neg for Gf3 {
    type Output = Gf3;
    fn neg(self) -> Gf3 {
        Gf3((3 - self.0) % 3)
    }
}

impl AddAssign for Gf3 {
    fn add_assign(&mut self, rhs: Gf3) {
        *self = *self + rhs;
    }
}

impl SubAssign for Gf3 {
    fn sub_assign(&mut self, rhs: Gf3) {
        *self = *self - rhs;
    }
}

impl MulAssign for Gf3 {
    fn mul_assign(&mut self, rhs: Gf3) {
        *self = *self * rhs;
    }
}

impl Zero for Gf3 {
    fn zero() -> Self {
        Gf3::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Gf3 {
    fn one() -> Self {
        Gf3::ONE
    }
}

impl Field for Gf3 {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }

    // Frobenius is the identity on the prime field.
    fn cube_root(&self) -> Option<Self> {
        Some(*self)
    }

    fn from_gf3(c: Gf3) -> Self {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        let one = Gf3::ONE;
        assert_eq!(one + one + one, Gf3::ZERO);
        assert_eq!(Gf3::TWO * Gf3::TWO, Gf3::ONE);
        assert_eq!(-Gf3::ONE, Gf3::TWO);
        assert_eq!(Gf3::new(-4), Gf3::TWO);
        assert_eq!(Gf3::ZERO.inverse(), None);
        for a in Gf3::ALL {
            assert_eq!(a * a * a, a);
            if let Some(i) = a.inverse() {
                assert_eq!(a * i, Gf3::ONE);
            }
        }
    }
}
