//! The scalar abstraction shared by every layer of the tower.
//!
//! All fields in this crate have characteristic 3, so the trait carries the
//! operations that only make sense there: embedding of `GF(3)` and inversion
//! of the Frobenius map where possible.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactfield::Gf3;

/// A commutative field of characteristic 3 with exact arithmetic.
///
/// `zero()` and `one()` must not depend on any runtime context; extension
/// types carry their modulus on nonscalar elements only.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The unique `g` with `g^3 = self`, when it exists in this field.
    fn cube_root(&self) -> Option<Self>;

    fn from_gf3(c: Gf3) -> Self;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn cube(&self) -> Self {
        self.square() * self.clone()
    }

    fn scale(&self, c: Gf3) -> Self {
        match c.value() {
            0 => Self::zero(),
            1 => self.clone(),
            _ => -self.clone(),
        }
    }

    /// Rough cost of arithmetic with this value; guides pivot choice.
    fn weight(&self) -> usize {
        1
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// A nonzero `d` with `d * self` integral; `1` for fields without a
    /// notion of denominator.
    fn denominator(&self) -> Self {
        Self::one()
    }

    /// `self / rhs` for nonzero `rhs`, with a fast path when the quotient is
    /// known to be integral (as in fraction-free elimination).
    fn exact_div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by zero")
    }
}
