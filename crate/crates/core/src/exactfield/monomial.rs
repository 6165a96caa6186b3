//! Packed exponent vectors.
//!
//! Eight variables at sixteen bits each, variable 0 in the most significant
//! lane. The high bit of each lane is a guard, so exponents stay below 2^15
//! and overflow is detected after every addition. Ordering is graded
//! lexicographic: total degree first, then the packed word, which compares
//! lexicographically with variable 0 most significant.

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 8;
pub const MAX_EXP: u32 = 32767;

const GUARD: u128 = 0x8000_8000_8000_8000_8000_8000_8000_8000;
const LANE: u128 = 0xffff;

#[inline]
fn shift(var: usize) -> u32 {
    16 * (7 - var as u32)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    deg: u32,
    bits: u128,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, bits: 0 };

    pub fn var(var: usize) -> Monomial {
        assert!(var < MAX_VARS, "variable index {var} out of range");
        Monomial {
            deg: 1,
            bits: 1u128 << shift(var),
        }
    }

    pub fn from_exps(exps: &[u32]) -> Result<Monomial> {
        if exps.len() > MAX_VARS && exps[MAX_VARS..].iter().any(|&e| e != 0) {
            return Err(Error::TooManyVariables { max: MAX_VARS });
        }
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate().take(MAX_VARS) {
            if e > MAX_EXP {
                return Err(Error::ExponentOverflow { max: MAX_EXP });
            }
            m.bits |= (e as u128) << shift(i);
            m.deg += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        ((self.bits >> shift(var)) & LANE) as u32
    }

    pub fn exps(&self) -> [u32; MAX_VARS] {
        let mut out = [0; MAX_VARS];
        for (i, e) in out.iter_mut().enumerate() {
            *e = self.exp(i);
        }
        out
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.bits == 0
    }

    /// Largest variable index with a nonzero exponent.
    pub fn max_var(&self) -> Option<usize> {
        (0..MAX_VARS).rev().find(|&i| self.exp(i) != 0)
    }

    #[inline]
    pub fn checked_mul(self, rhs: Monomial) -> Option<Monomial> {
        let bits = self.bits + rhs.bits;
        (bits & GUARD == 0).then_some(Monomial {
            deg: self.deg + rhs.deg,
            bits,
        })
    }

    /// Panics on exponent overflow past [`MAX_EXP`].
    #[inline]
    pub fn mul(self, rhs: Monomial) -> Monomial {
        self.checked_mul(rhs)
            .unwrap_or_else(|| panic!("monomial exponent overflow (max {MAX_EXP})"))
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.bits | GUARD) - self.bits) & GUARD == GUARD
    }

    /// `other / self`; caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            deg: other.deg - self.deg,
            bits: other.bits - self.bits,
        }
    }

    pub fn pow(self, k: u32) -> Option<Monomial> {
        let exps = self.exps();
        let mut out = [0u32; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = exps[i].checked_mul(k)?;
            if out[i] > MAX_EXP {
                return None;
            }
        }
        Monomial::from_exps(&out).ok()
    }

    /// Exact k-th root when every exponent is divisible by k.
    pub fn root(self, k: u32) -> Option<Monomial> {
        let exps = self.exps();
        if exps.iter().any(|e| e % k != 0) {
            return None;
        }
        let out: Vec<u32> = exps.iter().map(|e| e / k).collect();
        Monomial::from_exps(&out).ok()
    }

    /// Exponent-wise minimum.
    pub fn gcd(self, other: Monomial) -> Monomial {
        let (a, b) = (self.exps(), other.exps());
        let mins: Vec<u32> = a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect();
        Monomial::from_exps(&mins).expect("exponent within range")
    }

    pub fn with_exp(self, var: usize, e: u32) -> Monomial {
        let mut exps = self.exps();
        exps[var] = e;
        Monomial::from_exps(&exps).expect("exponent within range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Monomial::var(0);
        let b = Monomial::var(1);
        let a2 = a.mul(a);
        let ab = a.mul(b);
        let b2 = b.mul(b);
        assert!(a2 > ab && ab > b2);
        assert!(b2 > a && a > b && b > Monomial::ONE);
        let b3 = b2.mul(b);
        assert!(b3 > a2);
    }

    #[test]
    fn divisibility_and_overflow() {
        let m = Monomial::from_exps(&[3, 1]).unwrap();
        let n = Monomial::from_exps(&[1, 1]).unwrap();
        assert!(n.divides(m));
        assert!(!m.divides(n));
        assert_eq!(n.quotient_of(m), Monomial::from_exps(&[2]).unwrap());
        let big = Monomial::from_exps(&[20000]).unwrap();
        assert!(big.checked_mul(big).is_none());
        assert!(Monomial::from_exps(&[MAX_EXP + 1]).is_err());
        assert_eq!(m.root(3), None);
        assert_eq!(
            Monomial::from_exps(&[3, 6]).unwrap().root(3),
            Some(Monomial::from_exps(&[1, 2]).unwrap())
        );
    }
}
