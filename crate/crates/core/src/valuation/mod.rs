//! x-adic valuations and the value-group bookkeeping for tensor products of
//! valued division algebras.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactfield::RatFunc;
use crate::Algebra;

/// `ord_x` of a rational function; `Infinity` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XAdicValue {
    Finite(i64),
    Infinity,
}

impl XAdicValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            XAdicValue::Finite(v) => Some(v),
            XAdicValue::Infinity => None,
        }
    }
}

impl std::ops::Add for XAdicValue {
    type Output = XAdicValue;
    fn add(self, rhs: XAdicValue) -> XAdicValue {
        match (self, rhs) {
            (XAdicValue::Finite(a), XAdicValue::Finite(b)) => XAdicValue::Finite(a + b),
            _ => XAdicValue::Infinity,
        }
    }
}

impl PartialOrd for XAdicValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XAdicValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (XAdicValue::Finite(a), XAdicValue::Finite(b)) => a.cmp(b),
            (XAdicValue::Finite(_), XAdicValue::Infinity) => Ordering::Less,
            (XAdicValue::Infinity, XAdicValue::Finite(_)) => Ordering::Greater,
            (XAdicValue::Infinity, XAdicValue::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for XAdicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XAdicValue::Finite(v) => write!(f, "{v}"),
            XAdicValue::Infinity => write!(f, "inf"),
        }
    }
}

/// Valuation at `x = 0` where `x` is the variable with index `var`.
pub fn x_adic(f: &RatFunc, var: usize) -> XAdicValue {
    if num_traits::Zero::is_zero(f) {
        return XAdicValue::Infinity;
    }
    let num = f.num().order_in(var).expect("nonzero") as i64;
    let den = f.den().order_in(var).expect("nonzero") as i64;
    XAdicValue::Finite(num - den)
}

/// The subgroup `(num/den) Z` of `Q`, with `den` a power of 3 at most 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ValueGroup {
    num: u64,
    den: u64,
}

impl ValueGroup {
    pub const INTEGERS: ValueGroup = ValueGroup { num: 1, den: 1 };
    pub const THIRDS: ValueGroup = ValueGroup { num: 1, den: 3 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 {
            return Err(Error::Precondition(
                "value group generator must be positive".into(),
            ));
        }
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        if den != 1 && den != 3 {
            return Err(Error::Precondition(format!(
                "generator {num}/{den} is not of the form m/3^k with k <= 1"
            )));
        }
        Ok(ValueGroup { num, den })
    }

    pub fn generator(&self) -> (u64, u64) {
        (self.num, self.den)
    }

    /// Membership of `p/q`.
    pub fn contains(&self, p: i64, q: i64) -> bool {
        // p/q = k num/den  <=>  p den = k num q
        let lhs = p as i128 * self.den as i128;
        let step = self.num as i128 * q as i128;
        lhs % step == 0
    }

    pub fn is_subgroup_of(&self, other: &ValueGroup) -> bool {
        other.contains(self.num as i64, self.den as i64)
    }

    /// `(p1/q1) Z ∩ (p2/q2) Z = (lcm(p1, p2) / gcd(q1, q2)) Z`.
    pub fn intersection(&self, other: &ValueGroup) -> ValueGroup {
        let num = self.num.lcm(&other.num);
        let den = self.den.gcd(&other.den);
        ValueGroup::new(num, den).expect("intersection stays in (1/3)Z")
    }
}

impl fmt::Display for ValueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (1, 1) => write!(f, "Z"),
            (n, 1) => write!(f, "{n}Z"),
            (n, d) => write!(f, "({n}/{d})Z"),
        }
    }
}

pub fn value_group_intersection(g1: &ValueGroup, g2: &ValueGroup) -> ValueGroup {
    g1.intersection(g2)
}

/// The generator whose value has denominator 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `y` with `y^3 = beta`.
    Y,
    /// `x` with `x^3 - x = alpha`.
    ArtinSchreier,
}

/// An element of fractional value together with the value of its defining
/// relation: `3 * numerator / 3 = relation_value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RamificationWitness {
    pub generator: Generator,
    /// Value of the generator, in thirds.
    pub value_thirds: i64,
    /// Value of `y^3` or `x^3 - x`.
    pub relation_value: i64,
}

impl RamificationWitness {
    pub fn holds(&self) -> bool {
        self.value_thirds == self.relation_value && self.value_thirds % 3 != 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolValueGroup {
    pub group: ValueGroup,
    pub witness: Option<RamificationWitness>,
}

/// Value group of `[alpha, beta)` for the valuation at `x = 0`, `x` being the
/// variable with index `var`.
pub fn symbol_value_group(alg: &Algebra, var: usize) -> Result<SymbolValueGroup> {
    let va = x_adic(alg.alpha(), var);
    let vb = x_adic(alg.beta(), var);
    let unit = XAdicValue::Finite(0);
    let alpha_unit = va == unit || va == XAdicValue::Infinity;
    match (va, vb) {
        (_, XAdicValue::Finite(1)) if alpha_unit => Ok(SymbolValueGroup {
            group: ValueGroup::THIRDS,
            witness: Some(RamificationWitness {
                generator: Generator::Y,
                value_thirds: 1,
                relation_value: 1,
            }),
        }),
        (XAdicValue::Finite(-1), v) if v == unit => Ok(SymbolValueGroup {
            group: ValueGroup::THIRDS,
            // v(x) < 0 forces v(x^3 - x) = 3 v(x)
            witness: Some(RamificationWitness {
                generator: Generator::ArtinSchreier,
                value_thirds: -1,
                relation_value: -1,
            }),
        }),
        (_, v) if v == unit && alpha_unit => Ok(SymbolValueGroup {
            group: ValueGroup::INTEGERS,
            witness: None,
        }),
        _ => Err(Error::CannotClassify(format!(
            "v(alpha) = {va}, v(beta) = {vb}"
        ))),
    }
}

/// An asserted hypothesis and the reason recorded for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Asserted {
    pub holds: bool,
    pub reason: String,
}

impl Asserted {
    pub fn yes(reason: impl Into<String>) -> Self {
        Asserted {
            holds: true,
            reason: reason.into(),
        }
    }

    pub fn no() -> Self {
        Asserted {
            holds: false,
            reason: String::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorandiEvidence {
    pub defectless: Asserted,
    pub residue_division: Asserted,
    pub gd: ValueGroup,
    pub ge: ValueGroup,
    pub gf: ValueGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorandiConclusion {
    /// Division, conditional on the asserted hypotheses.
    DivisionConditional,
    Condition3Fails {
        intersection: ValueGroup,
    },
    Withheld,
    /// `gf` is not contained in `gd` and `ge`.
    InvalidEvidence,
}

pub fn morandi_check(ev: &MorandiEvidence) -> MorandiConclusion {
    if !ev.gf.is_subgroup_of(&ev.gd) || !ev.gf.is_subgroup_of(&ev.ge) {
        return MorandiConclusion::InvalidEvidence;
    }
    let meet = ev.gd.intersection(&ev.ge);
    if meet != ev.gf {
        return MorandiConclusion::Condition3Fails { intersection: meet };
    }
    if ev.defectless.holds && ev.residue_division.holds {
        MorandiConclusion::DivisionConditional
    } else {
        MorandiConclusion::Withheld
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InequalityClass {
    Defectless,
    Defective,
    Violation,
}

pub fn fundamental_inequality_check(
    resdeg: u64,
    ramindex: u64,
    dim: u64,
) -> Result<InequalityClass> {
    if resdeg == 0 || ramindex == 0 || dim == 0 {
        return Err(Error::Precondition("degrees must be positive".into()));
    }
    Ok(match (resdeg * ramindex).cmp(&dim) {
        Ordering::Equal => InequalityClass::Defectless,
        Ordering::Less => InequalityClass::Defective,
        Ordering::Greater => InequalityClass::Violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::RatFunc;
    use crate::field::Field;
    use num_traits::{One, Zero};

    fn x() -> RatFunc {
        RatFunc::var(2)
    }

    #[test]
    fn x_adic_examples() {
        assert_eq!(
            x_adic(&(x() * x() + x() * x() * x()), 2),
            XAdicValue::Finite(2)
        );
        assert_eq!(x_adic(&x().inv().unwrap(), 2), XAdicValue::Finite(-1));
        assert_eq!(x_adic(&RatFunc::zero(), 2), XAdicValue::Infinity);
        assert_eq!(x_adic(&RatFunc::var(0), 2), XAdicValue::Finite(0));
    }

    #[test]
    fn intersections() {
        let z = ValueGroup::INTEGERS;
        let t = ValueGroup::THIRDS;
        assert_eq!(t.intersection(&z), z);
        assert_eq!(z.intersection(&z), z);
        assert_eq!(t.intersection(&t), t);
        let two_thirds = ValueGroup::new(2, 3).unwrap();
        assert_eq!(two_thirds.intersection(&z), ValueGroup::new(2, 1).unwrap());
        assert!(ValueGroup::new(1, 9).is_err());
    }

    #[test]
    fn symbol_groups() {
        let a = RatFunc::var(0);
        let b = RatFunc::var(1);
        let ab = Algebra::new(a.clone(), b.clone()).unwrap();
        assert_eq!(
            symbol_value_group(&ab, 2).unwrap().group,
            ValueGroup::INTEGERS
        );
        let gx = Algebra::new(a.clone(), x()).unwrap();
        let g = symbol_value_group(&gx, 2).unwrap();
        assert_eq!(g.group, ValueGroup::THIRDS);
        assert!(g.witness.unwrap().holds());
        let xd = Algebra::new(x().inv().unwrap(), b.clone()).unwrap();
        assert_eq!(
            symbol_value_group(&xd, 2).unwrap().group,
            ValueGroup::THIRDS
        );
        let bad = Algebra::new(a, x() * x()).unwrap();
        assert!(matches!(
            symbol_value_group(&bad, 2),
            Err(Error::CannotClassify(_))
        ));
        let one = Algebra::new(RatFunc::one(), b).unwrap();
        assert!(symbol_value_group(&one, 2).is_ok());
    }

    #[test]
    fn morandi_examples() {
        let mk = |gd, ge, flags: bool| MorandiEvidence {
            defectless: if flags {
                Asserted::yes("unramified")
            } else {
                Asserted::no()
            },
            residue_division: if flags {
                Asserted::yes("residue tensor")
            } else {
                Asserted::no()
            },
            gd,
            ge,
            gf: ValueGroup::INTEGERS,
        };
        let z = ValueGroup::INTEGERS;
        let t = ValueGroup::THIRDS;
        assert_eq!(
            morandi_check(&mk(z, t, true)),
            MorandiConclusion::DivisionConditional
        );
        assert!(matches!(
            morandi_check(&mk(t, t, true)),
            MorandiConclusion::Condition3Fails { .. }
        ));
        assert_eq!(morandi_check(&mk(z, t, false)), MorandiConclusion::Withheld);
    }

    #[test]
    fn inequality_examples() {
        assert_eq!(
            fundamental_inequality_check(9, 1, 9).unwrap(),
            InequalityClass::Defectless
        );
        assert_eq!(
            fundamental_inequality_check(3, 3, 9).unwrap(),
            InequalityClass::Defectless
        );
        assert_eq!(
            fundamental_inequality_check(9, 3, 9).unwrap(),
            InequalityClass::Violation
        );
        assert_eq!(
            fundamental_inequality_check(3, 1, 9).unwrap(),
            InequalityClass::Defective
        );
    }
}
