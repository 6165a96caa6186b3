use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfield::{artin_schreier_solve, RatFunc};

use super::cubic::{Cubic, CubicModulus};
use super::quad::Quad;

#[derive(Clone, Debug, PartialEq)]
pub enum ExtKind {
    Trivial,
    Quadratic(RatFunc),
    ArtinSchreier(RatFunc),
    Inseparable(RatFunc),
}

/// A validated extension of F, possibly stacked on a quadratic base.
///
/// Construction checks that the extension is a genuine field of the stated
/// degree: `d` is not a square, `alpha` is not of the form `t^3 - t`, `c` is
/// not a cube. Data are always elements of F.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtDescriptor {
    kind: ExtKind,
    base: Option<Box<ExtDescriptor>>,
}

impl ExtDescriptor {
    pub fn trivial() -> Self {
        ExtDescriptor {
            kind: ExtKind::Trivial,
            base: None,
        }
    }

    pub fn quadratic(d: RatFunc) -> Result<Self> {
        if d.sqrt().is_some() {
            return Err(Error::InvalidExtension(
                "quadratic datum is a square in the base".into(),
            ));
        }
        Ok(ExtDescriptor {
            kind: ExtKind::Quadratic(d),
            base: None,
        })
    }

    /// `F[x]/(x^3 - x - alpha)` over `base` (F or a quadratic extension).
    ///
    /// Over a quadratic base the test over F suffices: a cyclic cubic and a
    /// quadratic extension have coprime degrees, so the cubic stays a field.
    pub fn artin_schreier(alpha: RatFunc, base: Option<ExtDescriptor>) -> Result<Self> {
        let base = Self::check_base(base)?;
        if artin_schreier_solve(&alpha).is_some() {
            return Err(Error::InvalidExtension(
                "artin-schreier datum lies in the image of t^3 - t".into(),
            ));
        }
        Ok(ExtDescriptor {
            kind: ExtKind::ArtinSchreier(alpha),
            base,
        })
    }

    /// `F[z]/(z^3 - c)`. Over `F(s)` with `s^2 = d`, `(u + v s)^3 = u^3 + v^3 d s`
    /// so an element of F is a cube in `F(s)` exactly when it is one in F.
    pub fn inseparable(c: RatFunc, base: Option<ExtDescriptor>) -> Result<Self> {
        let base = Self::check_base(base)?;
        if c.cube_root().is_some() {
            return Err(Error::InvalidExtension(
                "inseparable datum is a cube in the base".into(),
            ));
        }
        Ok(ExtDescriptor {
            kind: ExtKind::Inseparable(c),
            base,
        })
    }

    fn check_base(base: Option<ExtDescriptor>) -> Result<Option<Box<ExtDescriptor>>> {
        match base {
            None => Ok(None),
            Some(b) => match b.kind {
                ExtKind::Trivial => Ok(None),
                ExtKind::Quadratic(_) => Ok(Some(Box::new(b))),
                _ => Err(Error::InvalidExtension(
                    "cubic extensions may only be stacked on F or a quadratic extension".into(),
                )),
            },
        }
    }

    pub fn kind(&self) -> &ExtKind {
        &self.kind
    }

    pub fn base(&self) -> Option<&ExtDescriptor> {
        self.base.as_deref()
    }

    /// Degree over F.
    pub fn degree(&self) -> usize {
        let own = match self.kind {
            ExtKind::Trivial => 1,
            ExtKind::Quadratic(_) => 2,
            ExtKind::ArtinSchreier(_) | ExtKind::Inseparable(_) => 3,
        };
        own * self.base.as_ref().map_or(1, |b| b.degree())
    }

    /// The `d` of a quadratic field E (this descriptor or its base).
    pub fn quadratic_datum(&self) -> Option<&RatFunc> {
        match &self.kind {
            ExtKind::Quadratic(d) => Some(d),
            _ => self.base.as_ref().and_then(|b| b.quadratic_datum()),
        }
    }

    /// Shared modulus handle for elements of a Trivial/Quadratic field E.
    pub fn e_modulus(&self) -> Option<Arc<RatFunc>> {
        self.quadratic_datum().map(|d| Arc::new(d.clone()))
    }

    pub fn is_field_e(&self) -> bool {
        matches!(self.kind, ExtKind::Trivial | ExtKind::Quadratic(_))
    }

    /// The cubic modulus over E for an ArtinSchreier or Inseparable descriptor.
    pub fn cubic_modulus(&self) -> Result<Arc<CubicModulus<Quad<RatFunc>>>> {
        let d = self.e_modulus();
        match &self.kind {
            ExtKind::ArtinSchreier(a) => Ok(Arc::new(CubicModulus::ArtinSchreier(Quad::embed(
                a.clone(),
                d.as_ref(),
            )))),
            ExtKind::Inseparable(c) => Ok(Arc::new(CubicModulus::Inseparable(Quad::embed(
                c.clone(),
                d.as_ref(),
            )))),
            _ => Err(Error::WrongExtensionKind {
                expected: "cubic extension",
            }),
        }
    }
}

/// An element of some extension together with its descriptor.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtElem {
    /// Element of E (trivial or quadratic).
    Field(ExtDescriptor, Quad<RatFunc>),
    /// Element of a cubic extension of E.
    Cubic(ExtDescriptor, Cubic<Quad<RatFunc>>),
}

impl ExtElem {
    pub fn descriptor(&self) -> &ExtDescriptor {
        match self {
            ExtElem::Field(d, _) | ExtElem::Cubic(d, _) => d,
        }
    }

    pub fn galois_sigma(&self) -> Result<ExtElem> {
        match self {
            ExtElem::Cubic(d, u) => Ok(ExtElem::Cubic(d.clone(), u.galois_sigma()?)),
            ExtElem::Field(..) => Err(Error::WrongExtensionKind {
                expected: "artin-schreier",
            }),
        }
    }

    /// Norm down to the immediate base.
    pub fn field_norm(&self) -> Result<Quad<RatFunc>> {
        match self {
            ExtElem::Cubic(_, u) => Ok(u.field_norm()),
            ExtElem::Field(d, u) => match d.kind() {
                ExtKind::Quadratic(_) => Ok(Quad::from_base(u.norm())),
                _ => Err(Error::WrongExtensionKind {
                    expected: "degree-2 or degree-3 extension",
                }),
            },
        }
    }

    pub fn field_trace(&self) -> Result<Quad<RatFunc>> {
        match self {
            ExtElem::Cubic(_, u) => Ok(u.field_trace()),
            ExtElem::Field(d, u) => match d.kind() {
                ExtKind::Quadratic(_) => Ok(Quad::from_base(u.trace())),
                _ => Err(Error::WrongExtensionKind {
                    expected: "degree-2 or degree-3 extension",
                }),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::MPoly;
    use crate::field::Field;
    use num_traits::One;

    #[test]
    fn validation() {
        let a = RatFunc::var(0);
        assert!(ExtDescriptor::quadratic(a.clone()).is_ok());
        assert!(ExtDescriptor::quadratic(a.square()).is_err());
        assert!(ExtDescriptor::quadratic(RatFunc::from_int(2)).is_ok());
        assert!(ExtDescriptor::artin_schreier(a.clone(), None).is_ok());
        let wp = &a.frobenius() - &a;
        assert!(ExtDescriptor::artin_schreier(wp, None).is_err());
        assert!(ExtDescriptor::inseparable(a.clone(), None).is_ok());
        assert!(ExtDescriptor::inseparable(a.cube(), None).is_err());
        let e = ExtDescriptor::quadratic(RatFunc::var(1)).unwrap();
        let l = ExtDescriptor::artin_schreier(a.clone(), Some(e.clone())).unwrap();
        assert_eq!(l.degree(), 6);
        assert_eq!(l.quadratic_datum(), Some(&RatFunc::var(1)));
        assert!(ExtDescriptor::artin_schreier(a, Some(l)).is_err());
    }

    #[test]
    fn quadratic_norm_via_ext_elem() {
        let e = ExtDescriptor::quadratic(RatFunc::var(0)).unwrap();
        let d = e.e_modulus().unwrap();
        let u = Quad::new(RatFunc::var(1), RatFunc::one(), d);
        let el = ExtElem::Field(e, u);
        let expected = RatFunc::from_poly(&MPoly::var(1).pow(2) - &MPoly::var(0));
        assert_eq!(el.field_norm().unwrap(), Quad::from_base(expected));
        assert_eq!(
            el.field_trace().unwrap(),
            Quad::from_base(RatFunc::var(1).scale(crate::Gf3::TWO))
        );
    }
}
