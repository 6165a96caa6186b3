//! Extensions of F used by the linkage construction: the quadratic field E,
//! the cyclic Artin-Schreier field K and the purely inseparable cubic.
//! Towers compose by nesting element types, `Cubic<Quad<RatFunc>>` being
//! `L = K (x) E`; coordinates are always relative to the immediate base.

mod cubic;
mod descriptor;
mod quad;

pub use cubic::{Cubic, CubicModulus};
pub use descriptor::{ExtDescriptor, ExtElem, ExtKind};
pub use quad::Quad;
