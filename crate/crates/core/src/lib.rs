//! Exact computer algebra for degree-3 symbol p-algebras `[alpha, beta)`
//! over characteristic-3 function fields, with constructive certificates of
//! inseparable linkage.
//!
//! The core is generic over the scalar [`Field`]; the aliases below name the
//! instantiations used in practice.

pub mod error;
pub mod exactfield;
pub mod field;
pub mod katomilne;
pub mod linalg;
pub mod linkage;
pub mod symbolalg;
pub mod syntax;
pub mod towers;
pub mod valuation;

pub use error::{Error, Result};
pub use exactfield::{Gf3, MPoly, RatFunc};
pub use field::Field;
pub use symbolalg::{AlgElem, CharForms, SymbolAlgebra};
pub use towers::{Cubic, CubicModulus, ExtDescriptor, Quad};

/// Elements of a field E that is F itself or a quadratic extension of F.
pub type EElem = Quad<RatFunc>;
/// Elements of `L = E[x]/(x^3 - x - alpha)`.
pub type LElem = Cubic<EElem>;
/// `[alpha, beta)` over F.
pub type Algebra = SymbolAlgebra<RatFunc>;
/// `[alpha, beta)` over E.
pub type AlgebraE = SymbolAlgebra<EElem>;
pub type Elem = AlgElem<RatFunc>;
pub type ElemE = AlgElem<EElem>;
