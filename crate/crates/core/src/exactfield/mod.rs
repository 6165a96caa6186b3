//! Exact arithmetic in GF(3)(v1, ..., vn).

mod artin_schreier;
mod brown;
mod gcd;
mod gf3;
mod gf729;
mod monomial;
mod mpoly;
mod ratfunc;

pub use artin_schreier::{artin_schreier_solve, in_wp_image};
pub use gcd::gcd;
pub use gf3::Gf3;
pub use monomial::{Monomial, MAX_EXP, MAX_VARS};
pub use mpoly::MPoly;
pub use ratfunc::{normalize, RatFunc};
