//! Degree-3 symbol algebras and their reduced characteristic forms.

mod algebra;
mod forms;

pub use algebra::{basis_index, AlgElem, SymbolAlgebra};
pub use forms::{
    char_forms, inverse, is_split_certificate, reduced_norm, reduced_sigma, reduced_trace,
    CharForms, SplitWitness, Verdict,
};
