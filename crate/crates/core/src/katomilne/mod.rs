//! Differential forms over the base field and their symbols.

mod form;
mod symbol;

pub use form::{d, dlog, wedge, DiffForm, Differentiable};
pub use symbol::{
    artin_schreier_image, reverse_chain, symbol_to_algebra, triviality_by_witness, ChainStep,
    SymbolForm,
};
