//! Constructive inseparable linkage from a norm witness.

mod certificate;
mod construct;
mod format;

pub use certificate::{
    build_certificate, build_certificate_with, find_separable_complement, verify_certificate,
    verify_slot, BuildOptions, BuildOutcome, Complement, LinkageCertificate, VerificationReport,
};
pub use construct::{
    construct_inseparable_subfield, BinaryForm, Construction, Degenerate, DegenerateReason,
    InseparableSlot, NormWitness,
};
pub use format::CERT_VERSION;

#[cfg(test)]
mod tests;
