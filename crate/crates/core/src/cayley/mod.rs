//! Trace maps over the central ring, characteristic polynomials and
//! Cayley-Hamilton verification, symbolic Gram matrices, discriminant and
//! modified discriminant ideals, zero loci, and the lowest level.

mod ideal;
mod locus;
mod minors;
mod newton;
mod trace;

pub use ideal::{
    discriminant, discriminant_ideal_sub, modified_discriminant_ideal, normalize_ideal,
    IdealDescriptor, IdealForm,
};
pub use locus::{
    lowest_level, sandwich_status, sd_ideal_consistency, sd_zero_locus, specialize_gram,
    vanishes_at, zero_locus, LevelCertificate, SandwichStatus, ZeroLocus,
};
pub use minors::{subsets, MinorTable};
pub use newton::{
    newton_coefficients, verify_cayley_hamilton, verify_cayley_hamilton_generic,
    CayleyHamiltonReport,
};
pub use trace::{central_shape, regular_trace_over_c, CentralShape, TraceData};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CayleyError {
    #[error("unsupported central shape: {detail}")]
    UnsupportedCentralShape { detail: String },
    #[error("Cayley-Hamilton violation: {detail}")]
    CHViolation { detail: String },
    #[error("ideal generator has an unrecognized irreducible factor: {residual}")]
    UnrecognizedRoot { residual: String },
    #[error("consistency violation: {detail}")]
    ConsistencyViolation { detail: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Presentation(#[from] crate::presentation::PresentationError),
}
