//! Hopf-algebra presentations: parsing, rewriting to normal form, fiber
//! algebras at central characters, the character group of `C`, and exact
//! representations.

mod central;
mod hopf;
mod parse;
mod rewrite;
mod term;

pub mod reps;

pub use central::{
    celem_coproduct, CCElem, CElem, CMono, CentralCharacter, CentralDescriptor, CentralKind,
    CentralSymbol,
};
pub use hopf::{
    default_group_samples, default_primitive_samples, parse_presentation, CharacterSpace,
    HopfPresentation,
};
pub use rewrite::{critical_pairs_check, CriticalPair, RewriteRule, Rewriter, STEP_CAP};
pub use reps::{dual_rep, kron, tensor_rep, verify_rep, RepCheck, Representation};
pub use term::{display_word, NCPoly, TensorPoly, Word};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum PresentationError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown symbol {name} at {line}:{col}")]
    UnknownSymbol {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("basis is not closed: {detail}")]
    BasisNotClosed { detail: String },
    #[error("Hopf structure maps are inconsistent: {detail}")]
    HopfMapInconsistent { detail: String },
    #[error("rewriting exceeded the step cap; the rule set is likely mis-oriented")]
    StepCapExceeded,
    #[error("unsupported central shape: {detail}")]
    UnsupportedCentralShape { detail: String },
    #[error("invalid central character: {detail}")]
    InvalidCharacter { detail: String },
}
