//! Analysis of finite-dimensional structure-constant algebras over the
//! exact field: regular representation, Jacobson radical, semisimple
//! quotient, Wedderburn blocks, composition multiplicities, Chevalley
//! property, and module semisimplicity.

mod algebra;
mod blocks;
mod chevalley;
mod modules;
pub mod numeric;
mod radical;

pub use algebra::{basis_vec, CoalgebraData, StructureConstAlgebra};
pub use blocks::{block_data, irreducible_reps, BlockData, NumericModule, EIGEN_GAP, INT_RESIDUAL, REP_RESIDUAL};
pub use chevalley::{chevalley_property, ChevalleyReport};
pub use modules::{
    abelianization, composition_multiplicities, is_semisimple_module, one_dim_rep_count,
    tensor_modules_via_coalgebra,
};
pub use radical::{
    build_quotient, center_basis, irr_count, jacobson_radical, radical_is_nilpotent_ideal, sd,
    trace_gram, RadicalData,
};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum FindimError {
    #[error("malformed structure constants: {0}")]
    Malformed(String),
    #[error("numeric certification failed: {detail}")]
    CertificationFailed { detail: String },
    #[error("coalgebra data is required for this analysis")]
    MissingCoalgebraData,
}

/// Everything the downstream invariants need about one fiber algebra,
/// computed once: radical, exact dimensions, certified blocks, and one
/// numeric irreducible per block.
#[derive(Debug, Clone)]
pub struct FiberAnalysis {
    pub algebra: StructureConstAlgebra,
    pub radical: RadicalData,
    pub sd: usize,
    pub irr_count: usize,
    pub blocks: BlockData,
    pub irreps: Vec<NumericModule>,
    pub one_dim_count: usize,
}

pub fn analyze(algebra: StructureConstAlgebra, seed: u64) -> Result<FiberAnalysis, FindimError> {
    let radical = jacobson_radical(&algebra)?;
    let sd_val = sd(&radical);
    let irr = irr_count(&radical);
    let blocks = block_data(&algebra, &radical, seed)?;
    let irreps = irreducible_reps(&algebra, &radical, &blocks, seed)?;
    let one_dim = one_dim_rep_count(&algebra)?;
    Ok(FiberAnalysis {
        algebra,
        radical,
        sd: sd_val,
        irr_count: irr,
        blocks,
        irreps,
        one_dim_count: one_dim,
    })
}
