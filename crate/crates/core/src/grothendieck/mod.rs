//! Grothendieck-ring and module data: tensor-action matrices,
//! Frobenius-Perron dimensions, the subgroup of characters with
//! one-dimensional fiber modules, winding orbits and cosets, the Chevalley
//! locus, and the consolidated consistency checkers.

mod fusion;
mod orbits;
mod theorems;

pub use fusion::{
    action_matrices, dual_numeric, fpdim, fpdim_with_tol, hom_dimension, regular_identity_check,
    tensor_numeric,
    FpdimResult, FusionData, NumericGenRep, RegularCheck,
};
pub use orbits::{subgroup_and_orbits, OrbitData};
pub use theorems::{chevalley_locus_membership, theorem_checks, Check, CheckStatus};

use thiserror::Error;

use crate::exactmath::Scalar;
use crate::findim::{self, ChevalleyReport, FiberAnalysis};
use crate::presentation::{CharacterSpace, HopfPresentation};

#[derive(Debug, Clone, Error)]
pub enum GrothendieckError {
    #[error("certification failed: {detail}")]
    CertificationFailed { detail: String },
    #[error("regular-element identity violated: {detail}")]
    IdentityViolation { detail: String },
    #[error("coset/orbit partitions disagree: {detail}")]
    PartitionMismatch { detail: String },
    #[error(transparent)]
    Findim(#[from] findim::FindimError),
    #[error(transparent)]
    Presentation(#[from] crate::presentation::PresentationError),
    #[error(transparent)]
    Cayley(#[from] crate::cayley::CayleyError),
}

/// One irreducible of one fiber: its block of origin, a generator-level
/// numeric action, and a rounded trace signature used for deterministic
/// ordering.
#[derive(Debug, Clone)]
pub struct IrreducibleInfo {
    pub block_index: usize,
    pub dim: usize,
    pub rep: NumericGenRep,
    pub signature: Vec<(i64, i64)>,
}

/// A presentation with every sampled fiber analyzed: the unit of work for
/// the invariant and theorem layers. The identity character is always
/// `space.sampled[0]`.
#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub pres: HopfPresentation,
    pub space: CharacterSpace,
    pub fibers: Vec<FiberAnalysis>,
    /// Irreducibles per sampled fiber, ordered by dimension then signature.
    pub irreps: Vec<Vec<IrreducibleInfo>>,
    pub identity_chevalley: ChevalleyReport,
    pub seed: u64,
}

pub fn analyze_presentation(
    pres: HopfPresentation,
    name: &str,
    primitive_samples: &[Scalar],
    group_samples: &[Scalar],
    seed: u64,
) -> Result<Entry, GrothendieckError> {
    let mut space = pres.characters(primitive_samples, group_samples)?;
    // every torsion character must carry an analysis
    for t in &space.torsion {
        if !space.sampled.contains(t) {
            space.sampled.push(t.clone());
        }
    }
    let mut fibers = Vec::with_capacity(space.sampled.len());
    let mut irreps = Vec::with_capacity(space.sampled.len());
    for (idx, chi) in space.sampled.iter().enumerate() {
        let fiber_seed = seed.wrapping_add((idx as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let algebra = pres.build_fiber(chi)?;
        let analysis = findim::analyze(algebra, fiber_seed)?;
        let mut infos = Vec::with_capacity(analysis.irreps.len());
        for (block_index, module) in analysis.irreps.iter().enumerate() {
            let rep = NumericGenRep::from_module(&pres, chi, module)?;
            let signature = rep
                .gens
                .iter()
                .map(|m| {
                    let t = m.trace();
                    (
                        (t.re * 1e9).round() as i64,
                        (t.im * 1e9).round() as i64,
                    )
                })
                .collect();
            infos.push(IrreducibleInfo {
                block_index,
                dim: module.dim,
                rep,
                signature,
            });
        }
        infos.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.signature.cmp(&b.signature)));
        fibers.push(analysis);
        irreps.push(infos);
    }
    let identity_chevalley =
        findim::chevalley_property(&fibers[0].algebra, &fibers[0].radical)?;
    Ok(Entry {
        name: name.to_string(),
        pres,
        space,
        fibers,
        irreps,
        identity_chevalley,
        seed,
    })
}

impl Entry {
    pub fn sd_by_char(&self) -> Vec<(crate::presentation::CentralCharacter, usize)> {
        self.space
            .sampled
            .iter()
            .cloned()
            .zip(self.fibers.iter().map(|f| f.sd))
            .collect()
    }

    pub fn fiber_index_of(&self, chi: &crate::presentation::CentralCharacter) -> Option<usize> {
        self.space.sampled.iter().position(|c| c == chi)
    }
}
