//! Tensor-action matrices on Grothendieck groups, Frobenius-Perron
//! dimensions, and the regular-element identities.

use crate::exactmath::{perron_eigenvalue, PerronEstimate};
use crate::findim::numeric::{scalar_to_c64, C64, CMat};
use crate::findim::{composition_multiplicities, NumericModule};
use crate::presentation::{CentralCharacter, HopfPresentation, NCPoly, Word};

use super::{Entry, GrothendieckError};

/// A fiber-algebra module given numerically by one matrix per presentation
/// generator; central symbols act through the character.
#[derive(Debug, Clone)]
pub struct NumericGenRep {
    pub character: CentralCharacter,
    pub dim: usize,
    pub gens: Vec<CMat>,
}

impl NumericGenRep {
    pub fn word_mat(&self, w: &Word) -> CMat {
        let mut m = CMat::identity(self.dim);
        for g in w {
            m = m.mul(&self.gens[*g as usize]);
        }
        m
    }

    pub fn eval(&self, p: &NCPoly) -> CMat {
        let mut out = CMat::zero(self.dim, self.dim);
        for (w, c) in &p.terms {
            let s = scalar_to_c64(&c.eval(&self.character));
            if s.norm_sqr() == 0.0 {
                continue;
            }
            out = out.add(&self.word_mat(w).scale(s));
        }
        out
    }

    /// Reindex by the fiber basis words, for composition-series analyses.
    pub fn to_module(&self, pres: &HopfPresentation) -> NumericModule {
        NumericModule {
            dim: self.dim,
            mats: pres.basis.iter().map(|w| self.word_mat(w)).collect(),
        }
    }

    /// Generator matrices recovered from a basis-indexed module.
    pub fn from_module(
        pres: &HopfPresentation,
        character: &CentralCharacter,
        module: &NumericModule,
    ) -> Result<Self, GrothendieckError> {
        let mut gens = Vec::with_capacity(pres.gens.len());
        for g in 0..pres.gens.len() as u32 {
            let nf = pres
                .normal_form(&NCPoly::from_word(vec![g], &pres.central), Some(character))
                .map_err(GrothendieckError::from)?;
            let mut m = CMat::zero(module.dim, module.dim);
            for (w, c) in &nf.terms {
                let Some(k) = pres.basis_index_of(w) else {
                    return Err(GrothendieckError::CertificationFailed {
                        detail: "generator normal form leaves the basis".into(),
                    });
                };
                let s = c.to_scalar().expect("specialized coefficient is scalar");
                m = m.add(&module.mats[k].scale(scalar_to_c64(&s)));
            }
            gens.push(m);
        }
        Ok(NumericGenRep {
            character: character.clone(),
            dim: module.dim,
            gens,
        })
    }
}

/// Tensor product through the coproduct, evaluated numerically.
pub fn tensor_numeric(
    pres: &HopfPresentation,
    v: &NumericGenRep,
    w: &NumericGenRep,
) -> NumericGenRep {
    let character = v.character.convolve(&w.character, &pres.central);
    let dim = v.dim * w.dim;
    let gens = (0..pres.gens.len())
        .map(|g| {
            let mut m = CMat::zero(dim, dim);
            for ((lw, rw), cc) in &pres.coproduct[g].terms {
                let s = scalar_to_c64(&cc.eval(&v.character, &w.character));
                if s.norm_sqr() == 0.0 {
                    continue;
                }
                m = m.add(&v.word_mat(lw).kron(&w.word_mat(rw)).scale(s));
            }
            m
        })
        .collect();
    NumericGenRep {
        character,
        dim,
        gens,
    }
}

/// Left dual: transpose of the antipode action, at the inverse character.
pub fn dual_numeric(pres: &HopfPresentation, w: &NumericGenRep) -> NumericGenRep {
    let character = w.character.inverse(&pres.central);
    let gens = (0..pres.gens.len())
        .map(|g| {
            let m = w.eval(&pres.antipode[g]);
            let mut t = CMat::zero(m.cols, m.rows);
            for i in 0..m.rows {
                for j in 0..m.cols {
                    t.set(j, i, m.at(i, j));
                }
            }
            t
        })
        .collect();
    NumericGenRep {
        character,
        dim: w.dim,
        gens,
    }
}

/// Irreducible labels with dimensions, integer tensor-action matrices over
/// the irreducibles of a target fiber, and the regular-element matrix.
#[derive(Debug, Clone)]
pub struct FusionData {
    pub identity_dims: Vec<usize>,
    pub fiber_dims: Vec<usize>,
    /// `action[i][k][j] = [V_i (x) W_j : W_k]`.
    pub action: Vec<Vec<Vec<usize>>>,
    /// `T_R = sum_i dim(V_i) action[i]`.
    pub regular_matrix: Vec<Vec<usize>>,
}

/// Tensor-action matrices of the identity-fiber irreducibles on the
/// Grothendieck group of the fiber at `entry.space.sampled[fiber_idx]`.
pub fn action_matrices(entry: &Entry, fiber_idx: usize) -> Result<FusionData, GrothendieckError> {
    let id_irreps = &entry.irreps[0];
    let fiber_irreps = &entry.irreps[fiber_idx];
    let fiber = &entry.fibers[fiber_idx];
    let ell = fiber_irreps.len();
    let mut action = Vec::with_capacity(id_irreps.len());
    for vi in id_irreps {
        let mut mat = vec![vec![0usize; ell]; ell];
        for (j, wj) in fiber_irreps.iter().enumerate() {
            let t = tensor_numeric(&entry.pres, &vi.rep, &wj.rep);
            let module = t.to_module(&entry.pres);
            let mults_blocks = composition_multiplicities(&fiber.blocks, &module)
                .map_err(GrothendieckError::from)?;
            // reindex block-order multiplicities into the sorted irreducible order
            for (k, info) in fiber_irreps.iter().enumerate() {
                mat[k][j] = mults_blocks[info.block_index];
            }
            // column dimension sum: sum_k m_kj dim(W_k) = dim(V_i) dim(W_j)
            let lhs: usize = (0..ell).map(|k| mat[k][j] * fiber_irreps[k].dim).sum();
            if lhs != vi.dim * wj.dim {
                return Err(GrothendieckError::CertificationFailed {
                    detail: format!(
                        "column dimension sum fails: {} vs {} at (i, j) = ({:?}, {j})",
                        lhs,
                        vi.dim * wj.dim,
                        vi.dim
                    ),
                });
            }
        }
        action.push(mat);
    }
    let mut regular = vec![vec![0usize; ell]; ell];
    for (vi, mat) in id_irreps.iter().zip(action.iter()) {
        for k in 0..ell {
            for j in 0..ell {
                regular[k][j] += vi.dim * mat[k][j];
            }
        }
    }
    Ok(FusionData {
        identity_dims: id_irreps.iter().map(|v| v.dim).collect(),
        fiber_dims: fiber_irreps.iter().map(|w| w.dim).collect(),
        action,
        regular_matrix: regular,
    })
}

#[derive(Debug, Clone)]
pub struct FpdimResult {
    /// Exact value when the identity-fiber Grothendieck ring is a fusion
    /// ring (Chevalley case): the sum of squared irreducible dimensions.
    pub exact: Option<usize>,
    pub estimate: f64,
    pub method: &'static str,
    pub tolerance: f64,
}

/// Frobenius-Perron dimension of the Grothendieck ring of the identity
/// fiber, with the default Perron tolerance.
pub fn fpdim(entry: &Entry) -> Result<FpdimResult, GrothendieckError> {
    fpdim_with_tol(entry, 1e-9)
}

pub fn fpdim_with_tol(entry: &Entry, tol: f64) -> Result<FpdimResult, GrothendieckError> {
    if entry.identity_chevalley.holds {
        let exact: usize = entry.irreps[0].iter().map(|v| v.dim * v.dim).sum();
        debug_assert_eq!(exact, entry.fibers[0].sd);
        return Ok(FpdimResult {
            exact: Some(exact),
            estimate: exact as f64,
            method: "fusion-ring",
            tolerance: 0.0,
        });
    }
    let fusion = action_matrices(entry, 0)?;
    let m: Vec<Vec<i64>> = fusion
        .regular_matrix
        .iter()
        .map(|row| row.iter().map(|&e| e as i64).collect())
        .collect();
    let est: PerronEstimate =
        perron_eigenvalue(&m, tol).map_err(|e| GrothendieckError::CertificationFailed {
            detail: format!("Perron estimation failed: {e}"),
        })?;
    Ok(FpdimResult {
        exact: None,
        estimate: est.value,
        method: "perron",
        tolerance: tol,
    })
}

#[derive(Debug, Clone)]
pub struct RegularCheck {
    pub applied: bool,
    pub idempotent_identity: bool,
    pub trace_identity: bool,
    pub entries_positive: bool,
    pub regular_matrix: Vec<Vec<usize>>,
}

/// Exact integer identities of the regular-element action when the identity
/// fiber has the Chevalley property: `T^2 = Sd(id) T`, `trace(T) = Sd(id)`,
/// and positivity of all entries.
pub fn regular_identity_check(
    entry: &Entry,
    fiber_idx: usize,
) -> Result<RegularCheck, GrothendieckError> {
    if !entry.identity_chevalley.holds {
        return Ok(RegularCheck {
            applied: false,
            idempotent_identity: false,
            trace_identity: false,
            entries_positive: false,
            regular_matrix: vec![],
        });
    }
    let sd_id = entry.fibers[0].sd;
    let fusion = action_matrices(entry, fiber_idx)?;
    let t = &fusion.regular_matrix;
    let ell = t.len();
    let mut idempotent = true;
    for i in 0..ell {
        for j in 0..ell {
            let mut acc = 0usize;
            for k in 0..ell {
                acc += t[i][k] * t[k][j];
            }
            if acc != sd_id * t[i][j] {
                idempotent = false;
            }
        }
    }
    let trace: usize = (0..ell).map(|i| t[i][i]).sum();
    let positive = t.iter().all(|row| row.iter().all(|&e| e > 0));
    Ok(RegularCheck {
        applied: true,
        idempotent_identity: idempotent,
        trace_identity: trace == sd_id,
        entries_positive: positive,
        regular_matrix: t.clone(),
    })
}

/// Numeric dimension of the intertwiner space between two generator-level
/// modules over the same fiber.
pub fn hom_dimension(
    pres: &HopfPresentation,
    a: &NumericGenRep,
    b: &NumericGenRep,
) -> usize {
    let unknowns = a.dim * b.dim;
    let mut rows: Vec<Vec<C64>> = Vec::new();
    for w in &pres.basis {
        let ma = a.word_mat(w);
        let mb = b.word_mat(w);
        // constraint: mb X = X ma for X of shape (b.dim, a.dim)
        for p in 0..b.dim {
            for q in 0..a.dim {
                let mut row = vec![C64::new(0.0, 0.0); unknowns];
                for r in 0..b.dim {
                    // X_{r q} coefficient from mb[p][r]
                    row[r * a.dim + q] += mb.at(p, r);
                }
                for s in 0..a.dim {
                    // X_{p s} coefficient from -ma[s][q]
                    row[p * a.dim + s] -= ma.at(s, q);
                }
                rows.push(row);
            }
        }
    }
    let rank = crate::findim::numeric::orthonormalize(&rows, 1e-8).len();
    unknowns - rank
}
