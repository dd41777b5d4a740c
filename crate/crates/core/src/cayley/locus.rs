//! Zero loci of discriminant ideals, the pointwise square-dimension route,
//! the sandwich certificate, and the lowest nontrivial level.

use crate::exactmath::{Matrix, Poly, Scalar};
use crate::presentation::{CentralCharacter, CharacterSpace, HopfPresentation};

use super::ideal::{IdealDescriptor, IdealForm};
use super::trace::{CentralShape, TraceData};
use super::CayleyError;

#[derive(Debug, Clone, PartialEq)]
pub enum ZeroLocus {
    Empty,
    All,
    Points(Vec<CentralCharacter>),
}

impl ZeroLocus {
    pub fn display(&self, pres: &HopfPresentation) -> String {
        match self {
            ZeroLocus::Empty => "empty".to_string(),
            ZeroLocus::All => "all of maxSpec C".to_string(),
            ZeroLocus::Points(pts) => {
                let labels: Vec<String> =
                    pts.iter().map(|p| p.label(&pres.central)).collect();
                format!("{{{}}}", labels.join(", "))
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ZeroLocus::Empty) || matches!(self, ZeroLocus::Points(p) if p.is_empty())
    }

    pub fn contains(&self, chi: &CentralCharacter) -> bool {
        match self {
            ZeroLocus::Empty => false,
            ZeroLocus::All => true,
            ZeroLocus::Points(pts) => pts.contains(chi),
        }
    }
}

/// Membership of a single character in the vanishing locus of an ideal.
pub fn vanishes_at(id: &IdealDescriptor, td: &TraceData, chi: &CentralCharacter) -> bool {
    match &id.form {
        IdealForm::Unit => false,
        IdealForm::Zero => true,
        IdealForm::Principal(p) => {
            let CentralShape::Univariate { sym } = td.shape else {
                return false;
            };
            p.eval(&chi.values[sym]).is_zero()
        }
        IdealForm::Subspace(basis) => basis.iter().all(|b| b.eval(chi).is_zero()),
    }
}

/// Candidate exact roots tried when factoring a univariate generator:
/// the sampled values, small rationals, and roots of unity of small order.
fn candidate_roots(space: &CharacterSpace, sym: usize) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    let mut push = |s: Scalar| {
        if !out.contains(&s) {
            out.push(s);
        }
    };
    push(Scalar::zero());
    for chi in &space.sampled {
        push(chi.values[sym].clone());
    }
    for i in [1i64, -1, 2, -2, 3, -3, 4, -4] {
        push(Scalar::from_int(i));
    }
    for (p, q) in [(1i64, 2i64), (-1, 2), (1, 3), (-1, 3), (3, 2), (-3, 2)] {
        push(Scalar::from_fraction(p, q));
    }
    for n in 1..=12u64 {
        for k in 0..n {
            push(crate::exactmath::root_of_unity(n, k as i64));
        }
    }
    out
}

/// Exact zero locus of an ideal over the supported character space.
pub fn zero_locus(
    id: &IdealDescriptor,
    td: &TraceData,
    space: &CharacterSpace,
) -> Result<ZeroLocus, CayleyError> {
    match &id.form {
        IdealForm::Unit => Ok(ZeroLocus::Empty),
        IdealForm::Zero => Ok(ZeroLocus::All),
        IdealForm::Principal(p) => {
            let CentralShape::Univariate { sym } = td.shape else {
                return Err(CayleyError::Internal(
                    "principal ideal outside the univariate shape".into(),
                ));
            };
            let mut remaining = p.clone();
            let mut roots: Vec<Scalar> = Vec::new();
            for r in candidate_roots(space, sym) {
                if remaining.is_constant() {
                    break;
                }
                let linear = Poly::from_coeffs(vec![r.neg(), Scalar::one()]);
                while !remaining.is_constant() && remaining.eval(&r).is_zero() {
                    remaining = remaining.exact_div(&linear).expect("root divides");
                    if !roots.contains(&r) {
                        roots.push(r.clone());
                    }
                }
            }
            if !remaining.is_constant() {
                return Err(CayleyError::UnrecognizedRoot {
                    residual: remaining.to_string(),
                });
            }
            let points = roots
                .into_iter()
                .map(|r| {
                    let mut values = space.identity.values.clone();
                    values[sym] = r;
                    CentralCharacter { values }
                })
                .collect();
            Ok(ZeroLocus::Points(points))
        }
        IdealForm::Subspace(_) => {
            let mut points = Vec::new();
            for chi in &space.torsion {
                if vanishes_at(id, td, chi) {
                    points.push(chi.clone());
                }
            }
            if points.is_empty() {
                Ok(ZeroLocus::Empty)
            } else if space.complete && points.len() == space.torsion.len() {
                Ok(ZeroLocus::All)
            } else {
                Ok(ZeroLocus::Points(points))
            }
        }
    }
}

/// Sampled characters whose fiber has square dimension below `k`.
pub fn sd_zero_locus(sd_by_char: &[(CentralCharacter, usize)], k: usize) -> Vec<CentralCharacter> {
    sd_by_char
        .iter()
        .filter(|(_, sd)| *sd < k)
        .map(|(c, _)| c.clone())
        .collect()
}

/// The consistency gate between the ideal route and the square-dimension
/// route: at every sampled character, membership in the vanishing locus of
/// the modified k-discriminant ideal must agree with `Sd < k`.
pub fn sd_ideal_consistency(
    id: &IdealDescriptor,
    td: &TraceData,
    sd_by_char: &[(CentralCharacter, usize)],
    k: usize,
) -> Result<(), CayleyError> {
    for (chi, sd) in sd_by_char {
        let by_ideal = vanishes_at(id, td, chi);
        let by_sd = *sd < k;
        if by_ideal != by_sd {
            return Err(CayleyError::ConsistencyViolation {
                detail: format!(
                    "at character {chi}: ideal route says vanishing = {by_ideal}, square-dimension route says {by_sd} (k = {k})"
                ),
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SandwichStatus {
    /// The sub-ideal and the modified ideal have equal zero loci, so the
    /// full discriminant ideal is pinched in between.
    Certified,
    Mismatch,
}

pub fn sandwich_status(
    sub: &IdealDescriptor,
    modified: &IdealDescriptor,
    td: &TraceData,
    space: &CharacterSpace,
) -> Result<SandwichStatus, CayleyError> {
    let a = zero_locus(sub, td, space)?;
    let b = zero_locus(modified, td, space)?;
    Ok(if a == b {
        SandwichStatus::Certified
    } else {
        SandwichStatus::Mismatch
    })
}

#[derive(Debug, Clone)]
pub struct LevelCertificate {
    pub level: usize,
    pub scan_level: usize,
    /// Frobenius-Perron route when the identity fiber has the Chevalley
    /// property: FPdim of the Grothendieck ring plus one.
    pub fpdim_route: Option<usize>,
}

/// Least `k` with nonempty vanishing locus, by scanning the sampled square
/// dimensions, cross-checked against the Frobenius-Perron route when it
/// applies.
pub fn lowest_level(
    sd_by_char: &[(CentralCharacter, usize)],
    fpdim: Option<usize>,
) -> Result<LevelCertificate, CayleyError> {
    let min_sd = sd_by_char
        .iter()
        .map(|(_, sd)| *sd)
        .min()
        .ok_or_else(|| CayleyError::Internal("no sampled characters".into()))?;
    let scan_level = min_sd + 1;
    if let Some(fp) = fpdim {
        if fp + 1 != scan_level {
            return Err(CayleyError::ConsistencyViolation {
                detail: format!(
                    "lowest level by scan is {scan_level} but the Frobenius-Perron route gives {}",
                    fp + 1
                ),
            });
        }
    }
    Ok(LevelCertificate {
        level: scan_level,
        scan_level,
        fpdim_route: fpdim.map(|f| f + 1),
    })
}

/// Specialize the symbolic Gram matrix at a character.
pub fn specialize_gram(td: &TraceData, chi: &CentralCharacter) -> Matrix {
    let n = td.dim;
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *m.at_mut(i, j) = td.gram[i][j].eval(chi);
        }
    }
    m
}
