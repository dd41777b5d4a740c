//! Discriminant and modified discriminant ideals in normalized form.
//!
//! Over a field the normal form is a unit/zero flag; over a univariate
//! central ring it is the monic gcd of the generators; over a
//! finite-dimensional central ring it is the reduced row space of the ideal
//! the generators span.

use crate::exactmath::{poly_gcd_monic, Matrix, Poly, Scalar};
use crate::presentation::{CElem, CMono, CentralDescriptor};

use super::minors::{subsets, MinorTable};
use super::trace::{CentralShape, TraceData};
use super::CayleyError;

#[derive(Debug, Clone, PartialEq)]
pub enum IdealForm {
    Unit,
    Zero,
    /// Monic generator over the univariate central ring.
    Principal(Poly),
    /// Reduced echelon basis of the ideal as a subspace of the
    /// finite-dimensional central ring.
    Subspace(Vec<CElem>),
}

#[derive(Debug, Clone)]
pub struct IdealDescriptor {
    pub shape: CentralShape,
    pub form: IdealForm,
    /// True for the symmetric-tuple sub-ideal of the full discriminant
    /// ideal (principal minors only).
    pub sub_ideal: bool,
}

impl IdealDescriptor {
    pub fn is_trivial(&self) -> bool {
        matches!(self.form, IdealForm::Unit | IdealForm::Zero)
    }

    pub fn display(&self, desc: &CentralDescriptor) -> String {
        match &self.form {
            IdealForm::Unit => "(1)".to_string(),
            IdealForm::Zero => "(0)".to_string(),
            IdealForm::Principal(p) => format!("({p})"),
            IdealForm::Subspace(basis) => {
                let gens: Vec<String> = basis.iter().map(|b| b.display(desc)).collect();
                format!("({})", gens.join(", "))
            }
        }
    }

    /// Ideal containment `other` inside `self`, in normal form.
    pub fn contains(&self, other: &IdealDescriptor, desc: &CentralDescriptor) -> bool {
        match (&self.form, &other.form) {
            (IdealForm::Unit, _) => true,
            (_, IdealForm::Zero) => true,
            (IdealForm::Zero, _) => false,
            (_, IdealForm::Unit) => false,
            (IdealForm::Principal(p), IdealForm::Principal(q)) => {
                q.divrem(p).map(|(_, r)| r.is_zero()).unwrap_or(false)
            }
            (IdealForm::Subspace(a), IdealForm::Subspace(b)) => {
                let monos = desc.torsion_monomials().expect("finite shape");
                let span = span_matrix(a, &monos);
                let rref = span.rref();
                b.iter().all(|v| {
                    in_row_space(&rref.reduced, &rref.pivots, &celem_coords(v, &monos))
                })
            }
            _ => false,
        }
    }
}

fn celem_coords(c: &CElem, monos: &[CMono]) -> Vec<Scalar> {
    monos
        .iter()
        .map(|m| c.terms.get(m).cloned().unwrap_or_else(Scalar::zero))
        .collect()
}

fn span_matrix(gens: &[CElem], monos: &[CMono]) -> Matrix {
    if gens.is_empty() {
        return Matrix::zero(0, monos.len());
    }
    Matrix::from_rows(gens.iter().map(|g| celem_coords(g, monos)).collect())
}

fn in_row_space(rref: &Matrix, pivots: &[usize], v: &[Scalar]) -> bool {
    let mut w = v.to_vec();
    for (r, &p) in pivots.iter().enumerate() {
        if w[p].is_zero() {
            continue;
        }
        let f = w[p].clone();
        for c in 0..w.len() {
            let val = w[c].sub(&f.mul(rref.at(r, c)));
            w[c] = val;
        }
    }
    w.iter().all(|c| c.is_zero())
}

/// Normalize a list of ideal generators for the given central shape.
pub fn normalize_ideal(
    generators: Vec<CElem>,
    td: &TraceData,
    sub_ideal: bool,
) -> Result<IdealDescriptor, CayleyError> {
    let shape = td.shape;
    let live: Vec<CElem> = generators.into_iter().filter(|g| !g.is_zero()).collect();
    let form = match shape {
        CentralShape::Field => {
            if live.is_empty() {
                IdealForm::Zero
            } else {
                IdealForm::Unit
            }
        }
        CentralShape::Univariate { .. } => {
            if live.is_empty() {
                IdealForm::Zero
            } else {
                let mut g = Poly::zero();
                for c in &live {
                    let p = td.to_poly(c);
                    g = if g.is_zero() {
                        p.monic()
                    } else {
                        poly_gcd_monic(&g, &p).map_err(|e| CayleyError::Internal(e.to_string()))?
                    };
                    if g.is_constant() && !g.is_zero() {
                        break;
                    }
                }
                if g.is_constant() {
                    IdealForm::Unit
                } else {
                    IdealForm::Principal(g)
                }
            }
        }
        CentralShape::FiniteDim => {
            let monos = td
                .desc
                .torsion_monomials()
                .ok_or_else(|| CayleyError::Internal("finite shape expected".into()))?;
            // close the span under multiplication by the monomial basis of C
            let mut rows: Vec<CElem> = Vec::new();
            for g in &live {
                for m in &monos {
                    rows.push(g.mul(&CElem::from_term(m.clone(), Scalar::one()), &td.desc));
                }
            }
            if rows.is_empty() {
                IdealForm::Zero
            } else {
                let mat = span_matrix(&rows, &monos);
                let rref = mat.rref();
                if rref.rank == monos.len() {
                    IdealForm::Unit
                } else if rref.rank == 0 {
                    IdealForm::Zero
                } else {
                    let mut basis = Vec::with_capacity(rref.rank);
                    for r in 0..rref.rank {
                        let mut c = CElem::zero();
                        for (j, m) in monos.iter().enumerate() {
                            c.accumulate(m.clone(), rref.reduced.at(r, j).clone());
                        }
                        basis.push(c);
                    }
                    IdealForm::Subspace(basis)
                }
            }
        }
    };
    Ok(IdealDescriptor {
        shape,
        form,
        sub_ideal,
    })
}

/// The modified k-discriminant ideal: all k-by-k minors of the Gram matrix
/// of pairwise traces (row and column tuples range over the basis, which
/// suffices by multilinearity).
pub fn modified_discriminant_ideal(
    td: &TraceData,
    k: usize,
) -> Result<IdealDescriptor, CayleyError> {
    if k == 0 {
        return Err(CayleyError::Internal("k must be positive".into()));
    }
    if k > td.dim {
        return normalize_ideal(vec![], td, false);
    }
    let mut table = MinorTable::new(&td.gram, &td.desc);
    let sets = subsets(td.dim, k);
    let mut gens = Vec::new();
    for &rows in &sets {
        for &cols in &sets {
            let m = table.minor(rows, cols);
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    normalize_ideal(gens, td, false)
}

/// The symmetric-tuple sub-ideal of the k-discriminant ideal: principal
/// k-by-k minors only. Always contained in the modified ideal.
pub fn discriminant_ideal_sub(td: &TraceData, k: usize) -> Result<IdealDescriptor, CayleyError> {
    if k == 0 {
        return Err(CayleyError::Internal("k must be positive".into()));
    }
    if k > td.dim {
        return normalize_ideal(vec![], td, true);
    }
    let mut table = MinorTable::new(&td.gram, &td.desc);
    let mut gens = Vec::new();
    for rows in subsets(td.dim, k) {
        let m = table.minor(rows, rows);
        if !m.is_zero() {
            gens.push(m);
        }
    }
    normalize_ideal(gens, td, true)
}

/// The discriminant: determinant of the full Gram matrix.
pub fn discriminant(td: &TraceData) -> CElem {
    let mut table = MinorTable::new(&td.gram, &td.desc);
    let full = if td.dim == 32 {
        u32::MAX
    } else {
        (1u32 << td.dim) - 1
    };
    table.minor(full, full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::regular_trace_over_c;
    use crate::presentation::parse_presentation;

    const TAFT2: &str = include_str!("../../../../corpus/taft_inf_2.hopf");

    #[test]
    fn taft2_ideals() {
        let pres = parse_presentation(TAFT2).unwrap();
        let td = regular_trace_over_c(&pres).unwrap();
        // det gram = -256 T^2, so MD_4 = (T^2)
        let disc = discriminant(&td);
        assert_eq!(td.to_poly(&disc).to_string(), "-256*T^2");
        let md4 = modified_discriminant_ideal(&td, 4).unwrap();
        match &md4.form {
            IdealForm::Principal(p) => assert_eq!(p.to_string(), "T^2"),
            other => panic!("expected principal, got {other:?}"),
        }
        // MD_2 contains the minor 16 from rows {1,g}
        let md2 = modified_discriminant_ideal(&td, 2).unwrap();
        assert_eq!(md2.form, IdealForm::Unit);
        // MD_3 = (T)
        let md3 = modified_discriminant_ideal(&td, 3).unwrap();
        match &md3.form {
            IdealForm::Principal(p) => assert_eq!(p.to_string(), "T"),
            other => panic!("expected principal, got {other:?}"),
        }
        // beyond the basis size the ideal vanishes
        let md5 = modified_discriminant_ideal(&td, 5).unwrap();
        assert_eq!(md5.form, IdealForm::Zero);
        // chain containments MD_{k+1} within MD_k, sub within modified
        for k in 1..=4 {
            let mk = modified_discriminant_ideal(&td, k).unwrap();
            let mk1 = modified_discriminant_ideal(&td, k + 1).unwrap();
            assert!(mk.contains(&mk1, &pres.central), "k = {k}");
            let sub = discriminant_ideal_sub(&td, k).unwrap();
            assert!(mk.contains(&sub, &pres.central), "sub at k = {k}");
        }
        // the single principal 4x4 minor generates (T^2) as well
        let sub4 = discriminant_ideal_sub(&td, 4).unwrap();
        match &sub4.form {
            IdealForm::Principal(p) => assert_eq!(p.to_string(), "T^2"),
            other => panic!("expected principal, got {other:?}"),
        }
    }

    #[test]
    fn k1_sub_ideal_contains_square_of_rank() {
        let pres = parse_presentation(TAFT2).unwrap();
        let td = regular_trace_over_c(&pres).unwrap();
        // diagonal entries include tr(1*1) = 4, a unit
        let sub1 = discriminant_ideal_sub(&td, 1).unwrap();
        assert_eq!(sub1.form, IdealForm::Unit);
    }
}
