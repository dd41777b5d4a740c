//! Module-level analyses: composition multiplicities through idempotent
//! traces, semisimplicity of a module, and the abelianization.

use num::complex::Complex64;

use crate::exactmath::Matrix;

use super::algebra::{basis_vec, StructureConstAlgebra};
use super::blocks::{BlockData, NumericModule, INT_RESIDUAL};
use super::radical::{build_quotient, jacobson_radical, RadicalData};
use super::FindimError;

/// Multiplicity of each block's irreducible in a composition series of `m`.
/// Traces vanish on the radical, so the character of `m` is additive on
/// composition series and any linear lift of a central idempotent works.
pub fn composition_multiplicities(
    blocks: &BlockData,
    m: &NumericModule,
) -> Result<Vec<usize>, FindimError> {
    let mut mults = Vec::with_capacity(blocks.block_dims.len());
    for (bi, &n) in blocks.block_dims.iter().enumerate() {
        let action = m.act_numeric(&blocks.lifts[bi]);
        let tr = action.trace();
        let ratio = tr / Complex64::new(n as f64, 0.0);
        let rounded = ratio.re.round();
        let residual = (ratio - Complex64::new(rounded, 0.0)).norm();
        if residual > INT_RESIDUAL || rounded < -0.5 {
            return Err(FindimError::CertificationFailed {
                detail: format!(
                    "multiplicity for block {bi} is {ratio} which is not certifiably a nonnegative integer"
                ),
            });
        }
        mults.push(rounded as usize);
    }
    let total: usize = mults
        .iter()
        .zip(blocks.block_dims.iter())
        .map(|(m, n)| m * n)
        .sum();
    if total != m.dim {
        return Err(FindimError::CertificationFailed {
            detail: format!(
                "composition multiplicities {mults:?} against dimensions {:?} sum to {total}, expected module dimension {}",
                blocks.block_dims, m.dim
            ),
        });
    }
    Ok(mults)
}

/// A module is semisimple iff the radical annihilates it.
pub fn is_semisimple_module(rad: &RadicalData, m: &NumericModule, tol: f64) -> bool {
    rad.radical_basis
        .iter()
        .all(|v| m.act_exact(v).norm_inf() < tol)
}

/// Tensor product of two modules over a Hopf-algebra record, through its
/// own coproduct matrix: basis element `b_k` acts by
/// `sum c (rho1(b_i) (x) rho2(b_j))` over the coproduct terms of `b_k`.
pub fn tensor_modules_via_coalgebra(
    a: &StructureConstAlgebra,
    m1: &NumericModule,
    m2: &NumericModule,
) -> Result<NumericModule, FindimError> {
    let co = a.coalgebra.as_ref().ok_or(FindimError::MissingCoalgebraData)?;
    let dim = m1.dim * m2.dim;
    let mats = (0..a.dim)
        .map(|k| {
            let mut m = super::numeric::CMat::zero(dim, dim);
            for (i, j, c) in &co.delta[k] {
                let kr = m1.mats[*i].kron(&m2.mats[*j]);
                m = m.add(&kr.scale(super::numeric::scalar_to_c64(c)));
            }
            m
        })
        .collect();
    Ok(NumericModule { dim, mats })
}

/// Quotient by the two-sided ideal generated by all basis commutators.
pub fn abelianization(a: &StructureConstAlgebra) -> Result<RadicalData, FindimError> {
    let n = a.dim;
    let mut gens: Vec<Vec<crate::exactmath::Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..i {
            let ij = a.sc[i][j].clone();
            let ji = a.sc[j][i].clone();
            let comm: Vec<_> = ij.iter().zip(ji.iter()).map(|(x, y)| x.sub(y)).collect();
            if !comm.iter().all(|c| c.is_zero()) {
                gens.push(comm);
            }
        }
    }
    // close under left and right multiplication
    let mut span = reduce_rows(gens, n);
    loop {
        let mut grew = false;
        let mut candidates = span.clone();
        for v in &span {
            for k in 0..n {
                candidates.push(a.mul_vec(&basis_vec(n, k), v));
                candidates.push(a.mul_vec(v, &basis_vec(n, k)));
            }
        }
        let closed = reduce_rows(candidates, n);
        if closed.len() > span.len() {
            span = closed;
            grew = true;
        }
        if !grew {
            break;
        }
    }
    build_quotient(a, span)
}

/// Number of one-dimensional modules: characters of the abelianization,
/// counted exactly as the dimension of its semisimple quotient.
pub fn one_dim_rep_count(a: &StructureConstAlgebra) -> Result<usize, FindimError> {
    let ab = abelianization(a)?;
    if ab.quotient.dim == 0 {
        return Ok(0);
    }
    let rad = jacobson_radical(&ab.quotient)?;
    Ok(rad.ss_dim)
}

fn reduce_rows(
    rows: Vec<Vec<crate::exactmath::Scalar>>,
    n: usize,
) -> Vec<Vec<crate::exactmath::Scalar>> {
    if rows.is_empty() {
        return vec![];
    }
    let m = Matrix::from_rows(rows);
    let r = m.rref();
    let mut out = Vec::with_capacity(r.rank);
    for i in 0..r.rank {
        out.push(m_row(&r.reduced, i, n));
    }
    out
}

fn m_row(m: &Matrix, i: usize, n: usize) -> Vec<crate::exactmath::Scalar> {
    (0..n).map(|j| m.at(i, j).clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::super::blocks::block_data;
    use super::super::radical::tests::m2;
    use super::*;

    #[test]
    fn m2_abelianization_is_zero() {
        let a = m2();
        let ab = abelianization(&a).unwrap();
        assert_eq!(ab.quotient.dim, 0);
        assert_eq!(one_dim_rep_count(&a).unwrap(), 0);
    }

    #[test]
    fn regular_module_of_m2() {
        let a = m2();
        let rad = jacobson_radical(&a).unwrap();
        let blocks = block_data(&a, &rad, 0).unwrap();
        let reg = NumericModule::regular(&a);
        let mults = composition_multiplicities(&blocks, &reg).unwrap();
        assert_eq!(mults, vec![2]);
        assert!(is_semisimple_module(&rad, &reg, 1e-6));
    }
}
