//! Wedderburn block extraction.
//!
//! Block dimensions and irreducible representations are located numerically
//! (root-finding on exactly computed minimal polynomials, spectral
//! idempotents) and then certified against exact integer data: the sum of
//! squared block dimensions must match the semisimple dimension and the
//! block count must match the exact center dimension. Failure aborts rather
//! than returning uncertified data.

use num::complex::Complex64;
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{Matrix, Scalar};

use super::algebra::{basis_vec, StructureConstAlgebra};
use super::numeric::{
    least_squares, monic_roots, orthonormalize, scalar_to_c64, vec_norm, vec_to_c64, C64, CMat,
};
use super::radical::{center_basis, RadicalData};
use super::FindimError;

pub const EIGEN_GAP: f64 = 1e-8;
pub const INT_RESIDUAL: f64 = 1e-6;
pub const REP_RESIDUAL: f64 = 1e-8;
const ATTEMPTS: usize = 8;

#[derive(Debug, Clone)]
pub struct BlockData {
    pub block_dims: Vec<usize>,
    /// Numeric central idempotents, coordinates in the semisimple quotient.
    pub idempotents: Vec<Vec<C64>>,
    /// The same idempotents lifted linearly into the ambient algebra.
    pub lifts: Vec<Vec<C64>>,
    pub irr_count: usize,
}

/// A module over the algebra given numerically: one matrix per basis
/// element of the algebra.
#[derive(Debug, Clone)]
pub struct NumericModule {
    pub dim: usize,
    pub mats: Vec<CMat>,
}

impl NumericModule {
    /// Action of an exact element given by coordinates.
    pub fn act_exact(&self, coords: &[Scalar]) -> CMat {
        let mut out = CMat::zero(self.dim, self.dim);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.mats[k].scale(scalar_to_c64(c)));
        }
        out
    }

    pub fn act_numeric(&self, coords: &[C64]) -> CMat {
        let mut out = CMat::zero(self.dim, self.dim);
        for (k, c) in coords.iter().enumerate() {
            if c.norm_sqr() == 0.0 {
                continue;
            }
            out = out.add(&self.mats[k].scale(*c));
        }
        out
    }

    /// The regular module: each basis element acts by left multiplication.
    pub fn regular(a: &StructureConstAlgebra) -> Self {
        NumericModule {
            dim: a.dim,
            mats: (0..a.dim)
                .map(|i| CMat::from_exact(&a.left_mul_basis(i)))
                .collect(),
        }
    }

    /// Residual of the defining identities: how far the matrices are from an
    /// algebra homomorphism.
    pub fn action_residual(&self, a: &StructureConstAlgebra) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..a.dim {
            for j in 0..a.dim {
                let prod = self.mats[i].mul(&self.mats[j]);
                let mut expect = CMat::zero(self.dim, self.dim);
                for (k, c) in a.sc[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        expect = expect.add(&self.mats[k].scale(scalar_to_c64(c)));
                    }
                }
                worst = worst.max(prod.sub(&expect).norm_inf());
            }
        }
        let unit = self.act_exact(&a.unit);
        worst = worst.max(unit.sub(&CMat::identity(self.dim)).norm_inf());
        worst
    }
}

/// Complex copy of an algebra's structure constants.
struct NumericAlgebra {
    dim: usize,
    sc: Vec<Vec<Vec<C64>>>,
    trace: Vec<C64>,
    unit: Vec<C64>,
}

impl NumericAlgebra {
    fn new(a: &StructureConstAlgebra) -> Self {
        NumericAlgebra {
            dim: a.dim,
            sc: a
                .sc
                .iter()
                .map(|row| row.iter().map(|v| vec_to_c64(v)).collect())
                .collect(),
            trace: vec_to_c64(&a.trace_vector()),
            unit: vec_to_c64(&a.unit),
        }
    }

    fn mul_vec(&self, x: &[C64], y: &[C64]) -> Vec<C64> {
        let mut out = vec![C64::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.norm_sqr() == 0.0 {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.sc[i][j].iter().enumerate() {
                    out[k] += c * ab;
                }
            }
        }
        out
    }

    fn left_trace(&self, x: &[C64]) -> C64 {
        x.iter().zip(self.trace.iter()).map(|(a, t)| a * t).sum()
    }

    fn left_mul_matrix(&self, i: usize) -> CMat {
        let mut m = CMat::zero(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.sc[i][j][k]);
            }
        }
        m
    }
}

/// Solve `cols * x = target` exactly; `None` when inconsistent.
fn exact_solve(cols: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = target.len();
    let k = cols.len();
    let mut aug = Matrix::zero(n, k + 1);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            *aug.at_mut(i, j) = col[i].clone();
        }
    }
    for i in 0..n {
        *aug.at_mut(i, k) = target[i].clone();
    }
    let r = aug.rref();
    if r.pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Scalar::zero(); k];
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.reduced.at(row, k).clone();
    }
    Some(x)
}

/// Exact minimal polynomial (monic, coefficients lowest first, leading 1
/// omitted) of the element with the given coordinates.
fn exact_min_poly(a: &StructureConstAlgebra, elem: &[Scalar]) -> Vec<Scalar> {
    let mut powers: Vec<Vec<Scalar>> = vec![a.unit.clone()];
    loop {
        let next = a.mul_vec(powers.last().unwrap(), elem);
        if let Some(coeffs) = exact_solve(&powers, &next) {
            return coeffs.into_iter().map(|c| c.neg()).collect();
        }
        powers.push(next);
    }
}

pub fn block_data(
    a: &StructureConstAlgebra,
    rad: &RadicalData,
    seed: u64,
) -> Result<BlockData, FindimError> {
    let b = &rad.quotient;
    let s = b.dim;
    if s == 0 {
        return Ok(BlockData {
            block_dims: vec![],
            idempotents: vec![],
            lifts: vec![],
            irr_count: 0,
        });
    }
    let centers = center_basis(b);
    let r = centers.len();
    let nb = NumericAlgebra::new(b);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut last_err = String::new();
    for _ in 0..ATTEMPTS {
        // random exact central element
        let mut z = vec![Scalar::zero(); s];
        for c in &centers {
            let w = Scalar::from_int(rng.random_range(-9..=9));
            for (zi, ci) in z.iter_mut().zip(c.iter()) {
                *zi = zi.add(&ci.mul(&w));
            }
        }
        let min_poly = exact_min_poly(b, &z);
        if min_poly.len() != r {
            last_err = format!(
                "central element separates only {} of {} blocks",
                min_poly.len(),
                r
            );
            continue;
        }
        let roots = monic_roots(&min_poly.iter().map(scalar_to_c64).collect::<Vec<_>>());
        let mut gap_ok = true;
        for i in 0..roots.len() {
            for j in 0..i {
                if (roots[i] - roots[j]).norm() < EIGEN_GAP {
                    gap_ok = false;
                }
            }
        }
        if !gap_ok {
            last_err = "eigenvalue clusters closer than the gap tolerance".into();
            continue;
        }
        // Lagrange idempotents at each root
        let zc = vec_to_c64(&z);
        let mut idempotents = Vec::with_capacity(r);
        let mut dims = Vec::with_capacity(r);
        let mut ok = true;
        for (i, lam) in roots.iter().enumerate() {
            let mut e = nb.unit.clone();
            for (j, mu) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                // e <- (z - mu) e / (lam - mu)
                let ze = nb.mul_vec(&zc, &e);
                let denom = lam - mu;
                for (t, zev) in ze.iter().enumerate() {
                    e[t] = (zev - mu * e[t]) / denom;
                }
            }
            let tr = nb.left_trace(&e);
            let n_est = tr.re.max(0.0).sqrt();
            let n_round = n_est.round() as usize;
            let residual = (tr - Complex64::new((n_round * n_round) as f64, 0.0)).norm();
            if n_round == 0 || residual > INT_RESIDUAL {
                ok = false;
                last_err = format!(
                    "block trace {tr} is not certifiably a squared integer (residual {residual:e})"
                );
                break;
            }
            dims.push(n_round);
            idempotents.push(e);
        }
        if !ok {
            continue;
        }
        let total: usize = dims.iter().map(|n| n * n).sum();
        if total != rad.ss_dim || dims.len() != r {
            return Err(FindimError::CertificationFailed {
                detail: format!(
                    "block dimensions {:?} fail certification: sum of squares {} vs semisimple dimension {}, count {} vs center dimension {}",
                    dims, total, rad.ss_dim, dims.len(), r
                ),
            });
        }
        let lifts = idempotents
            .iter()
            .map(|e| {
                let mut lift = vec![C64::zero(); a.dim];
                for (qi, &c) in rad.complement.iter().enumerate() {
                    lift[c] = e[qi];
                }
                lift
            })
            .collect();
        return Ok(BlockData {
            block_dims: dims,
            idempotents,
            lifts,
            irr_count: r,
        });
    }
    Err(FindimError::CertificationFailed {
        detail: format!("block splitting failed after {ATTEMPTS} seeded attempts: {last_err}"),
    })
}

/// One numeric irreducible representation per block, certified against the
/// structure constants, deterministic for a given seed.
pub fn irreducible_reps(
    a: &StructureConstAlgebra,
    rad: &RadicalData,
    blocks: &BlockData,
    seed: u64,
) -> Result<Vec<NumericModule>, FindimError> {
    let b = &rad.quotient;
    let s = b.dim;
    let nb = NumericAlgebra::new(b);
    let left_mats: Vec<CMat> = (0..s).map(|i| nb.left_mul_matrix(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2545_f491_4f6c_dd1d);
    let mut out = Vec::with_capacity(blocks.block_dims.len());
    for (bi, &n) in blocks.block_dims.iter().enumerate() {
        let e = &blocks.idempotents[bi];
        let mut found = None;
        let mut last_err = String::new();
        for _ in 0..ATTEMPTS {
            // generic element of the corner e B e
            let rvec: Vec<C64> = (0..s)
                .map(|_| C64::new(rng.random_range(-9..=9) as f64, 0.0))
                .collect();
            let u = nb.mul_vec(e, &nb.mul_vec(&rvec, e));
            // numeric minimal polynomial of u relative to the corner unit e
            let mut powers: Vec<Vec<C64>> = vec![e.clone()];
            let mut coeffs: Option<Vec<C64>> = None;
            for _ in 0..n {
                let next = nb.mul_vec(powers.last().unwrap(), &u);
                let basis = orthonormalize(&powers, 1e-10);
                let mut resid = next.clone();
                for q in &basis {
                    let c: C64 = q.iter().zip(resid.iter()).map(|(x, y)| x.conj() * y).sum();
                    for (ri, qi) in resid.iter_mut().zip(q.iter()) {
                        *ri -= c * qi;
                    }
                }
                if vec_norm(&resid) < 1e-8 * vec_norm(&next).max(1.0) {
                    coeffs = least_squares(&powers, &next);
                    break;
                }
                powers.push(next);
            }
            let min_deg = powers.len();
            if min_deg < n {
                last_err = format!("corner element separates only {min_deg} of {n} eigenvalues");
                continue;
            }
            let coeffs = match coeffs {
                Some(c) => c,
                None => match least_squares(&powers, &nb.mul_vec(powers.last().unwrap(), &u)) {
                    Some(c) => c,
                    None => {
                        last_err = "least squares for the minimal polynomial failed".into();
                        continue;
                    }
                },
            };
            let monic: Vec<C64> = coeffs.iter().map(|c| -c).collect();
            let roots = monic_roots(&monic);
            let mut gap_ok = true;
            for i in 0..roots.len() {
                for j in 0..i {
                    if (roots[i] - roots[j]).norm() < EIGEN_GAP {
                        gap_ok = false;
                    }
                }
            }
            if !gap_ok {
                last_err = "eigenvalues of the corner element are not separated".into();
                continue;
            }
            let lam = *roots.last().unwrap();
            // spectral idempotent of u at lam inside the corner
            let mut f = e.clone();
            for mu in roots.iter().take(roots.len() - 1) {
                let uf = nb.mul_vec(&u, &f);
                let denom = lam - mu;
                for (t, ufv) in uf.iter().enumerate() {
                    f[t] = (ufv - mu * f[t]) / denom;
                }
            }
            // the left ideal B*f carries the irreducible module
            let columns: Vec<Vec<C64>> = (0..s)
                .map(|k| {
                    let mut ek = vec![C64::zero(); s];
                    ek[k] = C64::new(1.0, 0.0);
                    nb.mul_vec(&ek, &f)
                })
                .collect();
            let w = orthonormalize(&columns, 1e-8);
            if w.len() != n {
                last_err = format!("left ideal has numeric rank {} instead of {}", w.len(), n);
                continue;
            }
            // restriction of left multiplication to the invariant subspace
            let mut rho_b = Vec::with_capacity(s);
            let mut resid: f64 = 0.0;
            for lm in left_mats.iter() {
                let mut m = CMat::zero(n, n);
                for (cj, wj) in w.iter().enumerate() {
                    let lw = lm.apply(wj);
                    // coordinates of lw against the orthonormal basis
                    for (ci, wi) in w.iter().enumerate() {
                        let c: C64 = wi.iter().zip(lw.iter()).map(|(x, y)| x.conj() * y).sum();
                        m.set(ci, cj, c);
                    }
                    // invariance certification
                    let mut recon = vec![C64::zero(); s];
                    for (ci, wi) in w.iter().enumerate() {
                        for (t, wv) in wi.iter().enumerate() {
                            recon[t] += m.at(ci, cj) * wv;
                        }
                    }
                    let diff: f64 = lw
                        .iter()
                        .zip(recon.iter())
                        .map(|(x, y)| (x - y).norm_sqr())
                        .sum::<f64>()
                        .sqrt();
                    resid = resid.max(diff);
                }
                rho_b.push(m);
            }
            if resid > REP_RESIDUAL * 10.0 {
                last_err = format!("invariant subspace leaks (residual {resid:e})");
                continue;
            }
            // pull back to the ambient algebra through the quotient map
            let mats: Vec<CMat> = (0..a.dim)
                .map(|j| {
                    let pj = rad.project(&basis_vec(a.dim, j));
                    let mut m = CMat::zero(n, n);
                    for (k, c) in pj.iter().enumerate() {
                        if !c.is_zero() {
                            m = m.add(&rho_b[k].scale(scalar_to_c64(c)));
                        }
                    }
                    m
                })
                .collect();
            let module = NumericModule { dim: n, mats };
            let action_resid = module.action_residual(a);
            if action_resid > REP_RESIDUAL {
                last_err = format!("representation residual {action_resid:e} above tolerance");
                continue;
            }
            found = Some(module);
            break;
        }
        match found {
            Some(m) => out.push(m),
            None => {
                return Err(FindimError::CertificationFailed {
                    detail: format!(
                        "irreducible extraction for block {bi} (dimension {n}) failed: {last_err}"
                    ),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::radical::jacobson_radical;
    use super::super::radical::tests::m2;
    use super::*;

    #[test]
    fn m2_has_one_block_of_dim_2() {
        let a = m2();
        let rad = jacobson_radical(&a).unwrap();
        let blocks = block_data(&a, &rad, 0).unwrap();
        assert_eq!(blocks.block_dims, vec![2]);
        let reps = irreducible_reps(&a, &rad, &blocks, 0).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].dim, 2);
        assert!(reps[0].action_residual(&a) < 1e-8);
    }

    /// M_2 plus a one-dimensional block.
    #[test]
    fn block_dims_of_m2_plus_line() {
        let m = m2();
        let n = 5;
        let mut sc = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    sc[i][j][k] = m.sc[i][j][k].clone();
                }
            }
        }
        sc[4][4][4] = Scalar::from_int(1);
        let mut unit = vec![Scalar::zero(); n];
        unit[0] = Scalar::from_int(1);
        unit[3] = Scalar::from_int(1);
        unit[4] = Scalar::from_int(1);
        let a = StructureConstAlgebra {
            dim: n,
            labels: vec!["e11".into(), "e12".into(), "e21".into(), "e22".into(), "u".into()],
            sc,
            unit,
            coalgebra: None,
        };
        a.validate().unwrap();
        let rad = jacobson_radical(&a).unwrap();
        let blocks = block_data(&a, &rad, 3).unwrap();
        let mut dims = blocks.block_dims.clone();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
        let reps = irreducible_reps(&a, &rad, &blocks, 3).unwrap();
        let mut rep_dims: Vec<usize> = reps.iter().map(|r| r.dim).collect();
        rep_dims.sort_unstable();
        assert_eq!(rep_dims, vec![1, 2]);
    }
}
