//! Jacobson radical via the trace bilinear form (valid in characteristic
//! zero), the semisimple quotient, and exact center computations.

use crate::exactmath::{Matrix, Scalar};

use super::algebra::{basis_vec, StructureConstAlgebra};
use super::FindimError;

#[derive(Debug, Clone)]
pub struct RadicalData {
    /// Exact coordinate vectors spanning the radical, in echelon form.
    pub radical_basis: Vec<Vec<Scalar>>,
    pub ss_dim: usize,
    /// Row-reduced radical basis used for membership tests and projection.
    rref_rows: Matrix,
    pivots: Vec<usize>,
    /// Standard-basis columns forming a complement of the radical.
    pub complement: Vec<usize>,
    pub quotient: StructureConstAlgebra,
}

/// The Gram matrix of the trace form `(a, b) -> tr(L_a L_b)`.
pub fn trace_gram(a: &StructureConstAlgebra) -> Matrix {
    let tv = a.trace_vector();
    let n = a.dim;
    let mut g = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Scalar::zero();
            for (k, c) in a.sc[i][j].iter().enumerate() {
                if !c.is_zero() && !tv[k].is_zero() {
                    acc = acc.add(&c.mul(&tv[k]));
                }
            }
            *g.at_mut(i, j) = acc;
        }
    }
    g
}

pub fn jacobson_radical(a: &StructureConstAlgebra) -> Result<RadicalData, FindimError> {
    let gram = trace_gram(a);
    let radical_basis = gram.kernel();
    build_quotient(a, radical_basis)
}

/// Quotient of `a` by the two-sided ideal spanned by `ideal_basis` (assumed
/// closed under multiplication by `a`), with projection data.
pub fn build_quotient(
    a: &StructureConstAlgebra,
    ideal_basis: Vec<Vec<Scalar>>,
) -> Result<RadicalData, FindimError> {
    let n = a.dim;
    let rows = if ideal_basis.is_empty() {
        Matrix::zero(0, n)
    } else {
        Matrix::from_rows(ideal_basis.clone())
    };
    let rref = rows.rref();
    let pivots = rref.pivots.clone();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let complement: Vec<usize> = (0..n).filter(|c| !pivot_set.contains(c)).collect();
    let ss_dim = complement.len();

    let reduce = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for c in 0..n {
                let val = out[c].sub(&f.mul(rref.reduced.at(r, c)));
                out[c] = val;
            }
        }
        out
    };
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let red = reduce(v);
        complement.iter().map(|&c| red[c].clone()).collect()
    };

    let mut sc = vec![vec![Vec::new(); ss_dim]; ss_dim];
    for (qi, &ci) in complement.iter().enumerate() {
        for (qj, &cj) in complement.iter().enumerate() {
            sc[qi][qj] = project(&a.sc[ci][cj]);
        }
    }
    let unit = project(&a.unit);
    let quotient = StructureConstAlgebra {
        dim: ss_dim,
        labels: complement.iter().map(|&c| a.labels[c].clone()).collect(),
        sc,
        unit,
        coalgebra: None,
    };
    quotient.validate().map_err(|e| {
        FindimError::Malformed(format!("quotient by the stated ideal is malformed: {e}"))
    })?;
    Ok(RadicalData {
        radical_basis: ideal_basis,
        ss_dim,
        rref_rows: rref.reduced,
        pivots,
        complement,
        quotient,
    })
}

impl RadicalData {
    pub fn dim_radical(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce a vector modulo the ideal; zero iff the vector is a member.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for c in 0..out.len() {
                let val = out[c].sub(&f.mul(self.rref_rows.at(r, c)));
                out[c] = val;
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Coordinates in the complement basis of the quotient.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let red = self.reduce(v);
        self.complement.iter().map(|&c| red[c].clone()).collect()
    }

    /// Linear section of the projection: complement coordinates back into
    /// the ambient algebra.
    pub fn lift(&self, q: &[Scalar], ambient_dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); ambient_dim];
        for (qi, &c) in self.complement.iter().enumerate() {
            out[c] = q[qi].clone();
        }
        out
    }
}

/// Exact basis of the center `{z : zb = bz for all b}`.
pub fn center_basis(a: &StructureConstAlgebra) -> Vec<Vec<Scalar>> {
    let n = a.dim;
    if n == 0 {
        return vec![];
    }
    let mut stacked = Matrix::zero(n * n, n);
    for i in 0..n {
        let li = a.left_mul_basis(i);
        let ri = a.right_mul(&basis_vec(n, i));
        for r in 0..n {
            for c in 0..n {
                *stacked.at_mut(i * n + r, c) = li.at(r, c).sub(ri.at(r, c));
            }
        }
    }
    stacked.kernel()
}

/// Square dimension function: the dimension of the semisimple quotient.
pub fn sd(rad: &RadicalData) -> usize {
    rad.ss_dim
}

/// Number of irreducibles: the dimension of the center of the semisimple
/// quotient, exactly.
pub fn irr_count(rad: &RadicalData) -> usize {
    center_basis(&rad.quotient).len()
}

/// Nilpotency and two-sided-ideal checks for the computed radical; used by
/// the property suites.
pub fn radical_is_nilpotent_ideal(a: &StructureConstAlgebra, rad: &RadicalData) -> bool {
    let n = a.dim;
    // two-sided ideal: closed under multiplication by every basis element
    for v in &rad.radical_basis {
        for i in 0..n {
            let left = a.mul_vec(&basis_vec(n, i), v);
            let right = a.mul_vec(v, &basis_vec(n, i));
            if !rad.contains(&left) || !rad.contains(&right) {
                return false;
            }
        }
    }
    // nilpotency: k-fold products vanish for some k <= dim
    let mut layer: Vec<Vec<Scalar>> = rad.radical_basis.clone();
    for _ in 0..n {
        if layer.is_empty() {
            return true;
        }
        let mut next: Vec<Vec<Scalar>> = Vec::new();
        for v in &layer {
            for w in &rad.radical_basis {
                let p = a.mul_vec(v, w);
                if !p.iter().all(|c| c.is_zero()) {
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        // reduce to an independent spanning set to keep the layers small
        let rows = Matrix::from_rows(next);
        let rref = rows.rref();
        let mut reduced = Vec::new();
        for r in 0..rref.rank {
            reduced.push(rref.reduced.row(r).to_vec());
        }
        layer = reduced;
    }
    layer.is_empty()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactmath::Scalar;

    fn s(i: i64) -> Scalar {
        Scalar::from_int(i)
    }

    /// k[t]/(t^2): basis {1, t}, t^2 = 0.
    fn dual_numbers() -> StructureConstAlgebra {
        let z = || vec![s(0), s(0)];
        let mut sc = vec![vec![z(), z()], vec![z(), z()]];
        sc[0][0] = vec![s(1), s(0)];
        sc[0][1] = vec![s(0), s(1)];
        sc[1][0] = vec![s(0), s(1)];
        sc[1][1] = vec![s(0), s(0)];
        StructureConstAlgebra {
            dim: 2,
            labels: vec!["1".into(), "t".into()],
            sc,
            unit: vec![s(1), s(0)],
            coalgebra: None,
        }
    }

    /// M_2(k) with matrix-unit basis e11, e12, e21, e22.
    pub(crate) fn m2() -> StructureConstAlgebra {
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut sc = vec![vec![vec![s(0); 4]; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            sc[idx(i, j)][idx(k, l)][idx(i, l)] = s(1);
                        }
                    }
                }
            }
        }
        StructureConstAlgebra {
            dim: 4,
            labels: vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
            sc,
            unit: vec![s(1), s(0), s(0), s(1)],
            coalgebra: None,
        }
    }

    #[test]
    fn dual_numbers_radical() {
        let a = dual_numbers();
        a.validate().unwrap();
        let rad = jacobson_radical(&a).unwrap();
        assert_eq!(rad.dim_radical(), 1);
        assert_eq!(rad.ss_dim, 1);
        assert!(radical_is_nilpotent_ideal(&a, &rad));
    }

    #[test]
    fn matrix_algebra_is_semisimple() {
        let a = m2();
        a.validate().unwrap();
        let rad = jacobson_radical(&a).unwrap();
        assert_eq!(rad.dim_radical(), 0);
        assert_eq!(sd(&rad), 4);
        assert_eq!(irr_count(&rad), 1);
        // regular trace of a matrix unit: tr(L_e11) = 2
        let tv = a.trace_vector();
        assert_eq!(tv[0], s(2));
    }

    #[test]
    fn center_of_m2_is_scalars() {
        let a = m2();
        assert_eq!(center_basis(&a).len(), 1);
    }
}
