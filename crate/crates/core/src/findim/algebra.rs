//! Finite-dimensional associative algebras given by structure constants over
//! the exact field, optionally carrying coalgebra data.

use crate::exactmath::{Matrix, Scalar};

use super::FindimError;

/// `sc[i][j]` is the coordinate vector of `b_i * b_j` in the basis.
#[derive(Debug, Clone)]
pub struct StructureConstAlgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    pub sc: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    pub coalgebra: Option<CoalgebraData>,
}

/// Coproduct, counit and antipode matrices on the basis.
#[derive(Debug, Clone)]
pub struct CoalgebraData {
    /// Sparse coproduct: for basis element `k`, terms `(i, j, c)` meaning
    /// `c * b_i (x) b_j`.
    pub delta: Vec<Vec<(usize, usize, Scalar)>>,
    pub epsilon: Vec<Scalar>,
    /// Column `j` holds the coordinates of the antipode of `b_j`.
    pub antipode: Matrix,
}

impl StructureConstAlgebra {
    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul(y);
                for (k, c) in self.sc[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].add(&c.mul(&xy));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by basis element `i`.
    pub fn left_mul_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                *m.at_mut(k, j) = self.sc[i][j][k].clone();
            }
        }
        m
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mul(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = &self.sc[i][j][k];
                    if !c.is_zero() {
                        let v = m.at(k, j).add(&c.mul(x));
                        *m.at_mut(k, j) = v;
                    }
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by an arbitrary element.
    pub fn right_mul(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let mut basis = vec![Scalar::zero(); self.dim];
            basis[j] = Scalar::one();
            let col = self.mul_vec(&basis, a);
            for k in 0..self.dim {
                *m.at_mut(k, j) = col[k].clone();
            }
        }
        m
    }

    /// The regular representation: one left-multiplication matrix per basis
    /// element. `L` is an algebra homomorphism.
    pub fn regular_rep(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.left_mul_basis(i)).collect()
    }

    /// Trace of left multiplication by each basis element.
    pub fn trace_vector(&self) -> Vec<Scalar> {
        (0..self.dim)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.dim {
                    acc = acc.add(&self.sc[i][j][j]);
                }
                acc
            })
            .collect()
    }

    pub fn trace_of(&self, a: &[Scalar]) -> Scalar {
        let tv = self.trace_vector();
        let mut acc = Scalar::zero();
        for (x, t) in a.iter().zip(tv.iter()) {
            if !x.is_zero() && !t.is_zero() {
                acc = acc.add(&x.mul(t));
            }
        }
        acc
    }

    /// Exhaustive checks: associativity, two-sided unit, and, when coalgebra
    /// data is present, coassociativity, the counit axiom and the antipode
    /// axiom on the basis.
    pub fn validate(&self) -> Result<(), FindimError> {
        let n = self.dim;
        if self.labels.len() != n || self.sc.len() != n || self.unit.len() != n {
            return Err(FindimError::Malformed("dimension mismatch".into()));
        }
        for i in 0..n {
            let ei = basis_vec(n, i);
            if self.mul_vec(&self.unit, &ei) != ei || self.mul_vec(&ei, &self.unit) != ei {
                return Err(FindimError::Malformed(format!(
                    "unit fails on basis element {}",
                    self.labels[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.sc[i][j].clone();
                for k in 0..n {
                    let ek = basis_vec(n, k);
                    let left = self.mul_vec(&ij, &ek);
                    let right = self.mul_vec(&basis_vec(n, i), &self.mul_vec(&basis_vec(n, j), &ek));
                    if left != right {
                        return Err(FindimError::Malformed(format!(
                            "associativity fails at ({},{},{})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        if self.coalgebra.is_some() {
            self.validate_coalgebra()?;
        }
        Ok(())
    }

    fn validate_coalgebra(&self) -> Result<(), FindimError> {
        let n = self.dim;
        let co = self.coalgebra.as_ref().unwrap();
        if co.delta.len() != n || co.epsilon.len() != n {
            return Err(FindimError::Malformed("coalgebra data length mismatch".into()));
        }
        // coassociativity: (delta (x) id) delta = (id (x) delta) delta
        for k in 0..n {
            let mut lhs: std::collections::BTreeMap<(usize, usize, usize), Scalar> =
                Default::default();
            let mut rhs = lhs.clone();
            for (i, j, c) in &co.delta[k] {
                for (a, b, c2) in &co.delta[*i] {
                    accumulate3(&mut lhs, (*a, *b, *j), c.mul(c2));
                }
                for (a, b, c2) in &co.delta[*j] {
                    accumulate3(&mut rhs, (*i, *a, *b), c.mul(c2));
                }
            }
            if lhs != rhs {
                return Err(FindimError::Malformed(format!(
                    "coassociativity fails at {}",
                    self.labels[k]
                )));
            }
            // counit axiom
            let mut left = vec![Scalar::zero(); n];
            let mut right = vec![Scalar::zero(); n];
            for (i, j, c) in &co.delta[k] {
                left[*j] = left[*j].add(&c.mul(&co.epsilon[*i]));
                right[*i] = right[*i].add(&c.mul(&co.epsilon[*j]));
            }
            if left != basis_vec(n, k) || right != basis_vec(n, k) {
                return Err(FindimError::Malformed(format!(
                    "counit axiom fails at {}",
                    self.labels[k]
                )));
            }
            // antipode axiom: sum S(b_i) b_j = epsilon(b_k) 1 = sum b_i S(b_j)
            let mut s_left = vec![Scalar::zero(); n];
            let mut s_right = vec![Scalar::zero(); n];
            for (i, j, c) in &co.delta[k] {
                let si: Vec<Scalar> = (0..n).map(|r| co.antipode.at(r, *i).clone()).collect();
                let sj: Vec<Scalar> = (0..n).map(|r| co.antipode.at(r, *j).clone()).collect();
                let l = self.mul_vec(&si, &basis_vec(n, *j));
                let r = self.mul_vec(&basis_vec(n, *i), &sj);
                for t in 0..n {
                    s_left[t] = s_left[t].add(&l[t].mul(c));
                    s_right[t] = s_right[t].add(&r[t].mul(c));
                }
            }
            let expected: Vec<Scalar> = self
                .unit
                .iter()
                .map(|u| u.mul(&co.epsilon[k]))
                .collect();
            if s_left != expected || s_right != expected {
                return Err(FindimError::Malformed(format!(
                    "antipode axiom fails at {}",
                    self.labels[k]
                )));
            }
        }
        // counit is an algebra map
        for i in 0..n {
            for j in 0..n {
                let mut eps_prod = Scalar::zero();
                for (k, c) in self.sc[i][j].iter().enumerate() {
                    eps_prod = eps_prod.add(&c.mul(&co.epsilon[k]));
                }
                if eps_prod != co.epsilon[i].mul(&co.epsilon[j]) {
                    return Err(FindimError::Malformed(format!(
                        "counit is not an algebra map at ({},{})",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Dense coproduct matrix (dim^2 x dim), flat index `i*dim + j` for
    /// `b_i (x) b_j`.
    pub fn delta_matrix(&self) -> Option<Matrix> {
        let co = self.coalgebra.as_ref()?;
        let n = self.dim;
        let mut m = Matrix::zero(n * n, n);
        for (k, terms) in co.delta.iter().enumerate() {
            for (i, j, c) in terms {
                let row = i * n + j;
                let v = m.at(row, k).add(c);
                *m.at_mut(row, k) = v;
            }
        }
        Some(m)
    }
}

pub fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn accumulate3(
    map: &mut std::collections::BTreeMap<(usize, usize, usize), Scalar>,
    key: (usize, usize, usize),
    val: Scalar,
) {
    if val.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Scalar::zero);
    *entry = entry.add(&val);
    if entry.is_zero() {
        map.remove(&key);
    }
}
