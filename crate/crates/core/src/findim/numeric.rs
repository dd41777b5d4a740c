//! Small complex-matrix toolkit for the certified numeric layer: everything
//! with an integer answer is recomputed or bounded exactly; these routines
//! only locate roots and split blocks.

use num::complex::Complex64;
use num::Zero;

use crate::exactmath::{Matrix, Scalar};

pub type C64 = Complex64;

#[derive(Debug, Clone)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C64>,
}

impl CMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![C64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_exact(m: &Matrix) -> Self {
        let mut out = CMat::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let (re, im) = m.at(i, j).to_complex();
                out.data[i * m.cols() + j] = C64::new(re, im);
            }
        }
        out
    }

    pub fn at(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = CMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.at(i, j) + a * rhs.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: C64) -> CMat {
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn conj_transpose(&self) -> CMat {
        let mut out = CMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self.at(i, i)).sum()
    }

    pub fn norm_inf(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * v[j]).sum())
            .collect()
    }

    pub fn kron(&self, rhs: &CMat) -> CMat {
        let mut out = CMat::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let s = self.at(i, j);
                if s.norm_sqr() == 0.0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, s * rhs.at(k, l));
                    }
                }
            }
        }
        out
    }
}

pub fn scalar_to_c64(s: &Scalar) -> C64 {
    let (re, im) = s.to_complex();
    C64::new(re, im)
}

pub fn vec_to_c64(v: &[Scalar]) -> Vec<C64> {
    v.iter().map(scalar_to_c64).collect()
}

fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthonormalize a sequence of vectors with modified Gram-Schmidt, dropping
/// vectors whose residual is below `tol` relative to their original norm.
pub fn orthonormalize(vectors: &[Vec<C64>], tol: f64) -> Vec<Vec<C64>> {
    let mut basis: Vec<Vec<C64>> = Vec::new();
    for v in vectors {
        let original = vec_norm(v);
        if original == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                for (wi, bi) in w.iter_mut().zip(b.iter()) {
                    *wi -= c * bi;
                }
            }
        }
        let n = vec_norm(&w);
        if n > tol * original.max(1.0) {
            for wi in w.iter_mut() {
                *wi /= n;
            }
            basis.push(w);
        }
    }
    basis
}

/// Coefficients of `target` against `basis` columns by normal equations;
/// `basis` need not be orthonormal but must be independent.
pub fn least_squares(basis: &[Vec<C64>], target: &[C64]) -> Option<Vec<C64>> {
    let k = basis.len();
    if k == 0 {
        return Some(vec![]);
    }
    let mut g = CMat::zero(k, k);
    let mut rhs = vec![C64::zero(); k];
    for i in 0..k {
        for j in 0..k {
            g.set(i, j, dot(&basis[i], &basis[j]));
        }
        rhs[i] = dot(&basis[i], target);
    }
    solve_dense(&g, &rhs)
}

/// Dense complex linear solve with partial pivoting.
pub fn solve_dense(a: &CMat, b: &[C64]) -> Option<Vec<C64>> {
    let n = a.rows;
    assert_eq!(a.cols, n);
    assert_eq!(b.len(), n);
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (p, max) = (col..n)
            .map(|r| (r, m.at(r, col).norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if max < 1e-13 {
            return None;
        }
        if p != col {
            for j in 0..n {
                let tmp = m.at(p, j);
                m.set(p, j, m.at(col, j));
                m.set(col, j, tmp);
            }
            rhs.swap(p, col);
        }
        let inv = C64::new(1.0, 0.0) / m.at(col, col);
        for r in col + 1..n {
            let f = m.at(r, col) * inv;
            if f.norm_sqr() == 0.0 {
                continue;
            }
            for j in col..n {
                let v = m.at(r, j) - f * m.at(col, j);
                m.set(r, j, v);
            }
            let d = f * rhs[col];
            rhs[r] -= d;
        }
    }
    let mut x = vec![C64::zero(); n];
    for col in (0..n).rev() {
        let mut acc = rhs[col];
        for j in col + 1..n {
            acc -= m.at(col, j) * x[j];
        }
        x[col] = acc / m.at(col, col);
    }
    Some(x)
}

/// All roots of a monic polynomial (coefficients lowest first, leading 1
/// implicit excluded) by Durand-Kerner iteration. Deterministic.
pub fn monic_roots(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len();
    if n == 0 {
        return vec![];
    }
    let eval = |x: C64| -> C64 {
        let mut acc = C64::new(1.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm_sqr() == 0.0 {
                denom = C64::new(1e-12, 0.0);
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_quadratic() {
        // x^2 - 3x + 2 = (x-1)(x-2)
        let roots = monic_roots(&[C64::new(2.0, 0.0), C64::new(-3.0, 0.0)]);
        assert!((roots[0] - C64::new(1.0, 0.0)).norm() < 1e-10);
        assert!((roots[1] - C64::new(2.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn roots_of_unity_found() {
        // x^4 - 1
        let roots = monic_roots(&[
            C64::new(-1.0, 0.0),
            C64::zero(),
            C64::zero(),
            C64::zero(),
        ]);
        for r in &roots {
            assert!((r.norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn solve_small_system() {
        let mut a = CMat::zero(2, 2);
        a.set(0, 0, C64::new(2.0, 0.0));
        a.set(0, 1, C64::new(1.0, 0.0));
        a.set(1, 0, C64::new(1.0, 0.0));
        a.set(1, 1, C64::new(3.0, 0.0));
        let x = solve_dense(&a, &[C64::new(3.0, 0.0), C64::new(4.0, 0.0)]).unwrap();
        assert!((x[0] - C64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((x[1] - C64::new(1.0, 0.0)).norm() < 1e-12);
    }
}
