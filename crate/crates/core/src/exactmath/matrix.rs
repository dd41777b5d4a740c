//! Dense matrices over the exact cyclotomic field.

use super::{ExactError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

#[derive(Debug, Clone)]
pub struct RrefResult {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            entries.extend(row);
        }
        Matrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j).add(&a.mul(b));
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|a| a.mul(c)).collect(),
        )
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(i, j).is_zero() {
                        acc = acc.add(&self.at(i, j).mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Reduced row echelon form with rank and pivot columns.
    pub fn rref(&self) -> RrefResult {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = m.at(r, c).inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.at(r, j).mul(&inv);
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                    *m.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        RrefResult {
            reduced: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Exact basis of the right null space; length is `cols - rank`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let RrefResult {
            reduced, pivots, ..
        } = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[fc] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = reduced.at(r, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Scalar, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = Scalar::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) else {
                    return Ok(Scalar::zero());
                };
                for j in 0..n {
                    let a = m.at(p, j).clone();
                    let b = m.at(k, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(k, j) = a;
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(i, j).mul(m.at(k, k)).sub(&m.at(i, k).mul(m.at(k, j)));
                    let v = num.div(&prev)?;
                    *m.at_mut(i, j) = v;
                }
                *m.at_mut(i, k) = Scalar::zero();
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        Ok(if sign { d.neg() } else { d })
    }
}

#[cfg(test)]
mod tests {
    use super::super::root_of_unity;
    use super::*;

    fn s(i: i64) -> Scalar {
        Scalar::from_int(i)
    }

    #[test]
    fn rref_all_ones() {
        let m = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(3);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_cyclotomic_dependent_rows() {
        // second row is zeta_4 times the first
        let i = root_of_unity(4, 1);
        let m = Matrix::from_rows(vec![
            vec![s(1), i.clone()],
            vec![i.clone(), s(-1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_shapes() {
        assert!(Matrix::identity(4).kernel().is_empty());
        assert_eq!(Matrix::zero(2, 3).kernel().len(), 3);
        let m = Matrix::from_rows(vec![vec![s(1), s(1)]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(k[0][0].mul(&s(-1)), k[0][1]);
    }

    #[test]
    fn det_values() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]]);
        assert_eq!(m.det().unwrap(), s(-2));
        assert_eq!(Matrix::identity(5).det().unwrap(), s(1));
        assert!(matches!(
            Matrix::zero(2, 3).det(),
            Err(ExactError::NonSquare { .. })
        ));
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ]);
        assert_eq!(m.rank() + m.kernel().len(), m.cols());
    }
}
