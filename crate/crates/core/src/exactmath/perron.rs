//! Perron eigenvalue estimation for square nonnegative integer matrices by
//! power iteration on `M + I`, which is primitive whenever `M` is
//! irreducible. Deterministic for a given matrix and tolerance.

use super::ExactError;

const ITERATION_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy)]
pub struct PerronEstimate {
    pub value: f64,
    pub iterations: usize,
    pub residual: f64,
}

/// Spectral-radius estimate for a nonnegative integer matrix within `tol`.
pub fn perron_eigenvalue(m: &[Vec<i64>], tol: f64) -> Result<PerronEstimate, ExactError> {
    let n = m.len();
    assert!(n > 0, "matrix must be nonempty");
    assert!(tol > 0.0);
    for row in m {
        assert_eq!(row.len(), n, "matrix must be square");
        assert!(row.iter().all(|&e| e >= 0), "entries must be nonnegative");
    }
    // power iteration on M + I
    let shifted: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m[i][j] as f64 + if i == j { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for iter in 1..=ITERATION_CAP {
        let mut w = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += shifted[i][j] * v[j];
            }
            w[i] = acc;
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            // M + I has positive diagonal, so this cannot happen
            return Err(ExactError::NonConvergence {
                cap: iter,
                residual: f64::INFINITY,
            });
        }
        for x in w.iter_mut() {
            *x /= norm;
        }
        // Rayleigh quotient of the shifted matrix
        let mut rq = 0.0;
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += shifted[i][j] * w[j];
            }
            rq += w[i] * acc;
        }
        let residual = {
            let mut r = 0.0f64;
            for i in 0..n {
                let mut acc = 0.0;
                for j in 0..n {
                    acc += shifted[i][j] * w[j];
                }
                r = r.max((acc - rq * w[i]).abs());
            }
            r
        };
        let scale = rq.abs().max(1.0);
        if (rq - lambda).abs() < tol / 10.0 && residual < tol * scale {
            return Ok(PerronEstimate {
                value: rq - 1.0,
                iterations: iter,
                residual,
            });
        }
        lambda = rq;
        v = w;
    }
    Err(ExactError::NonConvergence {
        cap: ITERATION_CAP,
        residual: f64::NAN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones() {
        let m = vec![vec![1, 1], vec![1, 1]];
        let est = perron_eigenvalue(&m, 1e-9).unwrap();
        assert!((est.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn swap_matrix() {
        let m = vec![vec![0, 1], vec![1, 0]];
        let est = perron_eigenvalue(&m, 1e-9).unwrap();
        assert!((est.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn one_by_one() {
        let est = perron_eigenvalue(&[vec![2]], 1e-9).unwrap();
        assert!((est.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn rank_one_idempotent_shape() {
        // T with T^2 = c*T and positive entries has spectral radius c
        let m = vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]];
        let est = perron_eigenvalue(&m, 1e-9).unwrap();
        assert!((est.value - 3.0).abs() < 1e-9);
    }
}
