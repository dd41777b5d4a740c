//! Exact scalar arithmetic (rationals and cyclotomic numbers), univariate
//! polynomials, exact linear algebra, and certified Perron eigenvalue
//! estimation for nonnegative integer matrices.

mod matrix;
mod perron;
mod poly;
mod scalar;

pub use matrix::{Matrix, RrefResult};
pub use perron::{perron_eigenvalue, PerronEstimate};
pub use poly::{poly_gcd_monic, Poly};
pub use scalar::{root_of_unity, Scalar};

pub type Rational = num::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("power iteration did not converge within {cap} iterations (residual {residual:e})")]
    NonConvergence { cap: usize, residual: f64 },
}

/// Euler totient, by trial division. Inputs here are tiny root-of-unity orders.
pub(crate) fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), *e);
        }
    }
}
