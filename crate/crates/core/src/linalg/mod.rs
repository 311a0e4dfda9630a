//! Exact rational linear algebra: scalars, dense matrices, sparse systems.

mod matrix;
pub mod scalar;
mod sparse;

pub use matrix::Matrix;
pub use scalar::{frac, int, parse_scalar, Scalar, Vector};
pub use sparse::{SparseSolution, SparseSystem};

use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("row {row} has a different length from row 0")]
    Ragged { row: usize },
    #[error("not an exact rational literal: {0:?}")]
    BadRational(String),
}

/// Counts of positive, negative and zero entries in a congruence-diagonal form of a
/// symmetric matrix (Sylvester inertia).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Inertia of a symmetric matrix by symmetric Gaussian elimination.
pub fn inertia(sym: &Matrix) -> Result<Inertia, LinalgError> {
    if !sym.is_square() {
        return Err(LinalgError::NotSquare { rows: sym.rows(), cols: sym.cols() });
    }
    let mut m = sym.clone();
    let n = m.rows();
    let mut diag = Vec::with_capacity(n);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // Prefer a nonzero diagonal pivot; otherwise create one with x_i + x_j.
        let pivot = active.iter().copied().find(|&i| !m[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active.iter().copied().find_map(|i| {
                    active.iter().copied().find(|&j| j != i && !m[(i, j)].is_zero()).map(|j| (i, j))
                });
                let Some((i, j)) = pair else {
                    diag.extend(std::iter::repeat_n(Scalar::zero(), active.len()));
                    break;
                };
                // row_i += row_j, col_i += col_j
                for c in 0..n {
                    let v = m[(j, c)].clone();
                    m[(i, c)] += v;
                }
                for r in 0..n {
                    let v = m[(r, j)].clone();
                    m[(r, i)] += v;
                }
                i
            }
        };
        let d = m[(p, p)].clone();
        for &r in &active {
            if r == p || m[(r, p)].is_zero() {
                continue;
            }
            let f = &m[(r, p)] / &d;
            for c in 0..n {
                let v = &f * &m[(p, c)];
                m[(r, c)] -= v;
            }
            for c in 0..n {
                let v = &f * &m[(c, p)];
                m[(c, r)] -= v;
            }
        }
        diag.push(d);
        active.retain(|&i| i != p);
    }
    Ok(Inertia {
        positive: diag.iter().filter(|d| d.is_positive()).count(),
        negative: diag.iter().filter(|d| d.is_negative()).count(),
        zero: diag.iter().filter(|d| d.is_zero()).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inertia_of_hyperbolic_plane() {
        let h = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(inertia(&h).unwrap(), Inertia { positive: 1, negative: 1, zero: 0 });
    }

    #[test]
    fn inertia_with_kernel() {
        let m = Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -3]]);
        assert_eq!(inertia(&m).unwrap(), Inertia { positive: 1, negative: 1, zero: 1 });
    }
}
