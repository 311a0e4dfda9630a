use num_traits::Zero;

use crate::lie::{LieAlgebra, Representation};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{int, Matrix};

/// First basis pair `(a, b)` where `pi(x)theta(y) - pi(y)theta(x) - theta[x,y] != 0`.
pub fn cocycle_defect(h: &LieAlgebra, pi: &Representation, theta: &Matrix) -> Option<(usize, usize)> {
    let n = h.dim();
    if theta.cols() != n || theta.rows() != pi.target_dim() {
        return Some((0, 0));
    }
    for a in 0..n {
        for b in a + 1..n {
            let lhs = scalar::sub(
                &pi.basis_action(a).mul_vec(&theta.column(b)),
                &pi.basis_action(b).mul_vec(&theta.column(a)),
            );
            let rhs = theta.mul_vec(&h.bracket_basis(a, b));
            if lhs != rhs {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_one_cocycle(h: &LieAlgebra, pi: &Representation, theta: &Matrix) -> bool {
    cocycle_defect(h, pi, theta).is_none()
}

/// `Z^1(h, pi)` as an exact basis of `target x n` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSpace {
    pub domain_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
}

/// Solves the cocycle equation as a linear system in the entries of `theta`.
pub fn cocycle_space(h: &LieAlgebra, pi: &Representation) -> CocycleSpace {
    let n = h.dim();
    let m = pi.target_dim();
    let unknowns = m * n;
    // theta[r][c] is unknown r * n + c
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let br = h.bracket_basis(a, b);
            let (pa, pb) = (pi.basis_action(a), pi.basis_action(b));
            for r in 0..m {
                let mut row = vec![Scalar::zero(); unknowns];
                for s in 0..m {
                    row[s * n + b] += &pa[(r, s)];
                    row[s * n + a] -= &pb[(r, s)];
                }
                for (c, coeff) in br.iter().enumerate() {
                    row[r * n + c] -= coeff;
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns).map(|i| scalar::unit(unknowns, i)).collect()
    } else {
        Matrix::from_rows(rows).expect("rows of equal length").kernel_basis()
    };
    let basis = kernel
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(n).map(<[Scalar]>::to_vec).collect()).expect("rectangular"))
        .collect();
    CocycleSpace { domain_dim: n, target_dim: m, basis }
}

impl CocycleSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.target_dim, self.domain_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("same shape");
            }
        }
        out
    }

    /// First nonsingular combination with integer coefficients in `[-bound, bound]`.
    ///
    /// Coefficient vectors are visited shell by shell in max-norm, each shell in
    /// odometer order over `0, 1, -1, 2, -2, ...`.
    pub fn find_nonsingular(&self, bound: u32) -> Option<Matrix> {
        if self.target_dim != self.domain_dim {
            return None;
        }
        if self.domain_dim == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let d = self.dim();
        if d == 0 {
            return None;
        }
        let values: Vec<i64> = std::iter::once(0)
            .chain((1..=bound as i64).flat_map(|k| [k, -k]))
            .collect();
        for shell in 1..=bound as i64 {
            let allowed = 2 * shell as usize + 1;
            let mut idx = vec![0usize; d];
            loop {
                if idx.iter().any(|&i| values[i].abs() == shell) {
                    let coeffs: Vec<Scalar> = idx.iter().map(|&i| int(values[i])).collect();
                    let theta = self.combination(&coeffs);
                    if !theta.determinant().expect("square").is_zero() {
                        return Some(theta);
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == d {
                        break;
                    }
                    idx[pos] += 1;
                    if idx[pos] < allowed {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == d {
                    break;
                }
            }
        }
        None
    }
}
