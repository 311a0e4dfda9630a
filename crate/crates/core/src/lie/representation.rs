use super::{LieAlgebra, LieError};
use crate::linalg::scalar::Scalar;
use crate::linalg::Matrix;

/// A representation `pi: h -> End(V)`, one matrix per basis vector of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    target_dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Validates sizes and the homomorphism property `pi[x,y] = [pi x, pi y]` on basis pairs.
    pub fn new(h: &LieAlgebra, matrices: Vec<Matrix>) -> Result<Self, LieError> {
        if matrices.len() != h.dim() {
            return Err(LieError::DimensionMismatch { expected: h.dim(), found: matrices.len() });
        }
        let target_dim = matrices.first().map_or(0, Matrix::rows);
        for m in &matrices {
            if m.rows() != target_dim || m.cols() != target_dim {
                return Err(LieError::DimensionMismatch { expected: target_dim, found: m.rows().max(m.cols()) });
            }
        }
        let rep = Self { target_dim, matrices };
        if let Some(pair) = rep.homomorphism_defect(h) {
            return Err(LieError::NotRepresentation { pair });
        }
        Ok(rep)
    }

    /// Skips validation. Callers must guarantee the homomorphism property.
    pub(crate) fn new_unchecked(target_dim: usize, matrices: Vec<Matrix>) -> Self {
        Self { target_dim, matrices }
    }

    /// The zero representation on a `target_dim`-dimensional space.
    pub fn zero(h: &LieAlgebra, target_dim: usize) -> Self {
        Self::new_unchecked(target_dim, vec![Matrix::zeros(target_dim, target_dim); h.dim()])
    }

    pub fn adjoint(h: &LieAlgebra) -> Self {
        Self::new_unchecked(h.dim(), (0..h.dim()).map(|i| h.ad_basis(i)).collect())
    }

    /// Coadjoint action on the dual space in the dual basis.
    pub fn coadjoint(h: &LieAlgebra) -> Self {
        Self::new_unchecked(h.dim(), (0..h.dim()).map(|i| h.coad_basis(i)).collect())
    }

    /// `x -> p pi(x) p^{-1}`, an equivalent representation.
    pub fn conjugated(&self, p: &Matrix) -> Result<Self, LieError> {
        let inv = p.inverse()?;
        Ok(Self::new_unchecked(
            self.target_dim,
            self.matrices.iter().map(|m| p.mul(m).mul(&inv)).collect(),
        ))
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn domain_dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn basis_action(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// `pi(x) = sum x_i pi(e_i)`.
    pub fn action(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.target_dim, self.target_dim);
        for (c, m) in x.iter().zip(&self.matrices) {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            out = out.add(&m.scale(c)).expect("same shape");
        }
        out
    }

    /// First basis pair `(i, j)` with `pi[e_i,e_j] != [pi e_i, pi e_j]`.
    pub fn homomorphism_defect(&self, h: &LieAlgebra) -> Option<(usize, usize)> {
        let n = h.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.action(&h.bracket_basis(i, j));
                let rhs = self.matrices[i].commutator(&self.matrices[j]);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First generator whose action is not a derivation of `k`, with the failing pair.
    pub fn derivation_defect(&self, k: &LieAlgebra) -> Option<(usize, (usize, usize))> {
        self.matrices
            .iter()
            .enumerate()
            .find_map(|(g, m)| k.derivation_defect(m).map(|pair| (g, pair)))
    }
}
