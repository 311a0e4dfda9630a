use std::fmt;

use num_traits::Zero;

use super::{checked_inverse, StructureError};
use crate::lie::{LieAlgebra, SplitAlgebra};
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::{int, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `S^2 = -Id`
    Complex,
    /// `S^2 = Id`, equal eigenspace dimensions
    Paracomplex,
}

impl Kind {
    pub fn epsilon(self) -> i8 {
        match self {
            Kind::Complex => -1,
            Kind::Paracomplex => 1,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Complex => "complex",
            Kind::Paracomplex => "paracomplex",
        })
    }
}

/// An endomorphism with `S^2 = epsilon Id`, `S != +-Id`, and for `epsilon = 1` trace zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitEndo {
    matrix: Matrix,
    kind: Kind,
}

impl SplitEndo {
    pub fn new(matrix: Matrix, kind: Kind) -> Result<Self, StructureError> {
        if !matrix.is_square() {
            return Err(StructureError::NotSquare { expected: matrix.rows(), rows: matrix.rows(), cols: matrix.cols() });
        }
        let n = matrix.rows();
        let eps = int(kind.epsilon() as i64);
        if matrix.mul(&matrix) != Matrix::identity(n).scale(&eps) {
            return Err(StructureError::NotInvolutive { epsilon: kind.epsilon() });
        }
        if kind == Kind::Paracomplex {
            if matrix.is_identity() || matrix.neg().is_identity() {
                return Err(StructureError::Trivial);
            }
            let tr = matrix.trace();
            if !tr.is_zero() {
                return Err(StructureError::NotSplit(scalar::format_scalar(&tr)));
            }
        }
        Ok(Self { matrix, kind })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn epsilon(&self) -> Scalar {
        int(self.kind.epsilon() as i64)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }
}

/// `F(x, v) = (x, -v)`.
pub fn make_f(split: &SplitAlgebra) -> SplitEndo {
    let kind = Kind::Paracomplex;
    let matrix = split.product_structure();
    if split.h_dim() == split.k_dim() {
        SplitEndo::new(matrix, kind).expect("F is a split involution")
    } else {
        SplitEndo { matrix, kind }
    }
}

/// `J(x, v) = (-j^{-1} v, j x)`.
pub fn make_j(split: &SplitAlgebra, j: &Matrix) -> Result<SplitEndo, StructureError> {
    let inv = checked_inverse(split, j)?;
    let n = split.h_dim();
    let m = Matrix::from_blocks(&Matrix::zeros(n, n), &inv.neg(), j, &Matrix::zeros(n, n))?;
    SplitEndo::new(m, Kind::Complex)
}

/// `E(x, v) = (j^{-1} v, j x)`.
pub fn make_e(split: &SplitAlgebra, j: &Matrix) -> Result<SplitEndo, StructureError> {
    let inv = checked_inverse(split, j)?;
    let n = split.h_dim();
    let m = Matrix::from_blocks(&Matrix::zeros(n, n), &inv, j, &Matrix::zeros(n, n))?;
    SplitEndo::new(m, Kind::Paracomplex)
}

/// `N_S(X,Y) = [SX,SY] + eps[X,Y] - S[SX,Y] - S[X,SY]`.
pub fn nijenhuis(g: &LieAlgebra, s: &SplitEndo, x: &[Scalar], y: &[Scalar]) -> Vector {
    let (sx, sy) = (s.apply(x), s.apply(y));
    let mut out = g.br(&sx, &sy);
    scalar::axpy(&mut out, &s.epsilon(), &g.br(x, y));
    let inner = scalar::add(&g.br(&sx, y), &g.br(x, &sy));
    scalar::sub(&out, &s.apply(&inner))
}

/// Basis pairs `i < j` with `N_S(e_i, e_j) != 0`, with the value.
pub fn nijenhuis_witnesses(g: &LieAlgebra, s: &SplitEndo) -> Vec<((usize, usize), Vector)> {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = nijenhuis(g, s, &scalar::unit(n, i), &scalar::unit(n, j));
            if !scalar::is_zero(&v) {
                out.push(((i, j), v));
            }
        }
    }
    out
}
