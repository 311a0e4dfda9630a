use num_traits::Zero;

use super::LieAlgebra;
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::Matrix;

/// A linear subspace of a coordinate space, stored as a reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient_dim);
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self { ambient_dim, basis, pivots }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::coordinate_block(ambient_dim, 0..ambient_dim)
    }

    /// Span of the standard basis vectors with indices in `range`.
    pub fn coordinate_block(ambient_dim: usize, range: std::ops::Range<usize>) -> Self {
        let vs: Vec<Vector> = range.map(|i| scalar::unit(ambient_dim, i)).collect();
        Self::span(ambient_dim, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Exact membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            scalar::axpy(&mut r, &-c, b);
        }
        scalar::is_zero(&r)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &vs)
    }

    /// `self ∩ other = 0`.
    pub fn meets_trivially(&self, other: &Subspace) -> bool {
        self.sum(other).dim() == self.dim() + other.dim()
    }

    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::span(m.rows(), &vs)
    }

    /// `span{[a, b] : a in self, b in other}`.
    pub fn bracket_with(&self, g: &LieAlgebra, other: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for a in &self.basis {
            for b in &other.basis {
                let c = g.br(a, b);
                if !scalar::is_zero(&c) {
                    vs.push(c);
                }
            }
        }
        Self::span(self.ambient_dim, &vs)
    }
}

/// `[V, V] ⊆ V`.
pub fn is_subalgebra(g: &LieAlgebra, v: &Subspace) -> bool {
    let b = v.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !v.contains(&g.br(&b[i], &b[j])) {
                return false;
            }
        }
    }
    true
}

/// `[g, V] ⊆ V`.
pub fn is_ideal(g: &LieAlgebra, v: &Subspace) -> bool {
    let n = g.dim();
    (0..n).all(|i| {
        let e = scalar::unit(n, i);
        v.basis().iter().all(|b| v.contains(&g.br(&e, b)))
    })
}

/// `S V ∩ V = 0`.
pub fn is_totally_real(s: &Matrix, v: &Subspace) -> bool {
    v.image(s).meets_trivially(v)
}
