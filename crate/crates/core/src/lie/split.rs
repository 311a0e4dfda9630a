use std::collections::BTreeSet;

use super::{check_jacobi, labels, LieAlgebra, LieError, Representation, StructureConstants, Subspace};
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::Matrix;

/// `g = h ⋉_pi k` with basis ordered h-block first, then k-block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitAlgebra {
    g: LieAlgebra,
    h: LieAlgebra,
    k: LieAlgebra,
    pi: Representation,
}

/// Semidirect product bracket:
/// `[(x,u),(y,v)] = ([x,y]_h, pi(x)v - pi(y)u + [u,v]_k)`.
pub fn semidirect_product(h: &LieAlgebra, k: &LieAlgebra, pi: &Representation) -> Result<SplitAlgebra, LieError> {
    if pi.domain_dim() != h.dim() {
        return Err(LieError::DimensionMismatch { expected: h.dim(), found: pi.domain_dim() });
    }
    if pi.target_dim() != k.dim() && h.dim() > 0 {
        return Err(LieError::DimensionMismatch { expected: k.dim(), found: pi.target_dim() });
    }
    if let Some(pair) = pi.homomorphism_defect(h) {
        return Err(LieError::NotRepresentation { pair });
    }
    if let Some((generator, pair)) = pi.derivation_defect(k) {
        return Err(LieError::NotDerivation { generator, pair });
    }
    let mut seen = BTreeSet::new();
    for l in h.labels().iter().chain(k.labels()) {
        if !seen.insert(l.as_str()) {
            return Err(LieError::LabelClash(l.clone()));
        }
    }

    let (n, m) = (h.dim(), k.dim());
    let all: Vec<String> = h.labels().iter().chain(k.labels()).cloned().collect();
    let mut raw = StructureConstants::new(all);
    let embed = |v: &Vector, offset: usize| {
        let mut out = scalar::zeros(n + m);
        out[offset..offset + v.len()].clone_from_slice(v);
        out
    };
    for (i, j, v) in h.nonzero_brackets() {
        raw.set(i, j, embed(v, 0))?;
    }
    for (a, b, v) in k.nonzero_brackets() {
        raw.set(n + a, n + b, embed(v, n))?;
    }
    for i in 0..n {
        let p = pi.basis_action(i);
        for b in 0..m {
            let col = p.column(b);
            if !scalar::is_zero(&col) {
                raw.set(i, n + b, embed(&col, n))?;
            }
        }
    }
    let g = check_jacobi(raw)?;
    Ok(SplitAlgebra { g, h: h.clone(), k: k.clone(), pi: pi.clone() })
}

/// `Th = h ⋉_ad h` with the second copy abelian, labelled `v1..vn`.
pub fn tangent_algebra(h: &LieAlgebra) -> SplitAlgebra {
    let k = LieAlgebra::abelian(labels("v", h.dim()));
    semidirect_product(h, &k, &Representation::adjoint(h)).expect("adjoint action is a representation")
}

/// `T*h = h ⋉_{ad*} h*`, dual copy labelled `v1..vn`.
pub fn cotangent_algebra(h: &LieAlgebra) -> SplitAlgebra {
    let k = LieAlgebra::abelian(labels("v", h.dim()));
    semidirect_product(h, &k, &Representation::coadjoint(h)).expect("coadjoint action is a representation")
}

impl SplitAlgebra {
    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &LieAlgebra {
        &self.h
    }

    pub fn k(&self) -> &LieAlgebra {
        &self.k
    }

    pub fn pi(&self) -> &Representation {
        &self.pi
    }

    pub fn h_dim(&self) -> usize {
        self.h.dim()
    }

    pub fn k_dim(&self) -> usize {
        self.k.dim()
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn is_balanced(&self) -> bool {
        self.h_dim() == self.k_dim()
    }

    pub fn h_block(&self) -> Subspace {
        Subspace::coordinate_block(self.dim(), 0..self.h_dim())
    }

    pub fn k_block(&self) -> Subspace {
        Subspace::coordinate_block(self.dim(), self.h_dim()..self.dim())
    }

    /// `(x, u) -> x + u` in g coordinates.
    pub fn join(&self, x: &[Scalar], u: &[Scalar]) -> Vector {
        let mut out = x.to_vec();
        out.extend_from_slice(u);
        out
    }

    pub fn embed_h(&self, x: &[Scalar]) -> Vector {
        self.join(x, &scalar::zeros(self.k_dim()))
    }

    pub fn embed_k(&self, u: &[Scalar]) -> Vector {
        self.join(&scalar::zeros(self.h_dim()), u)
    }

    pub fn proj_h(&self, v: &[Scalar]) -> Vector {
        v[..self.h_dim()].to_vec()
    }

    pub fn proj_k(&self, v: &[Scalar]) -> Vector {
        v[self.h_dim()..].to_vec()
    }

    /// `F = diag(I, -I)`.
    pub fn product_structure(&self) -> Matrix {
        Matrix::block_diag(&Matrix::identity(self.h_dim()), &Matrix::identity(self.k_dim()).neg())
    }
}
