//! Connections on Lie algebras as bilinear maps: torsion, curvature, parallel endomorphisms,
//! and the unique torsion-free connection parallelizing the split structures.

mod parallel;

pub use parallel::{parallel_connection_report, ParallelConnectionReport, ParallelSystem};

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::lie::{LieAlgebra, SplitAlgebra};
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::Matrix;
use crate::structures::{integrability_report, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectionError {
    #[error("connection has dimension {found}, algebra has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("connection on {factor} is not torsion-free at ({},{})", .pair.0 + 1, .pair.1 + 1)]
    FactorNotTorsionFree { factor: &'static str, pair: (usize, usize) },
    #[error("J is not integrable: {0}")]
    NotIntegrable(String),
    #[error("internal equivalence violated: {0}")]
    InternalEquivalenceViolation(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// `gamma[i][j] = ∇_{e_i} e_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Connection {
    dim: usize,
    gamma: Vec<Vector>,
}

impl Connection {
    pub fn zero(dim: usize) -> Self {
        Self { dim, gamma: vec![scalar::zeros(dim); dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let gamma = (0..dim * dim).map(|ij| f(ij / dim, ij % dim)).collect::<Vec<_>>();
        assert!(gamma.iter().all(|v| v.len() == dim));
        Self { dim, gamma }
    }

    /// Coefficients `Γ_{ij}^k` flattened as `(i * n + j) * n + k`.
    pub fn from_coefficients(dim: usize, coeffs: &[Scalar]) -> Self {
        assert_eq!(coeffs.len(), dim * dim * dim);
        Self::from_fn(dim, |i, j| coeffs[(i * dim + j) * dim..(i * dim + j + 1) * dim].to_vec())
    }

    pub fn coefficients(&self) -> Vector {
        self.gamma.iter().flatten().cloned().collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.gamma[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.dim);
        self.gamma[i * self.dim + j] = v;
    }

    /// `∇_x y` by bilinearity.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = scalar::zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                scalar::axpy(&mut out, &(xi * yj), self.get(i, j));
            }
        }
        out
    }

    /// Matrix of `∇_x`.
    pub fn operator(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.apply(x, &scalar::unit(self.dim, j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(|v| scalar::is_zero(v))
    }

    pub fn add(&self, other: &Connection) -> Connection {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| scalar::add(self.get(i, j), other.get(i, j)))
    }

    /// `∇_x y = c · ad(x) y`.
    pub fn scaled_adjoint(g: &LieAlgebra, c: &Scalar) -> Self {
        Self::from_fn(g.dim(), |i, j| scalar::scale(c, &g.bracket_basis(i, j)))
    }

    /// `∇_x y = p^{-1} rho(x) p y` for a representation of `h` on a space identified with h via `p`.
    pub fn transported(h: &LieAlgebra, rho: &crate::lie::Representation, p: &Matrix) -> Result<Self, ConnectionError> {
        let inv = p.inverse().map_err(StructureError::from)?;
        let n = h.dim();
        Ok(Self::from_fn(n, |i, j| inv.mul(rho.basis_action(i)).mul(p).column(j)))
    }
}

impl fmt::Debug for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let parts: Vec<String> = (0..n * n)
            .filter(|&ij| !scalar::is_zero(&self.gamma[ij]))
            .map(|ij| {
                let coeffs: Vec<String> = self.gamma[ij].iter().map(scalar::format_scalar).collect();
                format!("∇{}e{}=[{}]", ij / n + 1, ij % n + 1, coeffs.join(","))
            })
            .collect();
        write!(f, "Connection({n}; {})", parts.join(" "))
    }
}

fn check_dim(g: &LieAlgebra, nabla: &Connection) -> Result<(), ConnectionError> {
    if g.dim() != nabla.dim() {
        return Err(ConnectionError::DimensionMismatch { expected: g.dim(), found: nabla.dim() });
    }
    Ok(())
}

/// `T(X,Y) = ∇_X Y - ∇_Y X - [X,Y]`.
pub fn torsion(g: &LieAlgebra, nabla: &Connection, x: &[Scalar], y: &[Scalar]) -> Vector {
    let t = scalar::sub(&nabla.apply(x, y), &nabla.apply(y, x));
    scalar::sub(&t, &g.br(x, y))
}

/// Basis pairs `i < j` with nonzero torsion.
pub fn torsion_witnesses(g: &LieAlgebra, nabla: &Connection) -> Vec<((usize, usize), Vector)> {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let t = scalar::sub(&scalar::sub(nabla.get(i, j), nabla.get(j, i)), &g.bracket_basis(i, j));
            if !scalar::is_zero(&t) {
                out.push(((i, j), t));
            }
        }
    }
    out
}

pub fn is_torsion_free(g: &LieAlgebra, nabla: &Connection) -> bool {
    g.dim() == nabla.dim() && torsion_witnesses(g, nabla).is_empty()
}

/// `R(X,Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_{[X,Y]} Z`.
pub fn curvature(g: &LieAlgebra, nabla: &Connection, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let a = nabla.apply(x, &nabla.apply(y, z));
    let b = nabla.apply(y, &nabla.apply(x, z));
    let c = nabla.apply(&g.br(x, y), z);
    scalar::sub(&scalar::sub(&a, &b), &c)
}

/// Basis triples `(i < j, k)` with nonzero curvature.
pub fn curvature_witnesses(g: &LieAlgebra, nabla: &Connection) -> Vec<((usize, usize, usize), Vector)> {
    let n = g.dim();
    let ops: Vec<Matrix> = (0..n).map(|i| nabla.operator(&scalar::unit(n, i))).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let r = ops[i]
                .commutator(&ops[j])
                .sub(&nabla.operator(&g.bracket_basis(i, j)))
                .expect("same shape");
            for k in 0..n {
                let col = r.column(k);
                if !scalar::is_zero(&col) {
                    out.push(((i, j, k), col));
                }
            }
        }
    }
    out
}

pub fn is_flat(g: &LieAlgebra, nabla: &Connection) -> bool {
    g.dim() == nabla.dim() && curvature_witnesses(g, nabla).is_empty()
}

/// `(∇_X S)(Y) = ∇_X(SY) - S(∇_X Y)`.
pub fn covariant_endo(nabla: &Connection, s: &Matrix, x: &[Scalar], y: &[Scalar]) -> Vector {
    scalar::sub(&nabla.apply(x, &s.mul_vec(y)), &s.mul_vec(&nabla.apply(x, y)))
}

/// `∇S ≡ 0` on basis pairs.
pub fn is_parallel(nabla: &Connection, s: &Matrix) -> bool {
    let n = nabla.dim();
    (0..n).all(|i| {
        let op = nabla.operator(&scalar::unit(n, i));
        op.mul(s) == s.mul(&op)
    })
}

/// `∇_{x+u}(y+v) = ∇¹_x y + ∇²_u v + pi(x) v`.
pub fn assemble_product_connection(
    split: &SplitAlgebra,
    nabla1: &Connection,
    nabla2: &Connection,
) -> Result<Connection, ConnectionError> {
    check_dim(split.h(), nabla1)?;
    check_dim(split.k(), nabla2)?;
    if let Some(&(pair, _)) = torsion_witnesses(split.h(), nabla1).first() {
        return Err(ConnectionError::FactorNotTorsionFree { factor: "h", pair });
    }
    if let Some(&(pair, _)) = torsion_witnesses(split.k(), nabla2).first() {
        return Err(ConnectionError::FactorNotTorsionFree { factor: "k", pair });
    }
    let h = split.h_dim();
    Ok(Connection::from_fn(split.dim(), |i, j| match (i < h, j < h) {
        (true, true) => split.embed_h(nabla1.get(i, j)),
        (true, false) => split.embed_k(&split.pi().basis_action(i).column(j - h)),
        (false, false) => split.embed_k(nabla2.get(i - h, j - h)),
        (false, true) => scalar::zeros(split.dim()),
    }))
}

/// `∇_{x1+jy1}(x2+jy2) = j^{-1}pi(x1)j x2 + pi(x1) j y2`, defined when J is integrable.
pub fn canonical_connection(split: &SplitAlgebra, j: &Matrix) -> Result<Connection, ConnectionError> {
    let report = integrability_report(split, j)?;
    if !report.integrable() {
        let why = match (report.k_witness, report.cocycle_witness) {
            (Some((a, b)), _) => format!("[j e{}, j e{}] != 0 in k", a + 1, b + 1),
            (None, Some((a, b))) => format!("j fails the cocycle identity on (e{}, e{})", a + 1, b + 1),
            (None, None) => "Nijenhuis tensor does not vanish".to_string(),
        };
        return Err(ConnectionError::NotIntegrable(why));
    }
    Ok(canonical_unchecked(split, j))
}

pub(crate) fn canonical_unchecked(split: &SplitAlgebra, j: &Matrix) -> Connection {
    let inv = j.inverse().expect("nonsingular j");
    let h = split.h_dim();
    let tilde: Vec<Matrix> = (0..h).map(|i| inv.mul(split.pi().basis_action(i)).mul(j)).collect();
    Connection::from_fn(split.dim(), |i, c| match (i < h, c < h) {
        (true, true) => split.embed_h(&tilde[i].column(c)),
        (true, false) => split.embed_k(&split.pi().basis_action(i).column(c - h)),
        _ => scalar::zeros(split.dim()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{cotangent_algebra, labels, semidirect_product, tangent_algebra, Representation};
    use crate::linalg::scalar::{frac, int};
    use crate::structures::{make_e, make_f, make_j};

    fn h1() -> LieAlgebra {
        LieAlgebra::new(labels("e", 3), [((0, 1), vec![int(0), int(0), int(1)])]).unwrap()
    }

    fn r3_minus1() -> LieAlgebra {
        LieAlgebra::new(labels("e", 3), [((0, 1), vec![int(0), int(1), int(0)]), ((0, 2), vec![int(0), int(0), int(-1)])]).unwrap()
    }

    fn non_abelian_k() -> SplitAlgebra {
        let h = LieAlgebra::abelian(labels("x", 2));
        let k = LieAlgebra::new(labels("v", 2), [((0, 1), vec![int(0), int(1)])]).unwrap();
        semidirect_product(&h, &k, &Representation::zero(&h, 2)).unwrap()
    }

    #[test]
    fn zero_connection_torsion_is_minus_bracket() {
        let g = h1();
        let nabla = Connection::zero(3);
        let (x, y) = (scalar::unit(3, 0), scalar::unit(3, 1));
        assert_eq!(torsion(&g, &nabla, &x, &y), vec![int(0), int(0), int(-1)]);
        assert_eq!(torsion_witnesses(&g, &nabla).len(), 1);
        assert!(is_flat(&g, &nabla));
    }

    #[test]
    fn half_adjoint_is_torsion_free() {
        let g = h1();
        let nabla = Connection::scaled_adjoint(&g, &frac(1, 2));
        assert!(is_torsion_free(&g, &nabla));
    }

    #[test]
    fn coefficients_round_trip() {
        let nabla = Connection::scaled_adjoint(&r3_minus1(), &int(1));
        assert_eq!(Connection::from_coefficients(3, &nabla.coefficients()), nabla);
        assert!(!nabla.is_zero());
        assert_eq!(nabla.add(&Connection::zero(3)), nabla);
    }

    #[test]
    fn canonical_connection_on_heisenberg_tangent() {
        let t = tangent_algebra(&h1());
        let j = Matrix::from_i64(&[&[1, -1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let nabla = canonical_connection(&t, &j).unwrap();
        assert!(is_torsion_free(t.g(), &nabla));
        assert!(is_flat(t.g(), &nabla));
        assert!(is_parallel(&nabla, make_j(&t, &j).unwrap().matrix()));
        assert!(is_parallel(&nabla, make_e(&t, &j).unwrap().matrix()));
        assert!(is_parallel(&nabla, make_f(&t).matrix()));
    }

    #[test]
    fn assembled_connection_parallelizes_f_only() {
        let t = tangent_algebra(&h1());
        let nabla = assemble_product_connection(&t, &Connection::scaled_adjoint(&h1(), &frac(1, 2)), &Connection::zero(3)).unwrap();
        assert!(is_torsion_free(t.g(), &nabla));
        assert!(is_parallel(&nabla, make_f(&t).matrix()));
        let j = make_j(&t, &Matrix::identity(3)).unwrap();
        assert!(!is_parallel(&nabla, j.matrix()));
        let (x, y) = (scalar::unit(6, 0), scalar::unit(6, 1));
        assert!(!scalar::is_zero(&covariant_endo(&nabla, j.matrix(), &x, &y)));
    }

    #[test]
    fn assembly_rejects_torsion() {
        let t = tangent_algebra(&h1());
        let err = assemble_product_connection(&t, &Connection::zero(3), &Connection::zero(3)).unwrap_err();
        assert_eq!(err, ConnectionError::FactorNotTorsionFree { factor: "h", pair: (0, 1) });
    }

    #[test]
    fn canonical_requires_integrability() {
        let t = tangent_algebra(&r3_minus1());
        assert!(matches!(canonical_connection(&t, &Matrix::identity(3)), Err(ConnectionError::NotIntegrable(_))));
    }

    #[test]
    fn parallel_report_on_integrable_cotangent() {
        let ct = cotangent_algebra(&r3_minus1());
        let j = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 1], &[0, -1, 0]]);
        let r = parallel_connection_report(&ct, &j).unwrap();
        assert_eq!(r.statements(), [true; 5]);
        assert!(r.unique_and_canonical && r.block_form);
    }

    #[test]
    fn parallel_report_on_non_abelian_k() {
        let r = parallel_connection_report(&non_abelian_k(), &Matrix::identity(2)).unwrap();
        assert_eq!(r.statements(), [false; 5]);
        assert!(r.all_agree());
    }
}
