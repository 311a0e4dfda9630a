//! Bilinear forms on Lie algebras: metric extensions, fundamental 2-forms, closedness,
//! symplectic and (para-)Kähler criteria.

mod hermitian;
mod metric;

pub use hermitian::{
    hermitian_cotangent_from_complex, hermitian_cotangent_from_symplectic, HermitianBlocks, HermitianReport,
};
pub use metric::{
    closedness_report, extend_metric, fundamental_form, kahler_check, ClosednessReport, KahlerReport, MetricFlavor,
};

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::connections::ConnectionError;
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{LinalgError, Matrix};
use crate::structures::{is_one_cocycle, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("form is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("inner product is not positive definite (leading minor {0} is not positive)")]
    NotPositiveDefinite(usize),
    #[error("2-form is not symplectic")]
    NotSymplectic,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("internal equivalence violated: {0}")]
    InternalEquivalenceViolation(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Connection(#[from] ConnectionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Symmetric => "sym",
            Symmetry::Antisymmetric => "antisym",
        })
    }
}

/// `B(x, y) = x^T M y` with `M = ±M^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
    symmetry: Symmetry,
}

impl BilinearForm {
    pub fn new(matrix: Matrix, symmetry: Symmetry) -> Result<Self, GeometryError> {
        if !matrix.is_square() {
            return Err(GeometryError::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        let t = matrix.transpose();
        match symmetry {
            Symmetry::Symmetric if t != matrix => Err(GeometryError::NotSymmetric),
            Symmetry::Antisymmetric if t != matrix.neg() => Err(GeometryError::NotAntisymmetric),
            _ => Ok(Self { matrix, symmetry }),
        }
    }

    pub fn symmetric(matrix: Matrix) -> Result<Self, GeometryError> {
        Self::new(matrix, Symmetry::Symmetric)
    }

    pub fn antisymmetric(matrix: Matrix) -> Result<Self, GeometryError> {
        Self::new(matrix, Symmetry::Antisymmetric)
    }

    pub fn standard(dim: usize) -> Self {
        Self { matrix: Matrix::identity(dim), symmetry: Symmetry::Symmetric }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        scalar::dot(x, &self.matrix.mul_vec(y))
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().expect("square").is_zero()
    }

    /// Index of the first non-positive leading principal minor, if any.
    pub fn positive_definite_defect(&self) -> Option<usize> {
        if self.symmetry != Symmetry::Symmetric {
            return Some(0);
        }
        (1..=self.dim()).find(|&k| {
            let minor = self.matrix.submatrix(0..k, 0..k).determinant().expect("square");
            !minor.is_positive()
        })
    }

    pub fn is_positive_definite(&self) -> bool {
        self.positive_definite_defect().is_none()
    }

    /// `x -> B(x, -)` into the dual, as a matrix in the dual basis: `M^T`.
    pub fn flat(&self) -> Matrix {
        self.matrix.transpose()
    }
}

/// `omega([x,y],z) + omega([y,z],x) + omega([z,x],y)` on basis triples `i < j < k`.
pub fn d2(g: &LieAlgebra, omega: &BilinearForm) -> Vec<((usize, usize, usize), Scalar)> {
    let n = g.dim();
    let e: Vec<_> = (0..n).map(|i| scalar::unit(n, i)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = omega.eval(&g.bracket_basis(i, j), &e[k])
                    + omega.eval(&g.bracket_basis(j, k), &e[i])
                    + omega.eval(&g.bracket_basis(k, i), &e[j]);
                out.push(((i, j, k), v));
            }
        }
    }
    out
}

/// Basis triples where the cyclic sum is nonzero.
pub fn closedness_witnesses(g: &LieAlgebra, omega: &BilinearForm) -> Vec<((usize, usize, usize), Scalar)> {
    d2(g, omega).into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn is_closed(g: &LieAlgebra, omega: &BilinearForm) -> bool {
    closedness_witnesses(g, omega).is_empty()
}

pub fn is_symplectic(h: &LieAlgebra, omega: &BilinearForm) -> bool {
    omega.symmetry() == Symmetry::Antisymmetric && omega.is_nondegenerate() && is_closed(h, omega)
}

/// The flat map of `omega` as a candidate 1-cocycle of `(h, ad*)`.
pub fn symplectic_to_cocycle(h: &LieAlgebra, omega: &BilinearForm) -> Matrix {
    assert_eq!(h.dim(), omega.dim());
    omega.flat()
}

/// Closedness and the ad*-cocycle property of the flat map, computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticReport {
    pub nondegenerate: bool,
    pub closed: bool,
    pub flat_is_cocycle: bool,
}

impl SymplecticReport {
    pub fn symplectic(&self) -> bool {
        self.nondegenerate && self.closed
    }
}

pub fn symplectic_report(h: &LieAlgebra, omega: &BilinearForm) -> Result<SymplecticReport, GeometryError> {
    if omega.symmetry() != Symmetry::Antisymmetric {
        return Err(GeometryError::NotAntisymmetric);
    }
    if h.dim() != omega.dim() {
        return Err(GeometryError::DimensionMismatch { expected: h.dim(), found: omega.dim() });
    }
    let report = SymplecticReport {
        nondegenerate: omega.is_nondegenerate(),
        closed: is_closed(h, omega),
        flat_is_cocycle: is_one_cocycle(h, &Representation::coadjoint(h), &symplectic_to_cocycle(h, omega)),
    };
    if report.closed != report.flat_is_cocycle {
        return Err(GeometryError::InternalEquivalenceViolation(format!("{report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{labels, tangent_algebra};
    use crate::linalg::scalar::int;
    use crate::lsa::{semidirect_from_lsa, Lsa, Product};

    fn h1() -> LieAlgebra {
        LieAlgebra::new(labels("e", 3), [((0, 1), vec![int(0), int(0), int(1)])]).unwrap()
    }

    fn aff() -> LieAlgebra {
        LieAlgebra::new(labels("e", 2), [((0, 1), vec![int(0), int(1)])]).unwrap()
    }

    fn omega2() -> BilinearForm {
        BilinearForm::antisymmetric(Matrix::from_i64(&[&[0, 1], &[-1, 0]])).unwrap()
    }

    #[test]
    fn form_validation() {
        assert_eq!(BilinearForm::symmetric(Matrix::from_i64(&[&[0, 1], &[0, 0]])), Err(GeometryError::NotSymmetric));
        assert_eq!(BilinearForm::antisymmetric(Matrix::identity(2)), Err(GeometryError::NotAntisymmetric));
        assert!(matches!(BilinearForm::symmetric(Matrix::zeros(2, 3)), Err(GeometryError::NotSquare { .. })));
        let indefinite = BilinearForm::symmetric(Matrix::from_i64(&[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(indefinite.positive_definite_defect(), Some(2));
        assert!(BilinearForm::standard(3).is_positive_definite());
    }

    #[test]
    fn symplectic_on_aff() {
        let r = symplectic_report(&aff(), &omega2()).unwrap();
        assert!(r.symplectic() && r.flat_is_cocycle);
        let h = hermitian_cotangent_from_symplectic(&aff(), &omega2()).unwrap();
        assert!(h.blocks.all() && h.blocks.neutral_isometry);
    }

    #[test]
    fn heisenberg_has_no_closed_nondegenerate_form() {
        let omega = BilinearForm::antisymmetric(Matrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])).unwrap();
        assert!(is_closed(&h1(), &omega));
        assert!(!is_symplectic(&h1(), &omega));
        let e = crate::linalg::Matrix::from_i64(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        let h1r = LieAlgebra::new(labels("e", 4), [((0, 1), vec![int(0), int(0), int(1), int(0)])]).unwrap();
        let w = BilinearForm::antisymmetric(e).unwrap();
        assert_eq!(closedness_witnesses(&h1r, &w), vec![((0, 1, 3), int(1))]);
        assert_eq!(hermitian_cotangent_from_symplectic(&h1r, &w).unwrap_err(), GeometryError::NotSymplectic);
    }

    #[test]
    fn metric_extensions_are_compatible() {
        let t = tangent_algebra(&h1());
        let j = Matrix::from_i64(&[&[1, -1, 0], &[0, 1, 0], &[0, 0, 2]]);
        for flavor in [MetricFlavor::G, MetricFlavor::GBar, MetricFlavor::GTilde] {
            assert_eq!(extend_metric(&t, &j, &BilinearForm::standard(3), flavor).unwrap().dim(), 6);
        }
        let bad = BilinearForm::symmetric(Matrix::zeros(3, 3)).unwrap();
        assert_eq!(extend_metric(&t, &j, &bad, MetricFlavor::G), Err(GeometryError::NotPositiveDefinite(1)));
    }

    #[test]
    fn closedness_statements_agree() {
        let ab = tangent_algebra(&LieAlgebra::abelian(labels("e", 2)));
        let r = closedness_report(&ab, &Matrix::identity(2), &BilinearForm::standard(2)).unwrap();
        assert_eq!(r.statements(), [true; 4]);

        let t = tangent_algebra(&h1());
        let r = closedness_report(&t, &Matrix::identity(3), &BilinearForm::standard(3)).unwrap();
        assert_eq!(r.statements(), [false; 4]);
        assert!(r.k_abelian && !r.block_identity);
    }

    #[test]
    fn euclidean_lsa_gives_kahler() {
        let p = Product::from_entries(labels("e", 3), [((0, 1), vec![int(0), int(0), int(-1)]), ((0, 2), vec![int(0), int(1), int(0)])]);
        let built = semidirect_from_lsa(&Lsa::new(p).unwrap(), &Matrix::identity(3)).unwrap();
        let r = kahler_check(&built.split, &Matrix::identity(3), &BilinearForm::standard(3)).unwrap();
        assert!(r.kahler() && r.implication_holds());

        let t = tangent_algebra(&h1());
        assert!(matches!(
            kahler_check(&t, &Matrix::identity(3), &BilinearForm::standard(3)),
            Err(GeometryError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn complex_cotangent_on_abelian() {
        let a = LieAlgebra::abelian(labels("e", 2));
        let i = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let r = hermitian_cotangent_from_complex(&a, &i).unwrap();
        assert!(r.blocks.dual_skew && r.blocks.square && r.blocks.integrable);
    }
}
