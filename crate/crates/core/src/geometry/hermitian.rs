use super::{is_symplectic, BilinearForm, GeometryError};
use crate::lie::{cotangent_algebra, LieAlgebra, SplitAlgebra};
use crate::linalg::Matrix;
use crate::structures::{make_j, nijenhuis_witnesses, Kind, SplitEndo};

/// Block conditions on `J = [[J1, J2], [J3, J4]]` over `h ⊕ h*`, with `*` the transpose
/// in the dual basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HermitianBlocks {
    /// `J4 = -J1*`, `J2 = -J2*`, `J3 = -J3*`
    pub dual_skew: bool,
    /// `J1^2 + J2 J3 = -Id`, `J1 J2` and `J3 J1` skew
    pub square: bool,
    pub integrable: bool,
    /// `J` is an isometry of the neutral metric `alpha(y) + beta(x)`.
    pub neutral_isometry: bool,
}

impl HermitianBlocks {
    pub fn all(&self) -> bool {
        self.dual_skew && self.square && self.integrable
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianReport {
    pub split: SplitAlgebra,
    pub j: SplitEndo,
    pub blocks: HermitianBlocks,
}

fn blocks(split: &SplitAlgebra, j: &SplitEndo) -> HermitianBlocks {
    let n = split.h_dim();
    let m = j.matrix();
    let (j1, j2) = (m.submatrix(0..n, 0..n), m.submatrix(0..n, n..2 * n));
    let (j3, j4) = (m.submatrix(n..2 * n, 0..n), m.submatrix(n..2 * n, n..2 * n));
    let skew = |a: &Matrix| a.transpose() == a.neg();
    let dual_skew = j4 == j1.transpose().neg() && skew(&j2) && skew(&j3);
    let square = j1.mul(&j1).add(&j2.mul(&j3)).expect("same shape") == Matrix::identity(n).neg()
        && skew(&j1.mul(&j2))
        && skew(&j3.mul(&j1));
    let id = Matrix::identity(n);
    let zero = Matrix::zeros(n, n);
    let neutral = Matrix::from_blocks(&zero, &id, &id, &zero).expect("square blocks");
    HermitianBlocks {
        dual_skew,
        square,
        integrable: nijenhuis_witnesses(split.g(), j).is_empty(),
        neutral_isometry: m.transpose().mul(&neutral).mul(m) == neutral,
    }
}

/// `J(x, alpha) = (-omega^{-1}(alpha), omega(x))` on `T*h`.
pub fn hermitian_cotangent_from_symplectic(h: &LieAlgebra, omega: &BilinearForm) -> Result<HermitianReport, GeometryError> {
    if h.dim() != omega.dim() {
        return Err(GeometryError::DimensionMismatch { expected: h.dim(), found: omega.dim() });
    }
    if !is_symplectic(h, omega) {
        return Err(GeometryError::NotSymplectic);
    }
    let split = cotangent_algebra(h);
    let j = make_j(&split, &omega.flat())?;
    let blocks = blocks(&split, &j);
    if !blocks.all() {
        return Err(GeometryError::InternalEquivalenceViolation(format!("{blocks:?}")));
    }
    Ok(HermitianReport { split, j, blocks })
}

/// `J = diag(I, -I*)` on `T*h` from `I^2 = -Id` on h. Integrability is reported, not assumed.
pub fn hermitian_cotangent_from_complex(h: &LieAlgebra, i: &Matrix) -> Result<HermitianReport, GeometryError> {
    if i.rows() != h.dim() || i.cols() != h.dim() {
        return Err(GeometryError::DimensionMismatch { expected: h.dim(), found: i.rows() });
    }
    let split = cotangent_algebra(h);
    let m = Matrix::block_diag(i, &i.transpose().neg());
    let j = SplitEndo::new(m, Kind::Complex)?;
    let blocks = blocks(&split, &j);
    Ok(HermitianReport { split, j, blocks })
}
