//! Split endomorphisms `J`, `E`, `F` built from `j: h -> k`, Nijenhuis tensors and integrability.

mod cocycle;
mod endo;
mod integrability;
mod special;

pub use cocycle::{cocycle_defect, cocycle_space, is_one_cocycle, CocycleSpace};
pub use endo::{make_e, make_f, make_j, nijenhuis, nijenhuis_witnesses, Kind, SplitEndo};
pub use integrability::{integrability_report, IntegrabilityReport};
pub use special::{
    check_complex_product_pair, check_equivalence, classify_special, split_special_report, EquivalenceReport,
    SpecialClasses, SplitSpecialReport,
};

use thiserror::Error;

use crate::lie::LieError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("h and k have different dimensions ({h} vs {k})")]
    Unbalanced { h: usize, k: usize },
    #[error("j must be a {expected}x{expected} matrix, got {rows}x{cols}")]
    NotSquare { expected: usize, rows: usize, cols: usize },
    #[error("j is singular")]
    SingularJ,
    #[error("S^2 != {epsilon} Id")]
    NotInvolutive { epsilon: i8 },
    #[error("S = +-Id is not a split structure")]
    Trivial,
    #[error("paracomplex S has eigenspaces of different dimension (trace {0})")]
    NotSplit(String),
    #[error("phi is not an automorphism: fails on pair ({},{})", .pair.0 + 1, .pair.1 + 1)]
    NotAutomorphism { pair: (usize, usize) },
    #[error("internal equivalence violated: {0}")]
    InternalEquivalenceViolation(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Validates `j: h -> k` against a split and returns `j^{-1}`.
pub(crate) fn checked_inverse(split: &crate::lie::SplitAlgebra, j: &crate::linalg::Matrix) -> Result<crate::linalg::Matrix, StructureError> {
    if !split.is_balanced() {
        return Err(StructureError::Unbalanced { h: split.h_dim(), k: split.k_dim() });
    }
    let n = split.h_dim();
    if j.rows() != n || j.cols() != n {
        return Err(StructureError::NotSquare { expected: n, rows: j.rows(), cols: j.cols() });
    }
    j.inverse().map_err(|_| StructureError::SingularJ)
}
