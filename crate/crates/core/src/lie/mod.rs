//! Lie algebras by structure constants, representations, and split (semidirect) algebras.

mod algebra;
mod representation;
mod series;
mod split;
mod subspace;

pub use algebra::{check_jacobi, JacobiWitness, LieAlgebra, StructureConstants};
pub use representation::Representation;
pub use series::{derived_series, lower_central_series, solvability_class, Solvability};
pub use split::{cotangent_algebra, semidirect_product, tangent_algebra, SplitAlgebra};
pub use subspace::{is_ideal, is_subalgebra, is_totally_real, Subspace};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bracket [e{0},e{0}] must vanish")]
    DiagonalBracket(usize),
    #[error("Jacobi identity fails on {} triple(s), first {}", .0.len(), .0[0])]
    JacobiViolation(Vec<JacobiWitness>),
    #[error("not a representation: pi[e{},e{}] != [pi e{}, pi e{}]", .pair.0 + 1, .pair.1 + 1, .pair.0 + 1, .pair.1 + 1)]
    NotRepresentation { pair: (usize, usize) },
    #[error("pi(e{}) is not a derivation of k on pair ({},{})", .generator + 1, .pair.0 + 1, .pair.1 + 1)]
    NotDerivation { generator: usize, pair: (usize, usize) },
    #[error("basis label {0:?} used in both factors")]
    LabelClash(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `prefix1, prefix2, ...`
pub fn labels(prefix: &str, n: usize) -> Vec<String> {
    crate::linalg::scalar::indexed_labels(prefix, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Matrix};

    fn h1() -> LieAlgebra {
        LieAlgebra::new(labels("e", 3), [((0, 1), vec![int(0), int(0), int(1)])]).unwrap()
    }

    fn r3(l: i64) -> LieAlgebra {
        LieAlgebra::new(labels("e", 3), [((0, 1), vec![int(0), int(1), int(0)]), ((0, 2), vec![int(0), int(0), int(l)])]).unwrap()
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let raw = StructureConstants::new(labels("e", 3))
            .with(0, 1, vec![int(0), int(0), int(1)])
            .with(0, 2, vec![int(1), int(0), int(0)])
            .with(1, 2, vec![int(0), int(1), int(0)]);
        match check_jacobi(raw) {
            Err(LieError::JacobiViolation(w)) => {
                assert_eq!(w[0].triple, (0, 1, 2));
                assert_eq!(w[0].cyclic_sum, vec![int(0), int(0), int(-2)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn so3_passes_jacobi() {
        let g = LieAlgebra::new(
            labels("e", 3),
            [
                ((0, 1), vec![int(0), int(0), int(1)]),
                ((1, 2), vec![int(1), int(0), int(0)]),
                ((2, 0), vec![int(0), int(1), int(0)]),
            ],
        )
        .unwrap();
        assert_eq!(solvability_class(&g), Solvability::NonSolvable);
    }

    #[test]
    fn diagonal_bracket_rejected() {
        let mut raw = StructureConstants::new(labels("e", 2));
        assert_eq!(raw.set(1, 1, vec![int(1), int(0)]), Err(LieError::DiagonalBracket(1)));
    }

    #[test]
    fn antisymmetry_is_stored() {
        let g = h1();
        assert_eq!(g.bracket_basis(1, 0), vec![int(0), int(0), int(-1)]);
        assert_eq!(g.to_string(), "[e1,e2]=e3");
    }

    #[test]
    fn solvability_classes() {
        assert_eq!(solvability_class(&LieAlgebra::abelian(labels("e", 2))), Solvability::Abelian);
        assert_eq!(solvability_class(&h1()), Solvability::Nilpotent { step: 2 });
        assert!(matches!(solvability_class(&r3(-1)), Solvability::Solvable { .. }));
    }

    #[test]
    fn ad_is_a_derivation_and_coadjoint_is_minus_transpose() {
        let g = r3(-1);
        for i in 0..3 {
            assert!(g.is_derivation(&g.ad_basis(i)));
            assert_eq!(g.coad_basis(i), g.ad_basis(i).transpose().neg());
        }
        assert!(!g.is_derivation(&Matrix::identity(3)));
    }

    #[test]
    fn tangent_of_heisenberg_matches_table() {
        let t = tangent_algebra(&h1());
        assert_eq!(t.g().to_string(), "[e1,e2]=e3, [e1,v2]=v3, [e2,v1]=-v3");
        assert!(t.is_balanced());
        assert!(is_ideal(t.g(), &t.k_block()));
        assert!(is_subalgebra(t.g(), &t.h_block()));
    }

    #[test]
    fn cotangent_of_r3_minus1_matches_table() {
        let t = cotangent_algebra(&r3(-1));
        assert_eq!(
            t.g().to_string(),
            "[e1,e2]=e2, [e1,e3]=-e3, [e1,v2]=-v2, [e1,v3]=v3, [e2,v2]=v1, [e3,v3]=-v1"
        );
    }

    #[test]
    fn semidirect_rejects_non_representation() {
        let h = r3(1);
        let k = LieAlgebra::abelian(labels("v", 1));
        let pi = vec![Matrix::zeros(1, 1), Matrix::identity(1), Matrix::zeros(1, 1)];
        assert!(matches!(Representation::new(&h, pi), Err(LieError::NotRepresentation { .. })));
        let pi = Representation::zero(&h, 1);
        let clash = LieAlgebra::abelian(vec!["e1".into()]);
        assert_eq!(semidirect_product(&h, &clash, &pi), Err(LieError::LabelClash("e1".into())));
        assert!(semidirect_product(&h, &k, &pi).is_ok());
    }

    #[test]
    fn series_of_heisenberg() {
        let g = h1();
        let lcs = lower_central_series(&g);
        assert_eq!(lcs.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 1, 0]);
        let ds = derived_series(&g);
        assert_eq!(ds.last().unwrap().dim(), 0);
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::span(3, &[vec![int(1), int(1), int(0)], vec![int(2), int(2), int(0)]]);
        assert_eq!(a.dim(), 1);
        let b = Subspace::coordinate_block(3, 2..3);
        assert!(a.meets_trivially(&b));
        assert_eq!(a.sum(&b).dim(), 2);
        let j = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert!(!is_totally_real(&j, &b));
        assert!(is_totally_real(&j, &Subspace::coordinate_block(3, 0..1)));
    }
}
