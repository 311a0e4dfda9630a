use proptest::prelude::*;

use semisplit::geometry::{symplectic_report, BilinearForm};
use semisplit::lie::{cotangent_algebra, labels, tangent_algebra, LieAlgebra, Representation, SplitAlgebra, Subspace};
use semisplit::linalg::{int, scalar, Matrix, Vector};
use semisplit::lsa::{correspondence_report, lsa_from_totally_real, semidirect_from_lsa, Product};
use semisplit::structures::{integrability_report, is_one_cocycle, make_e, make_j, nijenhuis, nijenhuis_witnesses};

fn bases() -> Vec<LieAlgebra> {
    let e = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vector>();
    vec![
        LieAlgebra::abelian(labels("e", 2)),
        LieAlgebra::new(labels("e", 2), [((0, 1), e(&[0, 1]))]).unwrap(),
        LieAlgebra::new(labels("e", 3), [((0, 1), e(&[0, 0, 1]))]).unwrap(),
        LieAlgebra::new(labels("e", 3), [((0, 1), e(&[0, 1, 0])), ((0, 2), e(&[0, 0, -1]))]).unwrap(),
        LieAlgebra::new(labels("e", 3), [((0, 1), e(&[0, 0, -1])), ((0, 2), e(&[0, 1, 0]))]).unwrap(),
    ]
}

fn split_of(h: &LieAlgebra, cotangent: bool) -> SplitAlgebra {
    if cotangent {
        cotangent_algebra(h)
    } else {
        tangent_algebra(h)
    }
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        Matrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    })
}

fn instance() -> impl Strategy<Value = (SplitAlgebra, Matrix)> {
    (0..bases().len(), any::<bool>())
        .prop_flat_map(|(i, cot)| {
            let n = bases()[i].dim();
            (Just(i), Just(cot), small_matrix(n))
        })
        .prop_filter_map("singular j", |(i, cot, j)| {
            let d = j.determinant().ok()?;
            (d != int(0)).then(|| (split_of(&bases()[i], cot), j))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn integrability_conditions_agree((split, j) in instance()) {
        let js = make_j(&split, &j).unwrap();
        let es = make_e(&split, &j).unwrap();
        let nj = nijenhuis_witnesses(split.g(), &js).is_empty();
        let ne = nijenhuis_witnesses(split.g(), &es).is_empty();
        let blocks = split.k().is_abelian() && is_one_cocycle(split.h(), split.pi(), &j);
        prop_assert_eq!(nj, ne);
        prop_assert_eq!(nj, blocks);
        prop_assert_eq!(integrability_report(&split, &j).unwrap().integrable(), nj);
    }

    #[test]
    fn nijenhuis_is_skew_and_j_covariant((split, j) in instance(), a in 0usize..6, b in 0usize..6) {
        let js = make_j(&split, &j).unwrap();
        let n = split.dim();
        let (x, y) = (scalar::unit(n, a % n), scalar::unit(n, b % n));
        let g = split.g();
        prop_assert_eq!(nijenhuis(g, &js, &x, &y), scalar::neg(&nijenhuis(g, &js, &y, &x)));
        // N_J(JX, Y) = -J N_J(X, Y)
        prop_assert_eq!(nijenhuis(g, &js, &js.apply(&x), &y), scalar::neg(&js.apply(&nijenhuis(g, &js, &x, &y))));
    }

    #[test]
    fn e_eigenspaces_are_graphs((split, j) in instance()) {
        let es = make_e(&split, &j).unwrap();
        let n = split.h_dim();
        let id = Matrix::identity(split.dim());
        for sign in [1i64, -1] {
            let kernel = es.matrix().sub(&id.scale(&int(sign))).unwrap().kernel_basis();
            let graph: Vec<Vector> = (0..n).map(|i| split.join(&scalar::unit(n, i), &scalar::scale(&int(sign), &j.column(i)))).collect();
            prop_assert_eq!(kernel.len(), n);
            prop_assert!(Subspace::span(split.dim(), &kernel).contains_subspace(&Subspace::span(split.dim(), &graph)));
        }
    }

    #[test]
    fn inner_derivations((i, coeffs) in (0..5usize).prop_flat_map(|i| (Just(i), prop::collection::vec(-3i64..=3, bases()[i].dim())))) {
        let h = &bases()[i];
        let x: Vector = coeffs.iter().map(|&c| int(c)).collect();
        prop_assert!(h.is_derivation(&h.ad(&x)));
        let ad = Representation::adjoint(h);
        let theta = Matrix::from_columns(h.dim(), &(0..h.dim()).map(|k| ad.basis_action(k).mul_vec(&x)).collect::<Vec<_>>());
        prop_assert!(is_one_cocycle(h, &ad, &theta));
    }

    #[test]
    fn lsa_round_trips((split, j) in instance()) {
        prop_assume!(integrability_report(&split, &j).unwrap().integrable());
        let a = lsa_from_totally_real(&split, &j).unwrap();
        prop_assert!(correspondence_report(&split, &j).unwrap().all());
        let built = semidirect_from_lsa(&a, &j).unwrap();
        let again = lsa_from_totally_real(&built.split, &j).unwrap();
        prop_assert_eq!(again.product().relabeled(a.labels().to_vec()), a.product().clone());
    }

    #[test]
    fn perturbed_products_and_compatibility((split, j) in instance(), slot in 0usize..27, delta in 1i64..=2) {
        prop_assume!(integrability_report(&split, &j).unwrap().integrable());
        let a = lsa_from_totally_real(&split, &j).unwrap();
        let n = a.dim();
        let (p, k) = (slot / n % (n * n), slot % n);
        let mut v = a.get(p / n, p % n).clone();
        v[k] += int(delta);
        let mut perturbed: Product = a.product().clone();
        perturbed.set(p / n, p % n, v);
        let compatible = semisplit::lsa::is_compatible(&perturbed, split.h()).unwrap().compatible();
        // only off-diagonal products change the commutator
        prop_assert_eq!(compatible, p / n == p % n);
    }

    #[test]
    fn symplectic_iff_flat_cocycle(entries in prop::collection::vec(-2i64..=2, 6)) {
        let e = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vector>();
        let aff2 = LieAlgebra::new(labels("e", 4), [((0, 1), e(&[0, 1, 0, 0])), ((2, 3), e(&[0, 0, 0, 1]))]).unwrap();
        let mut m = Matrix::zeros(4, 4).to_rows();
        let mut it = entries.iter();
        for r in 0..4 {
            for c in r + 1..4 {
                let v = int(*it.next().unwrap());
                m[c][r] = -v.clone();
                m[r][c] = v;
            }
        }
        let omega = BilinearForm::antisymmetric(Matrix::from_rows(m).unwrap()).unwrap();
        let r = symplectic_report(&aff2, &omega).unwrap();
        prop_assert_eq!(r.closed, r.flat_is_cocycle);
    }
}
