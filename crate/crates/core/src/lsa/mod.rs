//! Left-symmetric algebras: axioms, compatibility with a Lie bracket, and the bridges
//! to affine connections and split semidirect products.

mod bridges;

pub use bridges::{
    affine_from_lsa, chu_connection, correspondence_report, lsa_from_affine, lsa_from_totally_real,
    semidirect_from_lsa, CorrespondenceReport, LsaSemidirect,
};

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::connections::ConnectionError;
use crate::lie::{check_jacobi, LieAlgebra, LieError, StructureConstants};
use crate::linalg::scalar::{self, format_combination, Scalar, Vector};
use crate::linalg::Matrix;
use crate::structures::StructureError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LsaError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not left-symmetric: a(e{a},e{b},e{c}) != a(e{b},e{a},e{c})", a = .triple.0 + 1, b = .triple.1 + 1, c = .triple.2 + 1)]
    NotLeftSymmetric { triple: (usize, usize, usize) },
    #[error("connection has torsion at ({},{})", .pair.0 + 1, .pair.1 + 1)]
    NotTorsionFree { pair: (usize, usize) },
    #[error("connection has curvature at ({},{},{})", .triple.0 + 1, .triple.1 + 1, .triple.2 + 1)]
    NotFlat { triple: (usize, usize, usize) },
    #[error("theta is singular")]
    SingularTheta,
    #[error("2-form is degenerate")]
    Degenerate,
    #[error("2-form is not antisymmetric")]
    NotAntisymmetric,
    #[error("2-form is not closed on ({},{},{})", .triple.0 + 1, .triple.1 + 1, .triple.2 + 1)]
    NotClosed { triple: (usize, usize, usize) },
    #[error("J is not integrable: {0}")]
    NotIntegrable(String),
    #[error("internal equivalence violated: {0}")]
    InternalEquivalenceViolation(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Connection(#[from] ConnectionError),
}

/// A bilinear product on a labelled basis, `table[i * n + j] = e_i · e_j`. No axioms imposed.
#[derive(Clone, PartialEq, Eq)]
pub struct Product {
    labels: Vec<String>,
    table: Vec<Vector>,
}

impl Product {
    pub fn zero(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self { labels, table: vec![scalar::zeros(n); n * n] }
    }

    pub fn from_fn(labels: Vec<String>, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let n = labels.len();
        let table: Vec<Vector> = (0..n * n).map(|ij| f(ij / n, ij % n)).collect();
        assert!(table.iter().all(|v| v.len() == n));
        Self { labels, table }
    }

    /// Sparse literal `((i, j), e_i · e_j)`; unspecified products are zero.
    pub fn from_entries<I>(labels: Vec<String>, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), Vector)>,
    {
        let mut p = Self::zero(labels);
        for ((i, j), v) in entries {
            p.set(i, j, v);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relabeled(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        Self { labels, table: self.table.clone() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.dim());
        let n = self.dim();
        self.table[i * n + j] = v;
    }

    /// Nonzero products in row-major order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !scalar::is_zero(v))
            .map(move |(ij, v)| (ij / n, ij % n, v))
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = scalar::zeros(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    scalar::axpy(&mut out, &(xi * yj), self.get(i, j));
                }
            }
        }
        out
    }

    /// `a(x,y,z) = (x·y)·z - x·(y·z)`.
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        scalar::sub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    /// `L(x) = x · -`.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &scalar::unit(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        Matrix::from_columns(self.dim(), &(0..self.dim()).map(|j| self.get(i, j).clone()).collect::<Vec<_>>())
    }

    /// `R(x) = - · x`.
    pub fn right(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&scalar::unit(n, j), x)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// `x·y - y·x` on basis vectors.
    pub fn commutator_basis(&self, i: usize, j: usize) -> Vector {
        scalar::sub(self.get(i, j), self.get(j, i))
    }

    /// Basis triples where `a(x,y,z) != a(y,x,z)`, `i < j`.
    pub fn left_symmetry_witnesses(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let ls: Vec<Matrix> = (0..n).map(|i| self.left_basis(i)).collect();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                // a(x,y,-) - a(y,x,-) = L([x,y]_L) - [L x, L y]
                let lhs = self.left(&self.commutator_basis(i, j));
                let rhs = ls[i].commutator(&ls[j]);
                if lhs != rhs {
                    let d = lhs.sub(&rhs).expect("same shape");
                    let k = (0..n).find(|&k| !scalar::is_zero(&d.column(k))).expect("nonzero");
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    pub fn is_left_symmetric(&self) -> bool {
        self.left_symmetry_witnesses().is_empty()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let e: Vec<Vector> = (0..n).map(|i| scalar::unit(n, i)).collect();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| scalar::is_zero(&self.associator(&e[i], &e[j], &e[k])))))
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(v, &self.labels)
    }
}

impl fmt::Debug for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Product({self})")
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero_products()
            .map(|(i, j, v)| format!("{}*{}={}", self.labels[i], self.labels[j], self.format_vector(v)))
            .collect();
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(", "))
    }
}

/// A product validated as left-symmetric.
#[derive(Clone, PartialEq, Eq)]
pub struct Lsa {
    product: Product,
}

impl Lsa {
    pub fn new(product: Product) -> Result<Self, LsaError> {
        if let Some(&triple) = product.left_symmetry_witnesses().first() {
            return Err(LsaError::NotLeftSymmetric { triple });
        }
        Ok(Self { product })
    }

    pub fn product(&self) -> &Product {
        &self.product
    }

    pub fn into_product(self) -> Product {
        self.product
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }
}

impl std::ops::Deref for Lsa {
    type Target = Product;

    fn deref(&self) -> &Product {
        &self.product
    }
}

impl fmt::Debug for Lsa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lsa({})", self.product)
    }
}

/// `[x,y]_L = x·y - y·x`, Jacobi-checked.
pub fn commutator_algebra(a: &Product) -> Result<LieAlgebra, LieError> {
    let n = a.dim();
    let mut raw = StructureConstants::new(a.labels().to_vec());
    for i in 0..n {
        for j in i + 1..n {
            raw.set(i, j, a.commutator_basis(i, j))?;
        }
    }
    check_jacobi(raw)
}

/// `[e_i, e_j]` computed from the product and from the Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketMismatch {
    pub pair: (usize, usize),
    pub from_product: Vector,
    pub from_algebra: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub mismatches: Vec<BracketMismatch>,
}

impl CompatibilityReport {
    pub fn compatible(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `x·y - y·x` with `[x,y]` on every basis pair; never aborts.
pub fn is_compatible(a: &Product, h: &LieAlgebra) -> Result<CompatibilityReport, LsaError> {
    if a.dim() != h.dim() {
        return Err(LsaError::DimensionMismatch { expected: h.dim(), found: a.dim() });
    }
    let n = a.dim();
    let mut mismatches = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let from_product = a.commutator_basis(i, j);
            let from_algebra = h.bracket_basis(i, j);
            if from_product != from_algebra {
                mismatches.push(BracketMismatch { pair: (i, j), from_product, from_algebra });
            }
        }
    }
    Ok(CompatibilityReport { mismatches })
}

fn bracket_of(a: &Product, h: Option<&LieAlgebra>, x: &[Scalar], y: &[Scalar]) -> Vector {
    match h {
        Some(h) => h.br(x, y),
        None => scalar::sub(&a.mul(x, y), &a.mul(y, x)),
    }
}

/// `L` is a homomorphism into `gl(V)` and `Id` is a 1-cocycle of `(g, L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeftMultReport {
    pub l_homomorphism: bool,
    pub id_cocycle: bool,
}

impl LeftMultReport {
    pub fn both(&self) -> bool {
        self.l_homomorphism && self.id_cocycle
    }
}

/// Uses the bracket of `h` when given, otherwise the commutator of the product.
pub fn left_mult_checks(a: &Product, h: Option<&LieAlgebra>) -> LeftMultReport {
    let n = a.dim();
    let e: Vec<Vector> = (0..n).map(|i| scalar::unit(n, i)).collect();
    let ls: Vec<Matrix> = (0..n).map(|i| a.left_basis(i)).collect();
    let mut hom = true;
    let mut cocycle = true;
    for i in 0..n {
        for j in i + 1..n {
            let br = bracket_of(a, h, &e[i], &e[j]);
            hom &= a.left(&br) == ls[i].commutator(&ls[j]);
            cocycle &= a.commutator_basis(i, j) == br;
        }
    }
    LeftMultReport { l_homomorphism: hom, id_cocycle: cocycle }
}

/// `alpha(X) = (L(X), X)` into `aff(V) = End(V) ⊕ V`, checked blockwise:
/// `alpha[X,Y] = (L X L Y - L Y L X, L(X)Y - L(Y)X)`.
pub fn alpha_homomorphism_check(a: &Product, h: Option<&LieAlgebra>) -> bool {
    let n = a.dim();
    let e: Vec<Vector> = (0..n).map(|i| scalar::unit(n, i)).collect();
    let ls: Vec<Matrix> = (0..n).map(|i| a.left_basis(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let br = bracket_of(a, h, &e[i], &e[j]);
            let end_part = ls[i].mul(&ls[j]).sub(&ls[j].mul(&ls[i])).expect("same shape");
            let vec_part = scalar::sub(&ls[i].column(j), &ls[j].column(i));
            if a.left(&br) != end_part || br != vec_part {
                return false;
            }
        }
    }
    true
}

/// Underlying Lie algebra abelian ⇔ product associative and commutative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbelianReport {
    pub underlying_abelian: bool,
    pub associative: bool,
    pub commutative: bool,
}

impl AbelianReport {
    pub fn holds(&self) -> bool {
        self.underlying_abelian == (self.associative && self.commutative)
    }
}

pub fn abelian_iff_commutative_associative(a: &Lsa) -> AbelianReport {
    let n = a.dim();
    let underlying_abelian = (0..n).all(|i| (i + 1..n).all(|j| scalar::is_zero(&a.commutator_basis(i, j))));
    AbelianReport {
        underlying_abelian,
        associative: a.is_associative(),
        commutative: a.is_commutative(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connections::{is_flat, is_torsion_free};
    use crate::geometry::BilinearForm;
    use crate::lie::{labels, tangent_algebra};
    use crate::linalg::scalar::{frac, int};

    fn h1() -> LieAlgebra {
        LieAlgebra::new(labels("e", 3), [((0, 1), vec![int(0), int(0), int(1)])]).unwrap()
    }

    fn aff() -> LieAlgebra {
        LieAlgebra::new(labels("e", 2), [((0, 1), vec![int(0), int(1)])]).unwrap()
    }

    fn heisenberg_lsa() -> Lsa {
        let half = vec![int(0), int(0), frac(1, 2)];
        let p = Product::from_entries(labels("e", 3), [((0, 1), half.clone()), ((1, 0), scalar::neg(&half))]);
        Lsa::new(p).unwrap()
    }

    #[test]
    fn left_symmetry_witness() {
        let p = Product::from_entries(labels("e", 2), [((0, 1), vec![int(1), int(0)])]);
        assert_eq!(p.left_symmetry_witnesses(), vec![(0, 1, 1)]);
        assert_eq!(Lsa::new(p).unwrap_err(), LsaError::NotLeftSymmetric { triple: (0, 1, 1) });
    }

    #[test]
    fn associative_commutative_is_lsa_on_abelian() {
        let p = Product::from_entries(labels("e", 1), [((0, 0), vec![int(1)])]);
        let a = Lsa::new(p).unwrap();
        let r = abelian_iff_commutative_associative(&a);
        assert!(r.underlying_abelian && r.associative && r.commutative && r.holds());
    }

    #[test]
    fn heisenberg_lsa_is_compatible() {
        let a = heisenberg_lsa();
        assert!(is_compatible(&a, &h1()).unwrap().compatible());
        assert_eq!(commutator_algebra(&a).unwrap(), h1());
        assert!(left_mult_checks(&a, Some(&h1())).both());
        assert!(alpha_homomorphism_check(&a, None));
        let r = abelian_iff_commutative_associative(&a);
        assert!(!r.underlying_abelian && !r.commutative && r.holds());
        assert_eq!(a.to_string(), "e1*e2=1/2 e3, e2*e1=-1/2 e3");
    }

    #[test]
    fn incompatible_bracket_is_reported() {
        let r = is_compatible(&Product::zero(labels("e", 3)), &h1()).unwrap();
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.mismatches[0].pair, (0, 1));
        assert!(matches!(is_compatible(&heisenberg_lsa(), &aff()), Err(LsaError::DimensionMismatch { expected: 2, found: 3 })));
    }

    #[test]
    fn affine_round_trip() {
        let a = heisenberg_lsa();
        let nabla = affine_from_lsa(&a);
        assert!(is_torsion_free(&h1(), &nabla) && is_flat(&h1(), &nabla));
        assert_eq!(lsa_from_affine(&nabla, &h1()).unwrap(), a);
        assert!(matches!(
            lsa_from_affine(&crate::connections::Connection::zero(3), &h1()),
            Err(LsaError::NotTorsionFree { pair: (0, 1) })
        ));
    }

    #[test]
    fn semidirect_and_back() {
        let a = heisenberg_lsa();
        let theta = Matrix::identity(3);
        let built = semidirect_from_lsa(&a, &theta).unwrap();
        assert_eq!(built.split.g().dim(), 6);
        assert!(built.split.k().is_abelian());
        assert_eq!(lsa_from_totally_real(&built.split, &theta).unwrap().relabeled(labels("e", 3)), *a.product());
        assert_eq!(semidirect_from_lsa(&a, &Matrix::zeros(3, 3)).unwrap_err(), LsaError::SingularTheta);
    }

    #[test]
    fn lsa_from_heisenberg_tangent_structure() {
        let t = tangent_algebra(&h1());
        let j = Matrix::from_i64(&[&[1, -1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let a = lsa_from_totally_real(&t, &j).unwrap();
        let expected = Product::from_entries(
            labels("e", 3),
            [((0, 1), vec![int(0), int(0), frac(1, 2)]), ((1, 0), vec![int(0), int(0), frac(-1, 2)]), ((1, 1), vec![int(0), int(0), frac(1, 2)])],
        );
        assert_eq!(*a.product(), expected);
        assert!(correspondence_report(&t, &j).unwrap().all());
    }

    #[test]
    fn chu_connection_on_aff() {
        let omega = BilinearForm::antisymmetric(Matrix::from_i64(&[&[0, 1], &[-1, 0]])).unwrap();
        let nabla = chu_connection(&aff(), &omega).unwrap();
        assert!(is_torsion_free(&aff(), &nabla) && is_flat(&aff(), &nabla));
        let a = lsa_from_affine(&nabla, &aff()).unwrap();
        assert!(is_compatible(&a, &aff()).unwrap().compatible());
        let degenerate = BilinearForm::antisymmetric(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(chu_connection(&aff(), &degenerate).unwrap_err(), LsaError::Degenerate);
    }
}
