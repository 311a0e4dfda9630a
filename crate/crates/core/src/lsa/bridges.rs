use super::{commutator_algebra, is_compatible, Lsa, LsaError, Product};
use crate::connections::{canonical_connection, curvature_witnesses, torsion_witnesses, Connection};
use crate::geometry::{closedness_witnesses, BilinearForm};
use crate::lie::{labels, semidirect_product, LieAlgebra, Representation, SplitAlgebra};
use crate::linalg::scalar;
use crate::linalg::Matrix;
use crate::structures::{integrability_report, is_one_cocycle, make_e, make_j, SplitEndo};

/// `∇_x y = x · y`.
pub fn affine_from_lsa(a: &Lsa) -> Connection {
    Connection::from_fn(a.dim(), |i, j| a.get(i, j).clone())
}

/// `x · y = ∇_x y` for a torsion-free flat connection on `g`.
pub fn lsa_from_affine(nabla: &Connection, g: &LieAlgebra) -> Result<Lsa, LsaError> {
    if nabla.dim() != g.dim() {
        return Err(LsaError::DimensionMismatch { expected: g.dim(), found: nabla.dim() });
    }
    if let Some(&(pair, _)) = torsion_witnesses(g, nabla).first() {
        return Err(LsaError::NotTorsionFree { pair });
    }
    if let Some(&(triple, _)) = curvature_witnesses(g, nabla).first() {
        return Err(LsaError::NotFlat { triple });
    }
    let p = Product::from_fn(g.labels().to_vec(), |i, j| nabla.get(i, j).clone());
    let lsa = Lsa::new(p).map_err(|e| LsaError::InternalEquivalenceViolation(format!("flat torsion-free connection gave {e}")))?;
    Ok(lsa)
}

/// The split algebra `h ⋉_{theta L theta^{-1}} V` with `V` abelian, and its `J`, `E` from `theta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsaSemidirect {
    pub split: SplitAlgebra,
    pub j: SplitEndo,
    pub e: SplitEndo,
}

/// `[(x,u),(y,v)] = ([x,y]_L, theta L(x) theta^{-1} v - theta L(y) theta^{-1} u)`.
pub fn semidirect_from_lsa(a: &Lsa, theta: &Matrix) -> Result<LsaSemidirect, LsaError> {
    let n = a.dim();
    if theta.rows() != n || theta.cols() != n {
        return Err(LsaError::DimensionMismatch { expected: n, found: theta.rows().max(theta.cols()) });
    }
    let inv = theta.inverse().map_err(|_| LsaError::SingularTheta)?;
    let h = commutator_algebra(a)?;
    let v = LieAlgebra::abelian(labels("v", n));
    let pi = Representation::new(&h, (0..n).map(|i| theta.mul(&a.left_basis(i)).mul(&inv)).collect())?;
    let split = semidirect_product(&h, &v, &pi)?;
    if !is_one_cocycle(&h, &pi, theta) {
        return Err(LsaError::InternalEquivalenceViolation("theta is not a 1-cocycle".into()));
    }
    let report = integrability_report(&split, theta)?;
    if !report.integrable() {
        return Err(LsaError::InternalEquivalenceViolation("J from an LSA is not integrable".into()));
    }
    Ok(LsaSemidirect { j: make_j(&split, theta)?, e: make_e(&split, theta)?, split })
}

/// `x · y = j^{-1} pi(x) j y` on h.
pub fn lsa_from_totally_real(split: &SplitAlgebra, j: &Matrix) -> Result<Lsa, LsaError> {
    let report = integrability_report(split, j)?;
    if !report.integrable() {
        let why = match (report.k_witness, report.cocycle_witness) {
            (Some((a, b)), _) => format!("[j e{}, j e{}] != 0 in k", a + 1, b + 1),
            (None, Some((a, b))) => format!("j fails the cocycle identity on (e{}, e{})", a + 1, b + 1),
            (None, None) => "Nijenhuis tensor does not vanish".into(),
        };
        return Err(LsaError::NotIntegrable(why));
    }
    let inv = j.inverse().expect("checked by integrability_report");
    let tilde: Vec<Matrix> = (0..split.h_dim()).map(|i| inv.mul(split.pi().basis_action(i)).mul(j)).collect();
    let p = Product::from_fn(split.h().labels().to_vec(), |i, c| tilde[i].column(c));
    let lsa = Lsa::new(p).map_err(|e| LsaError::InternalEquivalenceViolation(e.to_string()))?;
    if !is_compatible(&lsa, split.h())?.compatible() {
        return Err(LsaError::InternalEquivalenceViolation("induced LSA is not compatible with h".into()));
    }
    Ok(lsa)
}

/// Solves `omega(∇_x y, z) = -omega(y, [x,z])`, i.e. `∇_x y = -B^{-1} ad(x)^T B y`.
pub fn chu_connection(h: &LieAlgebra, omega: &BilinearForm) -> Result<Connection, LsaError> {
    let b = omega.matrix();
    if b.rows() != h.dim() {
        return Err(LsaError::DimensionMismatch { expected: h.dim(), found: b.rows() });
    }
    if b.transpose() != b.neg() {
        return Err(LsaError::NotAntisymmetric);
    }
    let inv = b.inverse().map_err(|_| LsaError::Degenerate)?;
    if let Some(&(triple, _)) = closedness_witnesses(h, omega).first() {
        return Err(LsaError::NotClosed { triple });
    }
    let n = h.dim();
    let nabla = Connection::from_fn(n, |i, c| inv.mul(&h.ad_basis(i).transpose()).mul(b).column(c).iter().map(|v| -v).collect());
    if !torsion_witnesses(h, &nabla).is_empty() || !curvature_witnesses(h, &nabla).is_empty() {
        return Err(LsaError::InternalEquivalenceViolation("symplectic connection is not affine".into()));
    }
    Ok(nabla)
}

/// Round trips among the LSA on h, `J`, `E` and the parallelizing connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub lsa: Lsa,
    /// `semidirect_from_lsa(A, j)` reproduces the brackets of `g`.
    pub bracket_roundtrip: bool,
    /// `lsa_from_totally_real(semidirect_from_lsa(A, j), j) = A`.
    pub lsa_roundtrip: bool,
    /// The canonical connection restricted to h equals `affine_from_lsa(A)`.
    pub connection_restriction: bool,
    /// `lsa_from_affine(affine_from_lsa(A)) = A`.
    pub affine_roundtrip: bool,
    /// `J` and `E` rebuilt from the LSA agree with those from `j`.
    pub structures_agree: bool,
}

impl CorrespondenceReport {
    pub fn all(&self) -> bool {
        self.bracket_roundtrip && self.lsa_roundtrip && self.connection_restriction && self.affine_roundtrip && self.structures_agree
    }
}

pub fn correspondence_report(split: &SplitAlgebra, j: &Matrix) -> Result<CorrespondenceReport, LsaError> {
    let lsa = lsa_from_totally_real(split, j)?;
    let built = semidirect_from_lsa(&lsa, j)?;
    let bracket_roundtrip = built.split.g().constants().clone() == split.g().relabeled(built.split.g().labels().to_vec()).constants().clone();
    let again = lsa_from_totally_real(&built.split, j)?;
    let lsa_roundtrip = again.product().relabeled(lsa.labels().to_vec()) == *lsa.product();
    let canonical = canonical_connection(split, j)?;
    let n = split.h_dim();
    let restricted = Connection::from_fn(n, |a, b| split.proj_h(canonical.get(a, b)));
    let affine = affine_from_lsa(&lsa);
    let connection_restriction = restricted == affine
        && (0..n).all(|a| (0..n).all(|b| scalar::is_zero(&split.proj_k(canonical.get(a, b)))));
    let affine_roundtrip = lsa_from_affine(&affine, split.h())? == lsa;
    let structures_agree = built.j == make_j(split, j)? && built.e == make_e(split, j)?;
    let report = CorrespondenceReport {
        lsa,
        bracket_roundtrip,
        lsa_roundtrip,
        connection_restriction,
        affine_roundtrip,
        structures_agree,
    };
    if !report.all() {
        return Err(LsaError::InternalEquivalenceViolation(format!("correspondence {report:?}")));
    }
    Ok(report)
}
