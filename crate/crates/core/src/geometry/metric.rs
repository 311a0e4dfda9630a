use std::fmt;

use super::{is_closed, BilinearForm, GeometryError, Symmetry};
use crate::connections::canonical_connection;
use crate::lie::SplitAlgebra;
use crate::linalg::scalar;
use crate::linalg::Matrix;
use crate::structures::{integrability_report, make_e, make_f, make_j, SplitEndo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricFlavor {
    /// `<x,y> + <j^{-1}u, j^{-1}v>`
    G,
    /// `<x,y> - <j^{-1}u, j^{-1}v>`
    GBar,
    /// `<x, j^{-1}v> + <j^{-1}u, y>`
    GTilde,
}

impl fmt::Display for MetricFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricFlavor::G => "g",
            MetricFlavor::GBar => "g_bar",
            MetricFlavor::GTilde => "g_tilde",
        })
    }
}

fn check_inner(split: &SplitAlgebra, inner: &BilinearForm) -> Result<(), GeometryError> {
    if inner.dim() != split.h_dim() {
        return Err(GeometryError::DimensionMismatch { expected: split.h_dim(), found: inner.dim() });
    }
    if let Some(k) = inner.positive_definite_defect() {
        return Err(GeometryError::NotPositiveDefinite(k));
    }
    Ok(())
}

/// Extends an inner product on h to g using `j`, and asserts the compatibility identity
/// of the flavour (`J` isometry, `E` and `F` anti-isometries).
pub fn extend_metric(
    split: &SplitAlgebra,
    j: &Matrix,
    inner: &BilinearForm,
    flavor: MetricFlavor,
) -> Result<BilinearForm, GeometryError> {
    check_inner(split, inner)?;
    let (js, es, fs) = (make_j(split, j)?, make_e(split, j)?, make_f(split));
    let inv = j.inverse()?;
    let gm = inner.matrix();
    let n = split.h_dim();
    let lower = inv.transpose().mul(gm).mul(&inv);
    let zero = Matrix::zeros(n, n);
    let (m, s, sign) = match flavor {
        MetricFlavor::G => (Matrix::block_diag(gm, &lower), &js, 1),
        MetricFlavor::GBar => (Matrix::block_diag(gm, &lower.neg()), &es, -1),
        MetricFlavor::GTilde => (Matrix::from_blocks(&zero, &gm.mul(&inv), &inv.transpose().mul(gm), &zero)?, &fs, -1),
    };
    let s = s.matrix();
    let pulled = s.transpose().mul(&m).mul(s);
    let expected = if sign == 1 { m.clone() } else { m.neg() };
    if pulled != expected {
        return Err(GeometryError::InternalEquivalenceViolation(format!("{flavor} is not compatible with its structure")));
    }
    BilinearForm::symmetric(m)
}

/// `omega_S(X, Y) = metric(SX, Y)`, matrix `S^T M`.
pub fn fundamental_form(metric: &BilinearForm, s: &SplitEndo) -> Result<BilinearForm, GeometryError> {
    if metric.dim() != s.dim() {
        return Err(GeometryError::DimensionMismatch { expected: metric.dim(), found: s.dim() });
    }
    BilinearForm::new(s.matrix().transpose().mul(metric.matrix()), Symmetry::Antisymmetric)
}

/// Closedness of the three fundamental forms against the block condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosednessReport {
    pub omega_j: BilinearForm,
    pub omega_j_closed: bool,
    pub omega_e_closed: bool,
    pub omega_f_closed: bool,
    pub k_abelian: bool,
    /// `<j^{-1}pi(y)jz, x> - <j^{-1}pi(x)jz, y> = <[x,y], z>` on h.
    pub block_identity: bool,
    /// `omega_J = -omega_E = omega_F` entrywise.
    pub forms_agree: bool,
    pub nondegenerate: bool,
    /// h ⟂ k under g and k isotropic for omega_J.
    pub orthogonal_blocks: bool,
    pub k_isotropic: bool,
}

impl ClosednessReport {
    pub fn statements(&self) -> [bool; 4] {
        [
            self.omega_j_closed,
            self.omega_e_closed,
            self.omega_f_closed,
            self.k_abelian && self.block_identity,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let s = self.statements();
        s.iter().all(|&b| b == s[0])
    }
}

pub fn closedness_report(split: &SplitAlgebra, j: &Matrix, inner: &BilinearForm) -> Result<ClosednessReport, GeometryError> {
    let g = extend_metric(split, j, inner, MetricFlavor::G)?;
    let gbar = extend_metric(split, j, inner, MetricFlavor::GBar)?;
    let gtilde = extend_metric(split, j, inner, MetricFlavor::GTilde)?;
    let omega_j = fundamental_form(&g, &make_j(split, j)?)?;
    let omega_e = fundamental_form(&gbar, &make_e(split, j)?)?;
    let omega_f = fundamental_form(&gtilde, &make_f(split))?;
    let alg = split.g();
    let n = split.h_dim();
    let inv = j.inverse()?;
    let tilde: Vec<Matrix> = (0..n).map(|i| inv.mul(split.pi().basis_action(i)).mul(j)).collect();
    let mut block_identity = true;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = scalar::unit(n, x);
                let ey = scalar::unit(n, y);
                let ez = scalar::unit(n, z);
                let lhs = inner.eval(&tilde[y].mul_vec(&ez), &ex) - inner.eval(&tilde[x].mul_vec(&ez), &ey);
                let rhs = inner.eval(&split.h().bracket_basis(x, y), &ez);
                block_identity &= lhs == rhs;
            }
        }
    }
    let dim = split.dim();
    let k_isotropic = (n..dim).all(|a| (n..dim).all(|b| num_traits::Zero::is_zero(&omega_j.matrix()[(a, b)])));
    let orthogonal_blocks = (0..n).all(|a| (n..dim).all(|b| num_traits::Zero::is_zero(&g.matrix()[(a, b)])));
    let report = ClosednessReport {
        omega_j_closed: is_closed(alg, &omega_j),
        omega_e_closed: is_closed(alg, &omega_e),
        omega_f_closed: is_closed(alg, &omega_f),
        k_abelian: split.k().is_abelian(),
        block_identity,
        forms_agree: *omega_j.matrix() == omega_e.matrix().neg() && omega_j.matrix() == omega_f.matrix(),
        nondegenerate: omega_j.is_nondegenerate(),
        orthogonal_blocks,
        k_isotropic,
        omega_j,
    };
    if !report.all_agree() || !report.forms_agree || !report.nondegenerate || !report.orthogonal_blocks || !report.k_isotropic {
        return Err(GeometryError::InternalEquivalenceViolation(format!(
            "closedness statements {:?}, forms agree {}, nondegenerate {}, orthogonal {}, isotropic {}",
            report.statements(),
            report.forms_agree,
            report.nondegenerate,
            report.orthogonal_blocks,
            report.k_isotropic
        )));
    }
    Ok(report)
}

/// Almost Kähler implies Kähler when `j^{-1}pi(x)j` is skew for the inner product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerReport {
    pub almost_kahler: bool,
    pub j_integrable: bool,
    /// `g(∇_X Y, Z) + g(Y, ∇_X Z) = 0` for the canonical connection, when J is integrable.
    pub metric_parallel: Option<bool>,
    pub torsion_free: Option<bool>,
}

impl KahlerReport {
    pub fn kahler(&self) -> bool {
        self.almost_kahler && self.j_integrable && self.metric_parallel == Some(true) && self.torsion_free == Some(true)
    }

    /// Almost Kähler ⇒ Kähler.
    pub fn implication_holds(&self) -> bool {
        !self.almost_kahler || self.kahler()
    }
}

pub fn kahler_check(split: &SplitAlgebra, j: &Matrix, inner: &BilinearForm) -> Result<KahlerReport, GeometryError> {
    check_inner(split, inner)?;
    let n = split.h_dim();
    let inv = j.inverse().map_err(|_| crate::structures::StructureError::SingularJ)?;
    let gm = inner.matrix();
    for i in 0..n {
        let t = inv.mul(split.pi().basis_action(i)).mul(j);
        let skew = t.transpose().mul(gm).add(&gm.mul(&t))?;
        if !skew.is_zero() {
            return Err(GeometryError::PreconditionFailed(format!(
                "j^-1 pi({}) j is not skew for the inner product",
                split.h().labels()[i]
            )));
        }
    }
    let closed = closedness_report(split, j, inner)?;
    let integrable = integrability_report(split, j)?.integrable();
    let (metric_parallel, torsion_free) = if integrable {
        let g = extend_metric(split, j, inner, MetricFlavor::G)?;
        let nabla = canonical_connection(split, j)?;
        let dim = split.dim();
        let parallel = (0..dim).all(|x| {
            let op = nabla.operator(&scalar::unit(dim, x));
            op.transpose().mul(g.matrix()).add(&g.matrix().mul(&op)).expect("same shape").is_zero()
        });
        (Some(parallel), Some(crate::connections::is_torsion_free(split.g(), &nabla)))
    } else {
        (None, None)
    };
    let report = KahlerReport {
        almost_kahler: closed.omega_j_closed,
        j_integrable: integrable,
        metric_parallel,
        torsion_free,
    };
    if !report.implication_holds() {
        return Err(GeometryError::InternalEquivalenceViolation(format!("{report:?}")));
    }
    Ok(report)
}
