use num_traits::Zero;

use super::{make_e, make_f, make_j, Kind, SplitEndo, StructureError};
use crate::lie::{LieAlgebra, SplitAlgebra};
use crate::linalg::scalar::{self, Vector};
use crate::linalg::{LinalgError, Matrix};

/// Bi-invariant: `S[Y,Z] = [Y,SZ]`. Abelian: `[SY,SZ] = -eps[Y,Z]`.
/// Anti bi-invariant (complex only): `[SY,Z] = -S[Y,Z]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialClasses {
    pub bi_invariant: bool,
    pub abelian: bool,
    pub anti_bi_invariant: Option<bool>,
}

pub fn classify_special(g: &LieAlgebra, s: &SplitEndo) -> SpecialClasses {
    let n = g.dim();
    let units: Vec<Vector> = (0..n).map(|i| scalar::unit(n, i)).collect();
    let images: Vec<Vector> = units.iter().map(|e| s.apply(e)).collect();
    let mut bi = true;
    let mut anti = true;
    let mut abelian = true;
    for a in 0..n {
        for b in 0..n {
            let sbr = s.apply(&g.bracket_basis(a, b));
            let left = g.br(&images[a], &units[b]);
            bi &= g.br(&units[a], &images[b]) == sbr;
            anti &= left == scalar::neg(&sbr);
            if a < b {
                let lhs = g.br(&images[a], &images[b]);
                let rhs = scalar::scale(&-s.epsilon(), &g.bracket_basis(a, b));
                abelian &= lhs == rhs;
            }
        }
    }
    SpecialClasses {
        bi_invariant: bi,
        abelian,
        anti_bi_invariant: (s.kind() == Kind::Complex).then_some(anti),
    }
}

/// Special classes of `J`, `E` from `j` next to their block characterisations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSpecialReport {
    pub j: SpecialClasses,
    pub e: SpecialClasses,
    pub f: SpecialClasses,
    pub g_abelian: bool,
    /// `h, k abelian ∧ pi(x)jy = pi(y)jx`
    pub j_abelian_blocks: bool,
    /// `h, k abelian ∧ pi(x)jy = -pi(y)jx`
    pub e_abelian_blocks: bool,
}

/// Cross-checks bi-invariance against `g` abelian and the abelian classes against block conditions.
pub fn split_special_report(split: &SplitAlgebra, j: &Matrix) -> Result<SplitSpecialReport, StructureError> {
    let g = split.g();
    let js = make_j(split, j)?;
    let es = make_e(split, j)?;
    let n = split.h_dim();
    let base = split.h().is_abelian() && split.k().is_abelian();
    let mut sym = true;
    let mut skew = true;
    for a in 0..n {
        for b in 0..n {
            let l = split.pi().basis_action(a).mul_vec(&j.column(b));
            let r = split.pi().basis_action(b).mul_vec(&j.column(a));
            sym &= l == r;
            skew &= l == scalar::neg(&r);
        }
    }
    let report = SplitSpecialReport {
        j: classify_special(g, &js),
        e: classify_special(g, &es),
        f: classify_special(g, &make_f(split)),
        g_abelian: g.is_abelian(),
        j_abelian_blocks: base && sym,
        e_abelian_blocks: base && skew,
    };
    let agree = report.j.bi_invariant == report.g_abelian
        && report.e.bi_invariant == report.g_abelian
        && report.j.abelian == report.j_abelian_blocks
        && report.e.abelian == report.e_abelian_blocks;
    if !agree {
        return Err(StructureError::InternalEquivalenceViolation(format!("special classes {report:?}")));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// `phi F = F phi`, i.e. h and k are phi-invariant.
    pub f_commutes: bool,
    /// `J phi = phi J'`
    pub j_intertwines: bool,
    /// `E phi = phi E'`
    pub e_intertwines: bool,
    /// `D j' = j A` for `phi = diag(A, D)`; `None` when phi is not block diagonal.
    pub block_criterion: Option<bool>,
}

impl EquivalenceReport {
    pub fn equivalent(&self) -> bool {
        self.f_commutes && self.j_intertwines
    }
}

/// Verifies that `phi` is an automorphism of `g` carrying `(F, J')` to `(F, J)`.
pub fn check_equivalence(
    phi: &Matrix,
    split: &SplitAlgebra,
    j: &Matrix,
    j_prime: &Matrix,
) -> Result<EquivalenceReport, StructureError> {
    let g = split.g();
    let n = g.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(LinalgError::DimensionMismatch { left: (phi.rows(), phi.cols()), right: (n, n) }.into());
    }
    if phi.determinant()?.is_zero() {
        return Err(LinalgError::Singular.into());
    }
    let cols: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    for a in 0..n {
        for b in a + 1..n {
            if phi.mul_vec(&g.bracket_basis(a, b)) != g.br(&cols[a], &cols[b]) {
                return Err(StructureError::NotAutomorphism { pair: (a, b) });
            }
        }
    }
    let f = split.product_structure();
    let (js, jp) = (make_j(split, j)?, make_j(split, j_prime)?);
    let (es, ep) = (make_e(split, j)?, make_e(split, j_prime)?);
    let f_commutes = phi.mul(&f) == f.mul(phi);
    let h = split.h_dim();
    let block_criterion = f_commutes.then(|| {
        let a = phi.submatrix(0..h, 0..h);
        let d = phi.submatrix(h..n, h..n);
        d.mul(j_prime) == j.mul(&a)
    });
    let report = EquivalenceReport {
        f_commutes,
        j_intertwines: js.matrix().mul(phi) == phi.mul(jp.matrix()),
        e_intertwines: es.matrix().mul(phi) == phi.mul(ep.matrix()),
        block_criterion,
    };
    if let Some(b) = report.block_criterion {
        if b != report.j_intertwines || b != report.e_intertwines {
            return Err(StructureError::InternalEquivalenceViolation(format!("equivalence {report:?}")));
        }
    }
    Ok(report)
}

/// `J^2 = -Id`, `E^2 = Id` and `JE = -EJ`.
pub fn check_complex_product_pair(j: &Matrix, e: &Matrix) -> bool {
    if !j.is_square() || !e.is_square() || j.rows() != e.rows() {
        return false;
    }
    let id = Matrix::identity(j.rows());
    j.mul(j) == id.neg() && e.mul(e) == id && j.mul(e) == e.mul(j).neg()
}
