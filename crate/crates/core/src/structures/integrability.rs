use super::{cocycle_defect, make_e, make_j, nijenhuis_witnesses, StructureError};
use crate::lie::SplitAlgebra;
use crate::linalg::scalar::{self, Vector};
use crate::linalg::Matrix;

/// The three integrability conditions computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrabilityReport {
    pub j_integrable: bool,
    pub e_integrable: bool,
    pub k_abelian: bool,
    pub j_cocycle: bool,
    /// Nonzero `N_J(e_a, e_b)` values.
    pub nj_witnesses: Vec<((usize, usize), Vector)>,
    pub ne_witnesses: Vec<((usize, usize), Vector)>,
    /// `(a, b)` with `[j e_a, j e_b] != 0` in k.
    pub k_witness: Option<(usize, usize)>,
    pub cocycle_witness: Option<(usize, usize)>,
}

impl IntegrabilityReport {
    pub fn integrable(&self) -> bool {
        self.j_integrable
    }

    pub fn equivalence_holds(&self) -> bool {
        let c = self.k_abelian && self.j_cocycle;
        self.j_integrable == self.e_integrable && self.e_integrable == c
    }
}

/// `N_J = 0`, `N_E = 0` and `k abelian ∧ j cocycle`, which must agree.
pub fn integrability_report(split: &SplitAlgebra, j: &Matrix) -> Result<IntegrabilityReport, StructureError> {
    let js = make_j(split, j)?;
    let es = make_e(split, j)?;
    let g = split.g();
    let nj_witnesses = nijenhuis_witnesses(g, &js);
    let ne_witnesses = nijenhuis_witnesses(g, &es);
    let n = split.h_dim();
    let k_witness = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| !scalar::is_zero(&split.k().br(&j.column(a), &j.column(b))));
    let cocycle_witness = cocycle_defect(split.h(), split.pi(), j);
    let report = IntegrabilityReport {
        j_integrable: nj_witnesses.is_empty(),
        e_integrable: ne_witnesses.is_empty(),
        k_abelian: split.k().is_abelian(),
        j_cocycle: cocycle_witness.is_none(),
        nj_witnesses,
        ne_witnesses,
        k_witness,
        cocycle_witness,
    };
    if !report.equivalence_holds() {
        return Err(StructureError::InternalEquivalenceViolation(format!(
            "N_J=0: {}, N_E=0: {}, k abelian: {}, j cocycle: {}",
            report.j_integrable, report.e_integrable, report.k_abelian, report.j_cocycle
        )));
    }
    Ok(report)
}
