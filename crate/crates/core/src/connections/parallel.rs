use num_traits::{One, Zero};

use super::{canonical_unchecked, Connection, ConnectionError};
use crate::lie::SplitAlgebra;
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{Matrix, SparseSolution, SparseSystem};
use crate::structures::{integrability_report, make_e, make_f, make_j};

/// One linear system: torsion-free plus two parallelism constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelSystem {
    pub structures: (&'static str, &'static str),
    pub solution: SparseSolution,
}

impl ParallelSystem {
    pub fn exists(&self) -> bool {
        self.solution.consistent
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelConnectionReport {
    pub systems: [ParallelSystem; 3],
    pub j_integrable: bool,
    pub e_integrable: bool,
    /// Every feasible system has a single solution equal to the canonical connection.
    pub unique_and_canonical: bool,
    /// Solutions satisfy `p_h ∇_{x+u} v = 0 = p_k ∇_{x+u} y`.
    pub block_form: bool,
}

impl ParallelConnectionReport {
    pub fn statements(&self) -> [bool; 5] {
        [
            self.systems[0].exists(),
            self.systems[1].exists(),
            self.systems[2].exists(),
            self.j_integrable,
            self.e_integrable,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let s = self.statements();
        s.iter().all(|&b| b == s[0])
    }
}

fn index(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

fn add_torsion_rows(sys: &mut SparseSystem, split: &SplitAlgebra) {
    let g = split.g();
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            let c = g.bracket_basis(i, j);
            for k in 0..n {
                sys.add_equation(
                    [(index(n, i, j, k), Scalar::one()), (index(n, j, i, k), -Scalar::one())],
                    c[k].clone(),
                );
            }
        }
    }
}

/// `sum_m S_mj Γ_im^k - sum_m S_km Γ_ij^m = 0`.
fn add_parallel_rows(sys: &mut SparseSystem, s: &Matrix) {
    let n = s.rows();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut terms = Vec::new();
                for m in 0..n {
                    if !s[(m, j)].is_zero() {
                        terms.push((index(n, i, m, k), s[(m, j)].clone()));
                    }
                    if !s[(k, m)].is_zero() {
                        terms.push((index(n, i, j, m), -s[(k, m)].clone()));
                    }
                }
                sys.add_equation(terms, Scalar::zero());
            }
        }
    }
}

fn block_form(split: &SplitAlgebra, nabla: &Connection) -> bool {
    let h = split.h_dim();
    let n = split.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let v = nabla.get(i, j);
            if j < h {
                scalar::is_zero(&split.proj_k(v))
            } else {
                scalar::is_zero(&split.proj_h(v))
            }
        })
    })
}

/// Decides existence of a torsion-free connection parallelizing each pair among F, J, E
/// by exact linear solve, and compares with integrability of J and E.
pub fn parallel_connection_report(split: &SplitAlgebra, j: &Matrix) -> Result<ParallelConnectionReport, ConnectionError> {
    let integrability = integrability_report(split, j)?;
    let f = make_f(split);
    let js = make_j(split, j)?;
    let es = make_e(split, j)?;
    let n = split.dim();
    let pairs: [(&'static str, &Matrix, &'static str, &Matrix); 3] = [
        ("F", f.matrix(), "J", js.matrix()),
        ("F", f.matrix(), "E", es.matrix()),
        ("E", es.matrix(), "J", js.matrix()),
    ];
    let canonical = integrability.integrable().then(|| canonical_unchecked(split, j));
    let mut unique_and_canonical = true;
    let mut block = true;
    let systems = pairs.map(|(a, s1, b, s2)| {
        let mut sys = SparseSystem::new(n * n * n);
        add_torsion_rows(&mut sys, split);
        add_parallel_rows(&mut sys, s1);
        add_parallel_rows(&mut sys, s2);
        let solution = sys.solve();
        if let Some(p) = &solution.particular {
            let found = Connection::from_coefficients(n, p);
            block &= block_form(split, &found);
            unique_and_canonical &= solution.is_unique() && canonical.as_ref() == Some(&found);
        }
        ParallelSystem { structures: (a, b), solution }
    });
    let report = ParallelConnectionReport {
        systems,
        j_integrable: integrability.j_integrable,
        e_integrable: integrability.e_integrable,
        unique_and_canonical,
        block_form: block,
    };
    if !report.all_agree() || !report.unique_and_canonical || !report.block_form {
        return Err(ConnectionError::InternalEquivalenceViolation(format!(
            "statements {:?}, unique and canonical: {}, block form: {}",
            report.statements(),
            report.unique_and_canonical,
            report.block_form
        )));
    }
    Ok(report)
}
