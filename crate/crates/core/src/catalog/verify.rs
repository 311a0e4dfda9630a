use num_traits::Zero;

use super::{entries, build, CatalogEntry, CatalogError, Check, Params, Provenance};
use crate::connections::{canonical_connection, is_flat, is_parallel, is_torsion_free, parallel_connection_report};
use crate::geometry::{closedness_report, hermitian_cotangent_from_symplectic, kahler_check, symplectic_report};
use crate::lie::{is_totally_real, solvability_class, StructureConstants, Subspace};
use crate::linalg::scalar::{self, format_combination};
use crate::linalg::Matrix;
use crate::lsa::{chu_connection, correspondence_report, is_compatible, lsa_from_totally_real, semidirect_from_lsa, Lsa, Product};
use crate::structures::{
    classify_special, cocycle_space, integrability_report, make_e, make_f, make_j, nijenhuis_witnesses, Kind, SplitEndo,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub reference: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

/// A failed check of an as-printed entry: the displayed data disagrees with the computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub entry: String,
    pub check: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub entry: String,
    pub name: String,
    pub provenance: Provenance,
    pub params: Params,
    pub checks: Vec<CheckOutcome>,
    pub diagnostics: Vec<Diagnostic>,
    pub errata: Vec<String>,
}

impl EntryReport {
    /// Corrected entries pass every check; as-printed entries yield exactly one diagnostic.
    pub fn pass(&self) -> bool {
        match self.provenance {
            Provenance::Corrected => self.checks.iter().all(|c| c.pass),
            Provenance::AsPrinted => self.diagnostics.len() == 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(EntryReport::pass)
    }

    pub fn diagnostics(&self) -> impl Iterator<Item = &Diagnostic> {
        self.entries.iter().flat_map(|e| &e.diagnostics)
    }

    pub fn failures(&self) -> impl Iterator<Item = &EntryReport> {
        self.entries.iter().filter(|e| !e.pass())
    }
}

type Outcome = Result<(bool, Vec<String>), String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn split_j(e: &CatalogEntry) -> Result<(&crate::lie::SplitAlgebra, &Matrix), String> {
    match (&e.split, &e.j) {
        (Some(s), Some(j)) => Ok((s, j)),
        _ => Err("entry has no split algebra with j".into()),
    }
}

fn lsa_of(e: &CatalogEntry) -> Result<&Product, String> {
    e.lsa.as_ref().ok_or_else(|| "entry has no LSA".to_string())
}

fn table_diff(expected: &StructureConstants, computed: &StructureConstants) -> Vec<String> {
    let labels = computed.labels();
    let n = labels.len();
    let mut out = Vec::new();
    if expected.labels() != labels {
        out.push(format!("basis {:?} vs {:?}", expected.labels(), labels));
        return out;
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (expected.get(i, j), computed.get(i, j));
            if a != b {
                out.push(format!(
                    "[{},{}]: displayed {}, computed {}",
                    labels[i],
                    labels[j],
                    format_combination(&a, labels),
                    format_combination(&b, labels)
                ));
            }
        }
    }
    out
}

fn product_diff(expected: &Product, computed: &Product) -> Vec<String> {
    let n = expected.dim();
    let labels = expected.labels();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (expected.get(i, j), computed.get(i, j));
            if a != b {
                out.push(format!(
                    "{}.{}: expected {}, computed {}",
                    labels[i],
                    labels[j],
                    format_combination(a, labels),
                    format_combination(b, labels)
                ));
            }
        }
    }
    out
}

fn pairs(ws: impl IntoIterator<Item = (usize, usize)>, labels: &[String]) -> Vec<String> {
    ws.into_iter().map(|(a, b)| format!("({},{})", labels[a], labels[b])).collect()
}

fn complex_of(e: &CatalogEntry) -> Result<(crate::lie::LieAlgebra, SplitEndo), String> {
    if let Some(m) = &e.complex {
        let g = match &e.split {
            Some(s) if m.rows() != e.algebra.dim() => s.g().clone(),
            _ => e.algebra.clone(),
        };
        return Ok((g, SplitEndo::new(m.clone(), Kind::Complex).map_err(err)?));
    }
    let (split, j) = split_j(e)?;
    Ok((split.g().clone(), make_j(split, j).map_err(err)?))
}

fn evaluate(e: &CatalogEntry, check: &Check) -> Outcome {
    match check {
        Check::Integrability { integrable } => {
            let (split, j) = split_j(e)?;
            let r = integrability_report(split, j).map_err(err)?;
            let pass = r.equivalence_holds() && r.integrable() == *integrable;
            let labels = split.g().labels();
            let mut w = pairs(r.nj_witnesses.iter().map(|(p, _)| *p).take(4), labels);
            w.extend(r.k_witness.map(|(a, b)| format!("[j e{}, j e{}] != 0", a + 1, b + 1)));
            w.extend(r.cocycle_witness.map(|(a, b)| format!("cocycle identity fails on (e{}, e{})", a + 1, b + 1)));
            Ok((pass, w))
        }
        Check::ParallelConnection => {
            let (split, j) = split_j(e)?;
            let r = parallel_connection_report(split, j).map_err(err)?;
            let mut pass = r.all_agree();
            let mut w = vec![format!("systems (F,J) (F,E) (E,J) feasible: {:?}", &r.statements()[..3])];
            if r.j_integrable {
                let nabla = canonical_connection(split, j).map_err(err)?;
                let g = split.g();
                let torsion_free = is_torsion_free(g, &nabla);
                let flat = is_flat(g, &nabla);
                let mats = [make_j(split, j).map_err(err)?, make_e(split, j).map_err(err)?, make_f(split)];
                let parallel = mats.iter().all(|s| is_parallel(&nabla, s.matrix()));
                pass &= r.unique_and_canonical && r.block_form && torsion_free && flat && parallel;
                w.push(format!(
                    "unique {} block form {} torsion-free {torsion_free} flat {flat} parallel {parallel}",
                    r.unique_and_canonical, r.block_form
                ));
            }
            Ok((pass, w))
        }
        Check::TangentDerivation => {
            let (split, j) = split_j(e)?;
            let h = split.h();
            let derivation = h.is_derivation(j);
            let nonsingular = !j.determinant().map_err(err)?.is_zero();
            let class = solvability_class(h);
            let pass = derivation && nonsingular && class.is_nilpotent();
            Ok((pass, vec![format!("derivation {derivation}, nonsingular {nonsingular}, h {class}")]))
        }
        Check::NoNonsingularCocycle { bound } => {
            let split = e.split.as_ref().ok_or("entry has no split algebra")?;
            let z = cocycle_space(split.h(), split.pi());
            let found = z.find_nonsingular(*bound);
            let class = solvability_class(split.h());
            let mut w = vec![format!("Z^1 has dimension {}, h {class}", z.dim())];
            if let Some(m) = &found {
                w.push(format!("nonsingular cocycle {:?}", m.to_rows().iter().map(|r| r.iter().map(scalar::format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>()));
            }
            Ok((found.is_none() && !class.is_nilpotent(), w))
        }
        Check::LsaCompatible => {
            let lsa = lsa_of(e)?;
            let labels = lsa.labels();
            let ls = lsa.left_symmetry_witnesses();
            let comp = is_compatible(lsa, &e.algebra).map_err(err)?;
            let mut w: Vec<String> = ls
                .iter()
                .take(4)
                .map(|&(a, b, c)| format!("a({0},{1},{2}) != a({1},{0},{2})", labels[a], labels[b], labels[c]))
                .collect();
            w.extend(comp.mismatches.iter().map(|m| {
                format!(
                    "[{},{}]: product gives {}, bracket is {}",
                    labels[m.pair.0],
                    labels[m.pair.1],
                    format_combination(&m.from_product, labels),
                    format_combination(&m.from_algebra, labels)
                )
            }));
            Ok((ls.is_empty() && comp.compatible(), w))
        }
        Check::LsaFromJ => {
            let (split, j) = split_j(e)?;
            let expected = lsa_of(e)?;
            let computed = lsa_from_totally_real(split, j).map_err(err)?;
            let w = product_diff(expected, computed.product());
            Ok((w.is_empty(), w))
        }
        Check::Correspondence => {
            let (split, j) = split_j(e)?;
            let r = correspondence_report(split, j).map_err(err)?;
            Ok((r.all(), Vec::new()))
        }
        Check::SemidirectFromLsa => {
            let expected = e.brackets.as_ref().ok_or("entry has no bracket table")?;
            let lsa = Lsa::new(lsa_of(e)?.clone()).map_err(err)?;
            let n = lsa.dim();
            let built = semidirect_from_lsa(&lsa, &Matrix::identity(n)).map_err(err)?;
            let mut w = table_diff(expected, built.split.g().constants());
            if !w.is_empty() {
                let violations = expected.jacobi_violations().len();
                if violations > 0 {
                    w.push(format!("displayed table violates the Jacobi identity on {violations} triple(s)"));
                }
            }
            let back = lsa_from_totally_real(&built.split, &Matrix::identity(n)).map_err(err)?;
            if back.product() != lsa.product() {
                w.push("round trip to the LSA changed the product".into());
            }
            Ok((w.is_empty(), w))
        }
        Check::BracketTable => {
            let split = e.split.as_ref().ok_or("entry has no split algebra")?;
            let expected = e.brackets.as_ref().ok_or("entry has no bracket table")?;
            let w = table_diff(expected, split.g().constants());
            Ok((w.is_empty(), w))
        }
        Check::Solvable => {
            let class = solvability_class(&e.algebra);
            Ok((class.is_solvable(), vec![class.to_string()]))
        }
        Check::Closedness => {
            let (split, j) = split_j(e)?;
            let inner = e.inner.as_ref().ok_or("entry has no inner product")?;
            let r = closedness_report(split, j, inner).map_err(err)?;
            Ok((r.all_agree() && r.forms_agree, vec![format!("omega_J closed {}", r.omega_j_closed)]))
        }
        Check::Kahler => {
            let (split, j) = split_j(e)?;
            let inner = e.inner.as_ref().ok_or("entry has no inner product")?;
            let r = kahler_check(split, j, inner).map_err(err)?;
            Ok((r.kahler(), vec![format!("{r:?}")]))
        }
        Check::ComplexStructure => {
            let (g, s) = complex_of(e)?;
            let w = pairs(nijenhuis_witnesses(&g, &s).into_iter().map(|(p, _)| p).take(4), g.labels());
            Ok((w.is_empty(), w))
        }
        Check::AbelianComplex => {
            let (g, s) = complex_of(e)?;
            Ok((classify_special(&g, &s).abelian, Vec::new()))
        }
        Check::TotallyReal { basis, expected } => {
            let (g, s) = complex_of(e)?;
            let n = g.dim();
            let v = Subspace::span(n, &basis.iter().map(|&i| scalar::unit(n, i)).collect::<Vec<_>>());
            let got = is_totally_real(s.matrix(), &v);
            let names: Vec<&str> = basis.iter().map(|&i| g.labels()[i].as_str()).collect();
            Ok((got == *expected, vec![format!("span{{{}}} totally real: {got}", names.join(","))]))
        }
        Check::AbelianSubalgebra { basis } => {
            let g = &e.algebra;
            let bad: Vec<(usize, usize)> = basis
                .iter()
                .flat_map(|&a| basis.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a < b && !scalar::is_zero(&g.bracket_basis(a, b)))
                .collect();
            let w = pairs(bad, g.labels());
            Ok((w.is_empty(), w))
        }
        Check::Symplectic => {
            let omega = e.symplectic.as_ref().ok_or("entry has no symplectic form")?;
            let r = symplectic_report(&e.algebra, omega).map_err(err)?;
            chu_connection(&e.algebra, omega).map_err(err)?;
            let blocks = hermitian_cotangent_from_symplectic(&e.algebra, omega).map_err(err)?.blocks;
            Ok((r.symplectic() && r.flat_is_cocycle && blocks.all(), vec![format!("{blocks:?}")]))
        }
        Check::BasisReference { label, context } => {
            let labels = e.split.as_ref().map(|s| s.g().labels()).unwrap_or(e.algebra.labels());
            let found = labels.iter().any(|l| l == label);
            Ok((found, vec![format!("{context}: {label} is not a basis vector of ({})", labels.join(" "))]))
        }
    }
}

pub fn run_entry(e: &CatalogEntry) -> EntryReport {
    let entry = e.instance_name();
    let mut checks = Vec::new();
    let mut diagnostics = Vec::new();
    for check in &e.checks {
        let (pass, witnesses) = evaluate(e, check).unwrap_or_else(|m| (false, vec![m]));
        if !pass && e.provenance == Provenance::AsPrinted {
            diagnostics.push(Diagnostic { entry: entry.clone(), check: check.name().into(), message: witnesses.join("; ") });
        }
        checks.push(CheckOutcome { name: check.name().into(), reference: check.reference().into(), pass, witnesses });
    }
    EntryReport {
        entry,
        name: e.name.clone(),
        provenance: e.provenance,
        params: e.params.clone(),
        checks,
        diagnostics,
        errata: e.errata.clone(),
    }
}

/// Runs the entries whose name passes `filter`. Overrides bound to a parameter an entry
/// declares replace its default bindings by a single binding.
pub fn verify(filter: impl Fn(&str) -> bool, overrides: &Params) -> Result<CatalogReport, CatalogError> {
    let mut report = CatalogReport::default();
    for info in entries::infos() {
        if !filter(info.name) {
            continue;
        }
        let relevant: Params = overrides
            .iter()
            .filter(|(k, _)| info.params.contains(&k.as_str()) || (info.name.starts_with("a_n") && k.starts_with("alpha")))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let bindings = if relevant.is_empty() { info.defaults.clone() } else { vec![relevant] };
        for b in bindings {
            report.entries.push(run_entry(&build(info.name, &b)?));
        }
    }
    Ok(report)
}

pub fn verify_all() -> CatalogReport {
    verify(|_| true, &Params::new()).expect("default bindings are in range")
}
