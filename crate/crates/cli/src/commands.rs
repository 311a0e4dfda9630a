//! Command implementations. Each fills a [`Report`]; errors become exit code 2.

use std::path::Path;

use semisplit::catalog::{self, Params, Provenance};
use semisplit::connections::{canonical_connection, is_flat, is_parallel, is_torsion_free, parallel_connection_report, Connection};
use semisplit::geometry::{kahler_check, symplectic_report, GeometryError};
use semisplit::lie::{semidirect_product, LieAlgebra, LieError, Representation};
use semisplit::linalg::scalar::{format_combination, format_scalar, parse_scalar};
use semisplit::linalg::{Matrix, Vector};
use semisplit::lsa::{chu_connection, is_compatible, lsa_from_affine, lsa_from_totally_real, semidirect_from_lsa, Lsa, LsaError, Product};
use semisplit::structures::{cocycle_space, integrability_report, is_one_cocycle, make_e, make_f, make_j, IntegrabilityReport};

use crate::args::{BuildCmd, CatalogCmd, CheckCmd, Cli, Command, ConnectionCmd, LsaCmd, ReportCmd, SemidirectCmd, SplitJ};
use crate::error::CliError;
use crate::export::export_entry;
use crate::lang::{self, Decl, Document};
use crate::model::Model;
use crate::report::{CheckRecord, DiagnosticRecord, Format, Report};

mod refs {
    pub const JACOBI: &str = "cyclic sum [[x,y],z] + [[y,z],x] + [[z,x],y] vanishes";
    pub const REPRESENTATION: &str = "pi[x,y] = [pi(x), pi(y)]";
    pub const DERIVATION: &str = "pi(x) is a derivation of k";
    pub const NIJENHUIS_J: &str = "N_J = 0";
    pub const NIJENHUIS_E: &str = "N_E = 0";
    pub const K_ABELIAN: &str = "[jx, jy] = 0 in k";
    pub const COCYCLE: &str = "pi(x)jy - pi(y)jx - j[x,y] = 0";
    pub const INTEGRABILITY: &str = "N_J = 0 iff N_E = 0 iff (k abelian and j a 1-cocycle)";
    pub const AGREE: &str = "the three integrability conditions agree";
    pub const TORSION: &str = "torsion vanishes";
    pub const FLAT: &str = "curvature vanishes";
    pub const PARALLEL_F: &str = "nabla F = 0";
    pub const PARALLEL_J: &str = "nabla J = 0";
    pub const PARALLEL_E: &str = "nabla E = 0";
    pub const SYSTEM: &str = "a torsion-free connection parallelizing both exists iff J is integrable";
    pub const UNIQUE: &str = "the solution is unique and equals the canonical connection";
    pub const BLOCK: &str = "the connection preserves h and k";
    pub const LEFT_SYMMETRIC: &str = "(x.y).z - x.(y.z) is symmetric in x, y";
    pub const COMPATIBLE: &str = "x.y - y.x = [x,y]";
    pub const LSA_ROUNDTRIP: &str = "the LSA induced on h ⋉ V by theta is the original LSA";
    pub const COCYCLE_BASIS: &str = "basis of Z^1(h, pi)";
    pub const NONSINGULAR: &str = "nonsingular 1-cocycle within the coefficient bound";
    pub const SKEW: &str = "j^-1 pi(x) j is skew for the inner product";
    pub const ALMOST_KAHLER: &str = "omega_J is closed";
    pub const KAHLER: &str = "almost Kahler implies Kahler when j^-1 pi j is skew";
    pub const SYMPLECTIC: &str = "omega is closed and nondegenerate";
    pub const CHU: &str = "omega(nabla_x y, z) = -omega(y, [x,z]) defines a flat torsion-free connection";
    pub const MISPRINT: &str = "displayed data disagree with the computation in exactly one check";
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Report {
    let (name, inputs) = describe(&cli.command);
    let mut report = Report::new(&name);
    for (k, v) in inputs {
        report.input(&k, v);
    }
    if let Err(e) = dispatch(&cli.command, &mut report) {
        report.set_error(&e);
    }
    report
}

/// Text printed for the run: raw documents for `fmt`, `catalog export` and `catalog list`.
pub fn render(cli: &Cli, report: &Report) -> String {
    if cli.format == Format::Text && report.error.is_none() {
        if let (Some(raw), Command::Fmt { .. } | Command::Catalog(CatalogCmd::Export { .. } | CatalogCmd::List)) =
            (report.outputs.first(), &cli.command)
        {
            return raw.value.clone();
        }
    }
    report.render(cli.format)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn describe(cmd: &Command) -> (String, Vec<(String, String)>) {
    let sj = |t: &SplitJ| vec![("file".into(), path_str(&t.file)), ("split".into(), t.split.clone()), ("j".into(), t.j.clone())];
    let kv = |pairs: &[(&str, String)]| pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<Vec<_>>();
    match cmd {
        Command::Check(CheckCmd::Jacobi { file, name }) => ("check jacobi".into(), kv(&[("file", path_str(file)), ("name", name.clone())])),
        Command::Check(CheckCmd::Integrable(t)) => ("check integrable".into(), sj(t)),
        Command::Check(CheckCmd::Kahler { target, inner }) => {
            let mut v = sj(target);
            v.push(("inner".into(), inner.clone()));
            ("check kahler".into(), v)
        }
        Command::Build(BuildCmd::Semidirect { file, h, k, rep }) => (
            "build semidirect".into(),
            kv(&[("file", path_str(file)), ("h", h.clone()), ("k", k.clone()), ("rep", rep.clone())]),
        ),
        Command::Connection(ConnectionCmd::Canonical(t)) => ("connection canonical".into(), sj(t)),
        Command::Report(ReportCmd::ParallelConnection(t)) => ("report parallel-connection".into(), sj(t)),
        Command::Lsa(LsaCmd::FromJ(t)) => ("lsa from-j".into(), sj(t)),
        Command::Semidirect(SemidirectCmd::FromLsa { file, lsa, theta }) => {
            let mut v = kv(&[("file", path_str(file)), ("lsa", lsa.clone())]);
            if let Some(t) = theta {
                v.push(("theta".into(), t.clone()));
            }
            ("semidirect from-lsa".into(), v)
        }
        Command::Cocycles { file, h, rep, nonsingular, bound } => {
            let mut v = kv(&[("file", path_str(file)), ("h", h.clone()), ("rep", rep.clone())]);
            if *nonsingular {
                v.push(("nonsingular".into(), "true".into()));
                v.push(("bound".into(), bound.to_string()));
            }
            ("cocycles".into(), v)
        }
        Command::Chu { file, h, form } => ("chu".into(), kv(&[("file", path_str(file)), ("h", h.clone()), ("form", form.clone())])),
        Command::Catalog(CatalogCmd::Verify { filter, params }) => {
            let mut v = Vec::new();
            if let Some(f) = filter {
                v.push(("filter".into(), f.clone()));
            }
            v.extend(params.iter().map(|p| ("param".into(), p.clone())));
            ("catalog verify".into(), v)
        }
        Command::Catalog(CatalogCmd::Export { name, params }) => {
            let mut v = vec![("name".into(), name.clone())];
            v.extend(params.iter().map(|p| ("param".into(), p.clone())));
            ("catalog export".into(), v)
        }
        Command::Catalog(CatalogCmd::List) => ("catalog list".into(), Vec::new()),
        Command::Fmt { file } => ("fmt".into(), kv(&[("file", path_str(file))])),
    }
}

fn dispatch(cmd: &Command, r: &mut Report) -> Result<(), CliError> {
    match cmd {
        Command::Check(CheckCmd::Jacobi { file, name }) => check_jacobi(&load(file)?, name, r),
        Command::Check(CheckCmd::Integrable(t)) => check_integrable(&load(&t.file)?, &t.split, &t.j, r),
        Command::Check(CheckCmd::Kahler { target, inner }) => check_kahler(&load(&target.file)?, &target.split, &target.j, inner, r),
        Command::Build(BuildCmd::Semidirect { file, h, k, rep }) => build_semidirect(&load(file)?, h, k, rep, r),
        Command::Connection(ConnectionCmd::Canonical(t)) => connection_canonical(&load(&t.file)?, &t.split, &t.j, r),
        Command::Report(ReportCmd::ParallelConnection(t)) => report_parallel(&load(&t.file)?, &t.split, &t.j, r),
        Command::Lsa(LsaCmd::FromJ(t)) => lsa_from_j(&load(&t.file)?, &t.split, &t.j, r),
        Command::Semidirect(SemidirectCmd::FromLsa { file, lsa, theta }) => semidirect_lsa(&load(file)?, lsa, theta.as_deref(), r),
        Command::Cocycles { file, h, rep, nonsingular, bound } => cocycles(&load(file)?, h, rep, nonsingular.then_some(*bound), r),
        Command::Chu { file, h, form } => chu(&load(file)?, h, form, r),
        Command::Catalog(CatalogCmd::Verify { filter, params }) => catalog_verify(filter.as_deref(), params, r),
        Command::Catalog(CatalogCmd::Export { name, params }) => {
            let entry = catalog::build(name, &parse_params(params)?)?;
            r.output("document", export_entry(&entry)?.to_string());
            Ok(())
        }
        Command::Catalog(CatalogCmd::List) => {
            let mut s = String::new();
            for info in catalog::entry_infos() {
                s.push_str(&format!("{} {} [{}] {}\n", info.name, info.provenance, info.params.join(","), info.description));
            }
            r.output("entries", s);
            Ok(())
        }
        Command::Fmt { file } => {
            r.output("document", load(file)?.to_string());
            Ok(())
        }
    }
}

pub fn load(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path_str(path), message: e.to_string() })?;
    Ok(lang::parse(&text)?)
}

fn parse_params(raw: &[String]) -> Result<Params, CliError> {
    let mut out = Params::new();
    for p in raw {
        let (k, v) = p.split_once('=').ok_or_else(|| CliError::Usage(format!("--param {p:?}: expected k=v")))?;
        let value = parse_scalar(v).map_err(|_| CliError::Usage(format!("--param {p:?}: {v:?} is not an exact rational")))?;
        out.insert(k.trim().to_string(), value);
    }
    Ok(out)
}

fn v(e: impl std::fmt::Display) -> CliError {
    CliError::validation(None, e.to_string())
}

fn comb(x: &[semisplit::Scalar], labels: &[String]) -> String {
    format_combination(x, labels)
}

fn pair(labels: &[String], (a, b): (usize, usize)) -> String {
    format!("({}, {})", labels[a], labels[b])
}

fn matrix_literal(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn algebra_text(name: &str, g: &LieAlgebra) -> String {
    let mut doc = Document::default();
    doc.push(Decl::Algebra { name: name.into(), basis: g.labels().to_vec() }).expect("fresh document");
    for (i, j, value) in g.nonzero_brackets() {
        doc.push(Decl::Bracket { algebra: name.into(), left: i, right: j, value: value.clone() }).expect("valid bracket");
    }
    doc.to_string()
}

fn lsa_text(name: &str, p: &Product) -> String {
    let mut doc = Document::default();
    doc.push(Decl::Lsa { name: name.into(), basis: p.labels().to_vec() }).expect("fresh document");
    for (i, j, value) in p.nonzero_products() {
        doc.push(Decl::Product { lsa: name.into(), left: i, right: j, value: value.clone() }).expect("valid product");
    }
    doc.to_string()
}

fn connection_text(nabla: &Connection, labels: &[String]) -> String {
    let n = nabla.dim();
    let mut s = String::new();
    for i in 0..n {
        for j in 0..n {
            let v = nabla.get(i, j);
            if v.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                s.push_str(&format!("nabla_{} {} = {}\n", labels[i], labels[j], comb(v, labels)));
            }
        }
    }
    if s.is_empty() {
        s.push_str("0\n");
    }
    s
}

fn check_jacobi(doc: &Document, name: &str, r: &mut Report) -> Result<(), CliError> {
    let raw = Model::new(doc).constants(name)?;
    let labels = raw.labels().to_vec();
    let witnesses = raw
        .jacobi_violations()
        .iter()
        .map(|w| {
            let (i, j, k) = w.triple;
            format!("({}, {}, {}): {}", labels[i], labels[j], labels[k], comb(&w.cyclic_sum, &labels))
        })
        .collect::<Vec<_>>();
    r.check("jacobi", refs::JACOBI, witnesses.is_empty(), witnesses);
    Ok(())
}

fn build_semidirect(doc: &Document, h: &str, k: &str, rep: &str, r: &mut Report) -> Result<(), CliError> {
    let m = Model::new(doc);
    let (ha, ka) = (m.algebra(h)?, m.algebra(k)?);
    let (alg, target, matrices) = m.rep_matrices(rep)?;
    if alg != h || target != k {
        return Err(CliError::validation(m.line(rep), format!("{rep} is a representation of {alg} on {target}, not of {h} on {k}")));
    }
    let pi = match Representation::new(&ha, matrices) {
        Ok(pi) => pi,
        Err(LieError::NotRepresentation { pair: p }) => {
            r.check("representation", refs::REPRESENTATION, false, vec![pair(ha.labels(), p)]);
            return Ok(());
        }
        Err(e) => return Err(v(e)),
    };
    r.check("representation", refs::REPRESENTATION, true, vec![]);
    if let Some((g, p)) = pi.derivation_defect(&ka) {
        r.check("derivation", refs::DERIVATION, false, vec![format!("pi({}) on {}", ha.labels()[g], pair(ka.labels(), p))]);
        return Ok(());
    }
    r.check("derivation", refs::DERIVATION, true, vec![]);
    let split = semidirect_product(&ha, &ka, &pi).map_err(v)?;
    r.check("jacobi", refs::JACOBI, true, vec![]);
    r.output("algebra", algebra_text("g", split.g()));
    Ok(())
}

fn split_and_j(doc: &Document, split: &str, j: &str) -> Result<(semisplit::lie::SplitAlgebra, Matrix), CliError> {
    let m = Model::new(doc);
    let s = m.split(split)?;
    let jm = m.matrix(j)?;
    if jm.rows() != s.k_dim() || jm.cols() != s.h_dim() {
        return Err(CliError::validation(m.line(j), format!("{j} must be {}x{} for {split}", s.k_dim(), s.h_dim())));
    }
    Ok((s, jm))
}

fn integrability_checks(s: &semisplit::lie::SplitAlgebra, j: &Matrix, rep: &IntegrabilityReport, r: &mut Report) {
    let g = s.g().labels();
    let (h, k) = (s.h().labels(), s.k().labels());
    let nij = |w: &[((usize, usize), Vector)], sym: &str| {
        w.iter().map(|((a, b), v)| format!("{sym}({}, {}) = {}", g[*a], g[*b], comb(v, g))).collect::<Vec<_>>()
    };
    r.check("nijenhuis_j", refs::NIJENHUIS_J, rep.j_integrable, nij(&rep.nj_witnesses, "N_J"));
    r.check("nijenhuis_e", refs::NIJENHUIS_E, rep.e_integrable, nij(&rep.ne_witnesses, "N_E"));
    let kw = rep
        .k_witness
        .map(|(a, b)| {
            let value = s.k().br(&j.column(a), &j.column(b));
            vec![format!("[j {}, j {}] = {}", h[a], h[b], comb(&value, k))]
        })
        .unwrap_or_default();
    r.check("k_abelian", refs::K_ABELIAN, rep.k_abelian, kw);
    let cw = rep.cocycle_witness.map(|p| vec![pair(h, p)]).unwrap_or_default();
    r.check("j_cocycle", refs::COCYCLE, rep.j_cocycle, cw);
    r.check("conditions_agree", refs::AGREE, rep.equivalence_holds(), vec![]);
}

fn check_integrable(doc: &Document, split: &str, j: &str, r: &mut Report) -> Result<(), CliError> {
    let (s, jm) = split_and_j(doc, split, j)?;
    let rep = integrability_report(&s, &jm).map_err(v)?;
    integrability_checks(&s, &jm, &rep, r);
    Ok(())
}

fn connection_canonical(doc: &Document, split: &str, j: &str, r: &mut Report) -> Result<(), CliError> {
    let (s, jm) = split_and_j(doc, split, j)?;
    let rep = integrability_report(&s, &jm).map_err(v)?;
    if !rep.integrable() {
        let mut witnesses = Vec::new();
        if let Some(p) = rep.k_witness {
            witnesses.push(format!("k not abelian on j{}", pair(s.h().labels(), p)));
        }
        if let Some(p) = rep.cocycle_witness {
            witnesses.push(format!("cocycle identity fails on {}", pair(s.h().labels(), p)));
        }
        r.check("integrability", refs::INTEGRABILITY, false, witnesses);
        return Ok(());
    }
    let nabla = canonical_connection(&s, &jm).map_err(v)?;
    let g = s.g();
    r.check("integrability", refs::INTEGRABILITY, true, vec![]);
    r.check("torsion_free", refs::TORSION, is_torsion_free(g, &nabla), vec![]);
    r.check("flat", refs::FLAT, is_flat(g, &nabla), vec![]);
    r.check("parallel_f", refs::PARALLEL_F, is_parallel(&nabla, make_f(&s).matrix()), vec![]);
    r.check("parallel_j", refs::PARALLEL_J, is_parallel(&nabla, make_j(&s, &jm).map_err(v)?.matrix()), vec![]);
    r.check("parallel_e", refs::PARALLEL_E, is_parallel(&nabla, make_e(&s, &jm).map_err(v)?.matrix()), vec![]);
    r.output("connection", connection_text(&nabla, g.labels()));
    Ok(())
}

fn report_parallel(doc: &Document, split: &str, j: &str, r: &mut Report) -> Result<(), CliError> {
    let (s, jm) = split_and_j(doc, split, j)?;
    let rep = parallel_connection_report(&s, &jm).map_err(v)?;
    for sys in &rep.systems {
        let (a, b) = sys.structures;
        let witness = format!(
            "{} (rank {} of {} unknowns)",
            if sys.exists() { "solvable" } else { "inconsistent" },
            sys.solution.rank,
            sys.solution.unknowns
        );
        r.check(&format!("system_{a}_{b}").to_lowercase(), refs::SYSTEM, sys.exists() == rep.j_integrable, vec![witness]);
    }
    r.check("conditions_agree", refs::AGREE, rep.all_agree(), vec![]);
    r.check("unique_and_canonical", refs::UNIQUE, rep.unique_and_canonical, vec![]);
    r.check("block_form", refs::BLOCK, rep.block_form, vec![]);
    r.output("integrable", rep.j_integrable.to_string());
    Ok(())
}

fn lsa_from_j(doc: &Document, split: &str, j: &str, r: &mut Report) -> Result<(), CliError> {
    let (s, jm) = split_and_j(doc, split, j)?;
    let rep = integrability_report(&s, &jm).map_err(v)?;
    if !rep.integrable() {
        integrability_checks(&s, &jm, &rep, r);
        return Ok(());
    }
    let a = lsa_from_totally_real(&s, &jm).map_err(v)?;
    r.check("left_symmetric", refs::LEFT_SYMMETRIC, a.is_left_symmetric(), vec![]);
    r.check("compatible", refs::COMPATIBLE, is_compatible(&a, s.h()).map_err(v)?.compatible(), vec![]);
    r.output("lsa", lsa_text("A", &a));
    Ok(())
}

fn semidirect_lsa(doc: &Document, lsa: &str, theta: Option<&str>, r: &mut Report) -> Result<(), CliError> {
    let m = Model::new(doc);
    let p = m.product(lsa)?;
    let labels = p.labels().to_vec();
    let witnesses: Vec<String> = p
        .left_symmetry_witnesses()
        .iter()
        .map(|&(a, b, c)| format!("a({x}, {y}, {z}) != a({y}, {x}, {z})", x = labels[a], y = labels[b], z = labels[c]))
        .collect();
    r.check("left_symmetric", refs::LEFT_SYMMETRIC, witnesses.is_empty(), witnesses);
    let Ok(a) = Lsa::new(p.clone()) else {
        return Ok(());
    };
    let t = match theta {
        Some(name) => m.matrix(name)?,
        None => Matrix::identity(a.dim()),
    };
    let built = match semidirect_from_lsa(&a, &t) {
        Ok(b) => b,
        Err(LsaError::SingularTheta | LsaError::DimensionMismatch { .. }) => {
            return Err(CliError::validation(theta.and_then(|n| m.line(n)), "theta must be a nonsingular square map on the LSA"));
        }
        Err(e) => return Err(v(e)),
    };
    let rep = integrability_report(&built.split, &t).map_err(v)?;
    r.check("integrability", refs::INTEGRABILITY, rep.integrable(), vec![]);
    let back = lsa_from_totally_real(&built.split, &t).map_err(v)?;
    r.check("lsa_roundtrip", refs::LSA_ROUNDTRIP, back.product().relabeled(labels) == p, vec![]);
    r.output("algebra", algebra_text("g", built.split.g()));
    Ok(())
}

fn cocycles(doc: &Document, h: &str, rep: &str, search: Option<u32>, r: &mut Report) -> Result<(), CliError> {
    let m = Model::new(doc);
    let (alg, _, _) = m.rep_matrices(rep)?;
    if alg != h {
        return Err(CliError::validation(m.line(rep), format!("{rep} is a representation of {alg}, not {h}")));
    }
    let (ha, pi) = m.representation(rep)?;
    let z = cocycle_space(&ha, &pi);
    let all = z.basis.iter().all(|b| is_one_cocycle(&ha, &pi, b));
    r.check("cocycle_basis", refs::COCYCLE_BASIS, all, vec![]);
    let basis: Vec<String> = z.basis.iter().map(matrix_literal).collect();
    r.output("dimension", z.dim().to_string());
    r.output("basis", basis.join("\n"));
    if let Some(bound) = search {
        match z.find_nonsingular(bound) {
            Some(theta) => {
                r.check("nonsingular_cocycle", refs::NONSINGULAR, true, vec![]);
                let is_der = pi.matrices() == semisplit::lie::Representation::adjoint(&ha).matrices() && ha.is_derivation(&theta);
                if is_der {
                    r.output("derivation", matrix_literal(&theta));
                } else {
                    r.output("nonsingular", matrix_literal(&theta));
                }
            }
            None => {
                r.check("nonsingular_cocycle", refs::NONSINGULAR, false, vec![format!("none with coefficients in [-{bound}, {bound}]")]);
            }
        }
    }
    Ok(())
}

fn check_kahler(doc: &Document, split: &str, j: &str, inner: &str, r: &mut Report) -> Result<(), CliError> {
    let (s, jm) = split_and_j(doc, split, j)?;
    let form = Model::new(doc).form(inner)?;
    match kahler_check(&s, &jm, &form) {
        Ok(k) => {
            r.check("skew_precondition", refs::SKEW, true, vec![]);
            r.check("almost_kahler", refs::ALMOST_KAHLER, k.almost_kahler, vec![]);
            r.check("kahler", refs::KAHLER, k.kahler() && k.implication_holds(), vec![]);
        }
        Err(GeometryError::PreconditionFailed(msg)) => {
            r.check("skew_precondition", refs::SKEW, false, vec![msg]);
        }
        Err(e) => return Err(v(e)),
    }
    Ok(())
}

fn chu(doc: &Document, h: &str, form: &str, r: &mut Report) -> Result<(), CliError> {
    let m = Model::new(doc);
    let ha = m.lie(h)?;
    let omega = m.form(form)?;
    let sym = symplectic_report(&ha, &omega).map_err(v)?;
    let labels = ha.labels();
    let witnesses: Vec<String> = semisplit::geometry::closedness_witnesses(&ha, &omega)
        .iter()
        .map(|((a, b, c), val)| format!("d omega({}, {}, {}) = {}", labels[*a], labels[*b], labels[*c], format_scalar(val)))
        .chain((!sym.nondegenerate).then(|| "degenerate".to_string()))
        .collect();
    r.check("symplectic", refs::SYMPLECTIC, sym.symplectic(), witnesses);
    if !sym.symplectic() {
        return Ok(());
    }
    let nabla = chu_connection(&ha, &omega).map_err(v)?;
    r.check("affine", refs::CHU, is_torsion_free(&ha, &nabla) && is_flat(&ha, &nabla), vec![]);
    let a = lsa_from_affine(&nabla, &ha).map_err(v)?;
    r.check("compatible", refs::COMPATIBLE, is_compatible(&a, &ha).map_err(v)?.compatible(), vec![]);
    r.output("connection", connection_text(&nabla, labels));
    r.output("lsa", lsa_text("A", &a));
    Ok(())
}

fn catalog_verify(filter: Option<&str>, params: &[String], r: &mut Report) -> Result<(), CliError> {
    let pattern = filter
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| CliError::Usage(format!("--filter: {e}")))?;
    let overrides = parse_params(params)?;
    let report = catalog::verify(|n| pattern.as_ref().is_none_or(|p| p.matches(n)), &overrides)?;
    if report.entries.is_empty() {
        return Err(CliError::Usage(format!("no catalog entry matches {:?}", filter.unwrap_or("*"))));
    }
    for e in &report.entries {
        for c in &e.checks {
            if e.provenance == Provenance::AsPrinted && !c.pass {
                continue;
            }
            r.checks.push(CheckRecord {
                entry: Some(e.entry.clone()),
                name: c.name.clone(),
                paper_ref: c.reference.clone(),
                pass: c.pass,
                witnesses: c.witnesses.clone(),
            });
        }
        if e.provenance == Provenance::AsPrinted {
            r.checks.push(CheckRecord {
                entry: Some(e.entry.clone()),
                name: "misprint_diagnostic".into(),
                paper_ref: refs::MISPRINT.into(),
                pass: e.diagnostics.len() == 1,
                witnesses: vec![],
            });
        }
        for d in &e.diagnostics {
            r.diagnostics.push(DiagnosticRecord { entry: Some(d.entry.clone()), check: d.check.clone(), message: d.message.clone() });
        }
        if !e.errata.is_empty() {
            r.output(&format!("errata {}", e.entry), e.errata.join("\n"));
        }
    }
    Ok(())
}
