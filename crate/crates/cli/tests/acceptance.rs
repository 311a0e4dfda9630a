//! Acceptance suite: one line per criterion, exit status 1 when any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semisplit::catalog::{self, CatalogEntry, Provenance};
use semisplit::connections::{canonical_connection, is_flat, is_parallel, is_torsion_free, parallel_connection_report};
use semisplit::geometry::{closedness_report, kahler_check, BilinearForm};
use semisplit::lie::{
    cotangent_algebra, labels, semidirect_product, solvability_class, tangent_algebra, LieAlgebra, Representation, SplitAlgebra,
    StructureConstants,
};
use semisplit::linalg::{frac, int, Matrix, Scalar, Vector};
use semisplit::lsa::{
    alpha_homomorphism_check, is_compatible, left_mult_checks, lsa_from_totally_real, semidirect_from_lsa, Lsa, Product,
};
use semisplit::structures::{cocycle_space, integrability_report, is_one_cocycle, make_e, make_f, make_j, nijenhuis_witnesses};
use semisplit_cli::export::export_entry;
use semisplit_cli::lang::{parse, serialize};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vecn(n: usize, terms: &[(usize, Scalar)]) -> Vector {
    let mut v = vec![int(0); n];
    for (i, c) in terms {
        v[*i] = c.clone();
    }
    v
}

fn alg(names: Vec<String>, brackets: &[((usize, usize), Vector)]) -> LieAlgebra {
    LieAlgebra::new(names, brackets.iter().cloned()).expect("Lie algebra")
}

fn e3(brackets: &[((usize, usize), &[(usize, i64)])]) -> LieAlgebra {
    let b: Vec<_> = brackets
        .iter()
        .map(|(p, terms)| (*p, vecn(3, &terms.iter().map(|(i, c)| (*i, int(*c))).collect::<Vec<_>>())))
        .collect();
    alg(labels("e", 3), &b)
}

fn h1() -> LieAlgebra {
    e3(&[((0, 1), &[(2, 1)])])
}

fn r3(lambda: Scalar) -> LieAlgebra {
    alg(labels("e", 3), &[((0, 1), vecn(3, &[(1, int(1))])), ((0, 2), vecn(3, &[(2, lambda)]))])
}

fn r3_0() -> LieAlgebra {
    e3(&[((0, 1), &[(1, 1)])])
}

fn rprime3_0() -> LieAlgebra {
    e3(&[((0, 1), &[(2, -1)]), ((0, 2), &[(1, 1)])])
}

fn product(n: usize, entries: &[((usize, usize), Vector)]) -> Product {
    Product::from_entries(labels("e", n), entries.iter().cloned())
}

fn table(n: usize, entries: &[((usize, usize), Vector)]) -> StructureConstants {
    let names: Vec<String> = labels("e", n).into_iter().chain(labels("v", n)).collect();
    entries.iter().fold(StructureConstants::new(names), |t, ((i, j), v)| t.with(*i, *j, v.clone()))
}

fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(rows)
}

// ---------------------------------------------------------------------------
// random instances

fn base_algebras() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("R", LieAlgebra::abelian(labels("e", 1))),
        ("R^2", LieAlgebra::abelian(labels("e", 2))),
        ("aff", alg(labels("e", 2), &[((0, 1), vecn(2, &[(1, int(1))]))])),
        ("R^3", LieAlgebra::abelian(labels("e", 3))),
        ("h1", h1()),
        ("r3,-1", r3(int(-1))),
        ("r3,1/2", r3(frac(1, 2))),
        ("r3,0", r3_0()),
        ("r'3,0", rprime3_0()),
        ("sl2", e3(&[((0, 1), &[(1, 2)]), ((0, 2), &[(2, -2)]), ((1, 2), &[(0, 1)])])),
        ("so3", e3(&[((0, 1), &[(2, 1)]), ((1, 2), &[(0, 1)]), ((0, 2), &[(1, -1)])])),
    ]
}

struct Instance {
    label: String,
    split: SplitAlgebra,
    j: Matrix,
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let r: Vec<Vec<Scalar>> = (0..rows).map(|_| (0..cols).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
    Matrix::from_rows(r).expect("rectangular")
}

fn nonsingular(m: &Matrix) -> bool {
    m.determinant().map(|d| d != int(0)).unwrap_or(false)
}

/// `R^3` acting on `h1` by multiples of one derivation, so `k` is not abelian.
fn nonabelian_k(rng: &mut ChaCha8Rng) -> SplitAlgebra {
    let h = LieAlgebra::abelian(labels("e", 3));
    let k = h1().relabeled(labels("v", 3));
    let mut r = || int(rng.gen_range(-2..=2));
    let (a, b, c, d, e, f) = (r(), r(), r(), r(), r(), r());
    let der = Matrix::from_rows(vec![
        vec![a.clone(), b, int(0)],
        vec![c, d.clone(), int(0)],
        vec![e, f, a + d],
    ])
    .expect("3x3");
    let scales: Vec<Scalar> = (0..3).map(|_| int(rng.gen_range(-2..=2))).collect();
    let pi = Representation::new(&h, scales.iter().map(|s| der.scale(s)).collect()).expect("commuting derivations");
    semidirect_product(&h, &k, &pi).expect("acts by derivations")
}

fn random_instances(count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = base_algebras();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let kind = rng.gen_range(0..5);
        let (label, split) = if kind == 4 {
            ("R^3 on h1".to_string(), nonabelian_k(&mut rng))
        } else {
            let (name, h) = &bases[rng.gen_range(0..bases.len())];
            if kind % 2 == 0 {
                (format!("T {name}"), tangent_algebra(h))
            } else {
                (format!("T* {name}"), cotangent_algebra(h))
            }
        };
        let n = split.h_dim();
        let mut j = None;
        // half of the draws come from the cocycle space so that integrable instances are common
        if rng.gen_bool(0.5) {
            let z = cocycle_space(split.h(), split.pi());
            for _ in 0..20 {
                if z.dim() == 0 {
                    break;
                }
                let coeffs: Vec<Scalar> = (0..z.dim()).map(|_| int(rng.gen_range(-2..=2))).collect();
                let m = z.combination(&coeffs);
                if nonsingular(&m) {
                    j = Some(m);
                    break;
                }
            }
        }
        let j = match j {
            Some(m) => m,
            None => loop {
                let m = random_matrix(&mut rng, n, n);
                if nonsingular(&m) {
                    break m;
                }
            },
        };
        out.push(Instance { label, split, j });
    }
    out
}

fn catalog_instances() -> Vec<Instance> {
    catalog_entries()
        .into_iter()
        .filter_map(|e| match (e.split.clone(), e.j.clone()) {
            (Some(split), Some(j)) => Some(Instance { label: e.instance_name(), split, j }),
            _ => None,
        })
        .collect()
}

fn catalog_entries() -> Vec<CatalogEntry> {
    catalog::all_entries().expect("catalog builds")
}

fn all_instances() -> Vec<Instance> {
    let mut v = catalog_instances();
    v.extend(random_instances(200, 0x5eed));
    v
}

// ---------------------------------------------------------------------------
// criteria

fn integrability_equivalence() -> Outcome {
    let cat = catalog_instances().len();
    let mut integrable = 0;
    for inst in all_instances() {
        let (g, h) = (inst.split.g(), inst.split.h());
        let nj = nijenhuis_witnesses(g, &make_j(&inst.split, &inst.j).map_err(|e| e.to_string())?).is_empty();
        let ne = nijenhuis_witnesses(g, &make_e(&inst.split, &inst.j).map_err(|e| e.to_string())?).is_empty();
        let blocks = inst.split.k().is_abelian() && is_one_cocycle(h, inst.split.pi(), &inst.j);
        ensure(nj == ne && ne == blocks, || format!("{}: N_J=0 {nj}, N_E=0 {ne}, blocks {blocks}", inst.label))?;
        let report = integrability_report(&inst.split, &inst.j).map_err(|e| e.to_string())?;
        ensure(report.equivalence_holds() && report.integrable() == nj, || format!("{}: report disagrees", inst.label))?;
        integrable += nj as usize;
    }
    Ok(format!("{cat} catalog + 200 random instances, {integrable} integrable"))
}

fn canonical_connection_system() -> Outcome {
    let (mut yes, mut no) = (0, 0);
    for inst in all_instances() {
        let integrable = integrability_report(&inst.split, &inst.j).map_err(|e| e.to_string())?.integrable();
        let report = parallel_connection_report(&inst.split, &inst.j).map_err(|e| e.to_string())?;
        let fj = &report.systems[0];
        ensure(fj.structures == ("F", "J"), || "first system is not (F, J)".into())?;
        if integrable {
            let g = inst.split.g();
            let nabla = canonical_connection(&inst.split, &inst.j).map_err(|e| e.to_string())?;
            let j = make_j(&inst.split, &inst.j).map_err(|e| e.to_string())?;
            let e = make_e(&inst.split, &inst.j).map_err(|e| e.to_string())?;
            ensure(is_torsion_free(g, &nabla) && is_flat(g, &nabla), || format!("{}: torsion or curvature", inst.label))?;
            ensure(
                is_parallel(&nabla, make_f(&inst.split).matrix()) && is_parallel(&nabla, j.matrix()) && is_parallel(&nabla, e.matrix()),
                || format!("{}: not parallel", inst.label),
            )?;
            let s = &fj.solution;
            ensure(s.consistent && s.rank == s.unknowns, || format!("{}: rank {} of {}", inst.label, s.rank, s.unknowns))?;
            ensure(s.particular.as_ref() == Some(&nabla.coefficients()), || format!("{}: solution differs", inst.label))?;
            yes += 1;
        } else {
            ensure(report.systems.iter().all(|s| !s.exists()), || format!("{}: feasible without integrability", inst.label))?;
            no += 1;
        }
    }
    Ok(format!("{yes} integrable with unique canonical solution, {no} infeasible"))
}

fn tangent_heisenberg_lsa() -> Outcome {
    let half = frac(1, 2);
    for s in [0i64, 1] {
        let split = tangent_algebra(&h1());
        let j = mat(&[&[1, -s, 0], &[0, 1, 0], &[0, 0, 2]]);
        let got = lsa_from_totally_real(&split, &j).map_err(|e| e.to_string())?;
        let mut expected = vec![((0, 1), vecn(3, &[(2, half.clone())])), ((1, 0), vecn(3, &[(2, -half.clone())]))];
        if s != 0 {
            expected.push(((1, 1), vecn(3, &[(2, int(s) * &half)])));
        }
        ensure(got.product().relabeled(labels("e", 3)) == product(3, &expected), || format!("T h1, s = {s}: {}", got.product()))?;
    }
    for n in 1..=3 {
        let dim = 2 * n + 1;
        let names: Vec<String> = labels("x", n).into_iter().chain(labels("y", n)).chain(["z".to_string()]).collect();
        let h = alg(names.clone(), &(0..n).map(|i| ((i, n + i), vecn(dim, &[(2 * n, int(1))]))).collect::<Vec<_>>());
        let mut d = vec![int(1); dim];
        d[2 * n] = int(2);
        let got = lsa_from_totally_real(&tangent_algebra(&h), &Matrix::diagonal(&d)).map_err(|e| e.to_string())?;
        let p = got.product();
        for i in 0..n {
            for k in 0..n {
                let want = if i == k { vecn(dim, &[(2 * n, half.clone())]) } else { vecn(dim, &[]) };
                ensure(*p.get(i, n + k) == want, || format!("h_{n}: x{}.y{} = {}", i + 1, k + 1, p.format_vector(p.get(i, n + k))))?;
            }
        }
        let forced: Vec<_> = (0..n)
            .flat_map(|i| [((i, n + i), vecn(dim, &[(2 * n, half.clone())])), ((n + i, i), vecn(dim, &[(2 * n, -half.clone())]))])
            .collect();
        ensure(p.relabeled(names.clone()) == Product::from_entries(names, forced), || format!("h_{n}: extra products in {p}"))?;
    }
    Ok("T h1 for s = 0, 1 and T h_n for n = 1, 2, 3".into())
}

/// The displayed general table for `T* r_{3,-1}`.
fn printed_r3_minus1(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Product {
    let ad = a * d;
    let w = vec![d.clone(), -c, b.clone()];
    let sc = |k: Scalar, v: &Vector| v.iter().map(|x| &k * x).collect::<Vector>();
    product(
        3,
        &[
            ((0, 0), vec![int(0), int(0), b / d]),
            ((0, 1), sc(int(1) / &ad, &vec![-(b * d), &ad + b * c, -(b * b)])),
            ((0, 2), sc(int(1) / &ad, &vec![c * d, -(c * c), -(&ad - b * c)])),
            ((1, 0), sc(-(b / &ad), &w)),
            ((1, 2), sc(int(1) / a, &w)),
            ((2, 0), sc(c / &ad, &w)),
            ((2, 1), sc(int(1) / a, &w)),
        ],
    )
}

fn cotangent_tables() -> Outcome {
    let computed = |h: &LieAlgebra, j: &Matrix| -> Result<Product, String> {
        let a = lsa_from_totally_real(&cotangent_algebra(h), j).map_err(|e| e.to_string())?;
        Ok(a.product().relabeled(labels("e", 3)))
    };
    let bindings = [(1, 0, 0, 1), (2, 1, 0, 1), (1, 2, 0, 3), (-1, 3, 0, 2)];
    for (a, b, c, d) in bindings {
        let (a, b, c, d) = (int(a), int(b), int(c), int(d));
        let j = Matrix::from_rows(vec![vec![a.clone(), b.clone(), c.clone()], vec![-&b, int(0), d.clone()], vec![-&c, -&d, int(0)]])
            .expect("3x3");
        let got = computed(&r3(int(-1)), &j)?;
        let printed = printed_r3_minus1(&a, &b, &c, &d);
        ensure(got == printed, || format!("T* r3,-1 at ({a},{b},{c},{d}): computed {got}, printed {printed}"))?;
        ensure(catalog::r3_minus1_lsa_printed(&a, &b, &c, &d) == printed, || "catalog printed table differs".into())?;
    }
    let v3 = |t: &[(usize, i64)]| vecn(3, &t.iter().map(|(i, c)| (*i, int(*c))).collect::<Vec<_>>());
    let h1_got = computed(&h1(), &mat(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]]))?;
    ensure(h1_got == product(3, &[((0, 1), v3(&[(2, 1)])), ((1, 1), v3(&[(0, 1)]))]), || format!("T* h1: {h1_got}"))?;
    let r30 = computed(&r3_0(), &mat(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]))?;
    ensure(r30 == product(3, &[((0, 0), v3(&[(0, -1)])), ((1, 0), v3(&[(1, -1)]))]), || format!("T* r3,0: {r30}"))?;
    for eps in [1i64, -1] {
        let got = computed(&rprime3_0(), &mat(&[&[eps, 0, 0], &[0, 0, -1], &[0, 1, 0]]))?;
        let want = product(
            3,
            &[((0, 1), v3(&[(2, -1)])), ((0, 2), v3(&[(1, 1)])), ((1, 1), v3(&[(0, -eps)])), ((2, 2), v3(&[(0, -eps)]))],
        );
        ensure(got == want, || format!("T* r'3,0, eps = {eps}: {got}"))?;
    }
    Ok(format!("T* r3,-1 at {} bindings; T* h1, T* r3,0, T* r'3,0 (eps = +-1)", bindings.len()))
}

fn semidirect_tables() -> Outcome {
    let check = |name: &str, lsa: Product, expected: StructureConstants| -> Result<(), String> {
        let n = lsa.dim();
        let a = Lsa::new(lsa.clone()).map_err(|e| format!("{name}: {e}"))?;
        let built = semidirect_from_lsa(&a, &Matrix::identity(n)).map_err(|e| format!("{name}: {e}"))?;
        let names: Vec<String> = labels("e", n).into_iter().chain(labels("v", n)).collect();
        let got = built.split.g().relabeled(names);
        ensure(*got.constants() == expected, || format!("{name}: computed table differs"))?;
        let back = lsa_from_totally_real(&built.split, &Matrix::identity(n)).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.product().relabeled(labels("e", n)) == lsa, || format!("{name}: round trip"))
    };
    for lambda in [frac(1, 2), frac(1, 3), frac(-1, 2)] {
        let l = lambda.clone();
        let lsa = product(
            3,
            &[
                ((0, 0), vecn(3, &[(0, &l + int(1))])),
                ((0, 1), vecn(3, &[(1, int(1))])),
                ((0, 2), vecn(3, &[(2, l.clone())])),
                ((1, 2), vecn(3, &[(0, int(1))])),
                ((2, 1), vecn(3, &[(0, int(1))])),
            ],
        );
        let t = table(
            3,
            &[
                ((0, 1), vecn(6, &[(1, int(1))])),
                ((0, 2), vecn(6, &[(2, l.clone())])),
                ((0, 3), vecn(6, &[(3, &l + int(1))])),
                ((0, 4), vecn(6, &[(4, int(1))])),
                ((0, 5), vecn(6, &[(5, l.clone())])),
                ((1, 5), vecn(6, &[(3, int(1))])),
                ((2, 4), vecn(6, &[(3, int(1))])),
            ],
        );
        check(&format!("r3,{lambda}"), lsa, t)?;
    }
    let half_lsa = product(
        3,
        &[
            ((0, 0), vecn(3, &[(0, frac(3, 2))])),
            ((0, 1), vecn(3, &[(1, int(1))])),
            ((0, 2), vecn(3, &[(2, frac(1, 2))])),
            ((1, 2), vecn(3, &[(0, int(1))])),
            ((2, 1), vecn(3, &[(0, int(1))])),
            ((2, 2), vecn(3, &[(1, int(-1))])),
        ],
    );
    // the displayed [e2,v3] = v3 is read as v1
    let half_table = table(
        3,
        &[
            ((0, 1), vecn(6, &[(1, int(1))])),
            ((0, 2), vecn(6, &[(2, frac(1, 2))])),
            ((0, 3), vecn(6, &[(3, frac(3, 2))])),
            ((0, 4), vecn(6, &[(4, int(1))])),
            ((0, 5), vecn(6, &[(5, frac(1, 2))])),
            ((1, 5), vecn(6, &[(3, int(1))])),
            ((2, 4), vecn(6, &[(3, int(1))])),
            ((2, 5), vecn(6, &[(4, int(-1))])),
        ],
    );
    check("r3,1/2 second LSA", half_lsa, half_table)?;
    for n in 2..=4 {
        let m = 2 * n;
        let mut lsa = vec![((0, 0), vecn(n, &[(0, int(2))]))];
        // the displayed table lists [e1,v1] = 2 v1 and [ek,vk] = v1; [e1,vk] = vk is also forced
        let mut t = vec![((0, n), vecn(m, &[(n, int(2))]))];
        for k in 1..n {
            lsa.push(((0, k), vecn(n, &[(k, int(1))])));
            lsa.push(((k, k), vecn(n, &[(0, int(1))])));
            t.push(((0, k), vecn(m, &[(k, int(1))])));
            t.push(((0, n + k), vecn(m, &[(n + k, int(1))])));
            t.push(((k, n + k), vecn(m, &[(n, int(1))])));
        }
        check(&format!("I_{n}"), product(n, &lsa), table(n, &t))?;
    }
    Ok("r3,lambda (lambda = 1/2, 1/3, -1/2), r3,1/2 second LSA, I_n (n = 2, 3, 4), with round trips".into())
}

fn misprint_diagnostics() -> Outcome {
    let report = catalog::verify_all();
    let diags: Vec<_> = report.diagnostics().collect();
    ensure(diags.len() == 3, || format!("{} diagnostics", diags.len()))?;
    let mut printed = BTreeSet::new();
    for e in &report.entries {
        match e.provenance {
            Provenance::AsPrinted => {
                ensure(e.diagnostics.len() == 1, || format!("{}: {} diagnostics", e.entry, e.diagnostics.len()))?;
                printed.insert(e.name.clone());
            }
            Provenance::Corrected => {
                let failed: Vec<_> = e.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
                ensure(failed.is_empty() && e.diagnostics.is_empty(), || format!("{}: failed {failed:?}", e.entry))?;
            }
        }
    }
    let expected: BTreeSet<String> = ["a_n_printed", "r3_half_printed", "r3_0_cotangent_printed"].map(String::from).into();
    ensure(printed == expected, || format!("as_printed entries {printed:?}"))?;
    let checks: Vec<String> = diags.iter().map(|d| format!("{}: {}", d.entry, d.check)).collect();
    Ok(format!("{} corrected entries pass; {}", report.entries.len() - 3, checks.join(", ")))
}

fn tangent_derivations() -> Outcome {
    let mut count = 0;
    for inst in all_instances() {
        // T h is h acting on an abelian copy of itself by ad
        let tangent = inst.split.k().is_abelian() && inst.split.pi().matrices() == Representation::adjoint(inst.split.h()).matrices();
        if !tangent || !integrability_report(&inst.split, &inst.j).map_err(|e| e.to_string())?.integrable() {
            continue;
        }
        let h = inst.split.h();
        ensure(h.is_derivation(&inst.j), || format!("{}: j is not a derivation", inst.label))?;
        ensure(nonsingular(&inst.j), || format!("{}: det j = 0", inst.label))?;
        ensure(solvability_class(h).is_nilpotent(), || format!("{}: not nilpotent", inst.label))?;
        count += 1;
    }
    let r = r3(int(-1));
    let z = cocycle_space(&r, &Representation::adjoint(&r));
    ensure(z.find_nonsingular(3).is_none(), || "T r3,-1 has a nonsingular cocycle within bound 3".into())?;
    Ok(format!("{count} integrable tangent instances; r3,-1: none among {} cocycle combinations", 7usize.pow(z.dim() as u32)))
}

fn closedness_and_kahler() -> Outcome {
    let mut count = 0;
    let mut metric = Vec::new();
    for e in catalog_entries() {
        if let (Some(split), Some(j), Some(inner)) = (e.split.clone(), e.j.clone(), e.inner.clone()) {
            metric.push((e.instance_name(), split, j, inner));
        }
    }
    for inst in random_instances(200, 0x5eed) {
        let n = inst.split.h_dim();
        metric.push((inst.label, inst.split, inst.j, BilinearForm::standard(n)));
    }
    for (label, split, j, inner) in &metric {
        let r = closedness_report(split, j, inner).map_err(|e| format!("{label}: {e}"))?;
        ensure(r.all_agree() && r.forms_agree, || format!("{label}: statements {:?}", r.statements()))?;
        count += 1;
    }
    let e2 = catalog::build("e2_kahler", &Default::default()).map_err(|e| e.to_string())?;
    let (split, j, inner) = (e2.split.expect("split"), e2.j.expect("j"), e2.inner.expect("inner"));
    let k = kahler_check(&split, &j, &inner).map_err(|e| e.to_string())?;
    ensure(k.almost_kahler && k.kahler() && k.implication_holds(), || format!("e(2): {k:?}"))?;
    Ok(format!("{count} metric instances agree; e(2) is Kahler"))
}

fn lsa_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa5a);
    let mut pool: Vec<Product> = catalog_entries().into_iter().filter_map(|e| e.lsa).filter(|p| p.dim() <= 4).collect();
    for inst in random_instances(60, 7) {
        if let Ok(a) = lsa_from_totally_real(&inst.split, &inst.j) {
            pool.push(a.into_product());
        }
    }
    let (mut valid, mut invalid) = (0, 0);
    for i in 0..100 {
        let mut p = if i % 4 == 3 {
            let n = rng.gen_range(1..=4);
            Product::from_fn(labels("e", n), |_, _| (0..n).map(|_| int(rng.gen_range(-1..=1) * rng.gen_range(0..=1))).collect())
        } else {
            pool[rng.gen_range(0..pool.len())].clone()
        };
        if i % 2 == 1 {
            let n = p.dim();
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let mut v = p.get(a, b).clone();
            v[c] += int(rng.gen_range(1..=2));
            p.set(a, b, v);
        }
        let direct = p.is_left_symmetric();
        let left = left_mult_checks(&p, None).both();
        let alpha = alpha_homomorphism_check(&p, None);
        ensure(direct == left && left == alpha, || format!("product {i}: direct {direct}, L {left}, alpha {alpha}: {p}"))?;
        if direct {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    Ok(format!("100 products: {valid} left-symmetric, {invalid} not"))
}

fn solvability() -> Outcome {
    let mut count = 0;
    let mut cases: Vec<(String, LieAlgebra, Product)> = catalog_entries()
        .into_iter()
        .filter_map(|e| e.lsa.clone().map(|p| (e.instance_name(), e.algebra.clone(), p)))
        .collect();
    for inst in random_instances(200, 0x5eed) {
        if let Ok(a) = lsa_from_totally_real(&inst.split, &inst.j) {
            cases.push((inst.label, inst.split.h().clone(), a.into_product()));
        }
    }
    for (label, h, p) in cases {
        if p.is_left_symmetric() && is_compatible(&p, &h).map_err(|e| e.to_string())?.compatible() {
            ensure(solvability_class(&h).is_solvable(), || format!("{label}: compatible LSA on a non-solvable algebra"))?;
            count += 1;
        }
    }
    Ok(format!("{count} algebras with a compatible LSA, all solvable"))
}

fn cli_round_trip_and_exit_codes() -> Outcome {
    let mut docs = 0;
    for info in catalog::entry_infos() {
        for params in &info.defaults {
            let entry = catalog::build(info.name, params).map_err(|e| e.to_string())?;
            let doc = export_entry(&entry).map_err(|e| format!("{}: {e}", info.name))?;
            let text = serialize(&doc);
            let again = parse(&text).map_err(|e| format!("{}: {e}", info.name))?;
            ensure(again == doc, || format!("{}: parse(serialize(doc)) != doc", info.name))?;
            ensure(serialize(&again) == text, || format!("{}: serialization not stable", info.name))?;
            docs += 1;
        }
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let export = |name: &str| -> Result<PathBuf, String> {
        let entry = catalog::build(name, &catalog::entry_info(name).expect("entry").defaults[0]).map_err(|e| e.to_string())?;
        let path = dir.join(format!("{name}.def"));
        std::fs::write(&path, serialize(&export_entry(&entry).map_err(|e| e.to_string())?)).map_err(|e| e.to_string())?;
        Ok(path)
    };
    let bad = dir.join("decimal.def");
    std::fs::write(&bad, "algebra h dim 2 basis x y\nbracket h [x,y] = 0.5 x\n").map_err(|e| e.to_string())?;
    let runs = [
        (vec!["check".into(), "integrable".into(), export("heisenberg_tangent")?, "g".into(), "j".into()], 0),
        (vec!["check".into(), "integrable".into(), export("r3_minus1_tangent")?, "g".into(), "j".into()], 1),
        (vec!["check".into(), "jacobi".into(), bad, "h".into()], 2),
    ];
    for (args, expected) in runs {
        let out = Command::new(env!("CARGO_BIN_EXE_semisplit")).args(&args).env_remove("SEMISPLIT_FORMAT").output().map_err(|e| e.to_string())?;
        let code = out.status.code();
        ensure(code == Some(expected), || format!("{args:?}: exit {code:?}, expected {expected}"))?;
    }
    Ok(format!("{docs} catalog documents round trip; exit codes 0, 1, 2"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("integrability conditions agree", integrability_equivalence),
        ("canonical connection and parallel systems", canonical_connection_system),
        ("LSA on the tangent Heisenberg algebras", tangent_heisenberg_lsa),
        ("LSA on cotangent algebras", cotangent_tables),
        ("semidirect products from LSAs", semidirect_tables),
        ("misprint diagnostics", misprint_diagnostics),
        ("tangent structures and nonsingular derivations", tangent_derivations),
        ("closedness agreement and Kahler instance", closedness_and_kahler),
        ("LSA axiom checks agree", lsa_axioms),
        ("compatible LSA implies solvable", solvability),
        ("definition language round trip and exit codes", cli_round_trip_and_exit_codes),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
