use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CatalogEntry, CatalogError, Check, EntryInfo, Params, Provenance};
use crate::geometry::BilinearForm;
use crate::lie::{
    cotangent_algebra, labels, semidirect_product, tangent_algebra, LieAlgebra, Representation, SplitAlgebra,
    StructureConstants,
};
use crate::linalg::scalar::{self, format_scalar, frac, int, Scalar, Vector};
use crate::linalg::Matrix;
use crate::lsa::{semidirect_from_lsa, Lsa, Product};

fn binding(pairs: &[(&str, Scalar)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub(super) fn infos() -> Vec<EntryInfo> {
    let none = vec![Params::new()];
    let info = |name, provenance, description, params, defaults| EntryInfo { name, provenance, description, params, defaults };
    use Provenance::*;
    vec![
        info("abelian", Corrected, "abelian R^n + R^n with J = Id", &["n"], vec![binding(&[("n", int(2))])]),
        info("aff_r", Corrected, "aff(R) as span{x} + span{y}, Jx = y, and its symplectic form", &[], none.clone()),
        info("cotangent_aff_r", Corrected, "T*aff(R) with a complex structure totally real for a non-semidirect splitting", &[], none.clone()),
        info("heisenberg_times_r", Corrected, "h_n x R with the abelian complex structure Jz = e0, Jx_i = y_i", &["n"], vec![binding(&[("n", int(1))])]),
        info("r3_lambda", Corrected, "r_{3,lambda} with its LSA and the 6-dimensional semidirect product", &["lambda"], vec![binding(&[("lambda", frac(1, 2))])]),
        info("r3_half", Corrected, "r_{3,1/2} with the second LSA (e3.e3 = -e2) and its semidirect product", &[], none.clone()),
        info("r3_half_printed", AsPrinted, "r_{3,1/2} second LSA with the bracket table as displayed ([e2,v3] = v3)", &[], none.clone()),
        info("i_n", Corrected, "I_n with e1.e1 = 2e1, e1.ek = ek, ek.ek = e1", &["n"], vec![binding(&[("n", int(4))])]),
        info("a_n", Corrected, "A_n with e1.ei = alpha_i ei, ek.e_{n+2-k} = e1", &["n"], vec![a_n_binding(4)]),
        info("a_n_printed", AsPrinted, "A_n with the LSA as displayed (e1.ei = alpha_i e1)", &["n"], vec![a_n_binding(4)]),
        info("heisenberg_tangent", Corrected, "T h_1 with J_s e1 = v1, J_s e2 = -s v1 + v2, J_s e3 = 2 v3", &["s"], vec![binding(&[("s", int(0))]), binding(&[("s", int(1))])]),
        info("heisenberg_n_tangent", Corrected, "T h_n with the derivation j = diag(1, ..., 1, 2)", &["n"], vec![binding(&[("n", int(2))])]),
        info("r3_minus1_tangent", Corrected, "T r_{3,-1}: no totally real complex structure", &[], none.clone()),
        info("heisenberg_cotangent", Corrected, "T* h_1 with J e1 = v1, J e2 = v3, J e3 = -v2", &[], none.clone()),
        info(
            "r3_minus1_cotangent",
            Corrected,
            "T* r_{3,-1} with the four-parameter family of j and its LSA",
            &["a", "b", "c", "d"],
            vec![abcd(1, 0, 0, 1), abcd(2, 1, 1, 1), abcd(1, 2, 3, 1)],
        ),
        info("r3_0_cotangent", Corrected, "T* r_{3,0} with J e1 = v2, J e2 = -v1, J e3 = v3", &[], none.clone()),
        info("r3_0_cotangent_printed", AsPrinted, "T* r_{3,0} with J as displayed (J e3 = v6)", &[], none.clone()),
        info("rprime3_0_cotangent", Corrected, "T* r'_{3,0} with J e1 = eps v1, J e2 = v3, J e3 = -v2", &["eps"], vec![binding(&[("eps", int(1))]), binding(&[("eps", int(-1))])]),
        info("e2_kahler", Corrected, "r'_{3,0} with a flat LSA of skew left multiplications: a Kahler split structure", &[], none),
    ]
}

fn abcd(a: i64, b: i64, c: i64, d: i64) -> Params {
    binding(&[("a", int(a)), ("b", int(b)), ("c", int(c)), ("d", int(d))])
}

/// Default `alpha` for `A_n`: `alpha_1 = 1`, `alpha_k = k` and `alpha_{n+2-k} = 1 - k` on each
/// pair `k < n+2-k`, `1/2` on a self-paired index.
pub fn a_n_alphas(n: usize) -> Vec<Scalar> {
    let mut alpha = vec![Scalar::zero(); n];
    alpha[0] = Scalar::one();
    for k in 2..=n {
        let partner = n + 2 - k;
        if k < partner {
            alpha[k - 1] = int(k as i64);
            alpha[partner - 1] = int(1 - k as i64);
        } else if k == partner {
            alpha[k - 1] = frac(1, 2);
        }
    }
    alpha
}

fn a_n_binding(n: usize) -> Params {
    let mut p = binding(&[("n", int(n as i64))]);
    for (i, a) in a_n_alphas(n).into_iter().enumerate() {
        p.insert(format!("alpha{}", i + 1), a);
    }
    p
}

pub(super) fn build_entry(name: &str, p: Params) -> Result<CatalogEntry, CatalogError> {
    match name {
        "abelian" => abelian(p),
        "aff_r" => aff_r(p),
        "cotangent_aff_r" => cotangent_aff_r(p),
        "heisenberg_times_r" => heisenberg_times_r(p),
        "r3_lambda" => r3_lambda(p),
        "r3_half" => r3_half(p, Provenance::Corrected),
        "r3_half_printed" => r3_half(p, Provenance::AsPrinted),
        "i_n" => i_n(p),
        "a_n" => a_n(p, Provenance::Corrected),
        "a_n_printed" => a_n(p, Provenance::AsPrinted),
        "heisenberg_tangent" => heisenberg_tangent(p),
        "heisenberg_n_tangent" => heisenberg_n_tangent(p),
        "r3_minus1_tangent" => r3_minus1_tangent(p),
        "heisenberg_cotangent" => heisenberg_cotangent(p),
        "r3_minus1_cotangent" => r3_minus1_cotangent(p),
        "r3_0_cotangent" => r3_0_cotangent(p, Provenance::Corrected),
        "r3_0_cotangent_printed" => r3_0_cotangent(p, Provenance::AsPrinted),
        "rprime3_0_cotangent" => rprime3_0_cotangent(p),
        "e2_kahler" => e2_kahler(p),
        other => Err(CatalogError::UnknownEntry(other.to_string())),
    }
}

fn vecn(n: usize, terms: &[(usize, Scalar)]) -> Vector {
    let mut v = scalar::zeros(n);
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

fn dim_param(p: &Params, key: &str, min: usize, domain: &'static str) -> Result<usize, CatalogError> {
    let value = &p[key];
    match value.is_integer().then(|| value.to_integer().to_usize()).flatten() {
        Some(n) if n >= min => Ok(n),
        _ => Err(CatalogError::out_of_range(key, value, domain)),
    }
}

fn entry(name: &str, provenance: Provenance, params: Params, algebra: LieAlgebra) -> CatalogEntry {
    let description = infos().into_iter().find(|i| i.name == name).map(|i| i.description).unwrap_or("");
    CatalogEntry {
        name: name.to_string(),
        provenance,
        description,
        params,
        algebra,
        split: None,
        j: None,
        complex: None,
        lsa: None,
        brackets: None,
        inner: None,
        symplectic: None,
        checks: Vec::new(),
        errata: Vec::new(),
    }
}

/// Checks every integrable split entry with `j` and an LSA carries.
fn integrable_lsa_checks() -> Vec<Check> {
    vec![
        Check::Integrability { integrable: true },
        Check::ParallelConnection,
        Check::LsaCompatible,
        Check::LsaFromJ,
        Check::Correspondence,
        Check::Solvable,
        Check::Closedness,
    ]
}

/// Reads `pi(e_i)` off a displayed table of `h ⋉ k` with basis `h` then `k`, `k` abelian.
fn split_from_table(h: &LieAlgebra, k_labels: Vec<String>, table: &StructureConstants) -> Result<SplitAlgebra, CatalogError> {
    let n = h.dim();
    let m = k_labels.len();
    let pi = (0..n)
        .map(|i| Matrix::from_columns(m, &(0..m).map(|b| table.get(i, n + b)[n..].to_vec()).collect::<Vec<_>>()))
        .collect();
    let k = LieAlgebra::abelian(k_labels);
    Ok(semidirect_product(h, &k, &Representation::new(h, pi)?)?)
}

fn table(labels: Vec<String>, entries: &[((usize, usize), Vector)]) -> StructureConstants {
    entries.iter().fold(StructureConstants::new(labels), |t, ((i, j), v)| t.with(*i, *j, v.clone()))
}

fn ev_labels(n: usize) -> Vec<String> {
    labels("e", n).into_iter().chain(labels("v", n)).collect()
}

fn abelian(p: Params) -> Result<CatalogEntry, CatalogError> {
    let n = dim_param(&p, "n", 1, "integer n >= 1")?;
    let h = LieAlgebra::abelian(labels("e", n));
    let mut e = entry("abelian", Provenance::Corrected, p, h.clone());
    e.split = Some(tangent_algebra(&h));
    e.j = Some(Matrix::identity(n));
    e.lsa = Some(Product::zero(labels("e", n)));
    e.inner = Some(BilinearForm::standard(n));
    e.complex = Some(Matrix::from_blocks(&Matrix::zeros(n, n), &Matrix::identity(n).neg(), &Matrix::identity(n), &Matrix::zeros(n, n))?);
    e.checks = integrable_lsa_checks();
    e.checks.extend([
        Check::TangentDerivation,
        Check::ComplexStructure,
        Check::AbelianComplex,
        Check::TotallyReal { basis: (0..n).collect(), expected: true },
        Check::TotallyReal { basis: (n..2 * n).collect(), expected: true },
    ]);
    Ok(e)
}

fn aff() -> LieAlgebra {
    LieAlgebra::new(vec!["x".into(), "y".into()], [((0, 1), vec![int(0), int(1)])]).expect("aff(R)")
}

fn aff_r(p: Params) -> Result<CatalogEntry, CatalogError> {
    let g = aff();
    let x = LieAlgebra::abelian(vec!["x".into()]);
    let y = LieAlgebra::abelian(vec!["y".into()]);
    let pi = Representation::new(&x, vec![Matrix::identity(1)])?;
    let mut e = entry("aff_r", Provenance::Corrected, p, g.clone());
    e.split = Some(semidirect_product(&x, &y, &pi)?);
    e.j = Some(Matrix::identity(1));
    e.inner = Some(BilinearForm::standard(1));
    e.complex = Some(Matrix::from_i64(&[&[0, -1], &[1, 0]]));
    e.symplectic = Some(BilinearForm::antisymmetric(Matrix::from_i64(&[&[0, 1], &[-1, 0]]))?);
    e.checks = vec![
        Check::Integrability { integrable: true },
        Check::ParallelConnection,
        Check::Closedness,
        Check::ComplexStructure,
        Check::TotallyReal { basis: vec![0], expected: true },
        Check::TotallyReal { basis: vec![1], expected: true },
        Check::Symplectic,
        Check::Solvable,
    ];
    Ok(e)
}

fn cotangent_aff_r(p: Params) -> Result<CatalogEntry, CatalogError> {
    let g = cotangent_algebra(&aff().relabeled(labels("e", 2))).g().relabeled(labels("e", 4));
    let mut e = entry("cotangent_aff_r", Provenance::Corrected, p, g);
    // J e1 = e2, J e3 = e4
    e.complex = Some(Matrix::from_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]));
    e.checks = vec![
        Check::ComplexStructure,
        Check::TotallyReal { basis: vec![0, 1], expected: false },
        Check::TotallyReal { basis: vec![0, 2], expected: true },
        Check::TotallyReal { basis: vec![1, 3], expected: true },
        Check::Solvable,
    ];
    e.errata = vec![
        "displayed [e2,e4] = e4 violates the Jacobi identity; the coadjoint action gives [e2,e4] = e3".into(),
        "displayed J e3 = -e4 has N_J != 0; J e3 = e4 is integrable".into(),
        "span{e2,e4} is not a subalgebra, so the totally real splitting is not a semidirect product".into(),
    ];
    Ok(e)
}

fn heisenberg_times_r(p: Params) -> Result<CatalogEntry, CatalogError> {
    let n = dim_param(&p, "n", 1, "integer n >= 1")?;
    let dim = 2 * n + 2;
    let (z, e0) = (2 * n, 2 * n + 1);
    let mut names: Vec<String> = labels("x", n).into_iter().chain(labels("y", n)).collect();
    names.extend(["z".to_string(), "e0".to_string()]);
    let g = LieAlgebra::new(names, (0..n).map(|i| ((i, n + i), scalar::unit(dim, z))))?;
    let mut cols = vec![scalar::zeros(dim); dim];
    for i in 0..n {
        cols[i] = scalar::unit(dim, n + i);
        cols[n + i] = scalar::neg(&scalar::unit(dim, i));
    }
    cols[z] = scalar::unit(dim, e0);
    cols[e0] = scalar::neg(&scalar::unit(dim, z));
    let a1: Vec<usize> = (0..n).chain([z]).collect();
    let a2: Vec<usize> = (n..2 * n).chain([e0]).collect();
    let mut e = entry("heisenberg_times_r", Provenance::Corrected, p, g);
    e.complex = Some(Matrix::from_columns(dim, &cols));
    e.checks = vec![
        Check::ComplexStructure,
        Check::AbelianComplex,
        Check::AbelianSubalgebra { basis: a1.clone() },
        Check::AbelianSubalgebra { basis: a2.clone() },
        Check::TotallyReal { basis: a1, expected: true },
        Check::TotallyReal { basis: a2, expected: true },
        Check::Solvable,
    ];
    Ok(e)
}

fn r3(lambda: &Scalar) -> LieAlgebra {
    LieAlgebra::new(
        labels("e", 3),
        [((0, 1), vecn(3, &[(1, int(1))])), ((0, 2), vecn(3, &[(2, lambda.clone())]))],
    )
    .expect("r3,lambda")
}

fn r3_lambda(p: Params) -> Result<CatalogEntry, CatalogError> {
    let l = p["lambda"].clone();
    if l.is_zero() || l <= int(-1) || l >= int(1) {
        return Err(CatalogError::out_of_range("lambda", &l, "lambda != 0, -1 < lambda < 1"));
    }
    let h = r3(&l);
    let lsa = Product::from_entries(
        labels("e", 3),
        [
            ((0, 0), vecn(3, &[(0, &l + int(1))])),
            ((0, 1), vecn(3, &[(1, int(1))])),
            ((0, 2), vecn(3, &[(2, l.clone())])),
            ((1, 2), vecn(3, &[(0, int(1))])),
            ((2, 1), vecn(3, &[(0, int(1))])),
        ],
    );
    let t = table(
        ev_labels(3),
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
    let mut e = entry("r3_lambda", Provenance::Corrected, p, h.clone());
    e.split = Some(split_from_table(&h, labels("v", 3), &t)?);
    e.j = Some(Matrix::identity(3));
    e.lsa = Some(lsa);
    e.brackets = Some(t);
    e.inner = Some(BilinearForm::standard(3));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::SemidirectFromLsa);
    Ok(e)
}

fn r3_half(p: Params, provenance: Provenance) -> Result<CatalogEntry, CatalogError> {
    let half = frac(1, 2);
    let h = r3(&half);
    let lsa = Product::from_entries(
        labels("e", 3),
        [
            ((0, 0), vecn(3, &[(0, frac(3, 2))])),
            ((0, 1), vecn(3, &[(1, int(1))])),
            ((0, 2), vecn(3, &[(2, half.clone())])),
            ((1, 2), vecn(3, &[(0, int(1))])),
            ((2, 1), vecn(3, &[(0, int(1))])),
            ((2, 2), vecn(3, &[(1, int(-1))])),
        ],
    );
    // [e2,v3] is v3 as displayed, v1 from the LSA
    let e2v3 = match provenance {
        Provenance::AsPrinted => 5,
        Provenance::Corrected => 3,
    };
    let t = table(
        ev_labels(3),
        &[
            ((0, 1), vecn(6, &[(1, int(1))])),
            ((0, 2), vecn(6, &[(2, half.clone())])),
            ((0, 3), vecn(6, &[(3, frac(3, 2))])),
            ((0, 4), vecn(6, &[(4, int(1))])),
            ((0, 5), vecn(6, &[(5, half)])),
            ((1, 5), vecn(6, &[(e2v3, int(1))])),
            ((2, 4), vecn(6, &[(3, int(1))])),
            ((2, 5), vecn(6, &[(4, int(-1))])),
        ],
    );
    let name = if provenance == Provenance::AsPrinted { "r3_half_printed" } else { "r3_half" };
    let mut e = entry(name, provenance, p, h.clone());
    e.lsa = Some(lsa);
    if provenance == Provenance::Corrected {
        e.split = Some(split_from_table(&h, labels("v", 3), &t)?);
        e.j = Some(Matrix::identity(3));
        e.inner = Some(BilinearForm::standard(3));
        e.checks = integrable_lsa_checks();
    } else {
        e.checks = vec![Check::LsaCompatible, Check::Solvable];
    }
    e.brackets = Some(t);
    e.checks.push(Check::SemidirectFromLsa);
    Ok(e)
}

fn i_n(p: Params) -> Result<CatalogEntry, CatalogError> {
    let n = dim_param(&p, "n", 2, "integer n >= 2")?;
    let h = LieAlgebra::new(labels("e", n), (1..n).map(|k| ((0, k), scalar::unit(n, k))))?;
    let mut products = vec![((0, 0), vecn(n, &[(0, int(2))]))];
    for k in 1..n {
        products.push(((0, k), scalar::unit(n, k)));
        products.push(((k, k), scalar::unit(n, 0)));
    }
    let m = 2 * n;
    let mut brackets: Vec<((usize, usize), Vector)> = vec![((0, n), vecn(m, &[(n, int(2))]))];
    for k in 1..n {
        brackets.push(((0, k), scalar::unit(m, k)));
        brackets.push(((0, n + k), scalar::unit(m, n + k)));
        brackets.push(((k, n + k), scalar::unit(m, n)));
    }
    let t = table(ev_labels(n), &brackets);
    let mut e = entry("i_n", Provenance::Corrected, p, h.clone());
    e.split = Some(split_from_table(&h, labels("v", n), &t)?);
    e.j = Some(Matrix::identity(n));
    e.lsa = Some(Product::from_entries(labels("e", n), products));
    e.brackets = Some(t);
    e.inner = Some(BilinearForm::standard(n));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::SemidirectFromLsa);
    e.errata = vec!["displayed semidirect table omits [e1,vk] = vk for k >= 2".into()];
    Ok(e)
}

fn a_n(p: Params, provenance: Provenance) -> Result<CatalogEntry, CatalogError> {
    let n = dim_param(&p, "n", 2, "integer n >= 2")?;
    let defaults = a_n_alphas(n);
    let alpha: Vec<Scalar> = (0..n).map(|i| p.get(&format!("alpha{}", i + 1)).cloned().unwrap_or_else(|| defaults[i].clone())).collect();
    for (i, a) in alpha.iter().enumerate() {
        if a.is_zero() {
            return Err(CatalogError::out_of_range(&format!("alpha{}", i + 1), a, "alpha_i != 0"));
        }
    }
    for k in 2..=n {
        if alpha[n + 1 - k] != &alpha[0] - &alpha[k - 1] {
            return Err(CatalogError::out_of_range(&format!("alpha{}", n + 2 - k), &alpha[n + 1 - k], "alpha_{n+2-k} = alpha_1 - alpha_k"));
        }
    }
    let mut params = p;
    for (i, a) in alpha.iter().enumerate() {
        params.insert(format!("alpha{}", i + 1), a.clone());
    }
    let h = LieAlgebra::new(labels("e", n), (1..n).map(|k| ((0, k), vecn(n, &[(k, alpha[k].clone())]))))?;
    let mut products = Vec::new();
    for i in 0..n {
        let target = if provenance == Provenance::AsPrinted { 0 } else { i };
        products.push(((0, i), vecn(n, &[(target, alpha[i].clone())])));
    }
    for k in 1..n {
        products.push(((k, n - k), scalar::unit(n, 0)));
    }
    let lsa = Product::from_entries(labels("e", n), products);
    let name = if provenance == Provenance::AsPrinted { "a_n_printed" } else { "a_n" };
    let mut e = entry(name, provenance, params, h.clone());
    e.lsa = Some(lsa);
    if provenance == Provenance::AsPrinted {
        e.checks = vec![Check::LsaCompatible];
        return Ok(e);
    }
    let m = 2 * n;
    let mut brackets: Vec<((usize, usize), Vector)> = vec![((0, n), vecn(m, &[(n, alpha[0].clone())]))];
    for k in 1..n {
        brackets.push(((0, k), vecn(m, &[(k, alpha[k].clone())])));
        brackets.push(((0, n + k), vecn(m, &[(n + k, alpha[k].clone())])));
        brackets.push(((k, n + (n - k)), scalar::unit(m, n)));
    }
    let t = table(ev_labels(n), &brackets);
    e.split = Some(split_from_table(&h, labels("v", n), &t)?);
    e.j = Some(Matrix::identity(n));
    e.brackets = Some(t);
    e.inner = Some(BilinearForm::standard(n));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::SemidirectFromLsa);
    e.errata = vec![
        "displayed LSA e1.ei = alpha_i e1 is not compatible with the bracket; e1.ei = alpha_i ei is".into(),
        "displayed semidirect table omits [e1,v1] = alpha_1 v1".into(),
    ];
    Ok(e)
}

fn h1() -> LieAlgebra {
    LieAlgebra::new(labels("e", 3), [((0, 1), vecn(3, &[(2, int(1))]))]).expect("h1")
}

fn heisenberg_tangent(p: Params) -> Result<CatalogEntry, CatalogError> {
    let s = p["s"].clone();
    if !(s.is_zero() || s.is_one()) {
        return Err(CatalogError::out_of_range("s", &s, "s in {0, 1}"));
    }
    let h = h1();
    let half = frac(1, 2);
    let mut products = vec![((0, 1), vecn(3, &[(2, half.clone())])), ((1, 0), vecn(3, &[(2, -&half)]))];
    if !s.is_zero() {
        products.push(((1, 1), vecn(3, &[(2, &s * &half)])));
    }
    let t = table(
        ev_labels(3),
        &[((0, 1), vecn(6, &[(2, int(1))])), ((0, 4), vecn(6, &[(5, int(1))])), ((1, 3), vecn(6, &[(5, int(-1))]))],
    );
    let mut e = entry("heisenberg_tangent", Provenance::Corrected, p, h.clone());
    e.split = Some(tangent_algebra(&h));
    e.j = Some(Matrix::from_columns(3, &[vecn(3, &[(0, int(1))]), vecn(3, &[(0, -s), (1, int(1))]), vecn(3, &[(2, int(2))])]));
    e.lsa = Some(Product::from_entries(labels("e", 3), products));
    e.brackets = Some(t);
    e.inner = Some(BilinearForm::standard(3));
    e.checks = integrable_lsa_checks();
    e.checks.extend([Check::BracketTable, Check::TangentDerivation]);
    Ok(e)
}

fn heisenberg_n_tangent(p: Params) -> Result<CatalogEntry, CatalogError> {
    let n = dim_param(&p, "n", 1, "integer n >= 1")?;
    let dim = 2 * n + 1;
    let mut names: Vec<String> = labels("x", n).into_iter().chain(labels("y", n)).collect();
    names.push("z".into());
    let h = LieAlgebra::new(names.clone(), (0..n).map(|i| ((i, n + i), scalar::unit(dim, 2 * n))))?;
    let half = frac(1, 2);
    let mut products = Vec::new();
    for i in 0..n {
        products.push(((i, n + i), vecn(dim, &[(2 * n, half.clone())])));
        products.push(((n + i, i), vecn(dim, &[(2 * n, -&half)])));
    }
    let mut diag = vec![int(1); dim];
    diag[2 * n] = int(2);
    let mut e = entry("heisenberg_n_tangent", Provenance::Corrected, p, h.clone());
    e.split = Some(tangent_algebra(&h));
    e.j = Some(Matrix::diagonal(&diag));
    e.lsa = Some(Product::from_entries(names, products));
    e.inner = Some(BilinearForm::standard(dim));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::TangentDerivation);
    e.errata = vec!["displayed table lists x_i.y_k only; compatibility forces y_k.x_i = -1/2 delta_ik z".into()];
    Ok(e)
}

fn r3_minus1_tangent(p: Params) -> Result<CatalogEntry, CatalogError> {
    let h = r3(&int(-1));
    let mut e = entry("r3_minus1_tangent", Provenance::Corrected, p, h.clone());
    e.split = Some(tangent_algebra(&h));
    e.j = Some(Matrix::identity(3));
    e.inner = Some(BilinearForm::standard(3));
    e.checks = vec![
        Check::Integrability { integrable: false },
        Check::ParallelConnection,
        Check::NoNonsingularCocycle { bound: 3 },
        Check::Closedness,
        Check::Solvable,
    ];
    Ok(e)
}

fn heisenberg_cotangent(p: Params) -> Result<CatalogEntry, CatalogError> {
    let h = h1();
    let t = table(
        ev_labels(3),
        &[((0, 1), vecn(6, &[(2, int(1))])), ((0, 5), vecn(6, &[(4, int(-1))])), ((1, 5), vecn(6, &[(3, int(1))]))],
    );
    let mut e = entry("heisenberg_cotangent", Provenance::Corrected, p, h.clone());
    e.split = Some(cotangent_algebra(&h));
    e.j = Some(Matrix::from_i64(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]]));
    e.lsa = Some(Product::from_entries(labels("e", 3), [((0, 1), vecn(3, &[(2, int(1))])), ((1, 1), vecn(3, &[(0, int(1))]))]));
    e.brackets = Some(t);
    e.inner = Some(BilinearForm::standard(3));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::BracketTable);
    Ok(e)
}

/// The displayed general LSA on `r_{3,-1}` for `j = [[a,b,c],[-b,0,d],[-c,-d,0]]`.
pub fn r3_minus1_lsa_printed(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Product {
    let mut p = r3_minus1_lsa(a, b, c, d);
    p.set(0, 0, vec![int(0), int(0), b / d]);
    p
}

/// The LSA `j^{-1} ad*(x) j y` on `r_{3,-1}`; differs from the displayed table only in
/// `e1.e1` when `c != 0`.
pub fn r3_minus1_lsa(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Product {
    let ad = a * d;
    let add = &ad * d;
    let bc = b * c;
    let w = vec![d.clone(), -c, b.clone()];
    Product::from_entries(
        labels("e", 3),
        [
            ((0, 0), vec![-(int(2) * &bc) / &ad, c * (&ad + int(2) * &bc) / &add, b * (&ad - int(2) * &bc) / &add]),
            ((0, 1), vec![-(b * d) / &ad, (&ad + &bc) / &ad, -(b * b) / &ad]),
            ((0, 2), vec![(c * d) / &ad, -(c * c) / &ad, -(&ad - &bc) / &ad]),
            ((1, 0), scalar::scale(&(-b / &ad), &w)),
            ((1, 2), scalar::scale(&(Scalar::one() / a), &w)),
            ((2, 0), scalar::scale(&(c / &ad), &w)),
            ((2, 1), scalar::scale(&(Scalar::one() / a), &w)),
        ],
    )
}

fn r3_minus1_cotangent(p: Params) -> Result<CatalogEntry, CatalogError> {
    let (a, b, c, d) = (p["a"].clone(), p["b"].clone(), p["c"].clone(), p["d"].clone());
    if (&a * &d).is_zero() {
        let culprit = if a.is_zero() { "a" } else { "d" };
        return Err(CatalogError::out_of_range(culprit, &p[culprit], "a d != 0"));
    }
    let h = r3(&int(-1));
    let t = table(
        ev_labels(3),
        &[
            ((0, 1), vecn(6, &[(1, int(1))])),
            ((0, 2), vecn(6, &[(2, int(-1))])),
            ((0, 4), vecn(6, &[(4, int(-1))])),
            ((0, 5), vecn(6, &[(5, int(1))])),
            ((1, 4), vecn(6, &[(3, int(1))])),
            ((2, 5), vecn(6, &[(3, int(-1))])),
        ],
    );
    let j = Matrix::from_rows(vec![
        vec![a.clone(), b.clone(), c.clone()],
        vec![-&b, int(0), d.clone()],
        vec![-&c, -&d, int(0)],
    ])
    .expect("3x3");
    let lsa = r3_minus1_lsa(&a, &b, &c, &d);
    let mut errata = Vec::new();
    if !c.is_zero() {
        errata.push(format!(
            "displayed e1.e1 = (b/d) e3 = {} e3 holds only for c = 0; here e1.e1 = {}",
            format_scalar(&(&b / &d)),
            lsa.format_vector(lsa.get(0, 0))
        ));
    }
    let mut e = entry("r3_minus1_cotangent", Provenance::Corrected, p, h.clone());
    e.split = Some(cotangent_algebra(&h));
    e.j = Some(j);
    e.lsa = Some(lsa);
    e.brackets = Some(t);
    e.inner = Some(BilinearForm::standard(3));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::BracketTable);
    e.errata = errata;
    Ok(e)
}

fn r3_0_cotangent(p: Params, provenance: Provenance) -> Result<CatalogEntry, CatalogError> {
    let h = LieAlgebra::new(labels("e", 3), [((0, 1), vecn(3, &[(1, int(1))]))])?;
    let t = table(
        ev_labels(3),
        &[((0, 1), vecn(6, &[(1, int(1))])), ((0, 4), vecn(6, &[(4, int(-1))])), ((1, 4), vecn(6, &[(3, int(1))]))],
    );
    let lsa = Product::from_entries(labels("e", 3), [((0, 0), vecn(3, &[(0, int(-1))])), ((1, 0), vecn(3, &[(1, int(-1))]))]);
    let name = if provenance == Provenance::AsPrinted { "r3_0_cotangent_printed" } else { "r3_0_cotangent" };
    let mut e = entry(name, provenance, p, h.clone());
    e.split = Some(cotangent_algebra(&h));
    e.lsa = Some(lsa);
    e.brackets = Some(t);
    if provenance == Provenance::AsPrinted {
        e.checks = vec![
            Check::BracketTable,
            Check::LsaCompatible,
            Check::BasisReference { label: "v6".into(), context: "J e3 = v6".into() },
        ];
        return Ok(e);
    }
    e.j = Some(Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]));
    e.inner = Some(BilinearForm::standard(3));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::BracketTable);
    Ok(e)
}

fn rprime3_0() -> LieAlgebra {
    LieAlgebra::new(labels("e", 3), [((0, 1), vecn(3, &[(2, int(-1))])), ((0, 2), vecn(3, &[(1, int(1))]))]).expect("r'3,0")
}

fn rprime3_0_cotangent(p: Params) -> Result<CatalogEntry, CatalogError> {
    let eps = p["eps"].clone();
    if eps.abs() != Scalar::one() {
        return Err(CatalogError::out_of_range("eps", &eps, "eps in {1, -1}"));
    }
    let h = rprime3_0();
    let t = table(
        ev_labels(3),
        &[
            ((0, 1), vecn(6, &[(2, int(-1))])),
            ((0, 2), vecn(6, &[(1, int(1))])),
            ((0, 4), vecn(6, &[(5, int(-1))])),
            ((0, 5), vecn(6, &[(4, int(1))])),
            ((1, 5), vecn(6, &[(3, int(-1))])),
            ((2, 4), vecn(6, &[(3, int(1))])),
        ],
    );
    let lsa = Product::from_entries(
        labels("e", 3),
        [
            ((0, 1), vecn(3, &[(2, int(-1))])),
            ((0, 2), vecn(3, &[(1, int(1))])),
            ((1, 1), vecn(3, &[(0, -&eps)])),
            ((2, 2), vecn(3, &[(0, -&eps)])),
        ],
    );
    let mut e = entry("rprime3_0_cotangent", Provenance::Corrected, p, h.clone());
    e.split = Some(cotangent_algebra(&h));
    e.j = Some(Matrix::from_columns(3, &[vecn(3, &[(0, eps)]), vecn(3, &[(2, int(1))]), vecn(3, &[(1, int(-1))])]));
    e.lsa = Some(lsa);
    e.brackets = Some(t);
    e.inner = Some(BilinearForm::standard(3));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::BracketTable);
    e.errata = vec!["displayed [e1,v3] = -v2; the coadjoint action gives [e1,v3] = v2".into()];
    Ok(e)
}

fn e2_kahler(p: Params) -> Result<CatalogEntry, CatalogError> {
    let h = rprime3_0();
    let lsa = Product::from_entries(labels("e", 3), [((0, 1), vecn(3, &[(2, int(-1))])), ((0, 2), vecn(3, &[(1, int(1))]))]);
    let built = semidirect_from_lsa(&Lsa::new(lsa.clone())?, &Matrix::identity(3))?;
    let mut e = entry("e2_kahler", Provenance::Corrected, p, h);
    e.split = Some(built.split);
    e.j = Some(Matrix::identity(3));
    e.lsa = Some(lsa);
    e.inner = Some(BilinearForm::standard(3));
    e.checks = integrable_lsa_checks();
    e.checks.push(Check::Kahler);
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_n_defaults_satisfy_pairing() {
        for n in 2..8 {
            let a = a_n_alphas(n);
            for k in 2..=n {
                assert_eq!(a[n + 1 - k], &a[0] - &a[k - 1]);
            }
            assert!(a.iter().all(|x| !x.is_zero()));
        }
        assert_eq!(a_n_alphas(4), vec![int(1), int(2), frac(1, 2), int(-1)]);
    }

    #[test]
    fn printed_and_computed_r3_minus1_agree_when_c_vanishes() {
        let (a, b, d) = (int(2), int(1), int(1));
        assert_eq!(r3_minus1_lsa(&a, &b, &int(0), &d), r3_minus1_lsa_printed(&a, &b, &int(0), &d));
        assert_ne!(r3_minus1_lsa(&a, &b, &int(1), &d), r3_minus1_lsa_printed(&a, &b, &int(1), &d));
    }

    #[test]
    fn every_info_has_a_builder() {
        for info in infos() {
            for p in &info.defaults {
                build_entry(info.name, p.clone()).unwrap_or_else(|e| panic!("{}: {e}", info.name));
            }
        }
    }
}
