use semisplit::catalog::{self, build, Params};
use semisplit::{CatalogError, Provenance};
use semisplit::linalg::int;

#[test]
fn every_corrected_entry_passes() {
    let report = catalog::verify_all();
    for e in report.entries.iter().filter(|e| e.provenance == Provenance::Corrected) {
        let failed: Vec<_> = e.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        assert!(failed.is_empty(), "{} failed {failed:?}", e.name);
        assert!(e.diagnostics.is_empty());
    }
}

#[test]
fn printed_entries_yield_one_diagnostic_each() {
    let report = catalog::verify_all();
    let mut found: Vec<(String, String)> = report
        .entries
        .iter()
        .flat_map(|e| e.diagnostics.iter().map(move |d| (e.name.clone(), d.check.to_string())))
        .collect();
    found.sort();
    assert_eq!(
        found,
        vec![
            ("a_n_printed".to_string(), "lsa_compatible".to_string()),
            ("r3_0_cotangent_printed".to_string(), "basis_reference".to_string()),
            ("r3_half_printed".to_string(), "semidirect_from_lsa".to_string()),
        ]
    );
    assert!(report.pass());
}

#[test]
fn parameter_errors() {
    let mut p = Params::new();
    p.insert("q".into(), int(1));
    assert!(matches!(build("i_n", &p), Err(CatalogError::UnknownParam { .. })));
    assert!(matches!(build("nope", &Params::new()), Err(CatalogError::UnknownEntry(_))));
    let mut p = Params::new();
    p.insert("d".into(), int(0));
    assert!(matches!(build("r3_minus1_cotangent", &p), Err(CatalogError::ParamOutOfRange { .. })));
}

#[test]
fn overrides_replace_defaults() {
    let mut p = Params::new();
    p.insert("n".into(), int(6));
    let report = catalog::verify(|n| n == "a_n", &p).unwrap();
    assert_eq!(report.entries.len(), 1);
    assert!(report.entries[0].pass());
    assert_eq!(report.entries[0].entry, "a_n[alpha1=1,alpha2=2,alpha3=3,alpha4=1/2,alpha5=-2,alpha6=-1,n=6]");
}
