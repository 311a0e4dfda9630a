//! Catalog entries written in the definition language.

use semisplit::catalog::CatalogEntry;
use semisplit::geometry::Symmetry;
use semisplit::lie::{LieAlgebra, StructureConstants};
use semisplit::linalg::Matrix;
use semisplit::lsa::Product;

use crate::lang::{Decl, Document, LangError, RepAction, SplitDef};

fn push_table(doc: &mut Document, name: &str, raw: &StructureConstants) -> Result<(), LangError> {
    doc.push(Decl::Algebra { name: name.into(), basis: raw.labels().to_vec() })?;
    let n = raw.dim();
    for i in 0..n {
        for j in i + 1..n {
            let value = raw.get(i, j);
            if value.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                doc.push(Decl::Bracket { algebra: name.into(), left: i, right: j, value })?;
            }
        }
    }
    Ok(())
}

fn push_algebra(doc: &mut Document, name: &str, g: &LieAlgebra) -> Result<(), LangError> {
    push_table(doc, name, g.constants())
}

fn push_lsa(doc: &mut Document, name: &str, p: &Product) -> Result<(), LangError> {
    doc.push(Decl::Lsa { name: name.into(), basis: p.labels().to_vec() })?;
    for (i, j, v) in p.nonzero_products() {
        doc.push(Decl::Product { lsa: name.into(), left: i, right: j, value: v.clone() })?;
    }
    Ok(())
}

fn push_map(doc: &mut Document, name: &str, from: &str, to: &str, m: &Matrix) -> Result<(), LangError> {
    doc.push(Decl::Map { name: name.into(), from: from.into(), to: to.into(), matrix: m.clone() })
}

/// Declarations: parameters, `h` (and `k`, `pi`, split `g` when split), `j`, complex
/// structure `J`, LSA `A`, displayed table `table`, forms `inner` and `omega`.
pub fn export_entry(e: &CatalogEntry) -> Result<Document, LangError> {
    let mut doc = Document::default();
    for (k, v) in &e.params {
        doc.push(Decl::Param { name: k.clone(), value: v.clone() })?;
    }
    match &e.split {
        Some(split) => {
            push_algebra(&mut doc, "h", split.h())?;
            push_algebra(&mut doc, "k", split.k())?;
            let matrices = split.pi().matrices().to_vec();
            doc.push(Decl::Rep { name: "pi".into(), algebra: "h".into(), action: RepAction::Matrices { target: "k".into(), matrices } })?;
            doc.push(Decl::Split { name: "g".into(), def: SplitDef::Semidirect { h: "h".into(), k: "k".into(), rep: "pi".into() } })?;
        }
        None => push_algebra(&mut doc, "h", &e.algebra)?,
    }
    if let Some(j) = &e.j {
        push_map(&mut doc, "j", "h", if e.split.is_some() { "k" } else { "h" }, j)?;
    }
    // forms and J live on h, or on g when their size is that of the split algebra
    let carrier = |n: usize| match &e.split {
        Some(s) if n == s.g().dim() && n != s.h().dim() => "g",
        _ => "h",
    };
    if let Some(c) = &e.complex {
        let on = carrier(c.rows());
        push_map(&mut doc, "J", on, on, c)?;
    }
    if let Some(p) = &e.lsa {
        push_lsa(&mut doc, "A", p)?;
    }
    if let Some(t) = &e.brackets {
        push_table(&mut doc, "table", t)?;
    }
    if let Some(f) = &e.inner {
        doc.push(Decl::Form { name: "inner".into(), on: carrier(f.matrix().rows()).into(), symmetry: Symmetry::Symmetric, matrix: f.matrix().clone() })?;
    }
    if let Some(f) = &e.symplectic {
        doc.push(Decl::Form { name: "omega".into(), on: carrier(f.matrix().rows()).into(), symmetry: Symmetry::Antisymmetric, matrix: f.matrix().clone() })?;
    }
    Ok(doc)
}
