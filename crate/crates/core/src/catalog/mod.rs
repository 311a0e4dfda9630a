//! Named algebras, split structures and LSAs from the worked examples, with their expected
//! check outcomes and a one-shot verification run.

mod entries;
mod verify;

pub use entries::{a_n_alphas, r3_minus1_lsa, r3_minus1_lsa_printed};
pub use verify::{run_entry, verify, verify_all, CatalogReport, CheckOutcome, Diagnostic, EntryReport};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::geometry::{BilinearForm, GeometryError};
use crate::lie::{LieAlgebra, LieError, SplitAlgebra, StructureConstants};
use crate::linalg::scalar::{format_scalar, Scalar};
use crate::linalg::{LinalgError, Matrix};
use crate::lsa::{LsaError, Product};
use crate::structures::StructureError;

pub type Params = BTreeMap<String, Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("entry {entry} has no parameter {param:?}")]
    UnknownParam { entry: String, param: String },
    #[error("parameter {param} = {value} out of range: {domain}")]
    ParamOutOfRange { param: String, value: String, domain: &'static str },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Lsa(#[from] LsaError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl CatalogError {
    pub(crate) fn out_of_range(param: &str, value: &Scalar, domain: &'static str) -> Self {
        CatalogError::ParamOutOfRange { param: param.to_string(), value: format_scalar(value), domain }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Data exactly as displayed in the source, misprints included.
    AsPrinted,
    Corrected,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::AsPrinted => "as_printed",
            Provenance::Corrected => "corrected",
        })
    }
}

/// One expected outcome of an entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    /// `N_J = 0`, `N_E = 0` and `k abelian ∧ j cocycle` agree, with the given common value.
    Integrability { integrable: bool },
    /// The three torsion-free parallel systems agree with integrability; when integrable the
    /// unique solution is the canonical connection, flat, and parallelizes `J`, `E`, `F`.
    ParallelConnection,
    /// `j` is a nonsingular derivation of a nilpotent `h`.
    TangentDerivation,
    /// No nonsingular 1-cocycle with coefficients in `[-bound, bound]`.
    NoNonsingularCocycle { bound: u32 },
    /// The entry's LSA is left-symmetric and compatible with its algebra.
    LsaCompatible,
    /// The LSA induced by `j` equals the entry's LSA table.
    LsaFromJ,
    Correspondence,
    /// `h ⋉ V` built from the LSA with `theta = Id` has the entry's bracket table.
    SemidirectFromLsa,
    /// The split algebra has the entry's bracket table.
    BracketTable,
    Solvable,
    /// `omega_J`, `omega_E`, `omega_F` closedness against the block condition.
    Closedness,
    Kahler,
    /// The entry's complex structure squares to `-Id` and is integrable.
    ComplexStructure,
    AbelianComplex,
    TotallyReal { basis: Vec<usize>, expected: bool },
    AbelianSubalgebra { basis: Vec<usize> },
    /// Symplectic form, its torsion-free flat connection, and the Hermitian structure on the cotangent algebra.
    Symplectic,
    /// A displayed basis vector that must name a basis element of the algebra.
    BasisReference { label: String, context: String },
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::Integrability { .. } => "integrability",
            Check::ParallelConnection => "parallel_connection",
            Check::TangentDerivation => "tangent_derivation",
            Check::NoNonsingularCocycle { .. } => "nonsingular_cocycle_search",
            Check::LsaCompatible => "lsa_compatible",
            Check::LsaFromJ => "lsa_from_j",
            Check::Correspondence => "correspondence",
            Check::SemidirectFromLsa => "semidirect_from_lsa",
            Check::BracketTable => "bracket_table",
            Check::Solvable => "solvability",
            Check::Closedness => "closedness",
            Check::Kahler => "kahler",
            Check::ComplexStructure => "complex_structure",
            Check::AbelianComplex => "abelian_complex",
            Check::TotallyReal { .. } => "totally_real",
            Check::AbelianSubalgebra { .. } => "abelian_subalgebra",
            Check::Symplectic => "symplectic",
            Check::BasisReference { .. } => "basis_reference",
        }
    }

    /// The statement the check reproduces.
    pub fn reference(&self) -> &'static str {
        match self {
            Check::Integrability { .. } => "N_J = 0 iff N_E = 0 iff (k abelian and j a 1-cocycle)",
            Check::ParallelConnection => "torsion-free connection parallelizing two of F, J, E exists iff J is integrable",
            Check::TangentDerivation => "integrable J on a tangent algebra: j nonsingular derivation, h nilpotent",
            Check::NoNonsingularCocycle { .. } => "no totally real complex structure on the tangent algebra",
            Check::LsaCompatible => "LSA axioms and compatibility with the Lie bracket",
            Check::LsaFromJ => "x.y = j^-1 pi(x) j y",
            Check::Correspondence => "LSA, integrable J, E and parallelizing connection correspond",
            Check::SemidirectFromLsa => "LSA gives the semidirect product h + V with J e_i = v_i",
            Check::BracketTable => "displayed bracket table of the split algebra",
            Check::Solvable => "an algebra with a compatible LSA is solvable",
            Check::Closedness => "omega_J, omega_E, omega_F closed iff k abelian and the block identity",
            Check::Kahler => "skew j^-1 pi j: almost Kahler implies Kahler",
            Check::ComplexStructure => "J^2 = -Id and N_J = 0",
            Check::AbelianComplex => "[JY,JZ] = [Y,Z]",
            Check::TotallyReal { .. } => "JU meets U trivially",
            Check::AbelianSubalgebra { .. } => "span is an abelian subalgebra",
            Check::Symplectic => "symplectic form, its affine connection and Hermitian cotangent structure",
            Check::BasisReference { .. } => "displayed structure refers to basis vectors of the algebra",
        }
    }
}

/// The assembled objects of a catalog entry and the outcomes expected of them.
///
/// `algebra` is the base algebra `h` when there is a split, otherwise the algebra carrying
/// the structures. `complex` acts on `algebra`, or on the split algebra when sizes say so.
/// `lsa` lives on `algebra`; `brackets` is a displayed table of the split algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub provenance: Provenance,
    pub description: &'static str,
    pub params: Params,
    pub algebra: LieAlgebra,
    pub split: Option<SplitAlgebra>,
    pub j: Option<Matrix>,
    pub complex: Option<Matrix>,
    pub lsa: Option<Product>,
    pub brackets: Option<StructureConstants>,
    pub inner: Option<BilinearForm>,
    pub symplectic: Option<BilinearForm>,
    pub checks: Vec<Check>,
    /// Differences between the displayed data and the verified data of a corrected entry.
    pub errata: Vec<String>,
}

impl CatalogEntry {
    /// `name[k=v,...]` with the bindings in key order.
    pub fn instance_name(&self) -> String {
        if self.params.is_empty() {
            return self.name.clone();
        }
        let b: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", format_scalar(v))).collect();
        format!("{}[{}]", self.name, b.join(","))
    }
}

/// Entry name, provenance, parameter names and the default bindings verified by `verify_all`.
#[derive(Debug, Clone)]
pub struct EntryInfo {
    pub name: &'static str,
    pub provenance: Provenance,
    pub description: &'static str,
    pub params: &'static [&'static str],
    pub defaults: Vec<Params>,
}

pub fn entry_names() -> Vec<&'static str> {
    entries::infos().iter().map(|i| i.name).collect()
}

pub fn entry_info(name: &str) -> Option<EntryInfo> {
    entries::infos().into_iter().find(|i| i.name == name)
}

pub fn entry_infos() -> Vec<EntryInfo> {
    entries::infos()
}

/// Builds an entry; parameters not bound fall back to the first default binding.
pub fn build(name: &str, params: &Params) -> Result<CatalogEntry, CatalogError> {
    let info = entry_info(name).ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))?;
    for key in params.keys() {
        if !info.params.contains(&key.as_str()) && !(name.starts_with("a_n") && key.starts_with("alpha")) {
            return Err(CatalogError::UnknownParam { entry: name.to_string(), param: key.clone() });
        }
    }
    let mut bound = info.defaults.first().cloned().unwrap_or_default();
    if name.starts_with("a_n") && params.contains_key("n") {
        bound.retain(|k, _| !k.starts_with("alpha"));
    }
    bound.extend(params.iter().map(|(k, v)| (k.clone(), v.clone())));
    entries::build_entry(name, bound)
}

/// Every entry at every default binding, in catalog order.
pub fn all_entries() -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out = Vec::new();
    for info in entries::infos() {
        for p in &info.defaults {
            out.push(build(info.name, p)?);
        }
    }
    Ok(out)
}
