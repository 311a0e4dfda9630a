use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(name = "semisplit", version, about = "Exact verification of split structures on semidirect-product Lie algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SEMISPLIT_FORMAT", default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Property checks on a definition file.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Construct algebras from definitions.
    #[command(subcommand)]
    Build(BuildCmd),
    /// Connections determined by a split structure.
    #[command(subcommand)]
    Connection(ConnectionCmd),
    /// Existence reports.
    #[command(subcommand)]
    Report(ReportCmd),
    /// Left-symmetric algebras from split structures.
    #[command(subcommand)]
    Lsa(LsaCmd),
    /// Split algebras from left-symmetric algebras.
    #[command(subcommand)]
    Semidirect(SemidirectCmd),
    /// 1-cocycles of a representation.
    Cocycles {
        file: PathBuf,
        h: String,
        rep: String,
        /// Search for a nonsingular cocycle.
        #[arg(long)]
        nonsingular: bool,
        /// Coefficient bound of the search.
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Affine connection of a symplectic form.
    Chu { file: PathBuf, h: String, form: String },
    /// Built-in worked examples.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Print a definition file in canonical form.
    Fmt { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct SplitJ {
    pub file: PathBuf,
    pub split: String,
    pub j: String,
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Jacobi identity of a declared bracket table.
    Jacobi { file: PathBuf, name: String },
    /// Integrability of J and E built from j.
    Integrable(SplitJ),
    /// Almost Kähler versus Kähler for the metric extended from an inner product on h.
    Kahler {
        #[command(flatten)]
        target: SplitJ,
        inner: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildCmd {
    /// h ⋉ k from a representation by derivations.
    Semidirect { file: PathBuf, h: String, k: String, rep: String },
}

#[derive(Debug, Subcommand)]
pub enum ConnectionCmd {
    /// The connection parallelizing F, J and E.
    Canonical(SplitJ),
}

#[derive(Debug, Subcommand)]
pub enum ReportCmd {
    /// Existence of torsion-free connections parallelizing pairs of F, J, E.
    ParallelConnection(SplitJ),
}

#[derive(Debug, Subcommand)]
pub enum LsaCmd {
    /// The LSA x·y = j^-1 pi(x) j y.
    FromJ(SplitJ),
}

#[derive(Debug, Subcommand)]
pub enum SemidirectCmd {
    /// The split algebra h ⋉ V of an LSA.
    FromLsa {
        file: PathBuf,
        lsa: String,
        #[arg(long)]
        theta: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    /// Run the expected checks of catalog entries.
    Verify {
        /// Glob on entry names.
        #[arg(long)]
        filter: Option<String>,
        /// Parameter binding `k=v`, repeatable.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Write an entry in the definition language.
    Export {
        name: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Entry names, provenance and parameters.
    List,
}
