//! Exact-arithmetic complex, paracomplex and affine structures on semidirect-product Lie algebras.

pub mod catalog;
pub mod connections;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod lsa;
pub mod structures;

pub use catalog::{CatalogEntry, CatalogError, Provenance};
pub use connections::{Connection, ConnectionError};
pub use geometry::{BilinearForm, GeometryError};
pub use lie::{LieAlgebra, LieError, Representation, SplitAlgebra, StructureConstants};
pub use linalg::{LinalgError, Matrix, Scalar, Vector};
pub use lsa::{Lsa, LsaError, Product};
pub use structures::{Kind, SplitEndo, StructureError};

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Connection(#[from] ConnectionError),
    #[error(transparent)]
    Lsa(#[from] LsaError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
