//! Turns declarations of a [`Document`] into validated core objects.

use semisplit::geometry::BilinearForm;
use semisplit::lie::{check_jacobi, cotangent_algebra, semidirect_product, tangent_algebra, LieAlgebra, Representation, SplitAlgebra, StructureConstants};
use semisplit::linalg::Matrix;
use semisplit::lsa::Product;

use crate::error::CliError;
use crate::lang::{Decl, Document, RepAction, SplitDef};

pub struct Model<'a> {
    doc: &'a Document,
}

impl<'a> Model<'a> {
    pub fn new(doc: &'a Document) -> Self {
        Self { doc }
    }

    pub fn document(&self) -> &Document {
        self.doc
    }

    fn lookup(&self, name: &str, what: &str) -> Result<(usize, &'a Decl), CliError> {
        let (i, d) = self
            .doc
            .find(name)
            .ok_or_else(|| CliError::validation(None, format!("no {what} named {name:?}")))?;
        Ok((self.doc.line_of(i), d))
    }

    pub fn line(&self, name: &str) -> Option<usize> {
        self.doc.find(name).map(|(i, _)| self.doc.line_of(i))
    }

    /// Brackets as declared, not yet checked against Jacobi.
    pub fn constants(&self, name: &str) -> Result<StructureConstants, CliError> {
        let (line, d) = self.lookup(name, "algebra")?;
        let Decl::Algebra { basis, .. } = d else {
            return Err(CliError::validation(Some(line), format!("{name} is not an algebra")));
        };
        let mut raw = StructureConstants::new(basis.clone());
        for d in self.doc.decls() {
            if let Decl::Bracket { algebra, left, right, value } = d {
                if algebra == name {
                    raw.set(*left, *right, value.clone()).map_err(|e| CliError::validation(Some(line), e.to_string()))?;
                }
            }
        }
        Ok(raw)
    }

    pub fn algebra(&self, name: &str) -> Result<LieAlgebra, CliError> {
        let raw = self.constants(name)?;
        check_jacobi(raw).map_err(|e| CliError::validation(self.line(name), format!("algebra {name}: {e}")))
    }

    /// An algebra, or the algebra g of a split.
    pub fn lie(&self, name: &str) -> Result<LieAlgebra, CliError> {
        match self.lookup(name, "algebra")? {
            (_, Decl::Split { .. }) => Ok(self.split(name)?.g().clone()),
            _ => self.algebra(name),
        }
    }

    pub fn product(&self, name: &str) -> Result<Product, CliError> {
        let (line, d) = self.lookup(name, "lsa")?;
        let Decl::Lsa { basis, .. } = d else {
            return Err(CliError::validation(Some(line), format!("{name} is not an lsa")));
        };
        let mut p = Product::zero(basis.clone());
        for d in self.doc.decls() {
            if let Decl::Product { lsa, left, right, value } = d {
                if lsa == name {
                    p.set(*left, *right, value.clone());
                }
            }
        }
        Ok(p)
    }

    /// `(from, to, matrix)`.
    pub fn map(&self, name: &str) -> Result<(String, String, Matrix), CliError> {
        match self.lookup(name, "map")? {
            (_, Decl::Map { from, to, matrix, .. }) => Ok((from.clone(), to.clone(), matrix.clone())),
            (line, _) => Err(CliError::validation(Some(line), format!("{name} is not a map"))),
        }
    }

    pub fn matrix(&self, name: &str) -> Result<Matrix, CliError> {
        Ok(self.map(name)?.2)
    }

    /// The algebra acted on, the target algebra and one matrix per basis vector, unvalidated.
    pub fn rep_matrices(&self, name: &str) -> Result<(String, String, Vec<Matrix>), CliError> {
        let (line, d) = self.lookup(name, "representation")?;
        let Decl::Rep { algebra, action, .. } = d else {
            return Err(CliError::validation(Some(line), format!("{name} is not a representation")));
        };
        Ok(match action {
            RepAction::Matrices { target, matrices } => (algebra.clone(), target.clone(), matrices.clone()),
            RepAction::Adjoint => {
                let h = self.algebra(algebra)?;
                (algebra.clone(), algebra.clone(), Representation::adjoint(&h).matrices().to_vec())
            }
            RepAction::Coadjoint => {
                let h = self.algebra(algebra)?;
                (algebra.clone(), algebra.clone(), Representation::coadjoint(&h).matrices().to_vec())
            }
        })
    }

    pub fn representation(&self, name: &str) -> Result<(LieAlgebra, Representation), CliError> {
        let (alg, _, matrices) = self.rep_matrices(name)?;
        let h = self.algebra(&alg)?;
        let rep = Representation::new(&h, matrices).map_err(|e| CliError::validation(self.line(name), format!("{name}: {e}")))?;
        Ok((h, rep))
    }

    pub fn split(&self, name: &str) -> Result<SplitAlgebra, CliError> {
        let (line, d) = self.lookup(name, "split")?;
        let Decl::Split { def, .. } = d else {
            return Err(CliError::validation(Some(line), format!("{name} is not a split")));
        };
        match def {
            SplitDef::Tangent(h) => Ok(tangent_algebra(&self.algebra(h)?)),
            SplitDef::Cotangent(h) => Ok(cotangent_algebra(&self.algebra(h)?)),
            SplitDef::Semidirect { h, k, rep } => {
                let (ha, pi) = self.representation(rep)?;
                let _ = h;
                let ka = self.algebra(k)?;
                semidirect_product(&ha, &ka, &pi).map_err(|e| CliError::validation(Some(line), format!("split {name}: {e}")))
            }
        }
    }

    pub fn form(&self, name: &str) -> Result<BilinearForm, CliError> {
        match self.lookup(name, "form")? {
            (line, Decl::Form { symmetry, matrix, .. }) => {
                BilinearForm::new(matrix.clone(), *symmetry).map_err(|e| CliError::validation(Some(line), e.to_string()))
            }
            (line, _) => Err(CliError::validation(Some(line), format!("{name} is not a form"))),
        }
    }
}
