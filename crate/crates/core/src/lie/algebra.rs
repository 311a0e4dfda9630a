use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::LieError;
use crate::linalg::scalar::{self, format_combination, Scalar, Vector};
use crate::linalg::Matrix;

/// A nonzero cyclic sum `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiWitness {
    pub triple: (usize, usize, usize),
    pub cyclic_sum: Vector,
}

impl fmt::Display for JacobiWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "({},{},{}) -> {:?}", i + 1, j + 1, k + 1, self.cyclic_sum.iter().map(scalar::format_scalar).collect::<Vec<_>>())
    }
}

/// Antisymmetric structure constants that have not yet been checked against Jacobi.
///
/// Only pairs `i < j` are stored; setting `(j, i)` stores the negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    labels: Vec<String>,
    table: BTreeMap<(usize, usize), Vector>,
}

impl StructureConstants {
    pub fn new(labels: Vec<String>) -> Self {
        Self {
            labels,
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sets `[e_i, e_j] = value`, overwriting any previous entry.
    pub fn set(&mut self, i: usize, j: usize, value: Vector) -> Result<(), LieError> {
        let n = self.dim();
        if i >= n || j >= n || value.len() != n {
            return Err(LieError::DimensionMismatch { expected: n, found: value.len().max(i.max(j) + 1) });
        }
        if i == j {
            if scalar::is_zero(&value) {
                return Ok(());
            }
            return Err(LieError::DiagonalBracket(i));
        }
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), scalar::neg(&value)) };
        if scalar::is_zero(&value) {
            self.table.remove(&key);
        } else {
            self.table.insert(key, value);
        }
        Ok(())
    }

    /// Builder form of [`set`](Self::set) for literal tables.
    pub fn with(mut self, i: usize, j: usize, value: Vector) -> Self {
        self.set(i, j, value).expect("invalid structure constant literal");
        self
    }

    pub fn get(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table.get(&(i, j)).cloned().unwrap_or_else(|| scalar::zeros(self.dim())),
            std::cmp::Ordering::Greater => self.table.get(&(j, i)).map(|v| scalar::neg(v)).unwrap_or_else(|| scalar::zeros(self.dim())),
            std::cmp::Ordering::Equal => scalar::zeros(self.dim()),
        }
    }

    fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = scalar::zeros(self.dim());
        for (&(i, j), v) in &self.table {
            let fwd = !x[i].is_zero() && !y[j].is_zero();
            let bwd = !x[j].is_zero() && !y[i].is_zero();
            let c = match (fwd, bwd) {
                (false, false) => continue,
                (true, false) => &x[i] * &y[j],
                (false, true) => -(&x[j] * &y[i]),
                (true, true) => &x[i] * &y[j] - &x[j] * &y[i],
            };
            scalar::axpy(&mut out, &c, v);
        }
        out
    }

    /// Every basis triple `i < j < k` whose cyclic sum is nonzero.
    pub fn jacobi_violations(&self) -> Vec<JacobiWitness> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (scalar::unit(n, i), scalar::unit(n, j), scalar::unit(n, k));
                    let mut sum = self.bracket(&self.get(i, j), &ek);
                    sum = scalar::add(&sum, &self.bracket(&self.get(j, k), &ei));
                    sum = scalar::add(&sum, &self.bracket(&self.get(k, i), &ej));
                    if !scalar::is_zero(&sum) {
                        out.push(JacobiWitness { triple: (i, j, k), cyclic_sum: sum });
                    }
                }
            }
        }
        out
    }
}

/// Validates raw structure constants against the Jacobi identity.
pub fn check_jacobi(raw: StructureConstants) -> Result<LieAlgebra, LieError> {
    let violations = raw.jacobi_violations();
    if !violations.is_empty() {
        return Err(LieError::JacobiViolation(violations));
    }
    Ok(LieAlgebra { raw })
}

/// A finite-dimensional Lie algebra given by structure constants on a labelled basis.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    raw: StructureConstants,
}

impl LieAlgebra {
    pub fn abelian(labels: Vec<String>) -> Self {
        Self {
            raw: StructureConstants::new(labels),
        }
    }

    /// Builds and Jacobi-checks an algebra from `((i, j), [e_i, e_j])` entries.
    pub fn new<I>(labels: Vec<String>, entries: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = ((usize, usize), Vector)>,
    {
        let mut raw = StructureConstants::new(labels);
        for ((i, j), v) in entries {
            raw.set(i, j, v)?;
        }
        check_jacobi(raw)
    }

    pub fn dim(&self) -> usize {
        self.raw.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.raw.labels()
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.raw
    }

    /// Same brackets, new basis names.
    pub fn relabeled(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        let mut raw = self.raw.clone();
        raw.labels = labels;
        Self { raw }
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.raw.table.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.raw.get(i, j)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, LieError> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(LieError::DimensionMismatch { expected: self.dim(), found: v.len() });
            }
        }
        Ok(self.raw.bracket(x, y))
    }

    /// Bracket of vectors already known to live in this algebra.
    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        debug_assert_eq!(x.len(), self.dim());
        debug_assert_eq!(y.len(), self.dim());
        self.raw.bracket(x, y)
    }

    pub fn is_abelian(&self) -> bool {
        self.raw.table.is_empty()
    }

    /// Matrix of `ad(x) = [x, -]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.br(x, &scalar::unit(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of the coadjoint action in the dual basis: `-(ad e_i)^T`.
    pub fn coad_basis(&self, i: usize) -> Matrix {
        self.ad_basis(i).transpose().neg()
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(v, self.labels())
    }

    /// `D[X,Y] = [DX,Y] + [X,DY]` on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        self.derivation_defect(d).is_none()
    }

    /// First basis pair where `d` fails the Leibniz rule.
    pub fn derivation_defect(&self, d: &Matrix) -> Option<(usize, usize)> {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return Some((0, 0));
        }
        let cols: Vec<Vector> = (0..n).map(|i| d.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.bracket_basis(i, j));
                let rhs = scalar::add(
                    &self.br(&cols[i], &scalar::unit(n, j)),
                    &self.br(&scalar::unit(n, i), &cols[j]),
                );
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({self})")
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_abelian() {
            return write!(f, "abelian <{}>", self.labels().join(","));
        }
        let parts: Vec<String> = self
            .nonzero_brackets()
            .map(|(i, j, v)| format!("[{},{}]={}", self.labels()[i], self.labels()[j], self.format_vector(v)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}
