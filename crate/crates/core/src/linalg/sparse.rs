//! Sparse linear systems `A x = b` over the rationals.
//!
//! The connection-coefficient systems have `n^3` unknowns but only a handful of
//! nonzeros per equation, so rows are kept sparse and eliminated incrementally
//! against an echelon basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::{self, Scalar, Vector};

type Row = BTreeMap<usize, Scalar>;

#[derive(Debug, Clone)]
struct Pivot {
    row: Row,
    rhs: Scalar,
}

/// Incrementally reduced system. Each accepted equation is reduced against the
/// existing pivots as it is added.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    unknowns: usize,
    pivots: BTreeMap<usize, Pivot>,
    inconsistent: bool,
    equations: usize,
}

/// Outcome of [`SparseSystem::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSolution {
    pub consistent: bool,
    pub rank: usize,
    pub unknowns: usize,
    /// Solution with all free unknowns set to zero, when consistent.
    pub particular: Option<Vector>,
}

impl SparseSolution {
    pub fn is_unique(&self) -> bool {
        self.consistent && self.rank == self.unknowns
    }
}

impl SparseSystem {
    pub fn new(unknowns: usize) -> Self {
        Self {
            unknowns,
            pivots: BTreeMap::new(),
            inconsistent: false,
            equations: 0,
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.equations
    }

    /// Adds `sum coeff * x[index] = rhs`. Repeated indices are summed.
    pub fn add_equation<I>(&mut self, terms: I, rhs: Scalar)
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        self.equations += 1;
        let mut row = Row::new();
        for (i, c) in terms {
            assert!(i < self.unknowns, "unknown {i} out of range");
            if c.is_zero() {
                continue;
            }
            let e = row.entry(i).or_insert_with(Scalar::zero);
            *e += c;
            if e.is_zero() {
                row.remove(&i);
            }
        }
        self.insert(row, rhs);
    }

    fn insert(&mut self, mut row: Row, mut rhs: Scalar) {
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                if !rhs.is_zero() {
                    self.inconsistent = true;
                }
                return;
            };
            match self.pivots.get(&lead) {
                None => {
                    let inv = row[&lead].recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    rhs *= &inv;
                    self.pivots.insert(lead, Pivot { row, rhs });
                    return;
                }
                Some(p) => {
                    // pivot rows are normalised, so the factor is the leading coefficient
                    let f = row.remove(&lead).expect("lead present");
                    for (c, v) in p.row.iter().skip(1) {
                        let e = row.entry(*c).or_insert_with(Scalar::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                    rhs -= &f * &p.rhs;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// Back-substitutes with free unknowns fixed at `free_values` (indexed by unknown).
    fn back_substitute(&self, rhs_scale: &Scalar, free: &dyn Fn(usize) -> Scalar) -> Vector {
        let mut x = scalar::zeros(self.unknowns);
        for i in 0..self.unknowns {
            if !self.pivots.contains_key(&i) {
                x[i] = free(i);
            }
        }
        for (&lead, p) in self.pivots.iter().rev() {
            let mut v = rhs_scale * &p.rhs;
            for (c, a) in p.row.iter().skip(1) {
                if !x[*c].is_zero() {
                    v -= a * &x[*c];
                }
            }
            x[lead] = v;
        }
        x
    }

    pub fn solve(&self) -> SparseSolution {
        let consistent = self.is_consistent();
        SparseSolution {
            consistent,
            rank: self.rank(),
            unknowns: self.unknowns,
            particular: consistent.then(|| self.back_substitute(&Scalar::one(), &|_| Scalar::zero())),
        }
    }

    /// Basis of the homogeneous solution space, one vector per free unknown.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let zero = Scalar::zero();
        (0..self.unknowns)
            .filter(|i| !self.pivots.contains_key(i))
            .map(|f| {
                self.back_substitute(&zero, &|i| {
                    if i == f {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;
    use crate::linalg::Matrix;

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1
        let mut s = SparseSystem::new(2);
        s.add_equation([(0, int(1)), (1, int(1))], int(3));
        s.add_equation([(0, int(1)), (1, int(-1))], int(1));
        let sol = s.solve();
        assert!(sol.is_unique());
        assert_eq!(sol.particular.unwrap(), vec![int(2), int(1)]);
    }

    #[test]
    fn inconsistent_system() {
        let mut s = SparseSystem::new(2);
        s.add_equation([(0, int(1)), (1, int(1))], int(3));
        s.add_equation([(0, int(2)), (1, int(2))], int(7));
        assert!(!s.solve().consistent);
    }

    #[test]
    fn kernel_matches_dense() {
        let rows: &[&[i64]] = &[&[1, 2, 0, -1], &[0, 0, 1, 3], &[1, 2, 1, 2]];
        let dense = Matrix::from_i64(rows);
        let mut s = SparseSystem::new(4);
        for r in rows {
            s.add_equation(r.iter().enumerate().map(|(i, &c)| (i, int(c))), int(0));
        }
        let k = s.kernel_basis();
        assert_eq!(k.len(), dense.kernel_basis().len());
        for v in &k {
            assert!(scalar::is_zero(&dense.mul_vec(v)));
        }
        assert_eq!(s.rank(), dense.rank());
    }
}
