use std::fmt;

use super::{LieAlgebra, Subspace};

/// Finest of abelian ⊂ nilpotent ⊂ solvable that applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solvability {
    Abelian,
    /// Smallest `s` with `C^s g = 0` where `C^1 g = [g, g]`... counted so Heisenberg is 2-step.
    Nilpotent { step: usize },
    /// Derived length.
    Solvable { length: usize },
    NonSolvable,
}

impl Solvability {
    pub fn is_solvable(self) -> bool {
        !matches!(self, Solvability::NonSolvable)
    }

    pub fn is_nilpotent(self) -> bool {
        matches!(self, Solvability::Abelian | Solvability::Nilpotent { .. })
    }
}

impl fmt::Display for Solvability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Solvability::Abelian => f.write_str("abelian"),
            Solvability::Nilpotent { step } => write!(f, "nilpotent({step})"),
            Solvability::Solvable { length } => write!(f, "solvable({length})"),
            Solvability::NonSolvable => f.write_str("non_solvable"),
        }
    }
}

/// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ...` until it stabilises.
pub fn derived_series(g: &LieAlgebra) -> Vec<Subspace> {
    let mut series = vec![Subspace::full(g.dim())];
    loop {
        let last = series.last().expect("nonempty");
        let next = last.bracket_with(g, last);
        if next.dim() == last.dim() {
            return series;
        }
        series.push(next);
    }
}

/// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...` until it stabilises.
pub fn lower_central_series(g: &LieAlgebra) -> Vec<Subspace> {
    let full = Subspace::full(g.dim());
    let mut series = vec![full.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = full.bracket_with(g, last);
        if next.dim() == last.dim() {
            return series;
        }
        series.push(next);
    }
}

pub fn solvability_class(g: &LieAlgebra) -> Solvability {
    if g.is_abelian() {
        return Solvability::Abelian;
    }
    let lcs = lower_central_series(g);
    if lcs.last().is_none_or(|s| s.dim() == 0) {
        return Solvability::Nilpotent { step: lcs.len() - 1 };
    }
    let ds = derived_series(g);
    if ds.last().is_none_or(|s| s.dim() == 0) {
        return Solvability::Solvable { length: ds.len() - 1 };
    }
    Solvability::NonSolvable
}
