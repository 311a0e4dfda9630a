//! Benchmark fixtures for semisplit.

use semisplit::lie::{labels, tangent_algebra, LieAlgebra, SplitAlgebra};
use semisplit::linalg::{int, Matrix};

/// `h_n` with basis `x_1..x_n, y_1..y_n, z`.
pub fn heisenberg(n: usize) -> LieAlgebra {
    let dim = 2 * n + 1;
    let names: Vec<String> = labels("x", n).into_iter().chain(labels("y", n)).chain(["z".to_string()]).collect();
    let brackets = (0..n).map(|i| {
        let mut z = vec![int(0); dim];
        z[2 * n] = int(1);
        ((i, n + i), z)
    });
    LieAlgebra::new(names, brackets).expect("Heisenberg algebra")
}

/// `T h_n` with the derivation `diag(1, ..., 1, 2)`.
pub fn tangent_heisenberg(n: usize) -> (SplitAlgebra, Matrix) {
    let dim = 2 * n + 1;
    let mut d = vec![int(1); dim];
    d[2 * n] = int(2);
    (tangent_algebra(&heisenberg(n)), Matrix::diagonal(&d))
}
