//! Ready-made systems used throughout the tests and the guide.

use crate::matrix::{CoxeterMatrix, Order};
use crate::system::CoxeterSystem;

fn build(names: &[String], pairs: &[(usize, usize, Order)]) -> CoxeterSystem {
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let pairs: Vec<(&str, &str, Order)> = pairs
        .iter()
        .map(|&(i, j, m)| (names[i], names[j], m))
        .collect();
    CoxeterSystem::new(CoxeterMatrix::from_pairs(&names, &pairs).expect("valid family"))
}

fn indexed(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("s{i}")).collect()
}

/// The symmetric group on `n + 1` letters, generators `s1 … sn`.
pub fn type_a(n: usize) -> CoxeterSystem {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i, Order::Finite(3))).collect();
    build(&indexed(n), &pairs)
}

/// Type `B_n` with `m(s1,s2) = 4`, generators `s1 … sn`.
pub fn type_b(n: usize) -> CoxeterSystem {
    let pairs: Vec<_> = (1..n)
        .map(|i| (i - 1, i, Order::Finite(if i == 1 { 4 } else { 3 })))
        .collect();
    build(&indexed(n), &pairs)
}

/// The affine group of type `Ã2` on generators `s, t, u`.
pub fn affine_a2() -> CoxeterSystem {
    let names = ["s", "t", "u"].map(String::from);
    build(
        &names,
        &[
            (0, 1, Order::Finite(3)),
            (1, 2, Order::Finite(3)),
            (0, 2, Order::Finite(3)),
        ],
    )
}

/// The dihedral group of order `2m` on generators `s, t`.
pub fn dihedral(m: u32) -> CoxeterSystem {
    build(&["s", "t"].map(String::from), &[(0, 1, Order::Finite(m))])
}

pub fn infinite_dihedral() -> CoxeterSystem {
    build(&["s", "t"].map(String::from), &[(0, 1, Order::Infinite)])
}

/// The universal Coxeter group: every pair of generators is free. Rank
/// three uses the names `s, t, u`.
pub fn universal(n: usize) -> CoxeterSystem {
    let names = if n == 3 {
        ["s", "t", "u"].map(String::from).to_vec()
    } else {
        indexed(n)
    };
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j, Order::Infinite));
        }
    }
    build(&names, &pairs)
}
