//! Exact word combinatorics for Coxeter systems.
//!
//! Elements are handled through their reduced words: braid-move closures
//! decide equality and reducedness, cyclic shifts generate the κ-relation,
//! and on top of these sit conjugacy tests, finite-order detection,
//! torsion-freeness and an exact straightness decision.

mod braid;
pub mod certificate;
mod error;
pub mod families;
pub mod kappa;
mod matrix;
pub mod oracle;
pub mod parabolic;
pub mod straight;
mod system;
mod word;

pub use braid::{braid_moves, BraidMove, MoveSet};
pub use certificate::{MoveCertificate, Step};
pub use error::{Error, Result};
pub use matrix::{CoxeterMatrix, Generator, GeneratorSet, Order, MAX_RANK};
pub use system::{CoxeterSystem, DEFAULT_NODE_CAP};
pub use word::{Element, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/systems-and-words.md")]
    mod systems_and_words {}
    #[doc = include_str!("../../../book/src/cyclic-shifts.md")]
    mod cyclic_shifts {}
    #[doc = include_str!("../../../book/src/parabolics.md")]
    mod parabolics {}
    #[doc = include_str!("../../../book/src/straightness.md")]
    mod straightness {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
