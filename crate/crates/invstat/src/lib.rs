//! Statistics of pattern-avoiding involutions.
//!
//! The crate enumerates permutations, involutions and fixed-point-free
//! involutions that avoid given patterns, computes the distribution of the
//! classical statistics (`inv`, `maj`, `des` and their reversals) as exact
//! integer polynomials, evaluates the known closed forms and recurrences for
//! those distributions, and realises the bijections that explain them
//! (RSK/tableau transposition, binary-word encodings, descent-set encodings,
//! cycle-insertion decompositions and the `132 -> 213` recursion).
//!
//! Everything is cross-checked against a brute-force oracle; see the
//! `examples/` directory for a tour of each capability and the `invstat`
//! binary for a command-line front end.

pub mod bijections;
pub mod cli;
pub mod conjectures;
pub mod formulas;
pub mod oracle;
pub mod perm;
pub mod qpoly;
pub mod syt;
pub mod tables;
pub mod verify;
pub mod words;

pub use perm::Permutation;
pub use qpoly::MultiPoly;
