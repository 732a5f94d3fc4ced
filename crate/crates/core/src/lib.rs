//! Workbench for PA-, the induction-free fragment of Peano arithmetic.
//!
//! The crate builds formulas over `{+, *, 0, 1, <, =}`, evaluates them in
//! the standard naturals and in the positive cone of `Z[x]`, and checks the
//! arithmetic facts behind the non-integrality of fraction sums with
//! consecutive (or arithmetic-progression) denominators.

#![allow(clippy::should_implement_trait, clippy::wrong_self_convention)]

pub mod axioms;
pub mod generators;
pub mod logic;
pub mod models;
pub mod numbertheory;
