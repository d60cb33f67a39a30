//! Workbench for finite matrix connexive logics.
//!
//! The crate provides:
//! - a propositional formula/schema syntax with parser and printer
//!   ([`formula`], [`parser`]),
//! - finite matrix logics with a JSON definition format and the bundled
//!   matrices ([`matrix`]),
//! - semantic checks: validity, satisfiability, rule preservation,
//!   entailment ([`semantics`]),
//! - a catalog of connexive principles and a classifier ([`principles`]),
//! - a Hilbert-style proof verifier with the bundled derivation corpus
//!   ([`hilbert`]),
//! - exhaustive search over small matrices with isomorphism deduplication
//!   ([`search`]).

pub mod cli;
pub mod formula;
pub mod hilbert;
pub mod matrix;
pub mod parser;
pub mod principles;
pub mod search;
pub mod semantics;

pub use cli::cli_main;
