//! Toolkit for a clausal branching-time normal form and Büchi tree automata.
//!
//! The crate provides, end to end:
//!
//! - the clause language and its normalization ([`bnf`]);
//! - finite indexed models with a satisfaction checker and a bounded model
//!   search ([`model`]);
//! - Büchi tree automata with an emptiness decision and a brute-force
//!   accepting-run oracle ([`automata`]);
//! - the characteristic clause-set encoding of an automaton ([`encode`]);
//! - a tableau decision procedure for clause sets, with model and automaton
//!   extraction from the reduced graph ([`tableau`]);
//! - text formats and a CLI wiring the pipeline together ([`text`], the
//!   `bnftree` binary).

pub mod automata;
pub mod bnf;
pub mod corpus;
pub mod encode;
pub mod formula;
pub mod model;
pub mod tableau;
pub mod text;
