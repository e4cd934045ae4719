//! Untyped lambda-calculus engine and reduction-dataset toolkit.
//!
//! Terms are written in prefix notation: `L x M` is an abstraction, `@ M N`
//! an application. The de Bruijn form drops binder names and writes bound
//! variables as the number of binders up to their abstraction (innermost is
//! `1`); every free variable is written `0`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, parallel
//! generation and the command-line front end live in the `lambda-forge`
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod debruijn;
pub mod encodings;
pub mod gen;
pub mod metrics;
pub mod reduce;
pub mod syntax;
pub mod term;

pub use debruijn::{alpha_equal, from_debruijn, to_debruijn, NameOrder, NameSupplyExhausted};
pub use reduce::{
    beta_reduce_once, find_redex, normalize, normalize_db, reduce_db_once, substitute,
    Normalization, PathStep, Redex, ReductionOutcome, Strategy, DEFAULT_MAX_STEPS,
};
pub use syntax::{parse_debruijn, parse_traditional, ParseError, ParseErrorKind};
pub use term::{DbTerm, Term, VarName};

/// Largest token count a term may have in any generated dataset.
pub const DEFAULT_MAX_TOKENS: usize = 250;
