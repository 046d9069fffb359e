//! Numerical workbench for Dirichlet L-functions: exact character arithmetic,
//! critical-strip evaluation, critical-line zeros, and the twisted ℓ-sum
//! identities that relate them.

pub mod arith;
pub mod bump;
pub mod characters;
pub mod config;
pub mod error;
pub mod lfunc;
pub mod report;
pub mod selftest;
pub mod sums;
pub mod util;
pub mod zeros;

pub use bump::BumpFunction;
pub use characters::{
    conductor_and_primitive_part, enumerate_characters, gauss_sum, induce, CharGroup, Character,
    GaussData,
};
pub use config::Config;
pub use error::{Error, Result};
pub use lfunc::EvalParams;
pub use sums::{PhaseConvention, Rational, ReportKind, VerificationReport};
pub use zeros::{Zero, ZeroList, ZeroSource};
