//! Error type shared by all workbench modules.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid modulus q = {0}")]
    InvalidModulus(u64),

    #[error("cannot induce: conductor {conductor} does not divide target modulus {modulus}")]
    InvalidInducing { conductor: u64, modulus: u64 },

    #[error("pole at s = {0}")]
    Pole(Complex64),

    #[error("L(s,chi) vanishes within the detection floor near s = {s} (|L| = {magnitude:.3e})")]
    NearZeroOfL { s: Complex64, magnitude: f64 },

    #[error("Cauchy circle of radius {radius} around s = {s} violates the pole-distance constraint")]
    RadiusViolation { s: Complex64, radius: f64 },

    #[error("Stieltjes constant gamma_{0} is not supported (only n = 0, 1)")]
    UnsupportedStieltjesIndex(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("sieve request N = {request} exceeds the configured cap {cap}")]
    SieveCapExceeded { request: u64, cap: u64 },

    #[error("zero scan failed to stabilize counts in window ({t0}, {t1}) after {halvings} halvings")]
    ScanFailure { t0: f64, t1: f64, halvings: u32 },

    #[error("zero list covers only (0, {have}] but the sum needs (0, {needed}] with complete counts")]
    Coverage { needed: f64, have: f64 },

    #[error("exponent fit needs at least 3 positive residuals, got {0}")]
    Fit(usize),

    #[error("parse error at {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("zero verification failed for ordinates {0:?} (|L| above import floor)")]
    ZeroVerification(Vec<f64>),

    #[error("config error: {0}")]
    Config(String),

    #[error("http fetch failed: {0}")]
    Http(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
