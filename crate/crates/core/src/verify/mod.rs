//! Verification suites over finite windows of the lattice of shifts.
//!
//! Every suite returns a [`report::VerificationReport`]. Sweeps run in
//! parallel but outcomes are collected in input order, so a report depends
//! only on the configuration and the seed.

pub mod appendix;
pub mod commutators;
pub mod config;
pub mod export;
pub mod finite;
pub mod formulas;
pub mod gamma;
pub mod n3;
pub mod report;
pub mod witnesses;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tableaux::ShiftVector;

pub use config::Config;
pub use report::VerificationReport;

/// The lambda used by the finite-dimensional regression.
pub const FINITE_LAMBDA: [i64; 3] = [2, 1, 0];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn window_shifts(n: usize, bound: i64) -> Vec<ShiftVector> {
    ShiftVector::window(n, bound)
}

/// `count` shifts drawn uniformly from the window, with repetition.
pub fn sample_shifts(n: usize, bound: i64, count: usize, r: &mut ChaCha8Rng) -> Vec<ShiftVector> {
    let len = n * (n - 1) / 2;
    (0..count)
        .map(|_| ShiftVector::from_flat(n, (0..len).map(|_| r.gen_range(-bound..=bound)).collect()).expect("sized"))
        .collect()
}

pub const SUITES: [&str; 7] = ["commutators", "gamma", "formulas", "appendix", "witnesses", "n3", "finite"];

/// Runs one suite by name.
pub fn run_suite(name: &str, config: &Config) -> Result<VerificationReport> {
    match name {
        "commutators" => commutators::check_commutators(config),
        "gamma" => gamma::check_gamma(config),
        "formulas" => formulas::check_formulas(config),
        "appendix" => appendix::check_appendix(config),
        "witnesses" => witnesses::check_witnesses(config),
        "n3" => n3::n3_report(config),
        "finite" => finite::check_finite(&FINITE_LAMBDA, config.seed),
        other => Err(Error::Config(format!("unknown suite {other:?}; expected one of {SUITES:?}"))),
    }
}
