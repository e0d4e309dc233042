use rayon::prelude::*;

use crate::error::Result;
use crate::linear::{bracket_sides, generators, Cached, GlModule, LinComb};

use super::config::{Config, Target};
use super::report::{check_eq, check_result, Check, Tally, VerificationReport};
use super::window_shifts;

/// `[E_ab, E_cd] x = delta_bc E_ad x - delta_da E_cb x` for every ordered pair
/// of generators and every `x` in `symbols`.
pub fn bracket_sweep<M: GlModule>(tally: &mut Tally, module: &M, symbols: &[M::Basis]) {
    let gens = generators(module.n());
    let per_symbol: Vec<Vec<Check>> = symbols
        .par_iter()
        .map(|b| {
            let cached = Cached::new(module);
            let x = LinComb::basis(b.clone());
            let mut out = Vec::with_capacity(gens.len() * gens.len());
            for &g in &gens {
                for &h in &gens {
                    let input = || format!("[E_{}{}, E_{}{}] on {b}", g.0, g.1, h.0, h.1);
                    out.push(check_result(
                        input,
                        bracket_sides(&cached, g, h, &x).map(|(lhs, rhs)| check_eq(input, &lhs, &rhs)),
                    ));
                }
            }
            out
        })
        .collect();
    tally.record_all(per_symbol.into_iter().flatten());
}

/// Exhaustive bracket sweep over the configured window.
pub fn check_commutators(config: &Config) -> Result<VerificationReport> {
    let target = config.target()?;
    let mut tally = Tally::new("commutators", target.describe(), config.window, config.seed);
    match &target {
        Target::Generic(m) => bracket_sweep(&mut tally, m, &window_shifts(config.n, config.window)),
        Target::Singular(m) => bracket_sweep(&mut tally, m, &m.window_symbols(config.window)),
    }
    Ok(tally.finish())
}
