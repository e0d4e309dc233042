use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::exact_arith::Rational;
use crate::generic_module::GenericModule;
use crate::linear::{crs_via_composition, Cached, GlModule, LinComb};
use crate::singular_module::{canonical_symbol, BasisSymbol, Kind, SingularModule};
use crate::tableaux::ShiftVector;

use super::config::{Config, Target};
use super::report::{check_eq, check_result, check_that, Check, Exemplar, Tally, VerificationReport};
use super::{rng, sample_shifts, window_shifts};

pub const RANDOM_SYMBOLS: usize = 20;

/// `1! 2! ... (n-1)!`
pub fn q_bound(n: usize) -> u64 {
    (1..n as u64).map(|m| (1..=m).product::<u64>()).product()
}

/// The pairs `1 <= s <= r <= min(n, 3)`.
pub fn gamma_indices(n: usize) -> Vec<(usize, usize)> {
    (1..=n.min(3)).flat_map(|r| (1..=r).map(move |s| (r, s))).collect()
}

/// `c_rs` by composition equals the eigenvalue `gamma_rs(T + z)` on each shift.
pub fn generic_gamma_checks(tally: &mut Tally, m: &GenericModule, shifts: &[ShiftVector]) {
    let idx = gamma_indices(m.n());
    let results: Vec<Vec<Check>> = shifts
        .par_iter()
        .map(|z| {
            let cached = Cached::new(m);
            let x = LinComb::basis(z.clone());
            idx.iter()
                .map(|&(r, s)| {
                    let input = || format!("c_{r}{s} on {z}");
                    check_result(input, (|| {
                        let lhs = crs_via_composition(&cached, r, s, &x)?;
                        let rhs = x.scaled(&m.gamma_eigenvalue(r, s, z)?);
                        Ok(check_eq(input, &lhs, &rhs))
                    })())
                })
                .collect()
        })
        .collect();
    tally.record_all(results.into_iter().flatten());
}

/// `c_rs` by composition equals the Jordan form on each symbol.
pub fn singular_gamma_checks(tally: &mut Tally, m: &SingularModule, symbols: &[BasisSymbol]) {
    let idx = gamma_indices(m.n());
    let results: Vec<Vec<Check>> = symbols
        .par_iter()
        .map(|b| {
            let cached = Cached::new(m);
            let x = LinComb::basis(b.clone());
            idx.iter()
                .map(|&(r, s)| {
                    let input = || format!("c_{r}{s} on {b}");
                    check_result(input, (|| {
                        let lhs = crs_via_composition(&cached, r, s, &x)?;
                        let rhs = m.gamma_action_singular(r, s, &x)?;
                        Ok(check_eq(input, &lhs, &rhs))
                    })())
                })
                .collect()
        })
        .collect();
    tally.record_all(results.into_iter().flatten());
}

/// `c_rs c_r's' x = c_r's' c_rs x` for the cheap pairs `r, r' <= 2`.
pub fn commutativity_checks<M: GlModule>(tally: &mut Tally, m: &M, symbols: &[M::Basis]) {
    let idx: Vec<_> = gamma_indices(m.n()).into_iter().filter(|&(r, _)| r <= 2).collect();
    let results: Vec<Vec<Check>> = symbols
        .par_iter()
        .map(|b| {
            let cached = Cached::new(m);
            let x = LinComb::basis(b.clone());
            let mut out = Vec::new();
            for (pos, &(r, s)) in idx.iter().enumerate() {
                for &(r2, s2) in &idx[pos + 1..] {
                    let input = || format!("[c_{r}{s}, c_{r2}{s2}] on {b}");
                    out.push(check_result(input, (|| {
                        let ab = crs_via_composition(&cached, r, s, &crs_via_composition(&cached, r2, s2, &x)?)?;
                        let ba = crs_via_composition(&cached, r2, s2, &crs_via_composition(&cached, r, s, &x)?)?;
                        Ok(check_eq(input, &ab, &ba))
                    })()));
                }
            }
            out
        })
        .collect();
    tally.record_all(results.into_iter().flatten());
}

/// Random shifts with `tau z != z`, returned with `z_ki > z_kj` so that
/// `Der(z)` is canonical.
pub fn sample_unfixed(m: &SingularModule, bound: i64, count: usize, seed: u64) -> Vec<ShiftVector> {
    let f = m.frame();
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let z = ShiftVector::from_flat(
            f.n(),
            (0..f.n() * (f.n() - 1) / 2).map(|_| r.gen_range(-bound..=bound)).collect(),
        )
        .expect("sized");
        match f.pair_gap(&z) {
            0 => {}
            g if g > 0 => out.push(z),
            _ => out.push(f.tau_shift(&z)),
        }
    }
    out
}

/// With `N = c_k2 - gamma_k2(vbar + z)`: `N Der(z) != 0`, `N^2 Der(z) = 0`,
/// `N Reg(z) = 0`, and `N Der(z)` is `D(gamma_k2) Reg(z)`.
///
/// Returns the off-diagonal entries together with `z_ki - z_kj`.
pub fn jordan_checks(tally: &mut Tally, m: &SingularModule, shifts: &[ShiftVector]) -> Vec<(Rational, i64)> {
    let f = m.frame();
    let k = f.k();
    let results: Vec<(Vec<Check>, Option<(Rational, i64)>)> = shifts
        .par_iter()
        .map(|z| {
            let cached = Cached::new(m);
            let mut checks = Vec::new();
            let mut entry = None;
            let input = || format!("N = c_{k}2 - gamma on DT{z}");
            let res: Result<()> = (|| {
                let g = m.gamma_on_line(k, 2, z)?;
                let ev = g.ev_op()?;
                let nil = |x: &LinComb<BasisSymbol>| -> Result<LinComb<BasisSymbol>> {
                    Ok(crs_via_composition(&cached, k, 2, x)?.minus(&x.scaled(&ev)))
                };
                let der = LinComb::basis(BasisSymbol::der(z.clone()));
                let reg_sym = canonical_symbol(&f.tau_shift(z), f);
                let reg = LinComb::basis(reg_sym.clone());
                let n1 = nil(&der)?;
                checks.push(check_that(!n1.is_zero(), input, || n1.to_string(), "nonzero"));
                let n2 = nil(&n1)?;
                checks.push(check_that(n2.is_zero(), input, || n2.to_string(), "0"));
                let nreg = nil(&reg)?;
                checks.push(check_that(nreg.is_zero(), || format!("N on {reg_sym}"), || nreg.to_string(), "0"));
                let expected = reg.scaled(&g.d_op()?);
                checks.push(check_eq(input, &n1, &expected));
                entry = Some((n1.coeff(&reg_sym), f.pair_gap(z)));
                Ok(())
            })();
            if let Err(e) = res {
                checks.push(Err(Exemplar::new(input(), format!("error: {e}"), "no error")));
            }
            (checks, entry)
        })
        .collect();
    let mut entries = Vec::new();
    for (checks, entry) in results {
        tally.record_all(checks);
        entries.extend(entry);
    }
    entries
}

/// Groups the symbols by full character. Each class has at most two elements,
/// at most `Q_n`, and a single element exactly when its shift is `tau`-fixed.
pub fn multiplicity_checks(tally: &mut Tally, m: &SingularModule, symbols: &[BasisSymbol]) -> Result<usize> {
    let chars: Vec<Vec<Rational>> = symbols
        .par_iter()
        .map(|b| m.character(&b.z))
        .collect::<Result<_>>()?;
    let mut classes: BTreeMap<Vec<Rational>, Vec<&BasisSymbol>> = BTreeMap::new();
    for (b, c) in symbols.iter().zip(chars) {
        classes.entry(c).or_default().push(b);
    }
    let qn = q_bound(m.n()) as usize;
    let f = m.frame();
    let mut largest = 0;
    for class in classes.values() {
        largest = largest.max(class.len());
        let members = || class.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ");
        tally.record(check_that(class.len() <= 2 && class.len() <= qn, members, || class.len().to_string(), "<= 2"));
        let fixed = class.iter().any(|b| f.is_tau_fixed(&b.z));
        tally.record(check_that(
            (class.len() == 1) == fixed,
            members,
            || format!("size {} tau-fixed {fixed}", class.len()),
            "size 1 iff tau-fixed",
        ));
        // a pair is Reg(tau w), Der(w)
        if class.len() == 2 {
            let kinds: Vec<Kind> = class.iter().map(|b| b.kind).collect();
            let same = f.tau_shift(&class[0].z) == class[1].z || class[0].z == f.tau_shift(&class[1].z);
            tally.record(check_that(
                kinds.contains(&Kind::Reg) && kinds.contains(&Kind::Der) && same,
                members,
                || format!("{kinds:?}"),
                "Reg(tau w), Der(w)",
            ));
        }
    }
    Ok(largest)
}

/// Shifts that differ somewhere in rows `< k` have different characters over
/// those rows.
pub fn separation_checks(tally: &mut Tally, m: &SingularModule, shifts: &[ShiftVector]) -> Result<()> {
    let k = m.frame().k();
    let lower = |z: &ShiftVector| -> Vec<i64> {
        z.positions().filter(|&(r, _)| r < k).map(|(r, s)| z.get(r, s)).collect()
    };
    let chars: Vec<Vec<Rational>> = shifts
        .par_iter()
        .map(|z| m.lower_character(z))
        .collect::<Result<_>>()?;
    let mut seen: BTreeMap<Vec<Rational>, Vec<i64>> = BTreeMap::new();
    let mut visited = BTreeSet::new();
    for (z, c) in shifts.iter().zip(chars) {
        let rows = lower(z);
        if !visited.insert(rows.clone()) {
            continue;
        }
        let check = match seen.get(&c) {
            Some(prev) => Err(Exemplar::new(
                format!("lower rows {rows:?} vs {prev:?}"),
                format!("{c:?}"),
                "distinct characters",
            )),
            None => Ok(()),
        };
        tally.record(check);
        seen.insert(c, rows);
    }
    Ok(())
}

fn random_symbols(m: &SingularModule, bound: i64, seed: u64) -> Vec<BasisSymbol> {
    let mut r = rng(seed);
    sample_shifts(m.n(), bound, RANDOM_SYMBOLS, &mut r)
        .iter()
        .map(|z| canonical_symbol(z, m.frame()))
        .collect()
}

pub fn check_gamma(config: &Config) -> Result<VerificationReport> {
    let target = config.target()?;
    let mut tally = Tally::new("gamma", target.describe(), config.window, config.seed);
    match &target {
        Target::Generic(m) => {
            let mut r = rng(config.seed);
            let shifts = sample_shifts(config.n, config.window, RANDOM_SYMBOLS, &mut r);
            generic_gamma_checks(&mut tally, m, &shifts);
            commutativity_checks(&mut tally, m, &shifts[..4]);
            // simple spectrum: no two window shifts share a character
            let window = window_shifts(config.n, config.window);
            let chars: Vec<Vec<Rational>> = window.par_iter().map(|z| m.character(z)).collect::<Result<_>>()?;
            let mut classes: BTreeMap<&Vec<Rational>, usize> = BTreeMap::new();
            for c in &chars {
                *classes.entry(c).or_default() += 1;
            }
            for (c, size) in classes {
                tally.record(check_that(size == 1, || format!("character {c:?}"), || size.to_string(), "1"));
            }
        }
        Target::Singular(m) => {
            let symbols = random_symbols(m, config.window, config.seed);
            singular_gamma_checks(&mut tally, m, &symbols);
            commutativity_checks(&mut tally, m, &symbols[..4]);
            let unfixed = sample_unfixed(m, config.window.max(1), RANDOM_SYMBOLS, config.seed);
            let entries = jordan_checks(&mut tally, m, &unfixed);
            if entries.iter().all(|(c, gap)| c == &Rational::from_integer((*gap).into())) {
                tally.note(format!(
                    "c_{}2 off-diagonal entry equals z_ki - z_kj on all {} sampled derivative symbols",
                    m.frame().k(),
                    entries.len()
                ));
            }
            let window = m.window_symbols(config.window);
            let largest = multiplicity_checks(&mut tally, m, &window)?;
            tally.note(format!("largest character class {largest}, Q_n = {}", q_bound(m.n())));
            separation_checks(&mut tally, m, &window_shifts(config.n, config.window))?;
        }
    }
    Ok(tally.finish())
}
