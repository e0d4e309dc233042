//! The identities that make the singular action well defined, checked
//! coefficient by coefficient on the line through the base point.

use rayon::prelude::*;

use crate::error::Result;
use crate::exact_arith::{Rational, RationalFunction1};
use crate::singular_module::SingularModule;
use crate::tableaux::{phi_set, tau_star, PermTuple, ShiftVector};

use super::config::{Config, Target};
use super::report::{check_eq, check_result, check_that, Check, Tally, VerificationReport};
use crate::error::Error;

/// Which identity family a check belongs to; used for the per-family counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    PoleBound,
    Parity,
    DifOperator,
    Compatible,
    EvCrossCheck,
}

fn ev(f: &RationalFunction1) -> Result<Rational> {
    f.ev_op()
}

fn d(f: &RationalFunction1) -> Result<Rational> {
    f.d_op()
}

struct Ctx<'a> {
    m: &'a SingularModule,
    z: &'a ShiftVector,
    out: Vec<(Family, Check)>,
}

impl Ctx<'_> {
    fn push(&mut self, fam: Family, input: impl Fn() -> String + Copy, r: Result<Check>) {
        self.out.push((fam, check_result(input, r)));
    }

    /// Pole bound, difference-operator identities and parity relations for
    /// the single coefficient `e_lm(sigma(v + z))`.
    fn coefficient(&mut self, l: usize, mm: usize, sigma: &PermTuple) {
        let (m, z) = (self.m, self.z);
        let f = m.frame();
        let tz = f.tau_shift(z);
        let fixed = f.is_tau_fixed(z);
        let touching = m.touches_pair(l, mm, sigma);
        let label = move |what: &'static str| move || format!("{what}: e_{l}{mm} sigma={sigma} z={z}");

        let e = match m.coeff_on_line(l, mm, sigma, z) {
            Ok(e) => e,
            Err(err) => {
                self.push(Family::PoleBound, label("coefficient"), Err(err));
                return;
            }
        };
        let e2 = e.times_two_t();
        let pole = e.pole_order_at_zero();
        let bound = if fixed && touching { 1 } else { 0 };
        self.push(
            Family::PoleBound,
            label("pole order"),
            Ok(check_that(pole <= bound, label("pole order"), || pole.to_string(), &format!("<= {bound}"))),
        );

        if pole == 0 {
            // the difference-operator identities for f = e
            let ft = e.tau_reflect();
            if ft == e {
                self.push(Family::DifOperator, label("symmetric f has D f = 0"), (|| {
                    Ok(check_eq(label("D f"), &d(&e)?, &Rational::from_integer(0.into())))
                })());
            }
            let h = e.divided_difference();
            if h.pole_order_at_zero() == 0 {
                self.push(Family::DifOperator, label("ev h = 2 D f"), (|| {
                    Ok(check_eq(label("ev h"), &ev(&h)?, &(d(&e)? * Rational::from_integer(2.into()))))
                })());
            }
            self.push(Family::DifOperator, label("ev f = D((x-y) f)"), (|| {
                Ok(check_eq(label("ev f"), &ev(&e)?, &d(&e2)?))
            })());
        }

        if !touching {
            self.push(Family::Parity, label("parity (i)"), (|| {
                let et = m.coeff_on_line(l, mm, sigma, &tz)?;
                let et2 = et.times_two_t();
                let zero = Rational::from_integer(0.into());
                let lhs = [ev(&et)?, d(&et)?, ev(&et2)?, ev(&e2)?, d(&et2)?];
                let rhs = [ev(&e)?, -d(&e)?, zero.clone(), zero, d(&e2)?];
                Ok(check_eq(label("parity (i)"), &Row(&lhs), &Row(&rhs)))
            })());
        } else {
            self.push(Family::Parity, label("parity (ii) tau*sigma = sigma tau"), (|| {
                let star = tau_star(sigma, f)?;
                let lhs = m.coeff_on_line(l, mm, &star, z)?;
                let rhs = (m.rule())(l, mm, &f.line_tableau(z).permuted(&sigma.compose(&f.tau())))?;
                Ok(check_eq(label("tau*sigma"), &lhs, &rhs))
            })());
            self.push(Family::Parity, label("parity (ii)(b)"), (|| {
                let star = tau_star(sigma, f)?;
                let es2 = m.coeff_on_line(l, mm, &star, &tz)?.times_two_t();
                let lhs = [ev(&es2)?, d(&es2)?];
                let rhs = [-ev(&e2)?, d(&e2)?];
                Ok(check_eq(label("parity (ii)(b)"), &Row(&lhs), &Row(&rhs)))
            })());
            if !fixed {
                self.push(Family::Parity, label("parity (ii)(a)"), (|| {
                    let star = tau_star(sigma, f)?;
                    let es = m.coeff_on_line(l, mm, &star, &tz)?;
                    let lhs = [ev(&es)?, d(&es)?];
                    let rhs = [ev(&e)?, -d(&e)?];
                    Ok(check_eq(label("parity (ii)(a)"), &Row(&lhs), &Row(&rhs)))
                })());
            }
        }
    }

    /// The action on `z` does not depend on the representative of its class.
    fn compatibility(&mut self, l: usize, mm: usize) {
        let (m, z) = (self.m, self.z);
        let f = m.frame();
        let tz = f.tau_shift(z);
        let label = move |what: &'static str| move || format!("{what}: E_{l}{mm} z={z}");
        self.push(Family::Compatible, label("compatible (i)"), (|| {
            Ok(check_eq(label("compatible (i)"), &m.act_on_regular(l, mm, z)?, &m.act_on_regular(l, mm, &tz)?))
        })());
        if !f.is_tau_fixed(z) {
            self.push(Family::Compatible, label("compatible (ii)"), (|| {
                let lhs = m.act_on_derivative(l, mm, z)?;
                let rhs = m.act_on_derivative(l, mm, &tz)?.scaled(&Rational::from_integer((-1).into()));
                Ok(check_eq(label("compatible (ii)"), &lhs, &rhs))
            })());
            self.push(Family::EvCrossCheck, label("ev form"), (|| {
                Ok(check_eq(
                    label("ev form"),
                    &m.act_on_regular(l, mm, z)?,
                    &m.act_on_regular_by_evaluation(l, mm, z)?,
                ))
            })());
        }
    }
}

/// A row of values compared as a whole.
struct Row<'a>(&'a [Rational]);

impl PartialEq for Row<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl std::fmt::Display for Row<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Every identity for every `z` in `shifts`, every `l != m` and every
/// `sigma` in `Phi_lm`; compatibility for all `(l, m)`.
pub fn appendix_sweep(m: &SingularModule, shifts: &[ShiftVector]) -> Vec<(Family, Check)> {
    let n = m.frame().n();
    let per_z: Vec<Vec<(Family, Check)>> = shifts
        .par_iter()
        .map(|z| {
            let mut ctx = Ctx { m, z, out: Vec::new() };
            for l in 1..=n {
                for mm in 1..=n {
                    if l != mm {
                        for sigma in phi_set(l, mm, n) {
                            ctx.coefficient(l, mm, &sigma);
                        }
                    }
                    ctx.compatibility(l, mm);
                }
            }
            ctx.out
        })
        .collect();
    per_z.into_iter().flatten().collect()
}

/// Records the sweep and notes the number of checks per family.
pub fn record_sweep(tally: &mut Tally, results: Vec<(Family, Check)>) {
    let mut counts = std::collections::BTreeMap::new();
    for (fam, c) in results {
        *counts.entry(fam).or_insert(0u64) += 1;
        tally.record(c);
    }
    for (fam, c) in counts {
        tally.note(format!("{fam:?}: {c} checks"));
    }
}

pub fn check_appendix(config: &Config) -> Result<VerificationReport> {
    let Target::Singular(m) = config.target()? else {
        return Err(Error::Config("the appendix suite needs a singular frame".into()));
    };
    let mut tally = Tally::new("appendix", m.frame().describe(), config.window, config.seed);
    record_sweep(&mut tally, appendix_sweep(&m, &super::window_shifts(config.n, config.window)));
    Ok(tally.finish())
}
