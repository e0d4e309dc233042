use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::singular_module::SingularModule;
use crate::tableaux::ShiftVector;

use super::config::{Config, Target};
use super::report::{check_result, check_that, Check, Tally, VerificationReport};

/// Generation witnesses at every shift: the named coefficient is nonzero and
/// agrees with its closed form; for `tau z != z` every coefficient moving
/// `Der(z)` to another derivative tableau is nonzero as well.
pub fn witness_checks(tally: &mut Tally, m: &SingularModule, shifts: &[ShiftVector]) {
    let f = m.frame();
    let results: Vec<Vec<Check>> = shifts
        .par_iter()
        .map(|z| {
            let mut out = Vec::new();
            match m.generation_witnesses(z) {
                Ok(ws) => {
                    for w in ws {
                        out.push(check_that(
                            w.holds(),
                            || format!("{} at {}", w.name, w.shift),
                            || w.value.to_string(),
                            &match &w.closed_form {
                                Some(c) => format!("nonzero, closed form {c}"),
                                None => "nonzero".into(),
                            },
                        ));
                    }
                }
                Err(e) => out.push(check_result(|| format!("witnesses at {z}"), Err(e))),
            }
            if !f.is_tau_fixed(z) {
                match m.derivative_spread_witnesses(z) {
                    Ok(ws) => out.extend(ws.into_iter().map(|w| {
                        check_that(w.holds(), || format!("{} at {}", w.name, w.shift), || w.value.to_string(), "nonzero")
                    })),
                    Err(e) => out.push(check_result(|| format!("spread at {z}"), Err(e))),
                }
            }
            out
        })
        .collect();
    tally.record_all(results.into_iter().flatten());
}

/// For every `z` in `R_m`, the constructed `zbar` lies in `R_{m+1}` and the
/// coefficient of `Reg(z)` in `E_{k+1,k-t} Reg(zbar)` is nonzero.
pub fn connectivity_checks(tally: &mut Tally, m: &SingularModule, shifts: &[ShiftVector]) {
    let f = m.frame();
    let results: Vec<Check> = shifts
        .par_iter()
        .map(|z| {
            let input = || format!("connecting shift for {z}");
            check_result(input, (|| {
                let (t, zbar, c) = m.connecting_shift(z)?;
                let ok = !c.is_zero() && f.stratum(&zbar) == f.stratum(z) + 1;
                Ok(check_that(
                    ok,
                    input,
                    || format!("t={t} zbar={zbar} coefficient={c}"),
                    "nonzero coefficient, zbar one stratum up",
                ))
            })())
        })
        .collect();
    tally.record_all(results);
}

pub fn check_witnesses(config: &Config) -> Result<VerificationReport> {
    let Target::Singular(m) = config.target()? else {
        return Err(Error::Config("the witnesses suite needs a singular frame".into()));
    };
    let mut tally = Tally::new("witnesses", m.frame().describe(), config.window, config.seed);
    let shifts = super::window_shifts(config.n, config.window);
    if m.irreducibility_hypothesis() {
        witness_checks(&mut tally, &m, &shifts);
    } else {
        tally.note("irreducibility hypothesis fails on this frame; only connectivity is checked");
    }
    connectivity_checks(&mut tally, &m, &shifts);
    Ok(tally.finish())
}
