use rayon::prelude::*;

use crate::error::Result;
use crate::exact_arith::Rational;
use crate::generic_module::FiniteModule;
use crate::linear::{crs_via_composition, generators, Cached, GlModule, LinComb};
use crate::tableaux::ShiftVector;

use super::commutators::bracket_sweep;
use super::gamma::gamma_indices;
use super::report::{check_eq, check_result, check_that, Check, Tally, VerificationReport};

/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn weyl_dimension(lambda: &[i64]) -> u64 {
    let n = lambda.len();
    let mut num = Rational::from_integer(1.into());
    for i in 0..n {
        for j in i + 1..n {
            num *= Rational::new((lambda[i] - lambda[j] + (j - i) as i64).into(), ((j - i) as i64).into());
        }
    }
    assert!(num.is_integer(), "Weyl product is an integer");
    num.to_integer().try_into().expect("dimension fits in u64")
}

/// Dimension against the Weyl formula, closure of the standard span,
/// brackets, and `c_rs` acting by `gamma_rs` on every basis vector.
pub fn finite_checks(tally: &mut Tally, v: &FiniteModule, lambda: &[i64]) {
    let expected = weyl_dimension(lambda);
    tally.record(check_eq(|| format!("dim L({lambda:?})"), &(v.dim() as u64), &expected));

    let basis: Vec<ShiftVector> = v.basis().iter().cloned().collect();
    let gens = generators(v.n());
    let closure: Vec<Vec<Check>> = basis
        .par_iter()
        .map(|z| {
            gens.iter()
                .map(|&(l, m)| {
                    let input = || format!("E_{l}{m} on {z}");
                    check_result(input, v.act_basis(l, m, z).map(|image| {
                        let outside: Vec<String> =
                            image.keys().filter(|k| !v.basis().contains(k)).map(|k| k.to_string()).collect();
                        check_that(outside.is_empty(), input, || outside.join(", "), "standard targets only")
                    }))
                })
                .collect()
        })
        .collect();
    tally.record_all(closure.into_iter().flatten());

    bracket_sweep(tally, v, &basis);

    let idx = gamma_indices(v.n());
    let gammas: Vec<Vec<Check>> = basis
        .par_iter()
        .map(|z| {
            let cached = Cached::new(v);
            let x = LinComb::basis(z.clone());
            idx.iter()
                .map(|&(r, s)| {
                    let input = || format!("c_{r}{s} on {z}");
                    check_result(input, (|| {
                        let lhs = crs_via_composition(&cached, r, s, &x)?;
                        Ok(check_eq(input, &lhs, &x.scaled(&v.gamma_eigenvalue(r, s, z)?)))
                    })())
                })
                .collect()
        })
        .collect();
    tally.record_all(gammas.into_iter().flatten());
}

pub fn check_finite(lambda: &[i64], seed: u64) -> Result<VerificationReport> {
    let v = FiniteModule::new(lambda)?;
    let mut tally = Tally::new("finite", format!("L{lambda:?}, top row {}", v.base()), 0, seed);
    finite_checks(&mut tally, &v, lambda);
    tally.note(format!("{} standard tableaux", v.dim()));
    Ok(tally.finish())
}
