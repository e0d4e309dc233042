use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact_arith::{rat, Rational};
use crate::gt_formulas::{classical_action, perm_action, ClassicalGen};
use crate::tableaux::{ShiftVector, Tableau};

use super::config::Config;
use super::report::{check_eq, check_result, Tally, VerificationReport};
use super::rng;

pub const RANDOM_TABLEAUX: usize = 100;

/// Random generic tableau with entries `p/q`, `|p| <= 40`, `2 <= q <= 13`.
pub fn random_generic_tableau(n: usize, r: &mut ChaCha8Rng) -> Tableau {
    loop {
        let rows: Vec<Vec<Rational>> = (1..=n)
            .rev()
            .map(|len| (0..len).map(|_| rat(r.gen_range(-40..=40), r.gen_range(2..=13))).collect())
            .collect();
        let t = Tableau::from_rows(rows).expect("well-formed rows");
        if t.is_generic() {
            return t;
        }
    }
}

/// All generators covered by the classical formulas on `gl(n)`.
pub fn classical_generators(n: usize) -> Vec<ClassicalGen> {
    let mut out: Vec<ClassicalGen> = (1..=n).map(ClassicalGen::Diag).collect();
    for k in 1..n {
        out.push(ClassicalGen::Raise(k));
        out.push(ClassicalGen::Lower(k));
    }
    out
}

type Terms = Vec<(Rational, ShiftVector)>;

struct TermList<'a>(&'a Terms);

impl std::fmt::Display for TermList<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(c, z)| format!("{c}@{z}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl PartialEq for TermList<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// The classical formulas and the permutation form produce the same
/// summands, term by term, on `count` random generic tableaux of sizes
/// cycling through `2..=max_n`.
pub fn formula_agreement(tally: &mut Tally, max_n: usize, count: usize, seed: u64) {
    let mut r = rng(seed);
    for idx in 0..count {
        let n = 2 + idx % (max_n - 1);
        let t = random_generic_tableau(n, &mut r);
        for gen in classical_generators(n) {
            let (l, m) = gen.indices();
            let input = || format!("{gen:?} on {t}");
            tally.record(check_result(input, (|| {
                let classical = classical_action(gen, &t, false)?;
                let perm: Terms = perm_action(l, m, &t)?
                    .into_iter()
                    .map(|(c, z)| Ok((c.as_constant().ok_or_else(|| {
                        crate::error::Error::Invariant(format!("coefficient {c} depends on t"))
                    })?, z)))
                    .collect::<Result<_>>()?;
                Ok(check_eq(input, &TermList(&classical), &TermList(&perm)))
            })()));
        }
    }
}

pub fn check_formulas(config: &Config) -> Result<VerificationReport> {
    let mut tally = Tally::new(
        "formulas",
        format!("random generic, n <= {}", config.n.max(2)),
        config.window,
        config.seed,
    );
    formula_agreement(&mut tally, config.n.max(2), RANDOM_TABLEAUX, config.seed);
    Ok(tally.finish())
}
