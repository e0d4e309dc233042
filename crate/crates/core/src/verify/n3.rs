//! The decomposition of `V(T(vbar))` for `n = 3`, `vbar = (a,a,a|a,a|a)`,
//! singular pair in row 2, into ten subquotients spanned by basis symbols.
//!
//! Shifts are written `(m, n, k) = (z_21, z_22, z_11)`; the symbol attached to
//! `z` is `T(vbar + z)` when `m <= n` and `DT(vbar + z)` otherwise, which is
//! exactly the canonical symbol of `z`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::linear::{generators, GlModule};
use crate::singular_module::{canonical_symbol, BasisSymbol, SingularModule};
use crate::tableaux::ShiftVector;

use super::config::{Config, Target};
use super::report::{check_result, check_that, Check, Exemplar, Tally, VerificationReport};
use super::window_shifts;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    L1,
    L2,
    L3,
    L4,
    L5,
    L5p,
    L6,
    L6p,
    L7,
    L7p,
}

impl Piece {
    pub const ALL: [Piece; 10] = [
        Piece::L1,
        Piece::L2,
        Piece::L3,
        Piece::L4,
        Piece::L5,
        Piece::L5p,
        Piece::L6,
        Piece::L6p,
        Piece::L7,
        Piece::L7p,
    ];

    /// Position in the Loewy series, counted from the socle:
    /// `L1 | L3 + L5 | L7 | L5' + L6 | L7' | L4 + L6' | L2`.
    pub fn layer(self) -> usize {
        match self {
            Piece::L1 => 0,
            Piece::L3 | Piece::L5 => 1,
            Piece::L7 => 2,
            Piece::L5p | Piece::L6 => 3,
            Piece::L7p => 4,
            Piece::L4 | Piece::L6p => 5,
            Piece::L2 => 6,
        }
    }

    /// The defining inequalities, one closure per block of the union.
    fn blocks(self) -> Vec<fn(i64, i64, i64) -> bool> {
        match self {
            Piece::L1 => vec![
                |m, n, k| m <= n && n <= 0 && k <= n,
                |m, n, k| m > n && m <= 0 && k <= n,
            ],
            Piece::L3 => vec![
                |m, n, k| m <= n && n <= 0 && k > n,
                |m, n, k| m > n && m <= 0 && k > n,
            ],
            Piece::L5 => vec![|m, n, k| m <= n && m <= 0 && n > 0 && k <= m],
            Piece::L5p => vec![|m, n, k| m > n && n <= 0 && m > 0 && k <= n],
            Piece::L2 => vec![
                |m, n, k| m <= n && m > 0 && k > n,
                |m, n, k| m > n && n > 0 && k > n,
            ],
            Piece::L4 => vec![
                |m, n, k| m <= n && m > 0 && k <= n,
                |m, n, k| m > n && n > 0 && k <= n,
            ],
            Piece::L6 => vec![|m, n, k| m <= n && m <= 0 && n > 0 && k > n],
            Piece::L6p => vec![|m, n, k| m > n && n <= 0 && m > 0 && k > m],
            Piece::L7 => vec![|m, n, k| m <= n && m <= 0 && n > 0 && m < k && k <= n],
            Piece::L7p => vec![|m, n, k| m > n && n <= 0 && m > 0 && n < k && k <= m],
        }
    }

    pub fn contains(self, (m, n, k): (i64, i64, i64)) -> bool {
        self.blocks().iter().any(|b| b(m, n, k))
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Piece::L5p => "L5'",
            Piece::L6p => "L6'",
            Piece::L7p => "L7'",
            other => return write!(f, "{other:?}"),
        };
        f.write_str(s)
    }
}

/// `(m, n, k)` for a shift of an `n = 3` tableau.
pub fn mnk(z: &ShiftVector) -> (i64, i64, i64) {
    (z.get(2, 1), z.get(2, 2), z.get(1, 1))
}

/// The unique piece whose inequalities `z` satisfies.
pub fn n3_classify(z: &ShiftVector) -> Result<Piece> {
    if z.n() != 3 {
        return Err(Error::Precondition(format!("classification needs n = 3, got {z}")));
    }
    let hits: Vec<Piece> = Piece::ALL.into_iter().filter(|p| p.contains(mnk(z))).collect();
    match hits.as_slice() {
        [p] => Ok(*p),
        _ => Err(Error::Invariant(format!("shift {z} lies in pieces {hits:?}"))),
    }
}

/// The module the decomposition is about, if the configuration describes it.
fn n3_module(config: &Config) -> Result<SingularModule> {
    let Target::Singular(m) = config.target()? else {
        return Err(Error::Config("n3 needs the singular frame (2,1,2)".into()));
    };
    let f = m.frame();
    let v = f.vbar();
    let a = v.value(1, 1);
    let all_equal = (1..=3).all(|r| (1..=r).all(|s| v.value(r, s) == a));
    if f.n() != 3 || (f.k(), f.i(), f.j()) != (2, 1, 2) || !all_equal {
        return Err(Error::Config(format!("n3 needs n = 3, (k,i,j) = (2,1,2), all entries equal; got {}", f.describe())));
    }
    Ok(m)
}

/// Every generator maps a symbol of piece `P` into symbols of `P` or of
/// strictly lower Loewy layers.
pub fn loewy_checks(tally: &mut Tally, m: &SingularModule, shifts: &[ShiftVector]) {
    let gens = generators(3);
    let results: Vec<Vec<Check>> = shifts
        .par_iter()
        .map(|z| {
            let sym = canonical_symbol(z, m.frame());
            let mut out = Vec::new();
            for &(l, mm) in &gens {
                let input = || format!("E_{l}{mm} on {sym}");
                out.push(check_result(input, (|| {
                    let source = n3_classify(z)?;
                    let image = m.act_basis(l, mm, &sym)?;
                    for (target, c) in image.iter() {
                        let p = n3_classify(&target.z)?;
                        if p != source && p.layer() >= source.layer() {
                            return Ok(Err(Exemplar::new(
                                input(),
                                format!("{c} * {target} in {p} (layer {})", p.layer()),
                                format!("{source} or below layer {}", source.layer()),
                            )));
                        }
                    }
                    Ok(Ok(()))
                })()));
            }
            out
        })
        .collect();
    tally.record_all(results.into_iter().flatten());
}

/// The weight of a symbol: its coefficient in `E_rr x` for `r = 1, 2, 3`.
pub fn weight(m: &SingularModule, sym: &BasisSymbol) -> Result<Vec<Rational>> {
    (1..=3).map(|r| Ok(m.act_basis(r, r, sym)?.coeff(sym))).collect()
}

/// Number of `L7` symbols in the window of the given weight.
pub fn l7_weight_count(m: &SingularModule, bound: i64, w: &[Rational]) -> Result<usize> {
    let mut count = 0;
    for z in window_shifts(3, bound) {
        if n3_classify(&z)? == Piece::L7 && weight(m, &canonical_symbol(&z, m.frame()))? == w {
            count += 1;
        }
    }
    Ok(count)
}

/// The shift whose weight is followed through growing windows.
pub fn l7_reference_shift() -> ShiftVector {
    ShiftVector::from_flat(3, vec![-1, 1, 0]).expect("n = 3 shift")
}

pub fn n3_report(config: &Config) -> Result<VerificationReport> {
    let m = n3_module(config)?;
    let mut tally = Tally::new("n3", m.frame().describe(), config.window, config.seed);
    let shifts = window_shifts(3, config.window);

    let mut sizes: BTreeMap<Piece, usize> = BTreeMap::new();
    for z in &shifts {
        let r = n3_classify(z);
        if let Ok(p) = &r {
            *sizes.entry(*p).or_default() += 1;
        }
        tally.record(check_result(|| format!("classify {z}"), r.map(|_| Ok(()))));
    }
    tally.note(format!(
        "piece sizes: {}",
        sizes.iter().map(|(p, c)| format!("{p}={c}")).collect::<Vec<_>>().join(" ")
    ));

    loewy_checks(&mut tally, &m, &shifts);

    let reference = l7_reference_shift();
    let w = weight(&m, &canonical_symbol(&reference, m.frame()))?;
    let counts: Vec<usize> = (2..=4).map(|b| l7_weight_count(&m, b, &w)).collect::<Result<_>>()?;
    tally.record(check_that(
        counts.windows(2).all(|p| p[0] < p[1]),
        || format!("L7 symbols of weight {w:?} for B = 2, 3, 4"),
        || format!("{counts:?}"),
        "strictly increasing",
    ));
    tally.note(format!("L7 weight multiplicities for B = 2, 3, 4: {counts:?}"));
    Ok(tally.finish())
}
