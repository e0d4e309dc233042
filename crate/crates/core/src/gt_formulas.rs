//! Coefficient functions `e_rs`, the symmetric functions `gamma_rs`, and the
//! two presentations of the generator action on a single tableau.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{Poly1, Rational, RationalFunction1};
use crate::tableaux::{entry_diff, epsilon, phi_set, PermTuple, ShiftVector, Tableau};

/// Signature of a coefficient rule `(r, s, w) -> e_rs(w)`.
///
/// Modules carry one of these so that test harnesses can swap in a corrupted
/// rule and watch the verification suites catch it.
pub type CoeffRule = fn(usize, usize, &Tableau) -> Result<RationalFunction1>;

/// Accumulates a quotient of products of linear forms and normalizes once.
struct Fraction {
    num: Poly1,
    den: Poly1,
    what: String,
}

impl Fraction {
    fn new(what: impl Into<String>) -> Self {
        Fraction {
            num: Poly1::one(),
            den: Poly1::one(),
            what: what.into(),
        }
    }

    fn times(&mut self, p: Poly1) {
        self.num = &self.num * &p;
    }

    fn over(&mut self, p: Poly1) -> Result<()> {
        if p.is_zero() {
            return Err(Error::VanishingDenominator {
                what: self.what.clone(),
            });
        }
        self.den = &self.den * &p;
        Ok(())
    }

    fn absorb(&mut self, other: Fraction) {
        self.num = &self.num * &other.num;
        self.den = &self.den * &other.den;
    }

    fn negate(&mut self) {
        self.num = -&self.num;
    }

    fn finish(self) -> RationalFunction1 {
        RationalFunction1::new(self.num, self.den).expect("denominator checked nonzero")
    }
}

fn d(w: &Tableau, r1: usize, s1: usize, r2: usize, s2: usize) -> Poly1 {
    entry_diff(w.entry(r1, s1), w.entry(r2, s2))
}

/// `e_t^{(+)}(w)`: numerator over `w_{t+1,q}`, `q = 2..t+1`.
fn e_plus(t: usize, w: &Tableau) -> Result<Fraction> {
    let mut f = Fraction::new(format!("e_{t}^(+)"));
    for q in 2..=t + 1 {
        f.times(d(w, t, 1, t + 1, q));
    }
    for q in 2..=t {
        f.over(d(w, t, 1, t, q))?;
    }
    Ok(f)
}

/// `e_{t+1}^{(-)}(w)`: numerator over `w_{t-1,q}`, `q = 2..t-1`.
fn e_minus(t: usize, w: &Tableau) -> Result<Fraction> {
    let mut f = Fraction::new(format!("e_{}^(-)", t + 1));
    for q in 2..t {
        f.times(d(w, t, 1, t - 1, q));
    }
    for q in 2..=t {
        f.over(d(w, t, 1, t, q))?;
    }
    Ok(f)
}

/// `e_{k,k+1}(w)`.
fn e_raise(k: usize, w: &Tableau) -> Result<Fraction> {
    let mut f = Fraction::new(format!("e_{k},{}", k + 1));
    for q in 1..=k + 1 {
        f.times(d(w, k, 1, k + 1, q));
    }
    for q in 2..=k {
        f.over(d(w, k, 1, k, q))?;
    }
    f.negate();
    Ok(f)
}

/// `e_{k+1,k}(w)`.
fn e_lower(k: usize, w: &Tableau) -> Result<Fraction> {
    let mut f = Fraction::new(format!("e_{},{k}", k + 1));
    for q in 1..k {
        f.times(d(w, k, 1, k - 1, q));
    }
    for q in 2..=k {
        f.over(d(w, k, 1, k, q))?;
    }
    Ok(f)
}

/// `sum_{i<=r} (w_ri + i - 1) - sum_{i<r} (w_{r-1,i} + i - 1)`.
fn e_diag(r: usize, w: &Tableau) -> Poly1 {
    let mut acc = Poly1::zero();
    for i in 1..=r {
        acc = &acc + &w.entry(r, i).as_poly();
    }
    for i in 1..r {
        acc = &acc - &w.entry(r - 1, i).as_poly();
    }
    // the (i - 1) shifts contribute (r - 1) net
    &acc + &Poly1::constant(Rational::from_integer(((r - 1) as i64).into()))
}

/// `e_rs(w)` as a rational function of `t`.
pub fn coeff_e(r: usize, s: usize, w: &Tableau) -> Result<RationalFunction1> {
    let n = w.n();
    if !(1 <= r && r <= n && 1 <= s && s <= n) {
        return Err(Error::Precondition(format!("e_{r}{s} out of range for n = {n}")));
    }
    if r == s {
        return Ok(RationalFunction1::from_poly(e_diag(r, w)));
    }
    let mut f = Fraction::new(format!("e_{r}{s}"));
    if r < s {
        for j in r..=s.saturating_sub(2) {
            f.absorb(e_plus(j, w)?);
        }
        f.absorb(e_raise(s - 1, w)?);
    } else {
        f.absorb(e_lower(s, w)?);
        for j in s + 2..=r {
            f.absorb(e_minus(j - 1, w)?);
        }
    }
    Ok(f.finish())
}

/// `gamma_rs(w) = sum_i (w_ri + r - 1)^s prod_{j != i} (1 - 1/(w_ri - w_rj))`.
///
/// The result is a symmetric polynomial in row `r`. Rows without `t` whose
/// entries coincide are perturbed to `w_ri + (i - 1) t` and evaluated at
/// `t = 0`, which is legitimate because the sum is polynomial.
pub fn gamma(r: usize, s: usize, w: &Tableau) -> Result<RationalFunction1> {
    if !(1 <= s && s <= r && r <= w.n()) {
        return Err(Error::Precondition(format!("gamma_{r}{s} needs s <= r <= n")));
    }
    let row = w.row(r);
    let has_t = row.iter().any(|e| e.tcoef != 0);
    let coincident = (0..r).any(|a| (a + 1..r).any(|b| row[a] == row[b]));
    let entries: Vec<Poly1> = if !has_t && coincident {
        row.iter()
            .enumerate()
            .map(|(i, e)| Poly1::linear(e.base.clone(), Rational::from_integer((i as i64).into())))
            .collect()
    } else {
        row.iter().map(|e| e.as_poly()).collect()
    };
    let shift = Poly1::constant(Rational::from_integer(((r - 1) as i64).into()));
    let mut total = RationalFunction1::zero();
    for i in 0..r {
        let mut num = (&entries[i] + &shift).pow(s as u32);
        let mut den = Poly1::one();
        for j in (0..r).filter(|&j| j != i) {
            let diff = &entries[i] - &entries[j];
            if diff.is_zero() {
                return Err(Error::VanishingDenominator {
                    what: format!("gamma_{r}{s}"),
                });
            }
            // 1 - 1/diff = (diff - 1)/diff
            num = &num * &(&diff - &Poly1::one());
            den = &den * &diff;
        }
        total = &total + &RationalFunction1::new(num, den)?;
    }
    if !total.is_polynomial() {
        return Err(Error::Invariant(format!("gamma_{r}{s} is not polynomial: {total}")));
    }
    if !has_t && coincident {
        return Ok(RationalFunction1::constant(total.ev_op()?));
    }
    Ok(total)
}

/// The generators appearing in the classical formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalGen {
    /// `E_{k,k+1}`
    Raise(usize),
    /// `E_{k+1,k}`
    Lower(usize),
    /// `E_{kk}`
    Diag(usize),
}

impl ClassicalGen {
    /// `(l, m)` such that this is `E_lm`.
    pub fn indices(self) -> (usize, usize) {
        match self {
            ClassicalGen::Raise(k) => (k, k + 1),
            ClassicalGen::Lower(k) => (k + 1, k),
            ClassicalGen::Diag(k) => (k, k),
        }
    }
}

/// Summands of the classical formulas on a constant tableau, as
/// `(coefficient, shift)`. Zero coefficients are kept so that term-by-term
/// comparisons see the same index set. With `finite_dim`, summands whose
/// target is not standard are dropped.
pub fn classical_action(
    gen: ClassicalGen,
    t: &Tableau,
    finite_dim: bool,
) -> Result<Vec<(Rational, ShiftVector)>> {
    if t.has_t() {
        return Err(Error::Precondition("classical formulas take a constant tableau".into()));
    }
    let n = t.n();
    let val = |r: usize, s: usize| t.value(r, s);
    let mut out = Vec::new();
    match gen {
        ClassicalGen::Diag(k) => {
            let c = e_diag(k, t).coeff(0);
            out.push((c, ShiftVector::zero(n)));
        }
        ClassicalGen::Raise(k) | ClassicalGen::Lower(k) => {
            if !(1 <= k && k < n) {
                return Err(Error::Precondition(format!("generator index {k} out of range")));
            }
            let raise = matches!(gen, ClassicalGen::Raise(_));
            for i in 1..=k {
                let mut num = Rational::one();
                if raise {
                    for j in 1..=k + 1 {
                        num *= val(k, i) - val(k + 1, j);
                    }
                    num = -num;
                } else {
                    for j in 1..k {
                        num *= val(k, i) - val(k - 1, j);
                    }
                }
                let mut den = Rational::one();
                for j in (1..=k).filter(|&j| j != i) {
                    den *= val(k, i) - val(k, j);
                }
                if den.is_zero() {
                    return Err(Error::VanishingDenominator {
                        what: format!("{gen:?} summand {i}"),
                    });
                }
                let mut shift = ShiftVector::delta(n, k, i);
                if !raise {
                    shift = -&shift;
                }
                if finite_dim && !t.shifted(&shift).is_standard() {
                    continue;
                }
                out.push((num / den, shift));
            }
        }
    }
    Ok(out)
}

/// The permutation form: one `(e_lm(sigma(w)), sigma(eps_lm))` per `sigma` in `Phi_lm`.
pub fn perm_action(l: usize, m: usize, w: &Tableau) -> Result<Vec<(RationalFunction1, ShiftVector)>> {
    perm_action_with(coeff_e, l, m, w)
}

/// [`perm_action`] with an arbitrary coefficient rule.
pub fn perm_action_with(
    rule: CoeffRule,
    l: usize,
    m: usize,
    w: &Tableau,
) -> Result<Vec<(RationalFunction1, ShiftVector)>> {
    let n = w.n();
    let eps = epsilon(n, l, m);
    phi_set(l, m, n)
        .iter()
        .map(|sigma| Ok((rule(l, m, &w.permuted(sigma))?, eps.permuted(sigma))))
        .collect()
}

/// `e_lm(sigma(w))` for a single `sigma`.
pub fn coeff_at(rule: CoeffRule, l: usize, m: usize, sigma: &PermTuple, w: &Tableau) -> Result<RationalFunction1> {
    rule(l, m, &w.permuted(sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};
    use crate::tableaux::SingularFrame;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn constant(f: &RationalFunction1) -> Rational {
        f.as_constant().expect("constant coefficient")
    }

    #[test]
    fn e12_for_gl2() {
        let w = tab("(3,0|1)");
        assert_eq!(constant(&coeff_e(1, 2, &w).unwrap()), int(2));
        assert_eq!(constant(&coeff_e(2, 1, &w).unwrap()), int(1));
        assert_eq!(constant(&coeff_e(2, 1, &tab("(5/3,-7|2/9)")).unwrap()), int(1));
    }

    #[test]
    fn e32_on_singular_line() {
        let f = SingularFrame::new(2, 1, 2, tab("(0,0,0|0,0|0)")).unwrap();
        let w = f.line_tableau(&ShiftVector::zero(3));
        let e = coeff_e(3, 2, &w).unwrap();
        assert_eq!(e, RationalFunction1::constant(rat(1, 2)));
        let terms = perm_action(3, 2, &w).unwrap();
        assert_eq!(terms.len(), 2);
        for (c, _) in &terms {
            assert_eq!(c, &RationalFunction1::constant(rat(1, 2)));
        }
        let shifts: Vec<_> = terms.iter().map(|(_, s)| s.clone()).collect();
        assert_eq!(
            shifts,
            vec![-&ShiftVector::delta(3, 2, 1), -&ShiftVector::delta(3, 2, 2)]
        );
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        let w = tab("(0,0,0|1,1|0)");
        assert!(matches!(
            coeff_e(3, 2, &w),
            Err(Error::VanishingDenominator { .. })
        ));
    }

    #[test]
    fn gamma_closed_forms() {
        let w = tab("(1/2,-3/7,2|2/5,1/3|5/11)");
        assert_eq!(gamma(1, 1, &w).unwrap(), RationalFunction1::constant(rat(5, 11)));
        let (a, b) = (rat(2, 5), rat(1, 3));
        let g21 = &a + &b + int(1);
        assert_eq!(gamma(2, 1, &w).unwrap(), RationalFunction1::constant(g21.clone()));
        let g22 = (&a + int(1)) * (&a + int(1)) + (&b + int(1)) * (&b + int(1)) - (&g21 + int(1));
        assert_eq!(gamma(2, 2, &w).unwrap(), RationalFunction1::constant(g22));
    }

    #[test]
    fn gamma_on_singular_line_is_polynomial() {
        let f = SingularFrame::new(2, 1, 2, tab("(0,0,0|0,0|0)")).unwrap();
        let z: ShiftVector = "(2,-1|0)".parse().unwrap();
        let w = f.line_tableau(&z);
        for r in 1..=3 {
            for s in 1..=r {
                assert!(gamma(r, s, &w).unwrap().is_polynomial());
            }
        }
        // (x+1)^2 + (y+1)^2 - (x+y+2) with x = 2+t, y = -1-t; half derivative = x - y at t=0
        assert_eq!(gamma(2, 2, &w).unwrap().d_op().unwrap(), int(3));
    }

    #[test]
    fn gamma_with_coincident_top_row() {
        let w = tab("(0,0,0|1/2,1/3|0)");
        // gamma_31 = l_31 + l_32 + l_33 + 3
        assert_eq!(gamma(3, 1, &w).unwrap(), RationalFunction1::constant(int(3)));
        let v = tab("(1/5,1/7,3/11|1/2,1/3|0)");
        let expect = rat(1, 5) + rat(1, 7) + rat(3, 11) + int(3);
        assert_eq!(gamma(3, 1, &v).unwrap(), RationalFunction1::constant(expect));
    }

    #[test]
    fn classical_gl2() {
        let t = tab("(1,-1|0)");
        let terms = classical_action(ClassicalGen::Raise(1), &t, false).unwrap();
        assert_eq!(terms, vec![(int(1), ShiftVector::delta(2, 1, 1))]);
        let top = tab("(1,-1|1)");
        let terms = classical_action(ClassicalGen::Raise(1), &top, false).unwrap();
        assert_eq!(terms[0].0, int(0));
        assert!(classical_action(ClassicalGen::Raise(1), &top, true).unwrap().is_empty());
        let diag = classical_action(ClassicalGen::Diag(1), &t, false).unwrap();
        assert_eq!(diag, vec![(int(0), ShiftVector::zero(2))]);
        let diag2 = classical_action(ClassicalGen::Diag(2), &t, false).unwrap();
        // (1 + 0) + (-1 + 1) - 0
        assert_eq!(diag2[0].0, int(1));
    }

    #[test]
    fn permutation_form_matches_classical_gl2() {
        let t = tab("(3/2,-5/2|1/7)");
        for (gen, (l, m)) in [
            (ClassicalGen::Raise(1), (1, 2)),
            (ClassicalGen::Lower(1), (2, 1)),
            (ClassicalGen::Diag(1), (1, 1)),
            (ClassicalGen::Diag(2), (2, 2)),
        ] {
            let classical = classical_action(gen, &t, false).unwrap();
            let perm: Vec<_> = perm_action(l, m, &t)
                .unwrap()
                .into_iter()
                .map(|(c, s)| (constant(&c), s))
                .collect();
            assert_eq!(classical, perm);
        }
    }
}
