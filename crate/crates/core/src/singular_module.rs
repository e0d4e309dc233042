//! The universal 1-singular module `V(T(vbar))`: regular tableaux `T(vbar + z)`
//! and derivative tableaux `DT(vbar + w)` subject to
//! `T(vbar + z) = T(vbar + tau z)` and `DT(vbar + w) = -DT(vbar + tau w)`.
//!
//! Every coefficient is computed on the line `v = vbar + t (delta^{ki} - delta^{kj})`,
//! where `D` becomes `(1/2) d/dt` at `t = 0` and `ev` is the value at `t = 0`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::{Rational, RationalFunction1};
use crate::gt_formulas::{coeff_e, gamma, perm_action_with, CoeffRule};
use crate::linear::{GlModule, LinComb};
use crate::tableaux::{epsilon, PermTuple, ShiftVector, SingularFrame};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Kind {
    Reg,
    Der,
}

/// `Reg(z) = T(vbar + z)` or `Der(z) = DT(vbar + z)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BasisSymbol {
    pub z: ShiftVector,
    pub kind: Kind,
}

impl BasisSymbol {
    pub fn reg(z: ShiftVector) -> Self {
        BasisSymbol { z, kind: Kind::Reg }
    }

    pub fn der(z: ShiftVector) -> Self {
        BasisSymbol { z, kind: Kind::Der }
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Reg => write!(f, "T{}", self.z),
            Kind::Der => write!(f, "DT{}", self.z),
        }
    }
}

pub type SingularVector = LinComb<BasisSymbol>;

/// Rewrites a symbol in the canonical basis `{Reg(z) : z_ki <= z_kj} u {Der(w) : w_ki > w_kj}`.
///
/// Returns `None` for `Der` of a `tau`-fixed shift, which is zero.
pub fn canonicalize(kind: Kind, z: &ShiftVector, frame: &SingularFrame) -> Option<(i64, BasisSymbol)> {
    let gap = frame.pair_gap(z);
    match kind {
        Kind::Reg if gap > 0 => Some((1, BasisSymbol::reg(frame.tau_shift(z)))),
        Kind::Reg => Some((1, BasisSymbol::reg(z.clone()))),
        Kind::Der if gap == 0 => None,
        Kind::Der if gap < 0 => Some((-1, BasisSymbol::der(frame.tau_shift(z)))),
        Kind::Der => Some((1, BasisSymbol::der(z.clone()))),
    }
}

/// Canonical symbol carried by a shift: `Reg(z)` if `z_ki <= z_kj`, else `Der(z)`.
pub fn canonical_symbol(z: &ShiftVector, frame: &SingularFrame) -> BasisSymbol {
    if frame.pair_gap(z) <= 0 {
        BasisSymbol::reg(z.clone())
    } else {
        BasisSymbol::der(z.clone())
    }
}

fn push(out: &mut SingularVector, kind: Kind, z: &ShiftVector, c: Rational, frame: &SingularFrame) {
    if c.is_zero() {
        return;
    }
    if let Some((sign, sym)) = canonicalize(kind, z, frame) {
        out.add_term(sym, if sign < 0 { -c } else { c });
    }
}

fn pole_error(what: &str, z: &ShiftVector, e: Error) -> Error {
    Error::Invariant(format!("{what} at shift {z}: {e}"))
}

/// Values reported for the nonvanishing coefficients used in the generation
/// arguments.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub name: String,
    pub shift: ShiftVector,
    pub value: Rational,
    /// Independent closed form for the same value, when one is available.
    pub closed_form: Option<Rational>,
}

impl Witness {
    pub fn holds(&self) -> bool {
        !self.value.is_zero() && self.closed_form.as_ref().is_none_or(|c| c == &self.value)
    }
}

#[derive(Clone)]
pub struct SingularModule {
    frame: SingularFrame,
    rule: CoeffRule,
}

impl SingularModule {
    pub fn new(frame: SingularFrame) -> Self {
        Self::with_rule(frame, coeff_e)
    }

    pub fn with_rule(frame: SingularFrame, rule: CoeffRule) -> Self {
        SingularModule { frame, rule }
    }

    pub fn frame(&self) -> &SingularFrame {
        &self.frame
    }

    pub fn rule(&self) -> CoeffRule {
        self.rule
    }

    /// `e_lm(sigma(v + z))` on the line.
    pub fn coeff_on_line(&self, l: usize, m: usize, sigma: &PermTuple, z: &ShiftVector) -> Result<RationalFunction1> {
        (self.rule)(l, m, &self.frame.line_tableau(z).permuted(sigma))
    }

    /// `E_lm T(vbar + z) = D((x - y) E_lm T(v + z))`. `z` need not be canonical.
    pub fn act_on_regular(&self, l: usize, m: usize, z: &ShiftVector) -> Result<SingularVector> {
        let mut out = LinComb::zero();
        for (e, eps) in perm_action_with(self.rule, l, m, &self.frame.line_tableau(z))? {
            let g = e.times_two_t();
            let target = z + &eps;
            let d = g.d_op().map_err(|err| pole_error("(x-y) e", z, err))?;
            let v = g.ev_op().map_err(|err| pole_error("(x-y) e", z, err))?;
            push(&mut out, Kind::Reg, &target, d, &self.frame);
            push(&mut out, Kind::Der, &target, v, &self.frame);
        }
        Ok(out)
    }

    /// `E_lm T(vbar + z) = ev(E_lm T(v + z))`, valid when `tau z != z`.
    pub fn act_on_regular_by_evaluation(&self, l: usize, m: usize, z: &ShiftVector) -> Result<SingularVector> {
        if self.frame.is_tau_fixed(z) {
            return Err(Error::Precondition(format!("evaluation form needs tau z != z, got {z}")));
        }
        let mut out = LinComb::zero();
        for (e, eps) in perm_action_with(self.rule, l, m, &self.frame.line_tableau(z))? {
            let v = e.ev_op().map_err(|err| pole_error("e", z, err))?;
            push(&mut out, Kind::Reg, &(z + &eps), v, &self.frame);
        }
        Ok(out)
    }

    /// `E_lm DT(vbar + w) = D(E_lm T(v + w))`, for `tau w != w`.
    pub fn act_on_derivative(&self, l: usize, m: usize, w: &ShiftVector) -> Result<SingularVector> {
        if self.frame.is_tau_fixed(w) {
            return Err(Error::Precondition(format!("derivative tableau of tau-fixed {w} is zero")));
        }
        let mut out = LinComb::zero();
        for (e, eps) in perm_action_with(self.rule, l, m, &self.frame.line_tableau(w))? {
            let target = w + &eps;
            let d = e.d_op().map_err(|err| pole_error("e", w, err))?;
            let v = e.ev_op().map_err(|err| pole_error("e", w, err))?;
            push(&mut out, Kind::Reg, &target, d, &self.frame);
            push(&mut out, Kind::Der, &target, v, &self.frame);
        }
        Ok(out)
    }

    /// `gamma_rs` on the line through `vbar + z`.
    pub fn gamma_on_line(&self, r: usize, s: usize, z: &ShiftVector) -> Result<RationalFunction1> {
        gamma(r, s, &self.frame.line_tableau(z))
    }

    /// The Jordan form of `c_rs`: `Reg(z) -> gamma Reg(z)` and
    /// `Der(w) -> gamma Der(w) + D(gamma) Reg(w)`.
    pub fn gamma_action_singular(&self, r: usize, s: usize, x: &SingularVector) -> Result<SingularVector> {
        let mut out = LinComb::zero();
        for (sym, c) in x.iter() {
            let g = self.gamma_on_line(r, s, &sym.z)?;
            let val = g.ev_op()?;
            out.add_term(sym.clone(), &val * c);
            if sym.kind == Kind::Der {
                push(&mut out, Kind::Reg, &sym.z, g.d_op()? * c, &self.frame);
            }
        }
        Ok(out)
    }

    /// `(gamma_rs(vbar + z))_{1 <= s <= r <= n}`.
    pub fn character(&self, z: &ShiftVector) -> Result<Vec<Rational>> {
        let n = self.frame.n();
        let mut out = Vec::new();
        for r in 1..=n {
            for s in 1..=r {
                out.push(self.gamma_on_line(r, s, z)?.ev_op()?);
            }
        }
        Ok(out)
    }

    /// The part of [`SingularModule::character`] coming from rows `< k`.
    pub fn lower_character(&self, z: &ShiftVector) -> Result<Vec<Rational>> {
        let mut out = Vec::new();
        for r in 1..self.frame.k() {
            for s in 1..=r {
                out.push(self.gamma_on_line(r, s, z)?.ev_op()?);
            }
        }
        Ok(out)
    }

    /// Canonical symbols attached to the window `|z_rs| <= bound`, one per shift.
    pub fn window_symbols(&self, bound: i64) -> Vec<BasisSymbol> {
        ShiftVector::window(self.frame.n(), bound)
            .iter()
            .map(|z| canonical_symbol(z, &self.frame))
            .collect()
    }

    /// `vbar_rs - vbar_{r-1,t}` is non-integral for all `1 <= t < r <= n`.
    pub fn irreducibility_hypothesis(&self) -> bool {
        self.frame.cross_rows_nonintegral()
    }

    /// For `z` in `R_m`, a pair `(t, zbar)` with `zbar` in `R_{m+1}` such that
    /// `Reg(z)` occurs in `E_{k+1,k-t} Reg(zbar)`, together with that
    /// coefficient.
    pub fn connecting_shift(&self, z: &ShiftVector) -> Result<(usize, ShiftVector, Rational)> {
        let f = &self.frame;
        let (k, i) = (f.k(), f.i());
        // use the representative with z_ki >= z_kj so that raising (k,i) moves outward
        let zz = if f.pair_gap(z) >= 0 { z.clone() } else { f.tau_shift(z) };
        let w = f.vbar().shifted(&zz);
        let mut zbar = &zz + &ShiftVector::delta(f.n(), k, i);
        let mut row = k;
        let mut value = w.value(k, i).clone();
        let one = Rational::from_integer(1.into());
        let mut t = 0;
        while row > 1 {
            let next = &value + &one;
            let Some(s) = (1..row).find(|&s| w.value(row - 1, s) == &next) else {
                break;
            };
            zbar = &zbar + &ShiftVector::delta(f.n(), row - 1, s);
            value = next;
            row -= 1;
            t += 1;
        }
        let image = self.act_on_regular(k + 1, k - t, &zbar)?;
        let target = canonicalize(Kind::Reg, &zz, f).expect("regular symbols never vanish").1;
        Ok((t, zbar, image.coeff(&target)))
    }

    /// Nonvanishing coefficients from the generation arguments at shift `z`:
    /// `D e_{k-1,k}(v + z)` for `tau z != z`, `ev((x - y) e_{k+1,k}(sigma(v + z)))`
    /// with `sigma[k] = (1, i)` for `tau z = z`.
    pub fn generation_witnesses(&self, z: &ShiftVector) -> Result<Vec<Witness>> {
        let f = &self.frame;
        let (n, k, i, j) = (f.n(), f.k(), f.i(), f.j());
        let w = f.vbar().shifted(z);
        let mut out = Vec::new();
        if !f.is_tau_fixed(z) {
            let e = self.coeff_on_line(k - 1, k, &PermTuple::identity(n), z)?;
            let a = w.value(k - 1, 1);
            let mut num = Rational::from_integer((z.get(k, j) - z.get(k, i)).into());
            for t in (1..=k).filter(|&t| t != i && t != j) {
                num *= a - w.value(k, t);
            }
            let mut den = Rational::from_integer(2.into());
            for t in 2..k {
                den *= a - w.value(k - 1, t);
            }
            out.push(Witness {
                name: format!("D e_{},{k}", k - 1),
                shift: z.clone(),
                value: e.d_op()?,
                closed_form: Some(-(num / den)),
            });
        } else {
            let sigma = PermTuple::identity(n).with_transposition(k, 1, i);
            let e = self.coeff_on_line(k + 1, k, &sigma, z)?;
            let x = w.value(k, i);
            let mut num = Rational::from_integer(1.into());
            for q in 1..k {
                num *= x - w.value(k - 1, q);
            }
            let mut den = Rational::from_integer(1.into());
            for q in (1..=k).filter(|&q| q != i && q != j) {
                den *= x - w.value(k, q);
            }
            out.push(Witness {
                name: format!("ev (x-y) e_{},{k} at sigma[k]=(1,{i})", k + 1),
                shift: z.clone(),
                value: e.times_two_t().ev_op()?,
                closed_form: Some(num / den),
            });
        }
        Ok(out)
    }

    /// `ev e_rs(sigma(vbar + w))` for every `r != s` and `sigma` in `Phi_rs`,
    /// `tau w != w`: the coefficients carrying `Der(w)` to other derivative tableaux.
    pub fn derivative_spread_witnesses(&self, w: &ShiftVector) -> Result<Vec<Witness>> {
        if self.frame.is_tau_fixed(w) {
            return Err(Error::Precondition(format!("{w} is tau-fixed")));
        }
        let n = self.frame.n();
        let mut out = Vec::new();
        for r in 1..=n {
            for s in (1..=n).filter(|&s| s != r) {
                for sigma in crate::tableaux::phi_set(r, s, n) {
                    let e = self.coeff_on_line(r, s, &sigma, w)?;
                    out.push(Witness {
                        name: format!("ev e_{r},{s} sigma={sigma}"),
                        shift: w.clone(),
                        value: e.ev_op()?,
                        closed_form: None,
                    });
                }
            }
        }
        Ok(out)
    }

    /// `sigma(eps_lm)` targets and whether `sigma` is in `Phi_lm(i) u Phi_lm(j)`.
    pub fn touches_pair(&self, l: usize, m: usize, sigma: &PermTuple) -> bool {
        let k = self.frame.k();
        l.min(m) <= k && k < l.max(m) && self.frame.touches_pair(sigma)
    }

    pub fn epsilon(&self, l: usize, m: usize) -> ShiftVector {
        epsilon(self.frame.n(), l, m)
    }
}

impl GlModule for SingularModule {
    type Basis = BasisSymbol;

    fn n(&self) -> usize {
        self.frame.n()
    }

    fn act_basis(&self, l: usize, m: usize, b: &BasisSymbol) -> Result<SingularVector> {
        match b.kind {
            Kind::Reg => self.act_on_regular(l, m, &b.z),
            Kind::Der => self.act_on_derivative(l, m, &b.z),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};
    use crate::linear::{bracket_sides, crs_via_composition, generators};

    fn all_equal() -> SingularModule {
        SingularModule::new(SingularFrame::new(2, 1, 2, "(0,0,0|0,0|0)".parse().unwrap()).unwrap())
    }

    fn hypothesis_frame() -> SingularModule {
        SingularModule::new(
            SingularFrame::new(2, 1, 2, "(0,2/5,9/7|1/3,1/3|1/11)".parse().unwrap()).unwrap(),
        )
    }

    fn sv(s: &str) -> ShiftVector {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        let f = all_equal();
        let fr = f.frame();
        assert_eq!(canonicalize(Kind::Reg, &sv("(1,0|0)"), fr), Some((1, BasisSymbol::reg(sv("(0,1|0)")))));
        assert_eq!(canonicalize(Kind::Der, &sv("(0,1|0)"), fr), Some((-1, BasisSymbol::der(sv("(1,0|0)")))));
        assert_eq!(canonicalize(Kind::Der, &sv("(0,0|0)"), fr), None);
        assert_eq!(canonicalize(Kind::Reg, &sv("(0,0|0)"), fr), Some((1, BasisSymbol::reg(sv("(0,0|0)")))));
    }

    #[test]
    fn regular_action_examples() {
        let f = all_equal();
        let z = ShiftVector::zero(3);
        assert_eq!(f.act_on_regular(2, 1, &z).unwrap(), LinComb::basis(BasisSymbol::reg(sv("(0,0|-1)"))));
        assert_eq!(f.act_on_regular(3, 2, &z).unwrap(), LinComb::basis(BasisSymbol::reg(sv("(-1,0|0)"))));
        for r in 1..=3 {
            let y = f.act_on_regular(r, r, &z).unwrap();
            assert!(y.keys().all(|s| s.kind == Kind::Reg && s.z == z));
        }
    }

    #[test]
    fn derivative_action_examples() {
        let f = all_equal();
        let w = sv("(1,0|0)");
        assert_eq!(f.act_on_derivative(2, 1, &w).unwrap(), LinComb::basis(BasisSymbol::der(sv("(1,0|-1)"))));
        let y = f.act_on_derivative(1, 1, &w).unwrap();
        assert_eq!(y, LinComb::zero(), "t_11 = 0 here");
        let w2 = sv("(1,0|2)");
        assert_eq!(f.act_on_derivative(1, 1, &w2).unwrap(), LinComb::single(BasisSymbol::der(w2.clone()), int(2)));
        assert!(f.act_on_derivative(1, 1, &ShiftVector::zero(3)).is_err());
    }

    #[test]
    fn jordan_entry_for_gamma22() {
        let f = all_equal();
        let z = sv("(3,-1|0)");
        let x = LinComb::basis(BasisSymbol::der(z.clone()));
        let y = f.gamma_action_singular(2, 2, &x).unwrap();
        // off-diagonal entry is z_21 - z_22 on Reg(tau z)
        assert_eq!(y.coeff(&BasisSymbol::reg(sv("(-1,3|0)"))), int(4));
    }

    #[test]
    fn small_bracket_sweep() {
        for m in [all_equal(), hypothesis_frame()] {
            for z in ["(0,0|0)", "(1,0|0)", "(-1,1|1)", "(0,-2|1)"] {
                let sym = canonical_symbol(&sv(z), m.frame());
                let x = LinComb::basis(sym.clone());
                for g in generators(3) {
                    for h in generators(3) {
                        let (lhs, rhs) = bracket_sides(&m, g, h, &x).unwrap();
                        assert_eq!(lhs, rhs, "[{g:?},{h:?}] on {sym}");
                    }
                }
            }
        }
    }

    #[test]
    fn composed_casimirs_match_jordan_form() {
        let m = hypothesis_frame();
        for z in ["(0,0|0)", "(2,-1|1)", "(-1,1|0)"] {
            let x = LinComb::basis(canonical_symbol(&sv(z), m.frame()));
            for r in 1..=3 {
                for s in 1..=r {
                    assert_eq!(
                        crs_via_composition(&m, r, s, &x).unwrap(),
                        m.gamma_action_singular(r, s, &x).unwrap(),
                        "c_{r}{s} on {z}"
                    );
                }
            }
        }
    }

    #[test]
    fn evaluation_form_agrees_off_the_hyperplane() {
        let m = hypothesis_frame();
        let z = sv("(2,0|-1)");
        for (l, mm) in generators(3) {
            assert_eq!(
                m.act_on_regular(l, mm, &z).unwrap(),
                m.act_on_regular_by_evaluation(l, mm, &z).unwrap()
            );
        }
    }

    #[test]
    fn witnesses_on_hypothesis_frame() {
        let m = hypothesis_frame();
        assert!(m.irreducibility_hypothesis());
        assert!(!all_equal().irreducibility_hypothesis());
        for z in ["(1,0|0)", "(0,0|0)", "(-2,2|1)"] {
            for w in m.generation_witnesses(&sv(z)).unwrap() {
                assert!(w.holds(), "{w:?}");
            }
        }
        let w = m.generation_witnesses(&sv("(1,0|0)")).unwrap();
        // -(1/2)(0 - 1) with no further factors for k = 2
        assert_eq!(w[0].value, rat(1, 2));
    }

    #[test]
    fn connectivity_examples() {
        for m in [all_equal(), hypothesis_frame()] {
            for z in ["(0,0|0)", "(1,0|0)", "(-1,2|1)", "(0,0|1)"] {
                let z = sv(z);
                let (_, zbar, c) = m.connecting_shift(&z).unwrap();
                assert_eq!(m.frame().stratum(&zbar), m.frame().stratum(&z) + 1);
                assert!(!c.is_zero(), "{z}");
            }
        }
    }
}
