//! The universal generic module `V([T])` and the finite-dimensional modules
//! used for regression.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact_arith::{int, Rational};
use crate::gt_formulas::{classical_action, coeff_e, gamma, perm_action_with, ClassicalGen, CoeffRule};
use crate::linear::{GlModule, LinComb};
use crate::tableaux::{ShiftVector, Tableau};

/// Element of a generic module: shifts of the base tableau with coefficients.
pub type GenericVector = LinComb<ShiftVector>;

/// `V([T])` for a generic base tableau, with a lazily addressed basis
/// `{[T + z]}`.
#[derive(Clone)]
pub struct GenericModule {
    base: Tableau,
    rule: CoeffRule,
}

impl GenericModule {
    pub fn new(base: Tableau) -> Result<Self> {
        Self::with_rule(base, coeff_e)
    }

    /// Uses `rule` in place of the standard coefficients.
    pub fn with_rule(base: Tableau, rule: CoeffRule) -> Result<Self> {
        if base.has_t() {
            return Err(Error::Precondition("generic base must not carry t".into()));
        }
        if !base.is_generic() {
            return Err(Error::Precondition(format!(
                "base {base} is not generic: integral pairs {:?}",
                base.singular_pairs()
            )));
        }
        Ok(GenericModule { base, rule })
    }

    pub fn base(&self) -> &Tableau {
        &self.base
    }

    pub fn tableau(&self, z: &ShiftVector) -> Tableau {
        self.base.shifted(z)
    }

    /// `gamma_rs(T + z)`.
    pub fn gamma_eigenvalue(&self, r: usize, s: usize, z: &ShiftVector) -> Result<Rational> {
        gamma(r, s, &self.tableau(z))?.ev_op()
    }

    /// The full character `(gamma_rs(T + z))_{1 <= s <= r <= n}`.
    pub fn character(&self, z: &ShiftVector) -> Result<Vec<Rational>> {
        let n = self.base.n();
        let mut out = Vec::new();
        for r in 1..=n {
            for s in 1..=r {
                out.push(self.gamma_eigenvalue(r, s, z)?);
            }
        }
        Ok(out)
    }

    /// `Omega+(L) subset Omega+(R)`: `R` lies in the submodule generated by `L`.
    pub fn submodule_membership(&self, l: &ShiftVector, r: &ShiftVector) -> bool {
        submodule_membership(&self.tableau(l), &self.tableau(r))
    }

    /// `Omega+(L) = Omega+(R)`: same irreducible subquotient.
    pub fn irreducible_membership(&self, l: &ShiftVector, r: &ShiftVector) -> bool {
        irreducible_membership(&self.tableau(l), &self.tableau(r))
    }
}

pub fn submodule_membership(l: &Tableau, r: &Tableau) -> bool {
    l.omega_plus().is_subset(&r.omega_plus())
}

pub fn irreducible_membership(l: &Tableau, r: &Tableau) -> bool {
    l.omega_plus() == r.omega_plus()
}

impl GlModule for GenericModule {
    type Basis = ShiftVector;

    fn n(&self) -> usize {
        self.base.n()
    }

    fn act_basis(&self, l: usize, m: usize, z: &ShiftVector) -> Result<GenericVector> {
        let mut out = LinComb::zero();
        for (coeff, eps) in perm_action_with(self.rule, l, m, &self.tableau(z))? {
            let c = coeff.ev_op().map_err(|e| {
                Error::Invariant(format!("pole in generic coefficient of E_{l}{m} at {z}: {e}"))
            })?;
            out.add_term(z + &eps, c);
        }
        Ok(out)
    }
}

/// The finite-dimensional irreducible `L(lambda)`, basis the standard
/// tableaux with top row `lambda_i - i + 1`, acted on by the classical
/// formulas with nonstandard summands dropped.
///
/// Non-adjacent generators are built from commutators of adjacent ones.
pub struct FiniteModule {
    top: Tableau,
    basis: BTreeSet<ShiftVector>,
}

impl FiniteModule {
    /// `lambda` must be dominant integral.
    pub fn new(lambda: &[i64]) -> Result<Self> {
        let n = lambda.len();
        if n < 2 || lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("{lambda:?} is not dominant")));
        }
        let top_row: Vec<Rational> = lambda
            .iter()
            .enumerate()
            .map(|(i, &l)| int(l - i as i64))
            .collect();
        let mut rows = vec![top_row.clone()];
        // seed every lower row with the top-row entries; shifts are relative to this
        for r in (1..n).rev() {
            rows.push(top_row[..r].to_vec());
        }
        let top = Tableau::from_rows(rows)?;
        let basis = standard_shifts(&top);
        Ok(FiniteModule { top, basis })
    }

    pub fn base(&self) -> &Tableau {
        &self.top
    }

    pub fn basis(&self) -> &BTreeSet<ShiftVector> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn tableau(&self, z: &ShiftVector) -> Tableau {
        self.top.shifted(z)
    }

    fn classical(&self, gen: ClassicalGen, z: &ShiftVector) -> Result<LinComb<ShiftVector>> {
        if !self.basis.contains(z) {
            return Err(Error::Precondition(format!("{z} is not a standard tableau")));
        }
        Ok(classical_action(gen, &self.tableau(z), true)?
            .into_iter()
            .map(|(c, shift)| (z + &shift, c))
            .collect())
    }

    pub fn gamma_eigenvalue(&self, r: usize, s: usize, z: &ShiftVector) -> Result<Rational> {
        gamma(r, s, &self.tableau(z))?.ev_op()
    }
}

/// Standard tableaux with the given top row, as shifts of `seed`.
fn standard_shifts(seed: &Tableau) -> BTreeSet<ShiftVector> {
    let n = seed.n();
    // fill rows n-1..1 in order, each entry bounded by the interlacing with the row above
    let mut partial: Vec<Tableau> = vec![seed.clone()];
    for r in (1..n).rev() {
        for s in 1..=r {
            let mut next = Vec::new();
            for t in partial {
                let hi = crate::exact_arith::floor_i64(t.value(r + 1, s));
                // t_{r+1,s+1} < entry <= t_{r+1,s}
                let lo = crate::exact_arith::floor_i64(t.value(r + 1, s + 1)) + 1;
                for v in lo..=hi {
                    let mut u = t.clone();
                    u.entry_mut(r, s).base = int(v);
                    next.push(u);
                }
            }
            partial = next;
        }
    }
    partial
        .into_iter()
        .filter(Tableau::is_standard)
        .map(|t| seed.integral_offset(&t).expect("integral shift"))
        .collect()
}

impl GlModule for FiniteModule {
    type Basis = ShiftVector;

    fn n(&self) -> usize {
        self.top.n()
    }

    fn act_basis(&self, l: usize, m: usize, z: &ShiftVector) -> Result<LinComb<ShiftVector>> {
        let x = LinComb::basis(z.clone());
        match l.cmp(&m) {
            std::cmp::Ordering::Equal => self.classical(ClassicalGen::Diag(l), z),
            _ if l + 1 == m => self.classical(ClassicalGen::Raise(l), z),
            _ if m + 1 == l => self.classical(ClassicalGen::Lower(m), z),
            // E_lm = [E_{l,l+1}, E_{l+1,m}] and E_lm = [E_{l,l-1}, E_{l-1,m}]
            std::cmp::Ordering::Less => {
                let ab = self.act_word(&[(l, l + 1), (l + 1, m)], &x)?;
                let ba = self.act_word(&[(l + 1, m), (l, l + 1)], &x)?;
                Ok(ab.minus(&ba))
            }
            std::cmp::Ordering::Greater => {
                let ab = self.act_word(&[(l, l - 1), (l - 1, m)], &x)?;
                let ba = self.act_word(&[(l - 1, m), (l, l - 1)], &x)?;
                Ok(ab.minus(&ba))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use crate::linear::{bracket_sides, crs_via_composition, generators};

    fn generic(s: &str) -> GenericModule {
        GenericModule::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rejects_non_generic_base() {
        assert!(GenericModule::new("(0,0,0|1,0|0)".parse().unwrap()).is_err());
    }

    #[test]
    fn gl2_commutator_is_cartan() {
        let m = generic("(3/2,-5/2|1/7)");
        let x = LinComb::basis(ShiftVector::zero(2));
        let lhs = m
            .act_word(&[(1, 2), (2, 1)], &x)
            .unwrap()
            .minus(&m.act_word(&[(2, 1), (1, 2)], &x).unwrap());
        let rhs = m.act(1, 1, &x).unwrap().minus(&m.act(2, 2, &x).unwrap());
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn diagonal_acts_by_scalars() {
        let m = generic("(0,1/3,2/3|1/5,1/7|1/2)");
        let z: ShiftVector = "(1,-2|3)".parse().unwrap();
        for k in 1..=3 {
            let y = m.act_basis(k, k, &z).unwrap();
            assert!(y.keys().all(|key| key == &z));
        }
        // E_11 reads t_11 = 1/2 + 3
        assert_eq!(m.act_basis(1, 1, &z).unwrap().coeff(&z), rat(7, 2));
    }

    #[test]
    fn gamma_eigenvalues_match_composition() {
        let m = generic("(0,1/3,2/3|1/5,1/7|1/2)");
        let z: ShiftVector = "(1,0|-1)".parse().unwrap();
        let x = LinComb::basis(z.clone());
        for r in 1..=3 {
            for s in 1..=r {
                let lhs = crs_via_composition(&m, r, s, &x).unwrap();
                assert_eq!(lhs, x.scaled(&m.gamma_eigenvalue(r, s, &z).unwrap()), "c_{r}{s}");
            }
        }
        assert_eq!(m.gamma_eigenvalue(1, 1, &z).unwrap(), rat(-1, 2));
        assert_eq!(m.gamma_eigenvalue(2, 1, &z).unwrap(), rat(1, 5) + rat(1, 7) + int(1) + int(1));
    }

    #[test]
    fn brackets_on_a_few_generic_vectors() {
        let m = generic("(0,1/3,2/3|1/5,1/7|1/2)");
        for z in ["(0,0|0)", "(1,-1|2)"] {
            let x = LinComb::basis(z.parse::<ShiftVector>().unwrap());
            for g in generators(3) {
                for h in generators(3) {
                    let (lhs, rhs) = bracket_sides(&m, g, h, &x).unwrap();
                    assert_eq!(lhs, rhs, "[{g:?},{h:?}] on {z}");
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let m = generic("(0,0,0|1/2,1/3|1/5)");
        let z = ShiftVector::zero(3);
        assert!(m.submodule_membership(&z, &z));
        assert!(m.irreducible_membership(&z, &z));
        let other: ShiftVector = "(2,-1|4)".parse().unwrap();
        assert!(m.submodule_membership(&z, &other), "empty Omega+ is below everything");
    }

    #[test]
    fn gl3_adjoint_has_eight_standard_tableaux() {
        let v = FiniteModule::new(&[2, 1, 0]).unwrap();
        assert_eq!(v.dim(), 8);
        assert_eq!(v.base().row(3).iter().map(|e| e.base.clone()).collect::<Vec<_>>(), vec![int(2), int(0), int(-2)]);
        let gl2 = FiniteModule::new(&[3, 0]).unwrap();
        assert_eq!(gl2.dim(), 4);
        assert!(FiniteModule::new(&[0, 1]).is_err());
    }
}
