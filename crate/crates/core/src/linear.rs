//! Sparse formal linear combinations and operations shared by every module
//! built on the generator action.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::Mutex;

use num_traits::Zero;

use crate::error::Result;
use crate::exact_arith::Rational;

/// A finite formal sum `sum c_b b` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, Rational::from_integer(1.into()))
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn plus(&self, other: &LinComb<K>) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &LinComb<K>) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn map_keys<J: Ord + Clone>(&self, f: impl Fn(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, v)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})*{k}")?;
        }
        Ok(())
    }
}

/// A `gl(n)`-module presented on a basis by the action of `E_lm` on basis
/// vectors.
pub trait GlModule: Sync {
    type Basis: Ord + Hash + Clone + fmt::Debug + fmt::Display + Send + Sync;

    fn n(&self) -> usize;

    fn act_basis(&self, l: usize, m: usize, b: &Self::Basis) -> Result<LinComb<Self::Basis>>;

    /// Linear extension of [`GlModule::act_basis`].
    fn act(&self, l: usize, m: usize, x: &LinComb<Self::Basis>) -> Result<LinComb<Self::Basis>> {
        let mut out = LinComb::zero();
        for (b, c) in x.iter() {
            out.add_scaled(&self.act_basis(l, m, b)?, c);
        }
        Ok(out)
    }

    /// Applies `E_{w_1} E_{w_2} ... E_{w_k}` (rightmost first).
    fn act_word(&self, word: &[(usize, usize)], x: &LinComb<Self::Basis>) -> Result<LinComb<Self::Basis>> {
        let mut cur = x.clone();
        for &(l, m) in word.iter().rev() {
            cur = self.act(l, m, &cur)?;
        }
        Ok(cur)
    }
}

/// Memoizes [`GlModule::act_basis`] of an inner module.
///
/// Meant to be short-lived, e.g. one per basis vector of a sweep, so the
/// lock is never contended.
pub struct Cached<'a, M: GlModule> {
    inner: &'a M,
    memo: Mutex<HashMap<(usize, usize, M::Basis), LinComb<M::Basis>>>,
}

impl<'a, M: GlModule> Cached<'a, M> {
    pub fn new(inner: &'a M) -> Self {
        Cached {
            inner,
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl<M: GlModule> GlModule for Cached<'_, M> {
    type Basis = M::Basis;

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn act_basis(&self, l: usize, m: usize, b: &M::Basis) -> Result<LinComb<M::Basis>> {
        let key = (l, m, b.clone());
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let out = self.inner.act_basis(l, m, b)?;
        self.memo.lock().expect("memo lock").insert(key, out.clone());
        Ok(out)
    }
}

/// All generators `E_lm` of `gl(n)` in lexicographic order.
pub fn generators(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|l| (1..=n).map(move |m| (l, m))).collect()
}

/// Both sides of `[E_ab, E_cd] x = delta_bc E_ad x - delta_da E_cb x`.
pub fn bracket_sides<M: GlModule>(
    module: &M,
    (a, b): (usize, usize),
    (c, d): (usize, usize),
    x: &LinComb<M::Basis>,
) -> Result<(LinComb<M::Basis>, LinComb<M::Basis>)> {
    let lhs = module
        .act(a, b, &module.act(c, d, x)?)?
        .minus(&module.act(c, d, &module.act(a, b, x)?)?);
    let mut rhs = LinComb::zero();
    if b == c {
        rhs.add_assign(&module.act(a, d, x)?);
    }
    if d == a {
        rhs = rhs.minus(&module.act(c, b, x)?);
    }
    Ok((lhs, rhs))
}

/// `c_rs x = sum over (i_1..i_s) in {1..r}^s of E_{i1 i2} E_{i2 i3} ... E_{is i1} x`.
///
/// Evaluated as a matrix power: for fixed `i_1` the partial products
/// `E_{a i_1} x` are propagated through `sum_b E_{ab}` so the cost is
/// `O(r^3 s)` generator applications instead of `r^s` words.
pub fn crs_via_composition<M: GlModule>(
    module: &M,
    r: usize,
    s: usize,
    x: &LinComb<M::Basis>,
) -> Result<LinComb<M::Basis>> {
    let mut total = LinComb::zero();
    if s == 0 {
        return Ok(x.clone());
    }
    if s == 1 {
        for i in 1..=r {
            total.add_assign(&module.act(i, i, x)?);
        }
        return Ok(total);
    }
    for i1 in 1..=r {
        let mut v: Vec<LinComb<M::Basis>> = (1..=r)
            .map(|a| module.act(a, i1, x))
            .collect::<Result<_>>()?;
        for _ in 0..s - 2 {
            let mut next = Vec::with_capacity(r);
            for b in 1..=r {
                let mut acc = LinComb::zero();
                for (a, va) in v.iter().enumerate() {
                    acc.add_assign(&module.act(b, a + 1, va)?);
                }
                next.push(acc);
            }
            v = next;
        }
        for (a, va) in v.iter().enumerate() {
            total.add_assign(&module.act(i1, a + 1, va)?);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};

    #[test]
    fn no_zero_coefficients() {
        let mut x = LinComb::single("a", int(2));
        x.add_term("a", int(-2));
        assert!(x.is_zero());
        x.add_term("b", int(0));
        assert!(x.is_zero());
        let y: LinComb<&str> = [("a", rat(1, 2)), ("b", int(3)), ("a", rat(1, 2))].into_iter().collect();
        assert_eq!(y.coeff(&"a"), int(1));
        assert_eq!(y.minus(&y), LinComb::zero());
        assert_eq!(y.scaled(&int(0)), LinComb::zero());
    }

    /// The defining representation on `C^n`: `E_lm e_j = delta_mj e_l`.
    struct Natural(usize);

    impl GlModule for Natural {
        type Basis = usize;
        fn n(&self) -> usize {
            self.0
        }
        fn act_basis(&self, l: usize, m: usize, b: &usize) -> Result<LinComb<usize>> {
            Ok(if *b == m { LinComb::basis(l) } else { LinComb::zero() })
        }
    }

    #[test]
    fn brackets_in_natural_representation() {
        let v = Natural(3);
        for g in generators(3) {
            for h in generators(3) {
                for e in 1..=3 {
                    let (lhs, rhs) = bracket_sides(&v, g, h, &LinComb::basis(e)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn casimirs_in_natural_representation() {
        // c_rs on e_j with j <= r: the word E_{j j} ... E_{j j} is the only one surviving
        let v = Natural(3);
        let x = LinComb::basis(2);
        assert_eq!(crs_via_composition(&v, 3, 1, &x).unwrap(), x);
        // E_{i1 i2} E_{i2 i3} E_{i3 i1} e_2 = e_{i1} iff i1 = 2, then i3, i2 free: 3^2 words
        assert_eq!(crs_via_composition(&v, 3, 3, &x).unwrap(), x.scaled(&int(9)));
        assert_eq!(crs_via_composition(&v, 2, 2, &x).unwrap(), x.scaled(&int(2)));
        assert!(crs_via_composition(&v, 1, 2, &x).unwrap().is_zero());
    }
}
