//! Gelfand-Tsetlin tableaux, integer shift lattices and the permutation
//! tuples that index the summands of the generator action.
//!
//! Rows are numbered `n` (top, fixed) down to `1`; positions inside row `r`
//! run `1..=r`. All indices in the public API are 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::{
    floor_i64, is_integer, is_nonneg_integer, parse_rational, Poly1, Rational,
};

/// A tableau entry `base + tcoef * t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Entry {
    pub base: Rational,
    pub tcoef: i64,
}

impl Entry {
    pub fn constant(base: Rational) -> Self {
        Entry { base, tcoef: 0 }
    }

    pub fn as_poly(&self) -> Poly1 {
        Poly1::linear(self.base.clone(), Rational::from_integer(self.tcoef.into()))
    }
}

/// `a - b` as a polynomial in `t`.
pub fn entry_diff(a: &Entry, b: &Entry) -> Poly1 {
    Poly1::linear(
        &a.base - &b.base,
        Rational::from_integer((a.tcoef - b.tcoef).into()),
    )
}

/// Triangular array `(t_{n1},...,t_{nn}|...|t_{11})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    n: usize,
    // rows[r - 1] holds row r
    rows: Vec<Vec<Entry>>,
}

impl Tableau {
    /// Rows given top first, as in the text form.
    pub fn from_rows(rows_top_first: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows_top_first.len();
        if n < 2 {
            return Err(Error::Precondition(format!("tableau needs n >= 2, got {n}")));
        }
        let mut rows = Vec::with_capacity(n);
        for (idx, row) in rows_top_first.into_iter().rev().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {}",
                    idx + 1,
                    row.len(),
                    idx + 1
                )));
            }
            rows.push(row.into_iter().map(Entry::constant).collect());
        }
        Ok(Tableau { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, s: usize) -> &Entry {
        &self.rows[r - 1][s - 1]
    }

    pub fn entry_mut(&mut self, r: usize, s: usize) -> &mut Entry {
        &mut self.rows[r - 1][s - 1]
    }

    pub fn value(&self, r: usize, s: usize) -> &Rational {
        &self.entry(r, s).base
    }

    pub fn row(&self, r: usize) -> &[Entry] {
        &self.rows[r - 1]
    }

    pub fn has_t(&self) -> bool {
        self.rows.iter().flatten().any(|e| e.tcoef != 0)
    }

    /// Adds the integer shift `z` to rows `n-1..1`.
    pub fn shifted(&self, z: &ShiftVector) -> Tableau {
        assert_eq!(z.n(), self.n, "shift vector of the wrong size");
        let mut out = self.clone();
        for (r, s) in z.positions() {
            let dz = z.get(r, s);
            if dz != 0 {
                out.entry_mut(r, s).base += Rational::from_integer(dz.into());
            }
        }
        out
    }

    /// Row-wise entry permutation: `(sigma w)_{r,s} = w_{r, sigma[r]^{-1}(s)}`.
    pub fn permuted(&self, sigma: &PermTuple) -> Tableau {
        let mut out = self.clone();
        for r in 1..=self.n {
            let p = sigma.row(r);
            for s in 1..=r {
                out.rows[r - 1][p[s - 1] - 1] = self.rows[r - 1][s - 1].clone();
            }
        }
        out
    }

    /// Same-row pairs `(r, s, u)`, `s < u`, rows `<= n-1`, whose difference is an integer.
    /// Only meaningful without `t`.
    pub fn singular_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for r in (1..self.n).rev() {
            for s in 1..=r {
                for u in s + 1..=r {
                    if is_integer(&(self.value(r, s) - self.value(r, u))) {
                        out.push((r, s, u));
                    }
                }
            }
        }
        out
    }

    pub fn is_generic(&self) -> bool {
        self.singular_pairs().is_empty()
    }

    /// `t_{ri} - t_{r-1,i} in Z>=0` and `t_{r-1,i} - t_{r,i+1} in Z>0`.
    pub fn is_standard(&self) -> bool {
        for r in 2..=self.n {
            for i in 1..r {
                let up = self.value(r, i) - self.value(r - 1, i);
                let down = self.value(r - 1, i) - self.value(r, i + 1);
                if !is_nonneg_integer(&up) || !(is_integer(&down) && down > Rational::zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// `{(r, s, u) : 1 < r <= n, l_{rs} - l_{r-1,u} in Z>=0}`.
    pub fn omega_plus(&self) -> BTreeSet<(usize, usize, usize)> {
        let mut out = BTreeSet::new();
        for r in 2..=self.n {
            for s in 1..=r {
                for u in 1..r {
                    if is_nonneg_integer(&(self.value(r, s) - self.value(r - 1, u))) {
                        out.insert((r, s, u));
                    }
                }
            }
        }
        out
    }

    /// `w + floor(vbar - w)` on rows `<= n-1`; the top row is left alone.
    pub fn closest_representative(&self, vbar: &Tableau) -> Tableau {
        let mut out = self.clone();
        for r in 1..self.n {
            for s in 1..=r {
                let shift = floor_i64(&(vbar.value(r, s) - self.value(r, s)));
                out.entry_mut(r, s).base += Rational::from_integer(shift.into());
            }
        }
        out
    }

    /// Shift from `self` to `other` on rows `<= n-1`, if it is integral and the
    /// top rows agree.
    pub fn integral_offset(&self, other: &Tableau) -> Option<ShiftVector> {
        if self.n != other.n || self.row(self.n) != other.row(other.n) {
            return None;
        }
        let mut z = ShiftVector::zero(self.n);
        for (r, s) in z.clone().positions() {
            let d = other.value(r, s) - self.value(r, s);
            z.set(r, s, crate::exact_arith::as_i64(&d)?);
        }
        Some(z)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for r in (1..=self.n).rev() {
            for (s, e) in self.row(r).iter().enumerate() {
                if s > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", e.base)?;
                match e.tcoef {
                    0 => {}
                    1 => write!(f, "+t")?,
                    -1 => write!(f, "-t")?,
                    c if c > 0 => write!(f, "+{c}t")?,
                    c => write!(f, "{c}t")?,
                }
            }
            if r > 1 {
                write!(f, "|")?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// `"(a,b,c|d,e|f)"` with rational entries `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("tableau {s:?} must be parenthesised")))?;
        let rows = inner
            .split('|')
            .map(|row| row.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows)
    }
}

/// Integer shifts of rows `n-1..1`; the top row never moves.
///
/// Stored row-major, `r` descending and `s` ascending, which is also the
/// derived ordering.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ShiftVector {
    n: usize,
    z: Vec<i64>,
}

impl ShiftVector {
    pub fn zero(n: usize) -> Self {
        ShiftVector {
            n,
            z: vec![0; n * (n - 1) / 2],
        }
    }

    /// From the flat canonical order `(z_{n-1,1}, ..., z_{11})`.
    pub fn from_flat(n: usize, z: Vec<i64>) -> Result<Self> {
        if z.len() != n * (n - 1) / 2 {
            return Err(Error::Precondition(format!(
                "shift vector for n = {n} needs {} entries, got {}",
                n * (n - 1) / 2,
                z.len()
            )));
        }
        Ok(ShiftVector { n, z })
    }

    /// `delta^{rs}`.
    pub fn delta(n: usize, r: usize, s: usize) -> Self {
        let mut z = Self::zero(n);
        z.set(r, s, 1);
        z
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &[i64] {
        &self.z
    }

    fn offset(&self, r: usize, s: usize) -> usize {
        debug_assert!(1 <= s && s <= r && r < self.n, "({r},{s}) out of range");
        (self.n - 1) * self.n / 2 - r * (r + 1) / 2 + (s - 1)
    }

    pub fn get(&self, r: usize, s: usize) -> i64 {
        self.z[self.offset(r, s)]
    }

    pub fn set(&mut self, r: usize, s: usize, v: i64) {
        let o = self.offset(r, s);
        self.z[o] = v;
    }

    /// `(r, s)` pairs in storage order.
    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..n).rev().flat_map(|r| (1..=r).map(move |s| (r, s)))
    }

    pub fn is_zero(&self) -> bool {
        self.z.iter().all(|&x| x == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.z.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn permuted(&self, sigma: &PermTuple) -> ShiftVector {
        let mut out = self.clone();
        for r in 1..self.n {
            let p = sigma.row(r);
            for s in 1..=r {
                out.set(r, p[s - 1], self.get(r, s));
            }
        }
        out
    }

    /// All shifts with `|z_rs| <= bound`, in storage order.
    pub fn window(n: usize, bound: i64) -> Vec<ShiftVector> {
        let len = n * (n - 1) / 2;
        let side = (2 * bound + 1) as usize;
        let total = side.pow(len as u32);
        (0..total)
            .map(|mut idx| {
                let mut z = vec![0; len];
                for slot in z.iter_mut().rev() {
                    *slot = (idx % side) as i64 - bound;
                    idx /= side;
                }
                ShiftVector { n, z }
            })
            .collect()
    }
}

impl std::ops::Add for &ShiftVector {
    type Output = ShiftVector;
    fn add(self, rhs: &ShiftVector) -> ShiftVector {
        ShiftVector {
            n: self.n,
            z: self.z.iter().zip(&rhs.z).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &ShiftVector {
    type Output = ShiftVector;
    fn sub(self, rhs: &ShiftVector) -> ShiftVector {
        ShiftVector {
            n: self.n,
            z: self.z.iter().zip(&rhs.z).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &ShiftVector {
    type Output = ShiftVector;
    fn neg(self) -> ShiftVector {
        ShiftVector {
            n: self.n,
            z: self.z.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for r in (1..self.n).rev() {
            for s in 1..=r {
                if s > 1 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, s))?;
            }
            if r > 1 {
                write!(f, "|")?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for ShiftVector {
    type Err = Error;

    /// `"(z21,z22|z11)"` for `n = 3`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("shift {s:?} must be parenthesised")))?;
        let rows: Vec<&str> = inner.split('|').collect();
        let n = rows.len() + 1;
        let mut z = Vec::new();
        for (idx, row) in rows.iter().enumerate() {
            let vals = row
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != n - 1 - idx {
                return Err(Error::Parse(format!("bad row length in shift {s:?}")));
            }
            z.extend(vals);
        }
        ShiftVector::from_flat(n, z)
    }
}

/// `epsilon_{rs}`: `delta^{r1} + ... + delta^{s-1,1}` for `r < s`, zero on the
/// diagonal, antisymmetric.
pub fn epsilon(n: usize, r: usize, s: usize) -> ShiftVector {
    match r.cmp(&s) {
        std::cmp::Ordering::Equal => ShiftVector::zero(n),
        std::cmp::Ordering::Greater => -&epsilon(n, s, r),
        std::cmp::Ordering::Less => {
            let mut z = ShiftVector::zero(n);
            for q in r..s {
                z.set(q, 1, 1);
            }
            z
        }
    }
}

/// An element `(sigma[n], ..., sigma[1])` of `S_n x ... x S_1`.
///
/// `rows[r - 1][s - 1] = sigma[r](s)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PermTuple {
    rows: Vec<Vec<usize>>,
}

impl PermTuple {
    pub fn identity(n: usize) -> Self {
        PermTuple {
            rows: (1..=n).map(|r| (1..=r).collect()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.rows[r - 1]
    }

    /// Identity except `sigma[r] = (a, b)`.
    pub fn with_transposition(mut self, r: usize, a: usize, b: usize) -> Self {
        let row = &mut self.rows[r - 1];
        *row = (1..=r).collect();
        row.swap(a - 1, b - 1);
        self
    }

    /// `sigma[r](1)`: for an element of `Phi`, the `p` with `sigma[r] = (1, p)`.
    pub fn first_image(&self, r: usize) -> usize {
        self.rows[r - 1][0]
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().enumerate().all(|(s, &p)| p == s + 1))
    }

    /// `(self * other)[r] = self[r] o other[r]`, so `(self * other)(w) = self(other(w))`.
    pub fn compose(&self, other: &PermTuple) -> PermTuple {
        PermTuple {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| b.iter().map(|&x| a[x - 1]).collect())
                .collect(),
        }
    }

    pub fn inverse(&self) -> PermTuple {
        PermTuple {
            rows: self
                .rows
                .iter()
                .map(|row| {
                    let mut inv = vec![0; row.len()];
                    for (s, &p) in row.iter().enumerate() {
                        inv[p - 1] = s + 1;
                    }
                    inv
                })
                .collect(),
        }
    }

    /// Each row either the identity or a transposition `(1, p)`, and
    /// nontrivial only on rows `min(l,m)..max(l,m)-1`.
    pub fn is_in_phi(&self, l: usize, m: usize) -> bool {
        let (lo, hi) = (l.min(m), l.max(m));
        (1..=self.n()).all(|r| {
            let row = self.row(r);
            let p = row[0];
            let is_one_p = (1..=r).all(|s| {
                let expect = if s == 1 {
                    p
                } else if s == p {
                    1
                } else {
                    s
                };
                row[s - 1] == expect
            });
            is_one_p && (p == 1 || (lo <= r && r < hi))
        })
    }

    /// From the image lists `rows[r - 1] = sigma[r]`; each must be a permutation of `1..=r`.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        for (idx, row) in rows.iter().enumerate() {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            if sorted != (1..=idx + 1).collect::<Vec<_>>() {
                return Err(Error::Precondition(format!("row {} is not a permutation", idx + 1)));
            }
        }
        Ok(PermTuple { rows })
    }
}

impl fmt::Display for PermTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.n())
            .rev()
            .map(|r| {
                let row = self.row(r);
                if row.iter().enumerate().all(|(s, &p)| p == s + 1) {
                    "id".to_string()
                } else {
                    format!("{row:?}")
                }
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `Phi_{lm}`: tuples whose row `t`, `min <= t <= max-1`, is a transposition
/// `(1, p)` with `1 <= p <= t` (`p = 1` meaning the identity).
///
/// Enumerated lexicographically in `(sigma[min](1), ..., sigma[max-1](1))`.
pub fn phi_set(l: usize, m: usize, n: usize) -> Vec<PermTuple> {
    let (lo, hi) = (l.min(m), l.max(m));
    let mut out = vec![PermTuple::identity(n)];
    for r in lo..hi {
        out = out
            .into_iter()
            .flat_map(|sigma| (1..=r).map(move |p| sigma.clone().with_transposition(r, 1, p)))
            .collect();
    }
    out
}

/// The data fixing the single singular pair `(k, i, j)` and the base point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularFrame {
    k: usize,
    i: usize,
    j: usize,
    vbar: Tableau,
}

impl SingularFrame {
    /// Checks `1 <= i < j <= k <= n-1`, `vbar_{ki} = vbar_{kj}`, and that every
    /// other same-row difference in rows `<= n-1` is non-integral.
    pub fn new(k: usize, i: usize, j: usize, vbar: Tableau) -> Result<Self> {
        let n = vbar.n();
        if !(1 <= i && i < j && j <= k && k < n) {
            return Err(Error::Precondition(format!(
                "need 1 <= i < j <= k <= n-1, got (k,i,j) = ({k},{i},{j}), n = {n}"
            )));
        }
        if vbar.has_t() {
            return Err(Error::Precondition("base point must not carry t".into()));
        }
        if vbar.value(k, i) != vbar.value(k, j) {
            return Err(Error::Precondition(format!(
                "vbar_{k}{i} = {} differs from vbar_{k}{j} = {}",
                vbar.value(k, i),
                vbar.value(k, j)
            )));
        }
        let others: Vec<_> = vbar
            .singular_pairs()
            .into_iter()
            .filter(|&p| p != (k, i, j))
            .collect();
        if !others.is_empty() {
            return Err(Error::Precondition(format!(
                "base point is not 1-singular, extra integral pairs {others:?}"
            )));
        }
        Ok(SingularFrame { k, i, j, vbar })
    }

    pub fn n(&self) -> usize {
        self.vbar.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn vbar(&self) -> &Tableau {
        &self.vbar
    }

    /// `tau`: `tau[k] = (i, j)`, identity elsewhere.
    pub fn tau(&self) -> PermTuple {
        PermTuple::identity(self.n()).with_transposition(self.k, self.i, self.j)
    }

    pub fn tau_shift(&self, z: &ShiftVector) -> ShiftVector {
        let mut out = z.clone();
        out.set(self.k, self.i, z.get(self.k, self.j));
        out.set(self.k, self.j, z.get(self.k, self.i));
        out
    }

    pub fn is_tau_fixed(&self, z: &ShiftVector) -> bool {
        z.get(self.k, self.i) == z.get(self.k, self.j)
    }

    /// `z_{ki} - z_{kj}`.
    pub fn pair_gap(&self, z: &ShiftVector) -> i64 {
        z.get(self.k, self.i) - z.get(self.k, self.j)
    }

    /// Index `m` of the stratum `R_m = {z : |z_ki - z_kj| = m}`.
    pub fn stratum(&self, z: &ShiftVector) -> u64 {
        self.pair_gap(z).unsigned_abs()
    }

    /// `vbar + z + t (delta^{ki} - delta^{kj})`: the point `v + z` with `v` on
    /// the line through `vbar` in the singular direction.
    pub fn line_tableau(&self, z: &ShiftVector) -> Tableau {
        let mut w = self.vbar.shifted(z);
        w.entry_mut(self.k, self.i).tcoef = 1;
        w.entry_mut(self.k, self.j).tcoef = -1;
        w
    }

    /// `sigma` in `Phi_lm(i) u Phi_lm(j)`, i.e. `sigma[k](1) in {i, j}`.
    pub fn touches_pair(&self, sigma: &PermTuple) -> bool {
        let p = sigma.first_image(self.k);
        p == self.i || p == self.j
    }

    /// `vbar_rs - vbar_{r-1,t}` non-integral for every `1 <= t < r <= n`.
    pub fn cross_rows_nonintegral(&self) -> bool {
        let v = &self.vbar;
        (2..=self.n()).all(|r| {
            (1..=r).all(|s| (1..r).all(|t| !is_integer(&(v.value(r, s) - v.value(r - 1, t)))))
        })
    }

    pub fn describe(&self) -> String {
        format!(
            "n={} (k,i,j)=({},{},{}) vbar={}",
            self.n(),
            self.k,
            self.i,
            self.j,
            self.vbar
        )
    }
}

/// `tau * sigma` for `sigma` in `Phi(i) u Phi(j)`: conjugation `tau sigma tau`
/// when `1 not in {i, j}`, left multiplication otherwise. Only row `k` changes.
pub fn tau_star(sigma: &PermTuple, frame: &SingularFrame) -> Result<PermTuple> {
    if sigma.n() != frame.n() || !frame.touches_pair(sigma) {
        return Err(Error::Precondition(format!(
            "tau_star needs sigma[k](1) in {{i, j}}, got sigma = {sigma}"
        )));
    }
    let tau = frame.tau();
    Ok(if frame.i() == 1 {
        tau.compose(sigma)
    } else {
        tau.compose(sigma).compose(&tau)
    })
}
