//! Normalized rational functions in the single formal variable `t`.
//!
//! Every coefficient function of the singular module is restricted to the
//! line `x = a + t`, `y = a - t` through the base point, so the directional
//! derivative `(d/dx - d/dy)/2` becomes `(1/2) d/dt` and the reflection
//! swapping `x` and `y` becomes `t -> -t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly1, Rational};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction1 {
    num: Poly1,
    den: Poly1,
}

impl RationalFunction1 {
    /// Cancels common factors and makes the denominator monic.
    pub fn new(num: Poly1, den: Poly1) -> Result<Self> {
        let lc = den.leading().cloned().ok_or(Error::ZeroDenominator)?;
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly1::gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = if g.is_constant() {
            lc
        } else {
            den.leading().cloned().expect("nonzero after cancellation")
        };
        let inv = lc.recip();
        Ok(RationalFunction1 {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RationalFunction1 {
            num: Poly1::zero(),
            den: Poly1::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction1 {
            num: Poly1::constant(c),
            den: Poly1::one(),
        }
    }

    pub fn from_poly(p: Poly1) -> Self {
        RationalFunction1 {
            num: p,
            den: Poly1::one(),
        }
    }

    pub fn t() -> Self {
        Self::from_poly(Poly1::t())
    }

    pub fn num(&self) -> &Poly1 {
        &self.num
    }

    pub fn den(&self) -> &Poly1 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    /// Multiplicity of `t = 0` as a root of the (reduced) denominator.
    pub fn pole_order_at_zero(&self) -> usize {
        self.den.valuation()
    }

    /// Value at `t = 0`.
    pub fn ev_op(&self) -> Result<Rational> {
        match self.pole_order_at_zero() {
            0 => Ok(self.num.coeff(0) / self.den.coeff(0)),
            order => Err(Error::Pole { order }),
        }
    }

    /// `(1/2) f'(0)`.
    pub fn d_op(&self) -> Result<Rational> {
        let order = self.pole_order_at_zero();
        if order > 0 {
            return Err(Error::Pole { order });
        }
        // (n/d)' = (n' d - n d') / d^2 at 0
        let (n0, n1) = (self.num.coeff(0), self.num.coeff(1));
        let (d0, d1) = (self.den.coeff(0), self.den.coeff(1));
        let two = Rational::from_integer(2.into());
        Ok((n1 * &d0 - n0 * d1) / (&d0 * &d0 * two))
    }

    /// `f(-t)`.
    pub fn tau_reflect(&self) -> Self {
        let num = self.num.reflect();
        let den = self.den.reflect();
        // reflection preserves coprimality; only the sign of the leading
        // coefficient of the denominator may flip
        let inv = den.leading().expect("nonzero denominator").recip();
        RationalFunction1 {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// `(f(t) - f(-t)) / (2t)`, i.e. `(f - f^tau) / (x - y)` on the line.
    pub fn divided_difference(&self) -> Self {
        let diff = self - &self.tau_reflect();
        let two_t = Poly1::linear(Rational::zero(), Rational::from_integer(2.into()));
        Self::new(diff.num, &diff.den * &two_t).expect("nonzero denominator")
    }

    /// Multiply by the polynomial `p`.
    pub fn mul_poly(&self, p: &Poly1) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    /// Multiply by `x - y = 2t`.
    pub fn times_two_t(&self) -> Self {
        self.mul_poly(&Poly1::linear(
            Rational::zero(),
            Rational::from_integer(2.into()),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction1 {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction1 {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Value at an arbitrary point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl Default for RationalFunction1 {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for RationalFunction1 {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &RationalFunction1 {
    type Output = RationalFunction1;
    fn add(self, rhs: &RationalFunction1) -> RationalFunction1 {
        if self.den == rhs.den {
            return RationalFunction1::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        RationalFunction1::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction1 {
    type Output = RationalFunction1;
    fn sub(self, rhs: &RationalFunction1) -> RationalFunction1 {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction1 {
    type Output = RationalFunction1;
    fn mul(self, rhs: &RationalFunction1) -> RationalFunction1 {
        RationalFunction1::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction1 {
    type Output = RationalFunction1;
    fn neg(self) -> RationalFunction1 {
        RationalFunction1 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
