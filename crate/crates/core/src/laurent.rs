//! Laurent polynomials in `t^(1/2)` with rational coefficients.
//!
//! Exponents are stored as integers counting powers of `t^(1/2)`: the key `k`
//! stands for `t^(k/2)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::{terms, Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    coeffs: BTreeMap<i64, Rational>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c · t^(half_exp/2)`.
    pub fn monomial(half_exp: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(half_exp, c);
        p
    }

    /// `t^(1/2)`.
    pub fn t_half() -> Self {
        Self::monomial(1, Rational::one())
    }

    /// `z = t^(1/2) - t^(-1/2)`.
    pub fn z() -> Self {
        Self::from_terms([(1, Rational::one()), (-1, -Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Builds `Σ a_j t^j` from a dense coefficient list in integer powers of `t`,
    /// then multiplies by `t^(shift/2)`.
    pub fn from_t_polynomial(coeffs: &[Rational], shift: i64) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (2 * j as i64 + shift, c.clone())),
        )
    }

    pub(crate) fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, half_exp: i64) -> Rational {
        self.coeffs
            .get(&half_exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(i64, &Rational)> {
        self.coeffs.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `t^(half_exp/2)`.
    pub fn shift(&self, half_exp: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k + half_exp, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// The involution `t^(1/2) ↦ -t^(-1/2)`: `t^(k/2) ↦ (-1)^k t^(-k/2)`.
    pub fn involution(&self) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| {
            let c = if k.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            (-k, c)
        }))
    }

    pub fn is_involution_invariant(&self) -> bool {
        self.involution() == *self
    }

    /// Value at `t^(1/2) = v`.
    pub fn evaluate(&self, v: &Rational) -> Result<Rational> {
        if v.is_zero() {
            if self.min_exponent().is_some_and(|k| k < 0) {
                return Err(Error::EvaluateAtZero);
            }
            return Ok(self.coeff(0));
        }
        Ok(self.terms().fold(Rational::zero(), |acc, (k, c)| {
            acc + c * rational::pow(v, k)
        }))
    }

    /// Value at `t = 1`.
    pub fn value_at_one(&self) -> Rational {
        self.coeffs
            .values()
            .fold(Rational::zero(), |acc, c| acc + c)
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl Zero for HalfLaurent {
    fn zero() -> Self {
        HalfLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        HalfLaurent::is_zero(self)
    }
}

impl One for HalfLaurent {
    fn one() -> Self {
        HalfLaurent::one()
    }
}

fn render_power(k: i64) -> alloc::string::String {
    if k.rem_euclid(2) == 0 {
        terms::power("t", k / 2)
    } else {
        format!("t^({k}/2)")
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<_> = self.terms().map(|(k, c)| (c, render_power(k))).collect();
        terms::write_sum(f, items, "*")
    }
}
