//! Power series in `h` truncated at a fixed order.
//!
//! A series of order `D` stores `c_0..c_D` and stands for `Σ c_m h^m + O(h^(D+1))`.
//! Binary operations on series of different orders truncate to the smaller one.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::{terms, Error, HalfLaurent, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSeries {
    coeffs: Vec<Rational>,
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, Rational::one(), order)
    }

    pub fn monomial(m: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if m <= order {
            s.coeffs[m] = c;
        }
        s
    }

    /// Pads with zeros or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `f(r·h)`.
    pub fn scale_variable(&self, r: &Rational) -> Self {
        let mut p = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &p);
            p *= r;
        }
        Self { coeffs }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SeriesDomain(
                "reciprocal needs a nonzero constant term",
            ));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for m in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += &self.coeffs[k] * &out[m - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// `exp(f)` via `m·g_m = Σ_{k=1..m} k·f_k·g_(m-k)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesDomain("exp needs a zero constant term"));
        }
        let mut g: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        g.push(Rational::one());
        for m in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &g[m - k] * rational::int(k as i64);
                }
            }
            g.push(acc / rational::int(m as i64));
        }
        Ok(Self { coeffs: g })
    }

    /// `log(f)` via `m·g_m = m·f_m - Σ_{k=1..m-1} k·g_k·f_(m-k)`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SeriesDomain("log needs constant term 1"));
        }
        let mut g: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        g.push(Rational::zero());
        for m in 1..self.coeffs.len() {
            let mut acc = &self.coeffs[m] * rational::int(m as i64);
            for k in 1..m {
                acc -= &g[k] * &self.coeffs[m - k] * rational::int(k as i64);
            }
            g.push(acc / rational::int(m as i64));
        }
        Ok(Self { coeffs: g })
    }

    /// `exp(a·h)` truncated.
    pub fn exp_linear(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        coeffs.push(term.clone());
        for m in 1..=order {
            term = term * a / rational::int(m as i64);
            coeffs.push(term.clone());
        }
        Self { coeffs }
    }

    /// Replaces `t^(k/2)` by `exp(k·h/2)`.
    pub fn substitute_exp(p: &HalfLaurent, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (k, c) in p.terms() {
            let e = Self::exp_linear(&rational::frac(k, 2), order).scale(c);
            out = &out + &e;
        }
        out
    }

    /// `h / (e^(h/2) - e^(-h/2))`, the reciprocal of `Σ_j (h/2)^(2j) / (2j+1)!`.
    pub fn c_series(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|m| {
                if m % 2 == 1 {
                    Rational::zero()
                } else {
                    let denom = rational::factorial(m + 1) * BigInt::from(2).pow(m as u32);
                    Rational::new(BigInt::one(), denom)
                }
            })
            .collect();
        Self { coeffs }
            .reciprocal()
            .expect("sinh series has constant term 1")
    }

    /// `z^2 = (e^(h/2) - e^(-h/2))^2 = 2cosh(h) - 2`.
    pub fn z_squared(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|m| {
                if m == 0 || m % 2 == 1 {
                    Rational::zero()
                } else {
                    Rational::new(BigInt::from(2), rational::factorial(m))
                }
            })
            .collect();
        Self { coeffs }
    }
}

impl Add for &HSeries {
    type Output = HSeries;
    fn add(self, rhs: &HSeries) -> HSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        HSeries {
            coeffs: (0..n).map(|m| &self.coeffs[m] + &rhs.coeffs[m]).collect(),
        }
    }
}

impl Sub for &HSeries {
    type Output = HSeries;
    fn sub(self, rhs: &HSeries) -> HSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        HSeries {
            coeffs: (0..n).map(|m| &self.coeffs[m] - &rhs.coeffs[m]).collect(),
        }
    }
}

impl Mul for &HSeries {
    type Output = HSeries;
    fn mul(self, rhs: &HSeries) -> HSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HSeries { coeffs }
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, terms::power("h", m as i64)))
            .collect();
        terms::write_sum(f, items, "*")?;
        f.write_str(&format!(" + O(h^{})", self.order() + 1))
    }
}
