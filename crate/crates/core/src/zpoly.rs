//! Polynomials in `z = t^(1/2) - t^(-1/2)` of the form `z^s · Σ b_k z^(2k)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::{terms, Error, HSeries, HalfLaurent, Rational, Result};

/// `z^prefactor · Σ_k coeffs[k] · z^(2k)`.
///
/// Equality compares the expanded polynomial in `z`, so `z^2` written with
/// prefactor 2 equals `z^2` written as `0 + 1·z^2` with prefactor 0.
#[derive(Clone, Debug)]
pub struct ZPoly {
    prefactor: u32,
    coeffs: Vec<Rational>,
}

impl ZPoly {
    pub fn new(prefactor: u32, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { prefactor, coeffs }
    }

    pub fn one() -> Self {
        Self::new(0, vec![Rational::one()])
    }

    pub fn prefactor(&self) -> u32 {
        self.prefactor
    }

    /// The `b_k`, without trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficients of the expanded polynomial in `z`, trimmed.
    pub fn z_coefficients(&self) -> Vec<Rational> {
        if self.coeffs.is_empty() {
            return Vec::new();
        }
        let s = self.prefactor as usize;
        let mut out = vec![Rational::zero(); s + 2 * (self.coeffs.len() - 1) + 1];
        for (k, b) in self.coeffs.iter().enumerate() {
            out[s + 2 * k] = b.clone();
        }
        out
    }

    /// Highest power of `z` with a nonzero coefficient; `None` for zero.
    pub fn z_degree(&self) -> Option<usize> {
        (!self.coeffs.is_empty()).then(|| self.prefactor as usize + 2 * (self.coeffs.len() - 1))
    }

    /// Value at `z = 0`, i.e. at `t = 1`.
    pub fn value_at_zero(&self) -> Rational {
        if self.prefactor == 0 {
            self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
        } else {
            Rational::zero()
        }
    }

    /// Expansion under `z = t^(1/2) - t^(-1/2)`.
    pub fn to_laurent(&self) -> HalfLaurent {
        let z = HalfLaurent::z();
        let z2 = &z * &z;
        let mut out = HalfLaurent::zero();
        let mut power = z.pow(self.prefactor);
        for b in &self.coeffs {
            out = &out + &power.scale(b);
            power = &power * &z2;
        }
        out
    }

    /// Rewrites `p` as `z^s · q(z^2)`, or fails if `p` is not of that shape.
    ///
    /// Triangular elimination from the top: `z^(s+2k)` has leading term
    /// `t^((s+2k)/2)` with coefficient 1, so each step fixes one `b_k` and
    /// lowers the top exponent by at least one half-power.
    pub fn from_laurent(p: &HalfLaurent, s: u32) -> Result<Self> {
        let err = Error::NotInZForm { prefactor: s };
        let z = HalfLaurent::z();
        let base = z.pow(s);
        let z2 = &z * &z;
        let mut rest = p.clone();
        let mut coeffs: Vec<Rational> = Vec::new();
        while let Some((top, c)) = rest.leading() {
            let k = top - i64::from(s);
            if k < 0 || k % 2 != 0 {
                return Err(err);
            }
            let k = (k / 2) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            let c = c.clone();
            let term = (&base * &z2.pow(k as u32)).scale(&c);
            coeffs[k] += c;
            rest = &rest - &term;
        }
        Ok(Self::new(s, coeffs))
    }

    /// Inverse of `substitute_exp ∘ to_laurent` on even series: solves
    /// `g = Σ b_k (z^2)^k` with `z^2 = 2cosh(h) - 2`, for `2k <= max_z_degree`.
    pub fn from_series(g: &HSeries, max_z_degree: usize) -> Result<Self> {
        let order = g.order();
        if let Some(m) = (1..=order).step_by(2).find(|&m| !g.coeff(m).is_zero()) {
            return Err(Error::OddOrderTerm { order: m });
        }
        if max_z_degree > order {
            return Err(Error::InsufficientOrder {
                max_z_degree,
                order,
            });
        }
        let z2 = HSeries::z_squared(order);
        let mut power = HSeries::one(order);
        let mut rest = g.clone();
        let mut coeffs = Vec::new();
        for k in 0..=max_z_degree / 2 {
            let b = rest.coeff(2 * k);
            rest = &rest - &power.scale(&b);
            coeffs.push(b);
            power = &power * &z2;
        }
        if let Some(m) = (0..=order).find(|&m| !rest.coeff(m).is_zero()) {
            return Err(Error::NonzeroResidual {
                max_z_degree,
                order: m,
            });
        }
        Ok(Self::new(0, coeffs))
    }
}

impl PartialEq for ZPoly {
    fn eq(&self, other: &Self) -> bool {
        self.z_coefficients() == other.z_coefficients()
    }
}

impl Eq for ZPoly {}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dense = self.z_coefficients();
        let items: Vec<_> = dense
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c, terms::power("z", k as i64)))
            .collect();
        terms::write_sum(f, items, "*")
    }
}
