//! The even-wheel algebra and the Alexander weight system on it.
//!
//! Wheels are coordinates only: `ω_2n` is a free commutative generator of
//! degree `2n`, and `W∇` sends it to `-2h^(2n)`, extended multiplicatively.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};
use crate::{Error, HSeries, Result};

/// An even wheel `ω_2n`, `n >= 1`. Odd wheels cannot be constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WheelIndex(u32);

impl WheelIndex {
    /// `Some` for even `index >= 2`.
    pub fn new(index: u32) -> Option<Self> {
        (index >= 2 && index.is_multiple_of(2)).then_some(Self(index / 2))
    }

    /// Number of legs, which is also the degree.
    pub fn index(self) -> u32 {
        2 * self.0
    }

    pub fn degree(self) -> usize {
        2 * self.0 as usize
    }
}

/// Image of a single wheel: `W∇(ω_2n) = -2h^(2n)`.
pub fn w_nabla_wheel(w: WheelIndex, order: usize) -> HSeries {
    HSeries::monomial(w.degree(), rational::int(-2), order)
}

/// `exp(Σ a_2n ω_2n)`, stored as the exponent coefficients, truncated at degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelSeries {
    order: usize,
    coeffs: BTreeMap<WheelIndex, Rational>,
}

impl WheelSeries {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from `(index, a_index)` pairs, dropping zeros and indices above `order`.
    pub fn from_coefficients<I: IntoIterator<Item = (WheelIndex, Rational)>>(
        order: usize,
        it: I,
    ) -> Self {
        let mut s = Self::new(order);
        for (w, a) in it {
            s.set(w, a);
        }
        s
    }

    pub fn set(&mut self, w: WheelIndex, a: Rational) {
        if w.degree() > self.order || a.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, a);
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `a_index`, zero for unset or odd indices.
    pub fn coefficient(&self, index: u32) -> Rational {
        WheelIndex::new(index)
            .and_then(|w| self.coeffs.get(&w).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (WheelIndex, &Rational)> {
        self.coeffs.iter().map(|(w, a)| (*w, a))
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ a_2n ω_2n` as a linear wheel polynomial.
    pub fn exponent(&self) -> WheelPolynomial {
        let mut p = WheelPolynomial::zero();
        for (w, a) in self.coefficients() {
            p.add_term(alloc::vec![w], a.clone());
        }
        p
    }

    /// `W∇(exp(Σ a_2n ω_2n)) = exp(-2 Σ a_2n h^(2n))`.
    pub fn w_nabla(&self) -> HSeries {
        let mut exponent = HSeries::zero(self.order);
        for (w, a) in self.coefficients() {
            exponent = &exponent + &w_nabla_wheel(w, self.order).scale(a);
        }
        exponent.exp().expect("exponent has no constant term")
    }

    /// Inverts [`WheelSeries::w_nabla`]: `a_2n = -½·[h^(2n)] log f`.
    pub fn from_series(f: &HSeries) -> Result<Self> {
        if !f.coeff(0).is_one() {
            return Err(Error::SeriesDomain("wheel series need constant term 1"));
        }
        let log = f.log()?;
        if let Some(m) = (1..=log.order())
            .step_by(2)
            .find(|&m| !log.coeff(m).is_zero())
        {
            return Err(Error::OddOrderTerm { order: m });
        }
        let half = rational::frac(-1, 2);
        Ok(Self::from_coefficients(
            f.order(),
            (2..=f.order()).step_by(2).map(|m| {
                (
                    WheelIndex::new(m as u32).expect("even"),
                    log.coeff(m) * &half,
                )
            }),
        ))
    }

    /// Multiplies each degree-`m` part by `r^m`: `a_2n ↦ r^(2n)·a_2n`.
    pub fn rescale_degree(&self, r: &Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(Self::from_coefficients(
            self.order,
            self.coefficients()
                .map(|(w, a)| (w, a * rational::pow(r, w.degree() as i64))),
        ))
    }

    /// Exponent data of the disjoint union: coefficients add.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out =
            Self::from_coefficients(order, self.coefficients().map(|(w, a)| (w, a.clone())));
        for (w, a) in other.coefficients() {
            let sum = out.coefficient(w.index()) + a;
            out.set(w, sum);
        }
        out
    }
}

impl fmt::Display for WheelSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("exp( ")?;
        let mut first = true;
        for (w, a) in self.coefficients() {
            let abs = a.abs();
            match (first, a.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            write!(f, "{abs} w{}", w.index())?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(" + ... )")
    }
}

/// Polynomial in even wheels; monomials are sorted multisets of wheels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WheelPolynomial {
    terms: BTreeMap<Vec<WheelIndex>, Rational>,
}

fn monomial_degree(m: &[WheelIndex]) -> usize {
    m.iter().map(|w| w.degree()).sum()
}

impl WheelPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), Rational::one());
        p
    }

    pub fn add_term(&mut self, mut mono: Vec<WheelIndex>, c: Rational) {
        if c.is_zero() {
            return;
        }
        mono.sort_unstable();
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<WheelIndex>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| monomial_degree(m) <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, v) in self.terms() {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            let da = monomial_degree(a);
            for (b, cb) in other.terms() {
                if da + monomial_degree(b) <= max_degree {
                    let mono = a.iter().chain(b).copied().collect();
                    out.add_term(mono, ca * cb);
                }
            }
        }
        out
    }

    /// `Σ_k p^k / k!` up to total degree `max_degree`; `p` must have no constant term.
    pub fn exp(&self, max_degree: usize) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::SeriesDomain("wheel exp needs a zero constant term"));
        }
        let p = self.truncate(max_degree);
        let mut out = Self::one();
        let mut power = Self::one();
        // each factor raises the degree by at least 2
        for k in 1..=max_degree / 2 {
            power = power
                .mul_truncated(&p, max_degree)
                .scale(&rational::frac(1, k as i64));
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `log(1 + u) = Σ_k (-1)^(k+1) u^k / k`; requires constant term 1.
    pub fn log(&self, max_degree: usize) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::SeriesDomain("wheel log needs constant term 1"));
        }
        let u = self
            .add(&Self::one().scale(&-Rational::one()))
            .truncate(max_degree);
        let mut out = Self::zero();
        let mut power = Self::one();
        for k in 1..=max_degree / 2 {
            power = power.mul_truncated(&u, max_degree);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&rational::frac(sign, k as i64)));
        }
        Ok(out)
    }

    /// `W∇` on a polynomial, truncated at order `order`.
    pub fn w_nabla(&self, order: usize) -> HSeries {
        let mut out = HSeries::zero(order);
        for (m, c) in self.terms() {
            let d = monomial_degree(m);
            if d > order {
                continue;
            }
            let value = rational::pow(&rational::int(-2), m.len() as i64);
            out = &out + &HSeries::monomial(d, value * c, order);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use alloc::string::ToString;
    use alloc::vec;

    fn w(i: u32) -> WheelIndex {
        WheelIndex::new(i).unwrap()
    }

    #[test]
    fn odd_wheels_do_not_exist() {
        assert!(WheelIndex::new(3).is_none());
        assert!(WheelIndex::new(0).is_none());
        assert_eq!(w(4).degree(), 4);
    }

    #[test]
    fn exp_of_single_wheel() {
        let a = frac(3, 7);
        let mut p = WheelPolynomial::zero();
        p.add_term(vec![w(2)], a.clone());
        let e = p.exp(4).unwrap();
        let mut want = WheelPolynomial::one();
        want.add_term(vec![w(2)], a.clone());
        want.add_term(vec![w(2), w(2)], &a * &a / int(2));
        assert_eq!(e, want);
        assert_eq!(
            WheelPolynomial::zero().exp(8).unwrap(),
            WheelPolynomial::one()
        );
    }

    #[test]
    fn log_exp_inverse() {
        let mut p = WheelPolynomial::zero();
        p.add_term(vec![w(2)], frac(1, 3));
        p.add_term(vec![w(4)], int(-2));
        p.add_term(vec![w(2), w(6)], frac(5, 2));
        assert_eq!(p.exp(8).unwrap().log(8).unwrap(), p);
        assert!(WheelPolynomial::zero().log(4).is_err());
        assert!(WheelPolynomial::one().exp(4).is_err());
    }

    #[test]
    fn single_wheel_weight() {
        let mut p = WheelPolynomial::zero();
        p.add_term(vec![w(2)], int(1));
        assert_eq!(p.w_nabla(4), HSeries::monomial(2, int(-2), 4));
    }

    #[test]
    fn series_weight_is_exponential() {
        let a = frac(1, 5);
        let s = WheelSeries::from_coefficients(8, [(w(2), a.clone())]);
        let want = HSeries::monomial(2, &a * int(-2), 8).exp().unwrap();
        assert_eq!(s.w_nabla(), want);
        assert_eq!(WheelSeries::new(8).w_nabla(), HSeries::one(8));
    }

    #[test]
    fn from_series_cases() {
        assert!(WheelSeries::from_series(&HSeries::one(6))
            .unwrap()
            .is_trivial());
        let f = HSeries::monomial(2, int(-2), 8).exp().unwrap();
        let s = WheelSeries::from_series(&f).unwrap();
        assert_eq!(s, WheelSeries::from_coefficients(8, [(w(2), int(1))]));
        let nu = WheelSeries::from_series(&HSeries::c_series(8)).unwrap();
        assert_eq!(nu.coefficient(2), frac(1, 48));
        assert_eq!(nu.coefficient(4), frac(-1, 5760));
        let odd = HSeries::monomial(1, int(1), 4).exp().unwrap();
        assert_eq!(
            WheelSeries::from_series(&odd),
            Err(Error::OddOrderTerm { order: 1 })
        );
    }

    #[test]
    fn rescale() {
        let s = WheelSeries::from_coefficients(8, [(w(2), int(1)), (w(4), int(1))]);
        assert_eq!(s.rescale_degree(&int(1)).unwrap(), s);
        let r = s.rescale_degree(&int(3)).unwrap();
        assert_eq!(r.coefficient(2), int(9));
        assert_eq!(r.coefficient(4), int(81));
        assert_eq!(r.rescale_degree(&frac(1, 3)).unwrap(), s);
        assert_eq!(s.rescale_degree(&int(0)), Err(Error::NotPositive));
    }

    #[test]
    fn union_adds() {
        let a = WheelSeries::from_coefficients(8, [(w(2), int(1)), (w(4), int(2))]);
        let b = WheelSeries::from_coefficients(8, [(w(2), int(-1)), (w(6), int(5))]);
        let u = a.disjoint_union(&b);
        assert_eq!(
            u,
            WheelSeries::from_coefficients(8, [(w(4), int(2)), (w(6), int(5))])
        );
        assert_eq!(u.w_nabla(), &a.w_nabla() * &b.w_nabla());
    }

    #[test]
    fn render() {
        let s = WheelSeries::from_series(&HSeries::c_series(4)).unwrap();
        assert_eq!(s.to_string(), "exp( 1/48 w2 - 1/5760 w4 + ... )");
        assert_eq!(WheelSeries::new(2).to_string(), "exp( 0 + ... )");
    }
}
