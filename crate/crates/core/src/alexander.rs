//! The Conway-normalized Alexander polynomial `∇` from Seifert matrices, and
//! the normalization of an Alexander polynomial `Δ` known up to units.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::seifert::SeifertMatrix;
use crate::{Error, HalfLaurent, Result, ZPoly};

/// `∇` in both its Laurent form and its `z^(ℓ-1)·Q[z^2]` form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NablaResult {
    pub polynomial: HalfLaurent,
    pub z_form: ZPoly,
    pub components: usize,
}

impl NablaResult {
    /// `∇(1)`; for a knot this equals `det(V - Vᵀ)`.
    pub fn value_at_one(&self) -> Rational {
        self.z_form.value_at_zero()
    }
}

/// `det(t^(1/2)·V - t^(-1/2)·Vᵀ)` as a Laurent polynomial.
///
/// `det(t·V - Vᵀ)` is a polynomial of degree at most `n` in `t`; it is sampled
/// at `t = 0..=n` and interpolated, then shifted by `t^(-n/2)`.
pub fn seifert_determinant(v: &SeifertMatrix) -> HalfLaurent {
    let n = v.size();
    let vt = v.entries().transpose();
    let samples: Vec<Rational> = (0..=n)
        .map(|t| {
            let t = rational::int(t as i64);
            let m = v.entries().scale(&t).sub(&vt).expect("square");
            m.det().expect("square")
        })
        .collect();
    HalfLaurent::from_t_polynomial(&interpolate(&samples), -(n as i64))
}

/// Coefficients of the polynomial of degree `< len` through `(k, ys[k])`.
fn interpolate(ys: &[Rational]) -> Vec<Rational> {
    let n = ys.len();
    // Newton divided differences on the nodes 0, 1, …, n-1.
    let mut dd = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / rational::int(level as i64);
        }
    }
    // Horner back to the monomial basis.
    let mut coeffs: Vec<Rational> = Vec::new();
    for k in (0..n).rev() {
        // coeffs ← coeffs·(t - k) + dd[k]
        let mut next = alloc::vec![Rational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * rational::int(k as i64);
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

/// `∇(L) = det(t^(1/2)V - t^(-1/2)Vᵀ)` for an `ℓ`-component link, checked to
/// lie in `z^(ℓ-1)·Q[z^2]`.
pub fn nabla_from_seifert(v: &SeifertMatrix, components: usize) -> Result<NablaResult> {
    let n = v.size();
    if components == 0 || n + 1 < components || !(n + 1 - components).is_multiple_of(2) {
        return Err(Error::BadSeifertSize {
            size: n,
            components,
        });
    }
    let polynomial = seifert_determinant(v);
    let z_form = ZPoly::from_laurent(&polynomial, (components - 1) as u32)?;
    Ok(NablaResult {
        polynomial,
        z_form,
        components,
    })
}

/// Outcome of [`normalize_delta`], with the unit that was applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedDelta {
    pub nabla: NablaResult,
    /// Power of `t^(1/2)` multiplied in.
    pub shift: i64,
    /// `ε ∈ {±1}`.
    pub sign: i32,
}

/// Turns `Δ(K)` of a knot, known up to `±t^(i/2)`, into `∇(K)` by finding
/// the symmetrizing shift and the sign with `ε·(t^(i/2)Δ)(1) = |H_1(M)|`.
pub fn normalize_delta(delta: &HalfLaurent, h1_order: &Rational) -> Result<NormalizedDelta> {
    if !rational::is_integer(h1_order) || h1_order <= &Rational::zero() {
        return Err(Error::NotPositive);
    }
    let (lo, hi) = match (delta.min_exponent(), delta.max_exponent()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::Normalization("Δ is zero".to_string())),
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::NotSymmetrizable);
    }
    let shift = -(lo + hi) / 2;
    let sym = delta.shift(shift);
    if !sym.is_involution_invariant() {
        return Err(Error::NotSymmetrizable);
    }
    let at_one = sym.value_at_one();
    if at_one.is_zero() {
        return Err(Error::VanishesAtOne);
    }
    let sign = if &at_one == h1_order {
        1
    } else if &-at_one.clone() == h1_order {
        -1
    } else {
        return Err(Error::WrongValueAtOne {
            value: at_one.to_string(),
            expected: h1_order.to_string(),
        });
    };
    let polynomial = sym.scale(&(rational::int(sign.into()) / h1_order));
    let z_form = ZPoly::from_laurent(&polynomial, 0)?;
    Ok(NormalizedDelta {
        nabla: NablaResult {
            polynomial,
            z_form,
            components: 1,
        },
        shift,
        sign,
    })
}

/// `∇(N)` of the rank-one manifold `N = M_K` obtained by 0-surgery on `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldNabla {
    pub nabla: NablaResult,
    /// `|Tor H_1(N)| = |H_1(M)|`.
    pub torsion_order: Rational,
}

pub fn nabla_manifold(v: &SeifertMatrix, h1_order: &Rational) -> Result<ManifoldNabla> {
    if !rational::is_integer(h1_order) || h1_order <= &Rational::zero() {
        return Err(Error::NotPositive);
    }
    let nabla = nabla_from_seifert(v, 1)?;
    if !nabla.value_at_one().is_one() {
        return Err(Error::Normalization(alloc::format!(
            "∇(1) = {} but a 0-framed knot needs ∇(1) = 1 (skew part not unimodular)",
            nabla.value_at_one()
        )));
    }
    if !nabla.polynomial.is_involution_invariant() {
        return Err(Error::Normalization("∇ is not symmetric".to_string()));
    }
    Ok(ManifoldNabla {
        nabla,
        torsion_order: h1_order.clone(),
    })
}
