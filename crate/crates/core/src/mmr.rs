//! Pipelines joining the Alexander side and the wheel side:
//!
//! * `c · ∇(K)|_{t^(1/2)=e^(h/2)} = W∇(Å(K))` with `c = h/(e^(h/2) - e^(-h/2))`;
//! * the wheel part of `Å(K)` recovered from that series;
//! * for a rank-one manifold, `∇(M)` ⇄ the wheel data of `Z^LMO(M)`.

use alloc::format;

use num_traits::{One, Zero};

use crate::alexander;
use crate::rational::{self, Rational};
use crate::seifert::SeifertMatrix;
use crate::wheels::WheelSeries;
use crate::{Error, HSeries, Result, ZPoly};

/// `W∇ ∘ Å(K)` computed through `∇`: `c_series(D) · ∇(V)|_{t^(1/2) = e^(h/2)}`.
pub fn mmr_series(v: &SeifertMatrix, components: usize, order: usize) -> Result<HSeries> {
    let nabla = alexander::nabla_from_seifert(v, components)?;
    Ok(&HSeries::c_series(order) * &HSeries::substitute_exp(&nabla.polynomial, order))
}

/// Wheel part of `Å(K)` for a knot with Seifert matrix `V`.
pub fn aarhus_wheels(v: &SeifertMatrix, order: usize) -> Result<WheelSeries> {
    let series = mmr_series(v, 1, order)?;
    WheelSeries::from_series(&series)
}

/// Wheel part of `Å(K)` where `∇(K) = nabla`.
fn knot_wheels_from_nabla(nabla: &ZPoly, order: usize) -> Result<WheelSeries> {
    let series = &HSeries::c_series(order) * &HSeries::substitute_exp(&nabla.to_laurent(), order);
    WheelSeries::from_series(&series)
}

/// The data determining `Z^LMO(M)` for a rank-one manifold `M = N_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmoWheelData {
    /// Wheel part of the surgery knot, in `Z^LMO` normalization
    /// (`Å` rescaled by `|H_1(M)|^deg`).
    pub knot_wheels: WheelSeries,
    /// Wheel part of `ν = Z(O)`.
    pub nu_wheels: WheelSeries,
    /// `|H_1(M)| = |Tor H_1(N)|`.
    pub h1_order: u64,
    pub order: usize,
}

impl LmoWheelData {
    pub fn check(&self) -> Result<()> {
        if self.h1_order == 0 {
            return Err(Error::NotPositive);
        }
        if self.knot_wheels.order() != self.order || self.nu_wheels.order() != self.order {
            return Err(Error::InconsistentWheelData("orders disagree".into()));
        }
        let nu = nu_wheels(self.order);
        if self.nu_wheels != nu {
            return Err(Error::InconsistentWheelData(format!(
                "ν wheels should be {nu}"
            )));
        }
        Ok(())
    }

    /// `Å` normalization of the knot wheels: undo the `|H_1|^deg` rescaling.
    pub fn aarhus_knot_wheels(&self) -> Result<WheelSeries> {
        self.knot_wheels
            .rescale_degree(&Rational::new(1.into(), self.h1_order.into()))
    }
}

/// `P_wh(ν)`, from `∇(O) = 1`: the wheel coefficients of `c_series`.
pub fn nu_wheels(order: usize) -> WheelSeries {
    WheelSeries::from_series(&HSeries::c_series(order))
        .expect("c_series is even with constant term 1")
}

/// `∇(M) ↦` LMO wheel data.
pub fn lmo_wheel_data(nabla_m: &ZPoly, h1_order: u64, order: usize) -> Result<LmoWheelData> {
    if h1_order == 0 {
        return Err(Error::NotPositive);
    }
    let odd_terms = nabla_m
        .z_coefficients()
        .iter()
        .skip(1)
        .step_by(2)
        .any(|c| !c.is_zero());
    if !nabla_m.value_at_zero().is_one() || odd_terms {
        return Err(Error::Normalization(format!(
            "∇(M) = {nabla_m} must lie in Q[z^2] with value 1 at z = 0"
        )));
    }
    let aarhus = knot_wheels_from_nabla(nabla_m, order)?;
    let knot_wheels = aarhus.rescale_degree(&rational::from_bigint(h1_order.into()))?;
    Ok(LmoWheelData {
        knot_wheels,
        nu_wheels: nu_wheels(order),
        h1_order,
        order,
    })
}

/// The converse: recovers `∇(M)` from its LMO wheel data.
pub fn nabla_from_lmo_wheel_data(data: &LmoWheelData, max_z_degree: usize) -> Result<ZPoly> {
    data.check()?;
    let aarhus = data.aarhus_knot_wheels()?;
    let c_inv = HSeries::c_series(data.order).reciprocal()?;
    let series = &aarhus.w_nabla() * &c_inv;
    ZPoly::from_series(&series, max_z_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use alloc::vec;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::from_ints(&[&[-1, 1], &[0, -1]])
    }

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::new(0, c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn unknot_series_is_c() {
        assert_eq!(
            mmr_series(&SeifertMatrix::empty(), 1, 16).unwrap(),
            HSeries::c_series(16)
        );
    }

    #[test]
    fn trefoil_and_figure_eight_h2() {
        assert_eq!(mmr_series(&trefoil(), 1, 4).unwrap().coeff(2), frac(23, 24));
        let fig8 = SeifertMatrix::from_ints(&[&[1, 1], &[0, -1]]);
        assert_eq!(mmr_series(&fig8, 1, 4).unwrap().coeff(2), frac(-25, 24));
    }

    #[test]
    fn aarhus_wheel_values() {
        let nu = aarhus_wheels(&SeifertMatrix::empty(), 8).unwrap();
        assert_eq!(nu, nu_wheels(8));
        assert_eq!(nu.coefficient(2), frac(1, 48));
        let t = aarhus_wheels(&trefoil(), 8).unwrap();
        assert_eq!(t.coefficient(2), frac(-23, 48));
        assert_eq!(t.w_nabla(), mmr_series(&trefoil(), 1, 8).unwrap());
    }

    #[test]
    fn lmo_examples() {
        let d = lmo_wheel_data(&ZPoly::one(), 1, 16).unwrap();
        assert_eq!(d.knot_wheels, nu_wheels(16));
        let d = lmo_wheel_data(&zp(&[1, 1]), 1, 16).unwrap();
        assert_eq!(d.knot_wheels, aarhus_wheels(&trefoil(), 16).unwrap());
        let fig8 = SeifertMatrix::from_ints(&[&[1, 1], &[0, -1]]);
        let d = lmo_wheel_data(&zp(&[1, -1]), 3, 16).unwrap();
        assert_eq!(
            d.knot_wheels,
            aarhus_wheels(&fig8, 16)
                .unwrap()
                .rescale_degree(&int(3))
                .unwrap()
        );
    }

    #[test]
    fn round_trips() {
        for (p, r) in [(zp(&[1]), 1), (zp(&[1, 1]), 1), (zp(&[1, -3, 1]), 5)] {
            let d = lmo_wheel_data(&p, r, 16).unwrap();
            assert_eq!(nabla_from_lmo_wheel_data(&d, 16).unwrap(), p);
        }
    }

    #[test]
    fn rejects_bad_normalization() {
        assert!(lmo_wheel_data(&zp(&[2, 1]), 1, 8).is_err());
        assert!(lmo_wheel_data(&ZPoly::new(1, vec![int(1)]), 1, 8).is_err());
        assert!(lmo_wheel_data(&ZPoly::one(), 0, 8).is_err());
    }

    #[test]
    fn inconsistent_nu_rejected() {
        let mut d = lmo_wheel_data(&ZPoly::one(), 1, 8).unwrap();
        d.nu_wheels = WheelSeries::new(8);
        assert!(matches!(
            nabla_from_lmo_wheel_data(&d, 8),
            Err(Error::InconsistentWheelData(_))
        ));
    }

    #[test]
    fn residual_detected() {
        let mut d = lmo_wheel_data(&zp(&[1, 1]), 1, 8).unwrap();
        // perturb a deep wheel coefficient: no longer polynomial of degree 2
        let w8 = crate::wheels::WheelIndex::new(8).unwrap();
        let a = d.knot_wheels.coefficient(8) + int(1);
        d.knot_wheels.set(w8, a);
        assert!(matches!(
            nabla_from_lmo_wheel_data(&d, 2),
            Err(Error::NonzeroResidual { .. })
        ));
    }
}
