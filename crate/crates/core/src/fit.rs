//! Least-squares fit of the exponential MRTD model to measured data.
//!
//! `MRTD = a·e^(b·SF)` becomes `ln MRTD = ln a + b·SF`, so the fit is an
//! ordinary simple linear regression of `ln MRTD` on `SF`, solved in closed
//! form. Observations are unweighted.

use serde::{Deserialize, Serialize};

use crate::error::{FitError, Result};
use crate::thermal::{mrtd, MrtdCurve};

/// One measured point of an MRTD curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MrtdObservation {
    /// cycles/mrad
    pub sf: f64,
    /// K
    pub mrtd: f64,
}

impl MrtdObservation {
    pub fn new(sf: f64, mrtd: f64) -> Self {
        MrtdObservation { sf, mrtd }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub curve: MrtdCurve,
    /// `ln(observed) − ln(predicted)` per observation, in input order.
    pub residuals_log: Vec<f64>,
    pub sse_log: f64,
    pub r_squared_log: f64,
    /// Fitted `a·e^(b·SF)` at each observation's SF.
    pub predicted: Vec<f64>,
}

/// Fits `a·e^(b·SF)` by OLS on `(SF, ln MRTD)`.
///
/// Needs at least three observations, positive MRTD values and at least two
/// distinct spatial frequencies. A fitted slope of zero or below is returned
/// as is; such a curve will not pass [`MrtdCurve::validate`].
pub fn fit_mrtd(observations: &[MrtdObservation]) -> Result<FitReport> {
    if observations.len() < 3 {
        return Err(FitError::TooFewPoints(observations.len()).into());
    }
    for (index, obs) in observations.iter().enumerate() {
        if !(obs.sf.is_finite() && obs.sf >= 0.0) {
            return Err(FitError::InvalidFrequency {
                index,
                value: obs.sf,
            }
            .into());
        }
        if !(obs.mrtd.is_finite() && obs.mrtd > 0.0) {
            return Err(FitError::NonPositiveMrtd {
                index,
                value: obs.mrtd,
            }
            .into());
        }
    }

    let n = observations.len() as f64;
    let xs: Vec<f64> = observations.iter().map(|o| o.sf).collect();
    let ys: Vec<f64> = observations.iter().map(|o| o.mrtd.ln()).collect();
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;

    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        let dx = x - x_mean;
        let dy = y - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(FitError::NoFrequencySpread.into());
    }

    let b = sxy / sxx;
    let ln_a = y_mean - b * x_mean;
    let curve = MrtdCurve { a: ln_a.exp(), b };

    let residuals_log: Vec<f64> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - (ln_a + b * x))
        .collect();
    let sse_log: f64 = residuals_log.iter().map(|r| r * r).sum();
    let r_squared_log = if syy > 0.0 { 1.0 - sse_log / syy } else { 1.0 };
    let predicted = xs.iter().map(|x| curve.a * (b * x).exp()).collect();

    Ok(FitReport {
        curve,
        residuals_log,
        sse_log,
        r_squared_log,
        predicted,
    })
}

/// Fitted MRTD at `sf` cycles/mrad.
pub fn predict(report: &FitReport, sf: f64) -> Result<f64> {
    mrtd(&report.curve, sf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ModelError;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn synth(a: f64, b: f64, sfs: &[f64]) -> Vec<MrtdObservation> {
        sfs.iter()
            .map(|&sf| MrtdObservation::new(sf, a * (b * sf).exp()))
            .collect()
    }

    fn sse(obs: &[MrtdObservation], ln_a: f64, b: f64) -> f64 {
        obs.iter()
            .map(|o| (o.mrtd.ln() - ln_a - b * o.sf).powi(2))
            .sum()
    }

    fn table4() -> Vec<MrtdObservation> {
        [
            0.01612, 0.03740, 0.06878, 0.11780, 0.19810, 0.33490, 0.58350, 1.06800, 2.20000,
        ]
        .iter()
        .enumerate()
        .map(|(i, &m)| MrtdObservation::new((i + 1) as f64, m))
        .collect()
    }

    #[test]
    fn recovers_exact_model() {
        let obs = synth(0.0145, 1.1942, &[1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0]);
        let rep = fit_mrtd(&obs).unwrap();
        assert_relative_eq!(rep.curve.a, 0.0145, max_relative = 1e-10);
        assert_relative_eq!(rep.curve.b, 1.1942, max_relative = 1e-10);
        assert_relative_eq!(rep.r_squared_log, 1.0, max_relative = 1e-12);
        for (o, p) in obs.iter().zip(&rep.predicted) {
            assert_relative_eq!(*p, o.mrtd, max_relative = 1e-9);
        }
        assert_relative_eq!(predict(&rep, 0.0).unwrap(), rep.curve.a);
    }

    #[test]
    fn table4_matches_independent_regression() {
        // numpy.polyfit(sf, log(mrtd), 1) on the same nine points
        let rep = fit_mrtd(&table4()).unwrap();
        assert_relative_eq!(rep.curve.a, 0.010_616_917_405_059_19, max_relative = 1e-9);
        assert_relative_eq!(rep.curve.b, 0.584_022_185_939_972_3, max_relative = 1e-9);
        assert_eq!(rep.residuals_log.len(), 9);
        let at9 = predict(&rep, 9.0).unwrap();
        assert!((at9 / 2.2 - 1.0).abs() < 0.15, "{at9}");
    }

    #[test]
    fn rejects_bad_input() {
        let two = synth(1.0, 1.0, &[1.0, 2.0]);
        assert_eq!(
            fit_mrtd(&two),
            Err(ModelError::Fit(FitError::TooFewPoints(2)))
        );
        let mut obs = synth(1.0, 1.0, &[1.0, 2.0, 3.0]);
        obs[1].mrtd = 0.0;
        assert!(matches!(
            fit_mrtd(&obs),
            Err(ModelError::Fit(FitError::NonPositiveMrtd { index: 1, .. }))
        ));
        let flat = synth(1.0, 1.0, &[2.0, 2.0, 2.0]);
        assert_eq!(
            fit_mrtd(&flat),
            Err(ModelError::Fit(FitError::NoFrequencySpread))
        );
        let mut neg = synth(1.0, 1.0, &[1.0, 2.0, 3.0]);
        neg[0].sf = -1.0;
        assert!(matches!(
            fit_mrtd(&neg),
            Err(ModelError::Fit(FitError::InvalidFrequency { index: 0, .. }))
        ));
    }

    #[test]
    fn duplicate_frequencies_allowed() {
        let mut obs = synth(0.02, 0.7, &[1.0, 1.0, 3.0, 3.0]);
        obs[0].mrtd *= 1.1;
        obs[1].mrtd /= 1.1;
        let rep = fit_mrtd(&obs).unwrap();
        assert_relative_eq!(rep.curve.b, 0.7, max_relative = 1e-12);
    }

    #[test]
    fn optimal_among_perturbations() {
        let obs = table4();
        let rep = fit_mrtd(&obs).unwrap();
        let (ln_a, b) = (rep.curve.a.ln(), rep.curve.b);
        let best = sse(&obs, ln_a, b);
        assert_relative_eq!(best, rep.sse_log, max_relative = 1e-12);
        for (da, db) in [
            (1.0, 0.0),
            (-1.0, 0.0),
            (0.0, 1.0),
            (0.0, -1.0),
            (1.0, 1.0),
            (1.0, -1.0),
            (-1.0, 1.0),
            (-1.0, -1.0),
        ] {
            assert!(sse(&obs, ln_a + 1e-3 * da, b + 1e-3 * db) > best);
        }
    }

    #[test]
    fn normal_equations_hold() {
        let rep = fit_mrtd(&table4()).unwrap();
        let sum: f64 = rep.residuals_log.iter().sum();
        let dot: f64 = rep
            .residuals_log
            .iter()
            .enumerate()
            .map(|(i, r)| r * (i + 1) as f64)
            .sum();
        assert!(sum.abs() < 1e-9);
        assert!(dot.abs() < 1e-9);
        assert!(rep.sse_log >= 0.0 && rep.r_squared_log <= 1.0);
    }

    proptest! {
        #[test]
        fn scale_equivariance(k in 0.01f64..100.0, noise in proptest::collection::vec(-0.2f64..0.2, 6)) {
            let base: Vec<MrtdObservation> = noise
                .iter()
                .enumerate()
                .map(|(i, e)| MrtdObservation::new(i as f64, 0.01 * (0.6 * i as f64 + e).exp()))
                .collect();
            let scaled: Vec<MrtdObservation> =
                base.iter().map(|o| MrtdObservation::new(o.sf, k * o.mrtd)).collect();
            let a = fit_mrtd(&base).unwrap();
            let b = fit_mrtd(&scaled).unwrap();
            prop_assert!((b.curve.a / (k * a.curve.a) - 1.0).abs() < 1e-10);
            prop_assert!((b.curve.b - a.curve.b).abs() < 1e-10);
        }

        #[test]
        fn shift_equivariance(shift in 0.0f64..5.0, noise in proptest::collection::vec(-0.2f64..0.2, 6)) {
            let base: Vec<MrtdObservation> = noise
                .iter()
                .enumerate()
                .map(|(i, e)| MrtdObservation::new(i as f64, 0.01 * (0.6 * i as f64 + e).exp()))
                .collect();
            let moved: Vec<MrtdObservation> =
                base.iter().map(|o| MrtdObservation::new(o.sf + shift, o.mrtd)).collect();
            let a = fit_mrtd(&base).unwrap();
            let b = fit_mrtd(&moved).unwrap();
            prop_assert!((b.curve.b - a.curve.b).abs() < 1e-10);
            let want = a.curve.a * (-a.curve.b * shift).exp();
            prop_assert!((b.curve.a / want - 1.0).abs() < 1e-9);
        }
    }
}
