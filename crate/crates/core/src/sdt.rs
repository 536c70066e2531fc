//! Gaussian signal-detection relations between SNR, false-alarm probability,
//! detection probability and the decision threshold.
//!
//! Noise-only amplitudes are modelled as N(0, 1) and signal-plus-noise
//! amplitudes as N(k, 1), where `k` is the signal-to-noise ratio. A device
//! declares "target" when the measured amplitude exceeds a threshold `T`, so
//!
//! ```text
//! Pfa = 1 - Φ(T)          T  = Φ⁻¹(1 - Pfa)
//! Pd  = 1 - Φ(T - k)      k  = Φ⁻¹(1 - Pfa) - Φ⁻¹(1 - Pd)
//! ```
//!
//! Older sensor literature writes `erf(x)` for what is the standard normal
//! CDF Φ(x) here (not the conventional error function `2/√π ∫₀ˣ e^{-t²} dt`).

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{open_probability, ModelError, Result};

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Below this |z| the positive-term series for erf is used, above it the
/// continued fraction for erfc.
const SERIES_LIMIT: f64 = 3.0;

/// erf(z) for 0 <= z < SERIES_LIMIT.
///
/// Uses `erf(z) = 2/√π · e^{-z²} · Σ (2z²)ⁿ z / (1·3·…·(2n+1))`, whose terms are
/// all positive, so there is no cancellation.
fn erf_series(z: f64) -> f64 {
    let two_z2 = 2.0 * z * z;
    let mut term = z;
    let mut sum = z;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= two_z2 / (2.0 * n + 1.0);
        sum += term;
        if term <= sum * 1e-17 {
            break;
        }
    }
    FRAC_2_SQRT_PI * (-z * z).exp() * sum
}

/// erfc(z) for z >= SERIES_LIMIT via the Laplace continued fraction
///
/// ```text
/// erfc(z) = e^{-z²}/√π · 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + 2/(z + …)))))
/// ```
///
/// evaluated bottom-up with a fixed depth.
fn erfc_continued_fraction(z: f64) -> f64 {
    const DEPTH: u32 = 80;
    let mut tail = z;
    for n in (1..=DEPTH).rev() {
        tail = z + (n as f64 * 0.5) / tail;
    }
    (-z * z).exp() / (PI.sqrt() * tail)
}

/// Conventional error function `2/√π ∫₀ᶻ e^{-t²} dt`.
pub fn erf(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    if z.abs() < SERIES_LIMIT {
        z.signum() * erf_series(z.abs())
    } else {
        z.signum() * (1.0 - erfc_continued_fraction(z.abs()))
    }
}

/// Complementary error function erfc(z) = 1 − erf(z).
pub fn erfc(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    if z < 0.0 {
        return 2.0 - erfc(-z);
    }
    if z < SERIES_LIMIT {
        1.0 - erf_series(z)
    } else {
        erfc_continued_fraction(z)
    }
}

/// Upper-tail mass 1 − Φ(x), accurate in relative terms for large `x`.
fn upper_tail(x: f64) -> f64 {
    0.5 * erfc(x * FRAC_1_SQRT_2)
}

fn check_finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(ModelError::domain("x", x, "must be finite"))
    }
}

/// Standard normal CDF Φ(x).
pub fn normal_cdf(x: f64) -> Result<f64> {
    check_finite(x)?;
    Ok(if x < 0.0 {
        upper_tail(-x)
    } else {
        1.0 - upper_tail(x)
    })
}

/// Survival function 1 − Φ(x), without the cancellation of `1 - normal_cdf(x)`.
pub fn normal_sf(x: f64) -> Result<f64> {
    check_finite(x)?;
    Ok(if x < 0.0 {
        1.0 - upper_tail(-x)
    } else {
        upper_tail(x)
    })
}

/// Rational approximation of Φ⁻¹ on (0, 0.5], relative error ~1e-9.
fn quantile_seed(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_671_058_254_89,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.024_25;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    }
}

/// Φ⁻¹(p) for p in (0, 0.5], refined by Halley steps against the lower tail.
fn lower_quantile(p: f64) -> f64 {
    let mut x = quantile_seed(p);
    for _ in 0..2 {
        let err = upper_tail(-x) - p;
        let u = err * (2.0 * PI).sqrt() * (0.5 * x * x).exp();
        if !u.is_finite() {
            break;
        }
        x -= u / (1.0 + 0.5 * x * u);
    }
    x
}

/// Inverse standard normal CDF Φ⁻¹(p).
///
/// Returns an error rather than ±∞ at the endpoints.
pub fn normal_quantile(p: f64) -> Result<f64> {
    open_probability("p", p)?;
    Ok(if p <= 0.5 {
        lower_quantile(p)
    } else {
        -lower_quantile(1.0 - p)
    })
}

/// Decision threshold `T = Φ⁻¹(1 − pfa)`.
///
/// Evaluated as `−Φ⁻¹(pfa)` so small false-alarm rates are not rounded away
/// by forming `1 − pfa`.
pub fn threshold_from_pfa(pfa: f64) -> Result<f64> {
    open_probability("pfa", pfa)?;
    Ok(-normal_quantile(pfa)?)
}

/// Detection probability `Pd = 1 − Φ(T − snr)` for a non-negative SNR.
pub fn pd_from_snr(snr: f64, pfa: f64) -> Result<f64> {
    if !(snr.is_finite() && snr >= 0.0) {
        return Err(ModelError::domain("snr", snr, "must be finite and >= 0"));
    }
    let threshold = threshold_from_pfa(pfa)?;
    // 1 - Φ(T - k) = Φ(k - T)
    normal_cdf(snr - threshold)
}

/// SNR an ideal device needs for a detection probability at a false-alarm rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SnrRequirement {
    pub snr: f64,
    /// Set when `pd < pfa`, which needs a negative SNR: representable, but a
    /// scenario asking for it is physically broken.
    pub below_chance: bool,
}

/// Inverse of [`pd_from_snr`]: `k = Φ⁻¹(1 − pfa) − Φ⁻¹(1 − pd)`.
pub fn snr_required(pd: f64, pfa: f64) -> Result<SnrRequirement> {
    open_probability("pd", pd)?;
    let threshold = threshold_from_pfa(pfa)?;
    let snr = threshold + normal_quantile(pd)?;
    Ok(SnrRequirement {
        snr,
        below_chance: snr < 0.0,
    })
}

/// One consistent operating point of an ideal detector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SdtPoint {
    pub snr: f64,
    pub pfa: f64,
    pub pd: f64,
    pub threshold: f64,
}

impl SdtPoint {
    /// Operating point reached at `snr` with false-alarm rate `pfa`.
    pub fn from_snr(snr: f64, pfa: f64) -> Result<Self> {
        Ok(SdtPoint {
            snr,
            pfa,
            pd: pd_from_snr(snr, pfa)?,
            threshold: threshold_from_pfa(pfa)?,
        })
    }

    /// Operating point needed to reach `pd` at false-alarm rate `pfa`.
    ///
    /// Rejects `pd < pfa`; use [`snr_required`] to inspect such requests.
    pub fn from_pd(pd: f64, pfa: f64) -> Result<Self> {
        let req = snr_required(pd, pfa)?;
        if req.below_chance {
            return Err(ModelError::domain(
                "pd",
                pd,
                "must not be below pfa for an operating point",
            ));
        }
        Ok(SdtPoint {
            snr: req.snr,
            pfa,
            pd,
            threshold: threshold_from_pfa(pfa)?,
        })
    }
}
