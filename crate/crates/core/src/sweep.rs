//! Range grids, sweep containers and probability-threshold crossings.

use serde::Serialize;

use crate::error::{open_probability, ModelError, Result};

/// Shortest range searched for a probability crossing, km (1 m).
pub const CROSSING_MIN_KM: f64 = 1e-3;
/// Longest range searched for a probability crossing, km.
pub const CROSSING_MAX_KM: f64 = 100.0;
/// Bisection stops once the bracket is narrower than this, km (1 cm).
const CROSSING_TOL_KM: f64 = 1e-5;

/// Inclusive range grid `start, start + step, …` up to `end`.
///
/// Both endpoints are included when `step` divides the interval; a trailing
/// partial step is dropped.
pub fn range_grid(start: f64, end: f64, step: f64) -> Result<Vec<f64>> {
    let empty = || ModelError::EmptyGrid { start, end, step };
    if !(start.is_finite() && end.is_finite() && step.is_finite()) {
        return Err(empty());
    }
    if start <= 0.0 || end <= start || step <= 0.0 {
        return Err(empty());
    }
    // the epsilon absorbs representation error in e.g. (10 - 0.1) / 0.001
    let count = ((end - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

/// One evaluated range.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample<S> {
    pub range_km: f64,
    pub state: S,
    pub probability: f64,
}

/// Model output over an increasing range grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult<S> {
    pub samples: Vec<Sample<S>>,
}

impl<S> SweepResult<S> {
    /// Evaluates `eval` at every grid range. `eval` returns the state and the
    /// probability derived from it.
    pub(crate) fn evaluate(
        grid: &[f64],
        mut eval: impl FnMut(f64) -> Result<(S, f64)>,
    ) -> Result<Self> {
        let samples = grid
            .iter()
            .map(|&range_km| {
                let (state, probability) = eval(range_km)?;
                Ok(Sample {
                    range_km,
                    state,
                    probability,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SweepResult { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn ranges(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.range_km)
    }

    pub fn probabilities(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.probability)
    }

    /// True when probability never increases with range.
    pub fn is_non_increasing(&self) -> bool {
        self.samples
            .windows(2)
            .all(|w| w[1].probability <= w[0].probability)
    }
}

/// Where a non-increasing probability-versus-range curve crosses a target value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RangeCrossing {
    /// Probability falls through the target at this range (km).
    At { range_km: f64 },
    /// Even at the shortest searched range the probability is below target.
    BelowAtMinimum { probability: f64 },
    /// The probability still meets the target at the longest searched range.
    AboveAtMaximum { probability: f64 },
}

impl RangeCrossing {
    pub fn range_km(&self) -> Option<f64> {
        match *self {
            RangeCrossing::At { range_km } => Some(range_km),
            _ => None,
        }
    }
}

/// Bisects a non-increasing `probability(range)` for the range where it
/// drops to `target`, within `[CROSSING_MIN_KM, CROSSING_MAX_KM]`.
pub(crate) fn find_crossing(
    target: f64,
    mut probability: impl FnMut(f64) -> Result<f64>,
) -> Result<RangeCrossing> {
    open_probability("p_target", target)?;
    let near = probability(CROSSING_MIN_KM)?;
    if near < target {
        return Ok(RangeCrossing::BelowAtMinimum { probability: near });
    }
    let far = probability(CROSSING_MAX_KM)?;
    if far >= target {
        return Ok(RangeCrossing::AboveAtMaximum { probability: far });
    }
    // invariant: p(lo) >= target > p(hi)
    let (mut lo, mut hi) = (CROSSING_MIN_KM, CROSSING_MAX_KM);
    while hi - lo > CROSSING_TOL_KM {
        let mid = 0.5 * (lo + hi);
        if probability(mid)? >= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RangeCrossing::At {
        range_km: 0.5 * (lo + hi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_single_point() {
        let g = range_grid(1.0, 1.0 + 1e-6, 1.0).unwrap();
        assert_eq!(g, vec![1.0]);
    }

    #[test]
    fn grid_length_formula() {
        for (s, e, d) in [
            (0.1, 10.0, 0.001),
            (1.0, 5.0, 0.5),
            (0.5, 2.2, 0.25),
            (0.2, 0.9, 0.3),
        ] {
            let g = range_grid(s, e, d).unwrap();
            let want = ((e - s) / d + 1e-9).floor() as usize + 1;
            assert_eq!(g.len(), want, "{s} {e} {d}");
        }
        assert_eq!(range_grid(0.1, 10.0, 0.001).unwrap().len(), 9901);
        // partial step dropped
        let g = range_grid(0.5, 2.2, 0.25).unwrap();
        assert_eq!(g.len(), 7);
        assert!((g[6] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn grid_rejects_bad_bounds() {
        assert!(range_grid(0.0, 1.0, 0.1).is_err());
        assert!(range_grid(2.0, 1.0, 0.1).is_err());
        assert!(range_grid(1.0, 2.0, 0.0).is_err());
        assert!(range_grid(1.0, 1.0, 0.1).is_err());
        assert!(range_grid(1.0, f64::NAN, 0.1).is_err());
    }

    #[test]
    fn crossing_of_linear_ramp() {
        let c = find_crossing(0.5, |r| Ok((1.0 - r / 10.0).max(0.0))).unwrap();
        assert!((c.range_km().unwrap() - 5.0).abs() < 1e-4);
    }

    #[test]
    fn crossing_edges() {
        assert!(matches!(
            find_crossing(0.5, |_| Ok(0.1)).unwrap(),
            RangeCrossing::BelowAtMinimum { .. }
        ));
        assert!(matches!(
            find_crossing(0.5, |_| Ok(0.9)).unwrap(),
            RangeCrossing::AboveAtMaximum { .. }
        ));
        assert!(find_crossing(1.0, |_| Ok(0.9)).is_err());
    }
}
