use std::f64::consts::{E, PI};

use super::measure::SpectralMeasure;
use crate::error::{Error, Result};

/// `φ(x) = x² log|x| / 2 - 3x²/4`, so that `φ'' = log|x|`.
fn phi(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        0.5 * x * x * x.abs().ln() - 0.75 * x * x
    }
}

/// `∫∫ log|s - t|` over a pair of grid cells `k` cells apart.
fn cell_pair_weight(k: usize, h: f64) -> f64 {
    if k == 0 {
        return h * h * (h.ln() - 1.5);
    }
    let c = k as f64 * h;
    phi(c + h) - 2.0 * phi(c) + phi(c - h)
}

/// `∬ log|s - t| dμ(s) dμ(t)`.
///
/// Atoms give `-∞`. For a gridded density every cell pair, including the
/// singular diagonal, is integrated exactly against the piecewise-constant
/// density, and the double sum is reduced through autocorrelations of the
/// cell values.
pub fn log_energy(mu: &SpectralMeasure) -> f64 {
    match mu {
        SpectralMeasure::Atoms(_) => f64::NEG_INFINITY,
        SpectralMeasure::Density { values, .. } => {
            let h = mu.cell_width();
            let n = values.len();
            let mut total = 0.0;
            for k in 0..n {
                let corr: f64 = values[..n - k]
                    .iter()
                    .zip(&values[k..])
                    .map(|(a, b)| a * b)
                    .sum();
                let mult = if k == 0 { 1.0 } else { 2.0 };
                total += mult * corr * cell_pair_weight(k, h);
            }
            total
        }
    }
}

/// `χ(X) = ∬ log|s - t| dμ dμ + 3/4 + ½ log 2π`.
pub fn chi_single(mu: &SpectralMeasure) -> f64 {
    log_energy(mu) + 0.75 + 0.5 * (2.0 * PI).ln()
}

/// `½ log(2πe·v)`, the upper bound on `χ` at variance `v`.
pub fn gaussian_bound(variance: f64) -> Result<f64> {
    if !(variance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "variance must be positive, got {variance}"
        )));
    }
    Ok(0.5 * (2.0 * PI * E * variance).ln())
}
