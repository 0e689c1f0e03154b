use super::measure::SpectralMeasure;
use crate::error::{Error, Result};

/// Convergence tolerance on the last truncation increment.
pub const CAUCHY_TOL: f64 = 1e-6;

/// Cutoffs `2^{-k}` for `k = 1..=30`.
pub fn default_cutoffs() -> Vec<f64> {
    (1..=30).map(|k| 0.5f64.powi(k)).collect()
}

/// Truncated integrals `∫_{ε_k}^∞ log s dμ` and the verdict.
#[derive(Clone, Debug)]
pub struct DeterminantClass {
    pub cutoffs: Vec<f64>,
    pub truncated: Vec<f64>,
    pub last_increment: f64,
    pub converged: bool,
}

fn check_support(mu: &SpectralMeasure) -> Result<()> {
    let m = mu.min_support();
    if m < 0.0 {
        return Err(Error::InvalidMeasure(format!(
            "support of |x| must be nonnegative, found {m}"
        )));
    }
    Ok(())
}

/// `∫_a^b log s ds` for `0 ≤ a ≤ b`.
fn log_integral(a: f64, b: f64) -> f64 {
    let g = |s: f64| if s == 0.0 { 0.0 } else { s * s.ln() - s };
    g(b) - g(a)
}

/// `∫_{(eps, ∞)} log s dμ`; exact for atoms and for the piecewise-constant
/// density.
fn truncated_log_integral(mu: &SpectralMeasure, eps: f64) -> f64 {
    match mu {
        SpectralMeasure::Atoms(a) => a
            .iter()
            .filter(|p| p.0 > eps)
            .map(|&(x, w)| w * x.ln())
            .sum(),
        SpectralMeasure::Density { lo, values, .. } => {
            let h = mu.cell_width();
            values
                .iter()
                .enumerate()
                .filter(|(_, f)| **f > 0.0)
                .map(|(k, f)| {
                    let a = (lo + k as f64 * h).max(eps);
                    let b = lo + (k + 1) as f64 * h;
                    if b <= a {
                        0.0
                    } else {
                        f * log_integral(a, b)
                    }
                })
                .sum()
        }
    }
}

/// Whether `∫_{ε}^∞ log s dμ` settles as `ε ↓ 0` along `cutoffs`: the last
/// increment must be below [`CAUCHY_TOL`]. For gridded densities this is a
/// statement at grid resolution only.
pub fn is_determinant_class(mu: &SpectralMeasure, cutoffs: &[f64]) -> Result<DeterminantClass> {
    check_support(mu)?;
    if cutoffs.len() < 2 || cutoffs.windows(2).any(|w| !(w[1] < w[0] && w[1] > 0.0)) {
        return Err(Error::InvalidParameter(
            "cutoffs must be positive, strictly decreasing, at least two".into(),
        ));
    }
    let truncated: Vec<f64> = cutoffs.iter().map(|&e| truncated_log_integral(mu, e)).collect();
    let n = truncated.len();
    let last_increment = (truncated[n - 1] - truncated[n - 2]).abs();
    Ok(DeterminantClass {
        cutoffs: cutoffs.to_vec(),
        truncated,
        last_increment,
        converged: last_increment <= CAUCHY_TOL,
    })
}

/// `exp(∫_{0⁺}^∞ log s dμ)`; any mass at `0` is left out. Returns `0` when
/// the truncated integrals do not settle on the default cutoffs.
pub fn fkl_det(mu: &SpectralMeasure) -> Result<f64> {
    check_support(mu)?;
    if !is_determinant_class(mu, &default_cutoffs())?.converged {
        return Ok(0.0);
    }
    Ok(truncated_log_integral(mu, 0.0).exp())
}
