use std::f64::consts::PI;
use std::path::Path;

use crate::error::{Error, Result};

/// Total mass must be within this of one.
pub const MASS_TOL: f64 = 1e-9;

/// A probability measure on the real line: finitely many atoms, or a
/// piecewise-constant density on a uniform grid of `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectralMeasure {
    Atoms(Vec<(f64, f64)>),
    Density { lo: f64, hi: f64, values: Vec<f64> },
}

impl SpectralMeasure {
    pub fn atoms(atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("no atoms".into()));
        }
        for &(x, w) in &atoms {
            if !x.is_finite() || !(w > 0.0) || !w.is_finite() {
                return Err(Error::InvalidMeasure(format!("bad atom ({x}, {w})")));
            }
        }
        let m = SpectralMeasure::Atoms(atoms);
        m.check_mass()?;
        Ok(m)
    }

    pub fn density(lo: f64, hi: f64, values: Vec<f64>) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() || values.is_empty() {
            return Err(Error::InvalidMeasure(format!(
                "bad grid [{lo}, {hi}] with {} cells",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
            return Err(Error::InvalidMeasure(format!("bad density value {v}")));
        }
        let m = SpectralMeasure::Density { lo, hi, values };
        m.check_mass()?;
        Ok(m)
    }

    /// Uniform masses `1/k` at the given points, e.g. a matrix spectrum.
    pub fn empirical(points: &[f64]) -> Result<Self> {
        let w = 1.0 / points.len() as f64;
        Self::atoms(points.iter().map(|&x| (x, w)).collect())
    }

    /// Cell averages `(F(x_{k+1}) - F(x_k)) / h` of a distribution function.
    pub fn from_cdf(lo: f64, hi: f64, cells: usize, cdf: impl Fn(f64) -> f64) -> Result<Self> {
        let h = (hi - lo) / cells as f64;
        let edges: Vec<f64> = (0..=cells).map(|k| cdf(lo + k as f64 * h)).collect();
        let total = edges[cells] - edges[0];
        let values = edges.windows(2).map(|e| (e[1] - e[0]) / (h * total)).collect();
        Self::density(lo, hi, values)
    }

    /// Cell averages of an unnormalized density, normalized to mass one.
    pub fn from_density_fn(lo: f64, hi: f64, cells: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let h = (hi - lo) / cells as f64;
        let raw: Vec<f64> = (0..cells)
            .map(|k| {
                let a = lo + k as f64 * h;
                crate::quad::integrate(&f, a, a + h, 1e-15) / h
            })
            .collect();
        let mass: f64 = raw.iter().sum::<f64>() * h;
        if !(mass > 0.0) {
            return Err(Error::InvalidMeasure("density has no mass".into()));
        }
        Self::density(lo, hi, raw.into_iter().map(|v| v / mass).collect())
    }

    /// Semicircle of the given variance (radius `2√v`).
    pub fn semicircle(variance: f64, cells: usize) -> Result<Self> {
        if !(variance > 0.0) {
            return Err(Error::InvalidParameter(format!("variance must be positive, got {variance}")));
        }
        let r = 2.0 * variance.sqrt();
        Self::from_cdf(-r, r, cells, |x| {
            let t = (x / r).clamp(-1.0, 1.0);
            0.5 + (t * (1.0 - t * t).max(0.0).sqrt() + t.asin()) / PI
        })
    }

    pub fn uniform(lo: f64, hi: f64, cells: usize) -> Result<Self> {
        Self::density(lo, hi, vec![1.0 / (hi - lo); cells])
    }

    pub fn mass(&self) -> f64 {
        match self {
            SpectralMeasure::Atoms(a) => a.iter().map(|p| p.1).sum(),
            SpectralMeasure::Density { values, .. } => values.iter().sum::<f64>() * self.cell_width(),
        }
    }

    fn check_mass(&self) -> Result<()> {
        let m = self.mass();
        if (m - 1.0).abs() > MASS_TOL {
            return Err(Error::InvalidMeasure(format!("total mass {m} is not 1")));
        }
        Ok(())
    }

    pub fn cell_width(&self) -> f64 {
        match self {
            SpectralMeasure::Atoms(_) => 0.0,
            SpectralMeasure::Density { lo, hi, values } => (hi - lo) / values.len() as f64,
        }
    }

    /// `∫ x^p dμ`, exact for the piecewise-constant model.
    pub fn moment(&self, p: i32) -> f64 {
        match self {
            SpectralMeasure::Atoms(a) => a.iter().map(|&(x, w)| w * x.powi(p)).sum(),
            SpectralMeasure::Density { lo, values, .. } => {
                let h = self.cell_width();
                let q = p + 1;
                values
                    .iter()
                    .enumerate()
                    .map(|(k, f)| {
                        let a = lo + k as f64 * h;
                        f * ((a + h).powi(q) - a.powi(q)) / q as f64
                    })
                    .sum()
            }
        }
    }

    pub fn variance(&self) -> f64 {
        let m = self.moment(1);
        self.moment(2) - m * m
    }

    pub fn min_support(&self) -> f64 {
        match self {
            SpectralMeasure::Atoms(a) => a.iter().map(|p| p.0).fold(f64::INFINITY, f64::min),
            SpectralMeasure::Density { lo, .. } => *lo,
        }
    }

    /// Parses the CSV format: `#` comments, then either `location,weight`
    /// rows, or a `density,lo,hi` header followed by one density value per
    /// row.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut density: Option<(f64, f64)> = None;
        let mut atoms = Vec::new();
        let mut values = Vec::new();
        for (k, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| Error::Parse {
                line: e.position().map_or(0, |p| p.line() as usize),
                msg: e.to_string(),
            })?;
            let line = rec.position().map_or(k + 1, |p| p.line() as usize);
            let num = |s: &str| -> Result<f64> {
                s.parse::<f64>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("not a number: {s:?}"),
                })
            };
            let fields: Vec<&str> = rec.iter().collect();
            if fields.iter().all(|f| f.is_empty()) {
                continue;
            }
            match (k, fields.as_slice()) {
                (0, ["density", lo, hi]) => density = Some((num(lo)?, num(hi)?)),
                (_, [v]) if density.is_some() => values.push(num(v)?),
                (_, [x, w]) if density.is_none() => atoms.push((num(x)?, num(w)?)),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unexpected record {fields:?}"),
                    })
                }
            }
        }
        match density {
            Some((lo, hi)) => Self::density(lo, hi, values),
            None => Self::atoms(atoms),
        }
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_csv_str(&text)
    }
}
