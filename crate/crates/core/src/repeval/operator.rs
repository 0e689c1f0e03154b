use num_complex::Complex64;

use super::point::ClassicalPoint;
use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result};
use crate::matrix::CMat;
use crate::ncalg::{eval_tensor_scalar, DerivMap};
use crate::pauli::{
    build_relations_kind, compact_df1, compact_df2, relation_derivatives, CompactFormula, Kind,
    Leg, RelationVector,
};

pub const DEFAULT_KERNEL_TOL: f64 = 1e-8;
/// Relation residual above which a derivative carries a warning.
pub const RELATION_WARN_TOL: f64 = 1e-9;

/// `∂F` of one relation at a scalar point, split into its two summands.
#[derive(Clone, Debug)]
pub struct RelationDerivative {
    /// `∂F` from the compact formula.
    pub df: CMat,
    /// Summand with the generator on the right leg.
    pub s1: CMat,
    /// Summand with the generator on the left leg.
    pub s2: CMat,
    /// `D = ∂F*∂F`.
    pub d: CMat,
    /// `W = s1* s2`.
    pub w: CMat,
}

impl RelationDerivative {
    fn new(formula: &CompactFormula, values: &[f64]) -> Self {
        let s1 = formula.eval_scalar(values, Some(Leg::Right));
        let s2 = formula.eval_scalar(values, Some(Leg::Left));
        let df = s1.add(&s2);
        let d = df.adjoint().dot(&df);
        let w = s1.adjoint().dot(&s2);
        RelationDerivative { df, s1, s2, d, w }
    }

    /// `‖s*s - I‖_max` over both summands.
    pub fn unitarity_defect(&self) -> f64 {
        let id = CMat::identity(self.df.rows());
        let a = self.s1.adjoint().dot(&self.s1).max_abs_diff(&id);
        let b = self.s2.adjoint().dot(&self.s2).max_abs_diff(&id);
        a.max(b)
    }

    /// `2I + W + W*`.
    pub fn two_plus_two_re_w(&self) -> CMat {
        let k = self.w.rows();
        CMat::identity(k)
            .scale(&Complex64::new(2.0, 0.0))
            .add(&self.w)
            .add(&self.w.adjoint())
    }
}

/// Derivative operators of `F1` and `F2` at a classical point.
#[derive(Clone, Debug)]
pub struct DerivativeOperator {
    pub f1: RelationDerivative,
    pub f2: RelationDerivative,
    pub relation_residual: f64,
    pub warning: Option<String>,
}

impl DerivativeOperator {
    /// `D = ∂F1* ∂F1`.
    pub fn d(&self) -> &CMat {
        &self.f1.d
    }

    pub fn w(&self) -> &CMat {
        &self.f1.w
    }
}

/// Result of the `D = 2 + 2 Re W` check at one point.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub seed: u64,
    /// `max ‖D - (2I + W + W*)‖_max` over `F1` and `F2`, with `D` from the
    /// derivation-engine path and `W` from the compact-formula path.
    pub residual: f64,
    /// `‖∂F_compact - ∂F_derived‖_max` over both relations.
    pub path_agreement: f64,
    pub relation_residual: f64,
    pub unitarity_defect: f64,
    pub eigen_min: f64,
    pub eigen_max: f64,
    pub spectrum_ok: bool,
    pub kernel_dim: usize,
}

/// Everything that depends only on `(kind, N)`: relations, compact formulas
/// and the symbolic derivative maps. Build once and reuse across points.
#[derive(Clone, Debug)]
pub struct DerivativeEngine {
    pub kind: Kind,
    pub n: usize,
    relations: RelationVector,
    df1: CompactFormula,
    df2: CompactFormula,
    sym1: DerivMap,
    sym2: DerivMap,
}

impl DerivativeEngine {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        let (sym1, sym2) = relation_derivatives(kind, n)?;
        Ok(DerivativeEngine {
            kind,
            n,
            relations: build_relations_kind(kind, n)?,
            df1: compact_df1(kind, n)?,
            df2: compact_df2(kind, n)?,
            sym1,
            sym2,
        })
    }

    fn check_point(&self, p: &ClassicalPoint) -> Result<()> {
        if p.kind != self.kind || p.n != self.n {
            return Err(Error::InvalidParameter(format!(
                "point is {:?} N={}, engine is {:?} N={}",
                p.kind, p.n, self.kind, self.n
            )));
        }
        Ok(())
    }

    /// Largest entry of `F1`, `F2` evaluated at the generator values.
    pub fn check_relations(&self, p: &ClassicalPoint) -> Result<f64> {
        self.check_point(p)?;
        let a = self.relations.f1.eval_scalar(&p.gen_values).max_abs();
        let b = self.relations.f2.eval_scalar(&p.gen_values).max_abs();
        Ok(a.max(b))
    }

    pub fn derivative_at(&self, p: &ClassicalPoint) -> Result<DerivativeOperator> {
        let relation_residual = self.check_relations(p)?;
        let warning = (relation_residual > RELATION_WARN_TOL)
            .then(|| format!("relation residual {relation_residual:.3e} exceeds {RELATION_WARN_TOL:.0e}"));
        Ok(DerivativeOperator {
            f1: RelationDerivative::new(&self.df1, &p.gen_values),
            f2: RelationDerivative::new(&self.df2, &p.gen_values),
            relation_residual,
            warning,
        })
    }

    /// The derivation-engine path: every entry of the symbolic `∂F`
    /// evaluated at the point.
    pub fn derived_at(&self, p: &ClassicalPoint) -> Result<(CMat, CMat)> {
        self.check_point(p)?;
        let eval = |m: &DerivMap| {
            CMat::from_fn(m.output_dim(), m.input_dim(), |o, i| {
                eval_tensor_scalar(m.get(o, i), &p.gen_values)
            })
        };
        Ok((eval(&self.sym1), eval(&self.sym2)))
    }

    pub fn verify_identity(&self, p: &ClassicalPoint, tol: f64) -> Result<IdentityReport> {
        let op = self.derivative_at(p)?;
        let (e1, e2) = self.derived_at(p)?;
        let path_agreement = op.f1.df.max_abs_diff(&e1).max(op.f2.df.max_abs_diff(&e2));
        let d1 = e1.adjoint().dot(&e1);
        let d2 = e2.adjoint().dot(&e2);
        let residual = d1
            .max_abs_diff(&op.f1.two_plus_two_re_w())
            .max(d2.max_abs_diff(&op.f2.two_plus_two_re_w()));
        let spec = spectral_summary(&d1, DEFAULT_KERNEL_TOL)?;
        let eigen_min = spec.eigenvalues.first().copied().unwrap_or(0.0);
        let eigen_max = spec.eigenvalues.last().copied().unwrap_or(0.0);
        Ok(IdentityReport {
            seed: p.seed,
            residual,
            path_agreement,
            relation_residual: op.relation_residual,
            unitarity_defect: op.f1.unitarity_defect().max(op.f2.unitarity_defect()),
            eigen_min,
            eigen_max,
            spectrum_ok: eigen_min >= -tol && eigen_max <= 4.0 + tol,
            kernel_dim: spec.kernel_dim,
        })
    }
}

pub fn check_relations(p: &ClassicalPoint) -> Result<f64> {
    DerivativeEngine::new(p.kind, p.n)?.check_relations(p)
}

pub fn derivative_at(p: &ClassicalPoint) -> Result<DerivativeOperator> {
    DerivativeEngine::new(p.kind, p.n)?.derivative_at(p)
}

pub fn verify_identity(p: &ClassicalPoint, tol: f64) -> Result<IdentityReport> {
    DerivativeEngine::new(p.kind, p.n)?.verify_identity(p, tol)
}

#[derive(Clone, Debug)]
pub struct SpectralSummary {
    pub eigenvalues: Vec<f64>,
    pub kernel_tol: f64,
    pub kernel_dim: usize,
    /// `exp(Σ_{λ > tol} log λ / dim)`; `1` when there are no such `λ`.
    pub fkl_nonzero: f64,
}

/// Eigenvalues of a Hermitian PSD `D`, its kernel dimension and the
/// normalized determinant of its nonzero part.
pub fn spectral_summary(d: &CMat, kernel_tol: f64) -> Result<SpectralSummary> {
    let eig = hermitian_eigen(d)?;
    let dim = eig.values.len().max(1) as f64;
    let kernel_dim = eig.values.iter().filter(|&&l| l <= kernel_tol).count();
    let log_sum: f64 = eig
        .values
        .iter()
        .filter(|&&l| l > kernel_tol)
        .map(|l| l.ln())
        .sum();
    Ok(SpectralSummary {
        eigenvalues: eig.values,
        kernel_tol,
        kernel_dim,
        fkl_nonzero: (log_sum / dim).exp(),
    })
}
