use std::path::Path;

use num_rational::BigRational;
use qfree_core::cayley::{
    baaj_skandalis_check, baaj_skandalis_holds, boundary, edge_reversal, mult_unitary,
    pentagon_check, pentagon_holds, FiniteGroup,
};
use qfree_core::freeprob::{
    chi_single, d2_character_exact, fkl_det, gaussian_bound, is_determinant_class, log_energy,
    default_cutoffs, standard_covariance, wick_moment, SpectralMeasure, WickWord, CAUCHY_TOL,
};
use qfree_core::fusion::{char_moment, semicircle_moment};
use qfree_core::pauli::{
    check_block_displays, theta_rewrite_check, verify_lemma31_symbolic_kind, DisplayForm,
    FormulaCheck, Kind,
};
use qfree_core::repeval::{sample_points, DerivativeEngine};
use qfree_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::{int, real, Report};

/// Largest `k` for which every Catalan moment fits the report comfortably.
pub const MAX_MOMENT_K: usize = 64;
/// Semicircle quadrature tolerance for moment agreement.
pub const MOMENT_TOL: f64 = 1e-6;
/// Equality band for `χ` against the Gaussian bound.
pub const CHI_TOL: f64 = 2e-3;

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Symplectic => "sym",
        Kind::Orthogonal => "orth",
    }
}

fn formula_metrics(r: &mut Report, key: &str, c: &FormulaCheck) {
    r.metric(&format!("{key}_entries"), int(c.entries))
        .metric(&format!("{key}_mismatched_entries"), int(c.mismatched_entries))
        .metric(&format!("{key}_max_discrepancy_terms"), int(c.max_discrepancy_terms));
    r.check(&format!("{key}_exact"), c.matched);
    if let Some(w) = &c.witness {
        r.witnesses.push(json!({
            "relation": c.relation,
            "output": w.output,
            "input": w.input,
            "derived": w.derived,
            "formula": w.formula,
            "discrepancy_terms": int(w.discrepancy_terms),
        }));
    }
}

pub fn verify_lemma31(n: usize, kind: Kind) -> Result<Report> {
    let mut r = Report::new("verify-lemma31");
    r.param("n", int(n)).param("kind", json!(kind_name(kind))).param("tol", real(0.0));
    let rep = verify_lemma31_symbolic_kind(kind, n)?;
    formula_metrics(&mut r, "df1", &rep.f1);
    formula_metrics(&mut r, "df2", &rep.f2);
    if kind == Kind::Symplectic {
        let table = theta_rewrite_check();
        r.metric("theta_rewrites", int(table.entries.len()));
        r.check("theta_rewrites_exact", table.all_exact && table.entries.len() == 16);
        let theta = check_block_displays(DisplayForm::Theta, n)?;
        r.check("theta_display_exact", theta.matched());
        let rewritten = check_block_displays(DisplayForm::Rewritten, n)?;
        r.metric("rewritten_display_mismatches", int(rewritten.mismatches().count()));
        for m in rewritten.mismatches() {
            r.records.push(json!({
                "block": m.block.to_string(),
                "line": int(m.line),
                "printed": m.printed.to_string(),
                "corrected": m.correction.as_ref().map(|c| c.to_string()),
            }));
        }
    }
    Ok(r)
}

pub struct PointArgs {
    pub n: usize,
    pub kind: Kind,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub relation_tol: f64,
}

pub fn classical_point(a: &PointArgs) -> Result<Report> {
    let mut r = Report::new("classical-point");
    r.param("n", int(a.n))
        .param("kind", json!(kind_name(a.kind)))
        .param("samples", int(a.samples))
        .param("seed", int(a.seed))
        .param("tol", real(a.tol))
        .param("relation_tol", real(a.relation_tol));
    if !(a.tol >= 0.0 && a.relation_tol >= 0.0) {
        return Err(Error::InvalidParameter("tolerances must be nonnegative".into()));
    }
    let engine = DerivativeEngine::new(a.kind, a.n)?;
    let (mut res, mut path, mut rel) = (0.0f64, 0.0f64, 0.0f64);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut failures = 0usize;
    for p in sample_points(a.n, a.kind, a.seed, a.samples)? {
        let rep = engine.verify_identity(&p, a.tol)?;
        let ok = rep.residual <= a.tol
            && rep.path_agreement <= a.tol
            && rep.relation_residual <= a.relation_tol
            && rep.spectrum_ok;
        if !ok {
            failures += 1;
            r.witnesses.push(json!({ "seed": int(p.seed), "residual": real(rep.residual) }));
        }
        res = res.max(rep.residual);
        path = path.max(rep.path_agreement);
        rel = rel.max(rep.relation_residual);
        lo = lo.min(rep.eigen_min);
        hi = hi.max(rep.eigen_max);
        r.records.push(json!({
            "seed": int(rep.seed),
            "residual": real(rep.residual),
            "path_agreement": real(rep.path_agreement),
            "relation_residual": real(rep.relation_residual),
            "eigen_min": real(rep.eigen_min),
            "eigen_max": real(rep.eigen_max),
            "kernel_dim": int(rep.kernel_dim),
        }));
    }
    r.metric("max_residual", real(res))
        .metric("max_path_agreement", real(path))
        .metric("max_relation_residual", real(rel))
        .metric("eigen_min", real(lo))
        .metric("eigen_max", real(hi))
        .metric("failures", int(failures));
    r.check("identity_holds", failures == 0);
    Ok(r)
}

pub fn char_moments(max_k: usize) -> Result<Report> {
    if max_k > MAX_MOMENT_K {
        return Err(Error::InvalidParameter(format!("--max-k must be at most {MAX_MOMENT_K}")));
    }
    let mut r = Report::new("char-moments");
    r.param("max_k", int(max_k)).param("tol", real(MOMENT_TOL));
    let cov = standard_covariance::<BigRational>(1);
    let (mut fusion_wick, mut fusion_sc) = (true, true);
    for k in 0..=max_k {
        let m = char_moment(k);
        let sc = semicircle_moment(k);
        let w = wick_moment(&WickWord::new(vec![0; k], cov.clone())?);
        let wick_ok = w == BigRational::from_integer(m.into());
        let sc_ok = (sc - m as f64).abs() <= MOMENT_TOL * (m as f64).max(1.0);
        fusion_wick &= wick_ok;
        fusion_sc &= sc_ok;
        r.metric(&format!("moment_{k}"), int(m));
        r.records.push(json!({
            "k": int(k),
            "fusion": int(m),
            "semicircle": real(sc),
            "wick": int(w.to_integer()),
        }));
        if !(wick_ok && sc_ok) {
            r.witnesses.push(json!({ "k": int(k) }));
        }
    }
    r.check("wick_agrees", fusion_wick);
    r.check("semicircle_agrees", fusion_sc);
    Ok(r)
}

pub enum MeasureSource<'a> {
    File(&'a Path),
    Semicircle { variance: f64, cells: usize },
}

fn load(src: &MeasureSource, r: &mut Report) -> Result<SpectralMeasure> {
    match *src {
        MeasureSource::File(p) => {
            r.param("measure", json!(p.display().to_string()));
            SpectralMeasure::from_csv_path(p)
        }
        MeasureSource::Semicircle { variance, cells } => {
            r.param("semicircle", real(variance)).param("cells", int(cells));
            SpectralMeasure::semicircle(variance, cells)
        }
    }
}

pub fn entropy(src: &MeasureSource) -> Result<Report> {
    let mut r = Report::new("entropy");
    let mu = load(src, &mut r)?;
    r.param("tol", real(CHI_TOL));
    let var = mu.variance();
    let chi = chi_single(&mu);
    let bound = if var > 0.0 { gaussian_bound(var)? } else { f64::NEG_INFINITY };
    r.metric("log_energy", real(log_energy(&mu)))
        .metric("chi", real(chi))
        .metric("variance", real(var))
        .metric("mass", real(mu.mass()))
        .metric("gaussian_bound", real(bound))
        .metric("gap", real(bound - chi));
    r.check("chi_below_bound", chi == f64::NEG_INFINITY || chi <= bound + CHI_TOL);
    Ok(r)
}

pub fn fkl(src: &MeasureSource) -> Result<Report> {
    let mut r = Report::new("fkl");
    let mu = load(src, &mut r)?;
    let cutoffs = default_cutoffs();
    r.param("cauchy_tol", real(CAUCHY_TOL))
        .param("cutoff_min", real(*cutoffs.last().unwrap()))
        .param("cutoff_max", real(cutoffs[0]));
    let dc = is_determinant_class(&mu, &cutoffs)?;
    r.metric("fkl_det", real(fkl_det(&mu)?))
        .metric("last_increment", real(dc.last_increment));
    for (e, t) in dc.cutoffs.iter().zip(&dc.truncated) {
        r.records.push(json!({ "cutoff": real(*e), "truncated_log_integral": real(*t) }));
    }
    r.check("determinant_class", dc.converged);
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyCheck {
    Pentagon,
    Theta,
    BaajSkandalis,
}

pub fn cayley(group: &str, check: CayleyCheck, gen_set: Option<&[usize]>) -> Result<Report> {
    let g = FiniteGroup::by_name(group)?;
    let mut r = Report::new("cayley");
    r.param("group", json!(g.name)).param("tol", real(0.0));
    r.metric("order", int(g.order())).metric("abelian", json!(g.is_abelian()));
    let v = mult_unitary(&g);
    match check {
        CayleyCheck::Pentagon => {
            r.param("check", json!("pentagon"));
            r.check("pentagon", pentagon_check(&g)?);
            r.metric("adjoint_pentagon_holds", json!(pentagon_holds(&g, &v.inverse())?));
        }
        CayleyCheck::BaajSkandalis => {
            r.param("check", json!("baaj-skandalis"));
            r.check("baaj_skandalis", baaj_skandalis_check(&g)?);
            r.metric("with_v_in_place_of_v_tilde_holds", json!(baaj_skandalis_holds(&g, &v, &v)?));
        }
        CayleyCheck::Theta => {
            r.param("check", json!("theta"));
            let h: Vec<usize> = gen_set.map_or_else(|| g.default_generating_set(), <[usize]>::to_vec);
            r.param("gen_set", Value::Array(h.iter().map(|&x| int(x)).collect()));
            let th = edge_reversal(&g, &h)?;
            let e = boundary(&g, &th.edges);
            let mut seen = std::collections::BTreeSet::new();
            r.metric("edges", int(th.edges.dim()));
            r.check("formulas_agree", th.formulas_agree());
            r.check("unitary", th.is_unitary());
            r.check("involution", th.is_involution());
            r.check("boundary_injective", e.iter().all(|x| seen.insert(*x)));
            for (k, &(a, b)) in th.edges.basis.iter().enumerate() {
                if th.composed.apply(k) != th.closed.apply(k) {
                    r.witnesses.push(json!({ "g": int(a), "h": int(b) }));
                }
            }
        }
    }
    Ok(r)
}

pub fn d2_bound(n: usize, eps: f64) -> Result<Report> {
    let mut r = Report::new("d2-bound");
    r.param("n", int(n)).param("eps", real(eps)).param("tol", real(0.0));
    let d = d2_character_exact(n, eps)?;
    r.metric("norm_sq", int(d.norm_sq.to_integer()))
        .metric("exact", real(d.exact))
        .metric("bound", real(d.bound));
    r.check("bound_holds", d.ok);
    Ok(r)
}
