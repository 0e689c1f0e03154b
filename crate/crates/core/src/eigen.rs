//! Cyclic Jacobi eigensolver for complex Hermitian matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMat;

pub const DEFAULT_THRESHOLD: f64 = 1e-13;
pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Hermitian tolerance accepted on input, relative to the Frobenius norm.
const HERMITIAN_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Columns are the matching orthonormal eigenvectors.
    pub vectors: CMat,
    pub sweeps: usize,
}

impl HermitianEigen {
    /// Rebuilds `Q diag(values) Q*`.
    pub fn reconstruct(&self) -> CMat {
        self.apply_fn(|x| Complex64::new(x, 0.0))
    }

    /// Forms `Q diag(f(values)) Q*`, e.g. the matrix exponential of `i·H`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> Complex64) -> CMat {
        let n = self.values.len();
        let fv: Vec<Complex64> = self.values.iter().map(|&x| f(x)).collect();
        CMat::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * fv[k] * self.vectors[(j, k)].conj())
                .sum()
        })
    }
}

pub fn hermitian_eigen(a: &CMat) -> Result<HermitianEigen> {
    jacobi(a, DEFAULT_THRESHOLD, DEFAULT_MAX_SWEEPS)
}

/// Cyclic Jacobi with complex plane rotations. A rotation is applied to the
/// pivot `(p, q)` whenever `|a_pq|` exceeds `threshold` times the Frobenius
/// norm of the input (absolute when the norm is below one).
pub fn jacobi(a: &CMat, threshold: f64, max_sweeps: usize) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let n = a.rows();
    let scale = a.frobenius().max(1.0);
    let defect = a.hermitian_defect();
    if defect > HERMITIAN_TOL * scale {
        return Err(Error::NotHermitian(defect));
    }
    let tol = threshold * scale;

    let mut m = a.clone();
    for i in 0..n {
        m[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
    }
    let mut v = CMat::identity(n);

    let mut sweeps = 0;
    loop {
        let off = max_off_diagonal(&m);
        if off <= tol {
            break;
        }
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence(max_sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                if m[(p, q)].norm() > tol {
                    rotate(&mut m, &mut v, p, q);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = CMat::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen {
        values,
        vectors,
        sweeps,
    })
}

fn max_off_diagonal(m: &CMat) -> f64 {
    let n = m.rows();
    let mut worst: f64 = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            worst = worst.max(m[(p, q)].norm());
        }
    }
    worst
}

/// Annihilates `m[(p, q)]` by `m <- G* m G` with `G = Φ R`: `Φ` removes the
/// phase of the pivot and `R` is the real Jacobi rotation of the resulting
/// real symmetric 2x2 block.
fn rotate(m: &mut CMat, v: &mut CMat, p: usize, q: usize) {
    let n = m.rows();
    let apq = m[(p, q)];
    let r = apq.norm();
    let phase = apq / r; // e^{iφ}
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = -phase.conj() * s;
    let g_qq = phase.conj() * c;

    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * g_pp + akq * g_qp;
        m[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        m[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}
