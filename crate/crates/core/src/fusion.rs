//! Fusion with the fundamental representation of a free orthogonal quantum
//! group, `v_1 ⊗ v_n = v_{n-1} ⊕ v_{n+1}`, and the moments of the
//! fundamental character it determines.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Multiplicities of the irreducibles `v_0, v_1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FusionVector {
    mults: BTreeMap<usize, u128>,
}

impl FusionVector {
    pub fn delta(n: usize) -> Self {
        let mut v = FusionVector::default();
        v.add(n, 1);
        v
    }

    pub fn multiplicity(&self, n: usize) -> u128 {
        self.mults.get(&n).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u128)> + '_ {
        self.mults.iter().map(|(&n, &m)| (n, m))
    }

    fn add(&mut self, n: usize, m: u128) {
        if m > 0 {
            *self.mults.entry(n).or_insert(0) += m;
        }
    }
}

/// Linear extension of `n ↦ (n-1) + (n+1)`, `0 ↦ 1`.
pub fn fuse_with_fundamental(v: &FusionVector) -> FusionVector {
    let mut out = FusionVector::default();
    for (n, m) in v.iter() {
        if n > 0 {
            out.add(n - 1, m);
        }
        out.add(n + 1, m);
    }
    out
}

/// `h((χ^u)^k)`: multiplicity of the trivial representation in `u^{⊗k}`.
pub fn char_moment(k: usize) -> u128 {
    let mut v = FusionVector::delta(0);
    for _ in 0..k {
        v = fuse_with_fundamental(&v);
    }
    v.multiplicity(0)
}

/// Dimension of `v_n` when `v_1` has dimension `base`:
/// `d_0 = 1`, `d_1 = base`, `d_{n+1} = base·d_n - d_{n-1}`.
pub fn qdim(n: usize, base: f64) -> Result<f64> {
    if !(base >= 2.0) {
        return Err(Error::InvalidParameter(format!(
            "quantum dimension base must be at least 2, got {base}"
        )));
    }
    let (mut prev, mut cur) = (1.0, base);
    if n == 0 {
        return Ok(1.0);
    }
    for _ in 1..n {
        (prev, cur) = (cur, base * cur - prev);
    }
    Ok(cur)
}

/// `∫ t^k √(4 - t²)/(2π) dt` over `[-2, 2]`, by adaptive Gauss–Kronrod
/// after the substitution `t = 2 sin θ`.
pub fn semicircle_moment(k: usize) -> f64 {
    let f = |th: f64| {
        let (s, c) = th.sin_cos();
        (2.0 * s).powi(k as i32) * 4.0 * c * c / (2.0 * PI)
    };
    crate::quad::integrate(f, -PI / 2.0, PI / 2.0, 1e-13)
}
