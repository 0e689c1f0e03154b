use std::collections::HashMap;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A word `S_{i_1} ⋯ S_{i_k}` in a semicircular family with the given
/// covariance matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct WickWord<T> {
    pub indices: Vec<usize>,
    pub covariance: Vec<Vec<T>>,
}

impl<T: Clone + PartialEq> WickWord<T> {
    pub fn new(indices: Vec<usize>, covariance: Vec<Vec<T>>) -> Result<Self> {
        let n = covariance.len();
        for (i, row) in covariance.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if (0..i).any(|j| covariance[i][j] != covariance[j][i]) {
                return Err(Error::InvalidParameter("covariance is not symmetric".into()));
            }
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidParameter(format!("index {i} outside family of size {n}")));
        }
        Ok(WickWord { indices, covariance })
    }
}

/// Identity covariance: a free standard semicircular family.
pub fn standard_covariance<T: Zero + One + Clone>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

/// `τ(S_{i_1} ⋯ S_{i_k})`: the sum over noncrossing pair partitions of the
/// products of covariances of paired letters. Computed by the recursion
/// that pairs the first position of each interval with a later one.
pub fn wick_moment<T>(w: &WickWord<T>) -> T
where
    T: Clone + Zero + One + Mul<Output = T>,
{
    let k = w.indices.len();
    if k % 2 == 1 {
        return T::zero();
    }
    let mut memo: HashMap<(usize, usize), T> = HashMap::new();
    interval(w, 0, k, &mut memo)
}

fn interval<T>(w: &WickWord<T>, a: usize, b: usize, memo: &mut HashMap<(usize, usize), T>) -> T
where
    T: Clone + Zero + One + Mul<Output = T>,
{
    if a == b {
        return T::one();
    }
    if let Some(v) = memo.get(&(a, b)) {
        return v.clone();
    }
    let mut acc = T::zero();
    let ia = w.indices[a];
    for c in (a + 1..b).step_by(2) {
        let cov = w.covariance[ia][w.indices[c]].clone();
        if cov.is_zero() {
            continue;
        }
        let inner = interval(w, a + 1, c, memo);
        let outer = interval(w, c + 1, b, memo);
        acc = acc + cov * inner * outer;
    }
    memo.insert((a, b), acc.clone());
    acc
}

/// `d₂` for the perturbation `Σ c_i ε S_i`.
#[derive(Clone, Debug)]
pub struct D2Report {
    /// `τ((Σ c_i S_i)²)`.
    pub norm_sq: f64,
    /// `ε·‖Σ c_i S_i‖₂`.
    pub exact: f64,
    /// `ε·Σ|c_i|`, equal to `2Nε` for the character.
    pub bound: f64,
    pub ok: bool,
}

fn norm_sq<T>(coeffs: &[T]) -> T
where
    T: Clone + Zero + One + Mul<Output = T> + PartialEq,
{
    let cov = standard_covariance::<T>(coeffs.len());
    let mut acc = T::zero();
    for (i, ci) in coeffs.iter().enumerate() {
        for (j, cj) in coeffs.iter().enumerate() {
            let w = WickWord {
                indices: vec![i, j],
                covariance: cov.clone(),
            };
            acc = acc + ci.clone() * cj.clone() * wick_moment(&w);
        }
    }
    acc
}

pub fn d2_perturbation(coeffs: &[f64], eps: f64) -> Result<D2Report> {
    if !(eps >= 0.0) {
        return Err(Error::InvalidParameter(format!("ε must be nonnegative, got {eps}")));
    }
    let ns = norm_sq(coeffs);
    let exact = eps * ns.sqrt();
    let bound = eps * coeffs.iter().map(|c| c.abs()).sum::<f64>();
    Ok(D2Report {
        norm_sq: ns,
        exact,
        bound,
        ok: exact <= bound,
    })
}

/// The character `χ = 2(a_11 + ⋯ + a_NN)` in exact rational arithmetic:
/// `ε` is taken as the rational it represents, and `ok` compares
/// `exact² = ε²·τ(χ²)` with `(2Nε)²` without rounding.
#[derive(Clone, Debug)]
pub struct D2Exact {
    pub n: usize,
    pub norm_sq: BigRational,
    pub exact: f64,
    pub bound: f64,
    pub ok: bool,
}

pub fn d2_character_exact(n: usize, eps: f64) -> Result<D2Exact> {
    let e = BigRational::from_f64(eps)
        .filter(|e| !e.is_negative())
        .ok_or_else(|| Error::InvalidParameter(format!("ε must be finite and nonnegative, got {eps}")))?;
    let two = BigRational::from_integer(BigInt::from(2));
    let ns = norm_sq(&vec![two.clone(); n]);
    let bound = two * BigRational::from_integer(BigInt::from(n)) * &e;
    let exact_sq = &e * &e * &ns;
    let ok = exact_sq <= &bound * &bound;
    Ok(D2Exact {
        n,
        exact: eps * ns.to_f64().unwrap_or(f64::NAN).sqrt(),
        bound: bound.to_f64().unwrap_or(f64::NAN),
        norm_sq: ns,
        ok,
    })
}
