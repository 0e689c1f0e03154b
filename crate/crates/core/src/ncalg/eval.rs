use std::collections::HashMap;

use num_complex::Complex64;

use super::poly::{Letter, NcPoly, Word};
use super::tensor::TensorPoly;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::{to_complex64, Scalar};

/// Assignment of `k x k` matrices to letters.
#[derive(Clone, Debug)]
pub struct Representation<T> {
    dim: usize,
    mats: HashMap<Letter, Mat<T>>,
    names: HashMap<Letter, String>,
}

impl<T: Scalar> Representation<T> {
    pub fn new(dim: usize) -> Self {
        Representation {
            dim,
            mats: HashMap::new(),
            names: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn assign(&mut self, l: Letter, m: Mat<T>) -> Result<()> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: if m.rows() != self.dim { m.rows() } else { m.cols() },
            });
        }
        self.mats.insert(l, m);
        Ok(())
    }

    /// Display name used in errors instead of the raw letter index.
    pub fn name(&mut self, l: Letter, name: impl Into<String>) {
        self.names.insert(l, name.into());
    }

    fn lookup(&self, l: Letter) -> Result<&Mat<T>> {
        self.mats.get(&l).ok_or_else(|| {
            Error::Unassigned(self.names.get(&l).cloned().unwrap_or_else(|| l.to_string()))
        })
    }

    fn eval_word(&self, w: &Word) -> Result<Mat<T>> {
        let mut acc = Mat::identity(self.dim);
        for l in w {
            acc = acc.mul(self.lookup(*l)?)?;
        }
        Ok(acc)
    }

    /// Evaluates `p` as a `k x k` matrix.
    pub fn evaluate(&self, p: &NcPoly) -> Result<Mat<T>> {
        let mut acc = Mat::zeros(self.dim, self.dim);
        for (w, c) in p.terms() {
            acc = acc.add(&self.eval_word(w)?.scale(&T::from_gauss(c)));
        }
        Ok(acc)
    }

    /// Bimodule evaluation: each elementary tensor `a ⊗ b` acts on `ξ` as
    /// `a·ξ·b`.
    pub fn evaluate_bimodule(&self, t: &TensorPoly, xi: &Mat<T>) -> Result<Mat<T>> {
        if xi.rows() != self.dim || xi.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: xi.rows(),
            });
        }
        let mut acc = Mat::zeros(self.dim, self.dim);
        for (l, r, c) in t.terms() {
            let term = self.eval_word(l)?.mul(xi)?.mul(&self.eval_word(r)?)?;
            acc = acc.add(&term.scale(&T::from_gauss(c)));
        }
        Ok(acc)
    }
}

/// Evaluates a tensor polynomial at a one-dimensional (scalar)
/// representation given by `values[letter]`; both legs commute there.
pub fn eval_tensor_scalar(t: &TensorPoly, values: &[f64]) -> Complex64 {
    let word = |w: &Word| w.iter().map(|l| values[l.0 as usize]).product::<f64>();
    t.terms()
        .map(|(l, r, c)| to_complex64(c) * (word(l) * word(r)))
        .sum()
}

/// Scalar evaluation of a polynomial, `values[letter]` per letter.
pub fn eval_poly_scalar(p: &NcPoly, values: &[f64]) -> Complex64 {
    p.terms()
        .map(|(w, c)| to_complex64(c) * w.iter().map(|l| values[l.0 as usize]).product::<f64>())
        .sum()
}
