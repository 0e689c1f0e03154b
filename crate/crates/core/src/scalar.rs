//! Coefficient fields: exact Gaussian rationals for symbolic work and
//! `Complex64` for numerics.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact complex number with rational real and imaginary parts.
pub type GaussRat = Complex<BigRational>;

pub fn gauss(re: i64, im: i64) -> GaussRat {
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

pub fn gauss_frac(re: (i64, i64), im: (i64, i64)) -> GaussRat {
    Complex::new(
        BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
        BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
    )
}

pub fn to_complex64(c: &GaussRat) -> Complex64 {
    Complex64::new(
        c.re.to_f64().unwrap_or(f64::NAN),
        c.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// Ring operations shared by the exact and floating coefficient types.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_gauss(c: &GaussRat) -> Self;
    fn conjugate(&self) -> Self;
    /// Magnitude used for residual reporting; exact types report 0 or 1+.
    fn magnitude(&self) -> f64;
}

impl Scalar for GaussRat {
    fn from_gauss(c: &GaussRat) -> Self {
        c.clone()
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn magnitude(&self) -> f64 {
        let re = self.re.abs().to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.abs().to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }
}

impl Scalar for Complex64 {
    fn from_gauss(c: &GaussRat) -> Self {
        to_complex64(c)
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}
