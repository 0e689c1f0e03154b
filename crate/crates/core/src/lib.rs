//! Mechanical checks for the free-derivative, spectral and free-probability
//! computations around the unimodular free orthogonal quantum groups
//! `FO(J_2N)` and `FO_N`.

pub mod cayley;
pub mod eigen;
pub mod error;
pub mod matrix;
pub mod ncalg;
pub mod freeprob;
pub mod fusion;
pub mod pauli;
pub mod quad;
pub mod repeval;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::{CMat, Mat};
pub use scalar::{GaussRat, Scalar};
