//! Functionals of spectral measures: logarithmic energy and single-variable
//! free entropy, the Fuglede–Kadison–Lück determinant and the
//! determinant-class predicate, plus moments of semicircular families.
//!
//! `-∞` is an ordinary return value of [`log_energy`] and [`chi_single`].

mod entropy;
mod fkl;
mod measure;
mod wick;

pub use entropy::{chi_single, gaussian_bound, log_energy};
pub use fkl::{default_cutoffs, fkl_det, is_determinant_class, DeterminantClass, CAUCHY_TOL};
pub use measure::{SpectralMeasure, MASS_TOL};
pub use wick::{
    d2_character_exact, d2_perturbation, standard_covariance, wick_moment, D2Exact, D2Report,
    WickWord,
};
