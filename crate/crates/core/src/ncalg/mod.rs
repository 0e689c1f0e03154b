//! Exact noncommutative `*`-polynomials, free partial derivatives into the
//! tensor square, and evaluation into matrix algebras.
//!
//! Indeterminates are formally self-adjoint, so `star` reverses words and
//! conjugates coefficients. The derivative `∂_g` is the derivation into
//! `C<T> ⊗ C<T>` (bimodule `p·(a⊗b)·q = pa ⊗ bq`) with `∂_g g = 1 ⊗ 1`.
//!
//! When evaluating a tensor at a matrix representation the elementary
//! tensor `a ⊗ b` acts on `ξ` as `a·ξ·b`. This fixes one of the two
//! orderings possible for the opposite-algebra leg; at scalar
//! representations they coincide.

mod deriv;
mod eval;
mod poly;
mod tensor;

pub use deriv::{derivative_matrix, DerivMap, EntryMismatch};
pub use eval::{eval_poly_scalar, eval_tensor_scalar, Representation};
pub use poly::{Letter, NcPoly, Word};
pub use tensor::TensorPoly;
