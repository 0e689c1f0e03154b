//! The `FO(J_2N)` generator matrix in the Pauli decomposition
//! `u = τ_a⊗A + τ_b⊗B + τ_c⊗C + τ_d⊗D`, its defining relations, the small
//! operators on `M_2 ⊗ M_N`, and exact checks of the compact derivative
//! formulas. The orthogonal kind `FO_N` runs through the same code with a
//! one-dimensional `τ` leg.

mod basis;
mod compact;
mod display;
mod generators;
mod ops;

pub use basis::{
    basis_matrix, coordinates, sigma_x, sigma_y, sigma_z, Alphabet, Family, Generator, Kind,
    TauBasis,
};
pub use compact::{
    compact_df1, compact_df2, relation_derivatives, render, verify_against,
    verify_lemma31_symbolic, verify_lemma31_symbolic_kind, CompactFormula, CompactTerm,
    FormulaCheck, Leg, Lemma31Report, Witness,
};
pub use display::{
    block_derivative, check_block_displays, displays_sum_to_df2, printed_block,
    theta_rewrite_check, DisplayForm, DisplayReport, DisplayTerm, DisplayTermCheck, TauExpr,
    ThetaEntry, ThetaTable,
};
pub use generators::{
    antipode, build_relations, build_relations_kind, build_u, build_u_kind, build_u_star,
    build_u_star_kind, GeneratorMatrix, PolyMatrix, RelationVector,
};
pub use ops::{MatrixOps, SmallOps, TauOps};
