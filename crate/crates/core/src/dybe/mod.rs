//! Dynamical operators over the torus coefficient field.
//!
//! Coefficients live in the fraction field of `Q[s^±, K_1^±, …, K_n^±]`
//! modulo `K_1 ⋯ K_n = 1`, where `K_a` stands for `K_{ν_a}` and `q = s^n`.
//! Torus weights act by `K_μ ↦ q^{(λ, μ)} K_μ` with the pairing
//! `(ν_i, ν_j) = δ_ij - 1/n`, so every exponent is an integer power of `s`.

pub mod cob;
pub mod dynop;
pub mod solution;
pub mod weight;

pub use cob::{
    a1_commutes_with_r23, category_identity_checks, cob_intertwine_check, cob_intertwine_outcome,
    cob_intertwine_outcome_with, cob_lift1, cob_lift2, cob_matrix, det, flip_diagonal, intertwine,
    perturbed_rho, random_map, standard_rho, CategoryReport,
};
pub use dynop::{basis, DynOp, Multi};
pub use solution::{
    dybe_check, dybe_outcome, dyn_braid_sides, from_homop, lift12_dyn, lift23_dyn, s_ctx,
    standard_solution, BetaArgument,
};
pub use weight::{
    canonicalize, in_root_subfield, k_name, sigma_shift, torus_ctx, torus_rank, WeightVec, S,
};
