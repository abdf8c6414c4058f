//! Homogeneous operators on `V ⊗ V` and `V ⊗ V ⊗ V`, their composition and
//! lifts, and the braid (Yang-Baxter) relation.

pub mod homop;
pub mod triop;
pub mod ybe;

pub use homop::{hecke_check, hecke_outcome, in_range, quadratic_inverse, HomOp, Key};
pub use triop::{Idx3, TriOp};
pub use ybe::{
    braid_sides, ybe_check, ybe_check_coefficients, ybe_coefficient_outcome, ybe_outcome,
    ybe_residual,
};
