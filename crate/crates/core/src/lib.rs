//! Exact symbolic verification of Yang-Baxter type identities.
//!
//! The crate builds homogeneous operators on `V ⊗ V` (the flip, the identity,
//! the operator `η`, the Cremmer-Gervais family), checks the braid relation
//! and its generating-function criteria over formal parameters, and realizes
//! the dynamical Yang-Baxter equation over a torus coefficient field together
//! with the change of basis that turns its standard solution into the
//! Cremmer-Gervais matrix.

pub mod arith;
pub mod check;
pub mod dybe;
pub mod error;
pub mod families;
pub mod genfun;
pub mod io;
pub mod linalg;
pub mod par;
pub mod randomized;
pub mod tensor;

pub use error::{Error, Result};
