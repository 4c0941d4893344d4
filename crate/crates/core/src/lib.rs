//! Exact verification of the identity between three sums of `k × k` minors:
//! the principal minors of `TX`, all minors of a symmetric `X`, and the
//! weighted sum over interlacing index pairs.
//!
//! * [`linalg`]: exact rationals, dense matrices, determinants, minors.
//! * [`minor_sums`]: the three sums and the closed form for minors of `T`.
//! * [`lgv`]: a planar network for `T` and disjoint path-family counting.
//! * [`matchings`]: matchings of `K_{n,n}`, clusters, and flip-group orbits.
//! * [`peakon`]: the Novikov multipeakon flow and its constants of motion.
//! * [`campaign`]: the verification campaigns driven by the CLI.

pub mod campaign;
pub mod error;
pub mod lgv;
pub mod linalg;
pub mod matchings;
pub mod minor_sums;
pub mod peakon;
mod serde_rational;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, IndexSet, Rational};
pub use matchings::{ClusterDecomposition, Matching, Orbit, OrbitClass};
pub use minor_sums::IdentityReport;
pub use peakon::{ConservationReport, PeakonState};
