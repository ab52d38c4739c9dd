//! Combinatorics of nilpotent orbits and Langlands parameters for the split
//! classical groups SO_{2n+1}, Sp_{2n} and SO_{2n}.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: exact partition arithmetic for the classical types B, C
//!   and D — transpose, X-collapse, dominance order, and the Barbasch–Vogan
//!   duality `d_BV` on partitions.
//! - [`orbits`]: nilpotent orbits as typed partitions with the very-even I/II
//!   labels of type D, closure order, and `d_BV` at orbit level.
//! - [`fibers`]: preimages of `d_BV` over special partitions and orbits,
//!   computed through the necessary box-moving description and verified
//!   against brute force.
//! - [`parameters`]: L-parameters, local Arthur parameters and infinitesimal
//!   parameters as summand multisets, with the `phi_of_psi` / `hat_psi` /
//!   `lambda_of_phi` calculus and group-validity tests.
//! - [`arthur`]: the Arthur-type decision procedure with explicit witness
//!   construction, and exhaustive enumeration of the parameter sets
//!   `Phi(G)_lambda` and `Psi(G)_lambda`.
//! - [`packets`]: open/closed parameters and parameter-level weak local
//!   Arthur packets (duality fibers inside `Phi(G)_lambda`, dominance
//!   sublevel sets, and their coincidence for tempered open parameters).
//! - [`text`]: the text syntax shared by the CLI and the fuzz targets, with
//!   position-reporting parse errors.
//! - [`oracle`]: independent brute-force re-implementations of the collapse,
//!   fiber and enumeration operations, used by the test suites and by the
//!   CLI's `--oracle` mode.
//!
//! All values are immutable after construction and all operations are pure
//! functions; everything is `Send + Sync` and freely shareable.

pub mod arthur;
pub mod error;
pub mod fibers;
pub mod oracle;
pub mod orbits;
pub mod packets;
pub mod parameters;
pub mod partitions;
pub mod text;

pub use error::{DomainError, ParseError};
pub use orbits::{NilpotentOrbit, VeryEvenLabel};
pub use partitions::{ClassicalType, OrderRelation, Partition};
