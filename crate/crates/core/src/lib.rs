//! Exact enumeration of prime graphs under the Cartesian product.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: integer partitions, `z_λ`, Möbius function and friends.
//! * [`symfunc`]: truncated power-sum polynomials, the arithmetic product `⊠`.
//! * [`expcomp`]: the `I_k` operators and exponential composition `Z(A) ∗ Z_F`.
//! * [`dirichlet`]: exponential and ordinary Dirichlet series.
//! * [`permgroups`]: explicit permutation groups and their cycle indices.
//! * [`graphs`]: brute-force graph toolkit used as ground truth.
//! * [`enumeration`]: the counting pipelines tying all of the above together.

pub mod dirichlet;
pub mod enumeration;
mod error;
pub mod expcomp;
pub mod graphs;
pub mod partitions;
pub mod permgroups;
pub mod symfunc;
pub mod table1;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use symfunc::{PowerSumPoly, Rational};
