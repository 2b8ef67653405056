//! Exact Landau–Ginzburg models on minimal adjoint orbits of `sl(n+1)`.
//!
//! The crate realizes the orbit of `diag(n, -1, …, -1)` both as a set of
//! trace-zero matrices and as rank-one tensors `v ⊗ ε` with `ε(v) = 1`,
//! evaluates the height potential `f_H` and its degree-zero rational
//! extension `R_H`, certifies the critical-point structure in Bruhat charts,
//! and compares the Segre compactification with the projective closure
//! obtained by homogenizing the orbit ideal.
//!
//! All arithmetic is exact over ℚ(i).

pub mod cli;
pub mod error;
pub mod exact;
pub mod lgfib;
pub mod liecore;
pub mod orbit;
pub mod polyideal;
pub mod sampling;
pub mod segre;

pub use error::{Error, Result};
