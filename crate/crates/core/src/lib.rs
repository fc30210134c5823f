//! Exact computation of left-invariant Hermitian connections, their torsion
//! and curvature on Lie groups with a left-invariant almost Hermitian
//! structure, starting from structure constants.
//!
//! Library indices are 0-based. Error values and all external formats use
//! 1-based indices.

mod combo;

pub mod connections;
pub mod curvature;
pub mod error;
pub mod hermitian;
pub mod lie;
pub mod poly;
pub mod rational;
pub mod tensor;
pub mod verify;

pub use error::{Error, ErrorClass, Result, Type11Condition};
pub use rational::{format_rational, parse_rational, int, rat, Rational};
pub use tensor::{Tensor3, Tensor4};
