//! Finite fields F_{q^n}, their multiplicative characters and F_q-affine
//! subspaces, with exact character-sum evaluation and checkers for the
//! classical and affine-space character-sum bounds and the primitive and
//! k-normal element theory built on them.

pub mod arith;
pub mod error;
pub mod ff;
pub mod rng;
pub mod characters;
pub mod affine;
pub mod sums;
pub mod primitive;
pub mod knormal;
pub mod report;
pub mod cli;

pub use error::{Error, Result};
pub use ff::{BaseField, Element, Field, FiniteField};
