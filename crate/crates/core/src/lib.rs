//! Exact computer algebra for reflection-equation algebras over Hecke
//! symmetries and their quantum doubles.
//!
//! Everything is computed exactly over `Q(q)` (see [`scalar::Scalar`]) or,
//! in sampled mode, over `Q` at rational sample points ([`field::Rat`]).
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod braiding;
pub mod capelli;
pub mod doubles;
pub mod error;
pub mod field;
pub mod heckerep;
pub mod int;
pub mod invariants;
pub mod linalg;
pub mod nc;
pub mod ncmatrix;
pub mod operator;
pub mod orbits;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod scalar;
pub mod shifted;
pub mod suites;
pub mod u2h;

pub use error::Error;
pub use field::{Field, Rat};
pub use scalar::{qint, Param, Scalar};
