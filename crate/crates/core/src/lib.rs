//! Exact computation of projective differential invariants of varieties.
//!
//! Everything here works over the rationals with arbitrary precision and no
//! rounding. The crate is `no_std` and only needs an allocator.
//!
//! The pipeline for a variety `X` given by homogeneous equations and a smooth
//! rational point `x` is:
//!
//! 1. [`jets::chart_from_implicit`] solves the equations as power series and
//!    produces adapted local coordinates `z = f(w)`.
//! 2. [`jets::fundamental_forms`] reads off the fundamental forms `F_2 … F_5`.
//! 3. [`contact`] builds the contact ideals, runs the Fubini test
//!    (`|F_3|` inside the ideal of `|F_2|`) and the `F_4`/`F_5` complete
//!    intersection test.
//! 4. [`pencils`] classifies the pencil of quadrics `|F_2|`.
//! 5. [`classify`] combines the evidence into a predicted class for
//!    codimension two varieties.
//!
//! [`lines`] computes splitting types of normal bundles of lines on
//! hypersurfaces from the syzygies of the restricted partial derivatives.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod binary;
pub mod classify;
pub mod contact;
pub mod error;
pub mod jets;
pub mod linalg;
pub mod lines;
pub mod pencils;
pub mod poly;
pub mod scalar;
pub mod univariate;

pub use error::{Error, Result};
pub use linalg::{FormSpace, Matrix};
pub use poly::{Monomial, Poly};
pub use scalar::Scalar;
