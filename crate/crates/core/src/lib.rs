//! Exact-arithmetic models of four bilinear products on R^8, their 8x8
//! matrix representations, the Lie algebras of their commutator brackets,
//! and a verification harness that checks the algebraic identities these
//! structures are supposed to satisfy — reporting precisely where the
//! reference formulas break and how they can be repaired.
//!
//! Everything is generic over the scalar type. The default [`Exact`] alias
//! is arbitrary-precision rationals, so every identity check is a literal
//! equality, not a tolerance comparison. `f64`/`f32` instantiations exist
//! for the few places that genuinely need floating point (Newton projection
//! onto the manifold, benchmarks).

pub mod em;
pub mod error;
pub mod iso;
pub mod lie;
pub mod manifold;
pub mod matrix;
pub mod oct;
pub mod quat;
pub mod rep;
pub mod rng;
pub mod scalar;
pub mod vec6;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{Mat, Mat2, Mat2C, Mat4C, Mat6, Mat8};
pub use oct::Oct;
pub use quat::{Quaternion, SplitQuaternion};
pub use rep::{GroupTag, RepSource};
pub use scalar::Scalar;
pub use vec6::{Form, ProductVariant, Vec6};

/// Default exact scalar: arbitrary-precision rational numbers.
pub type Exact = num::BigRational;
