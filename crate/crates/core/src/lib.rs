//! Exact super linear algebra, Lie superalgebras, and their finite-dimensional
//! indecomposable modules.
//!
//! Everything is computed over the rationals with no floating point anywhere:
//! supermatrices, Grassmann calculus, algebra constructors with verified
//! structure constants, representation functors, Krull-Schmidt decomposition,
//! Chevalley-Eilenberg cohomology in degrees 0..=2, and the complex of
//! integral and differential forms over `vect(0|2)`.

pub mod accept;
pub mod algebras;
pub mod cohom;
pub mod decomp;
pub mod error;
pub mod forms;
pub mod grassmann;
pub mod json;
pub mod linalg;
pub mod rat;
pub mod rep;
pub mod sl11;

pub use error::{Error, Result};
pub use rat::Rat;
