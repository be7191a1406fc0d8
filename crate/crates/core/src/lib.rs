//! Exact constructions around the pyramid that fills `1/(n+1)` of the
//! `(n+1)`-cube: cube vertices, the pyramid and simplex, barycenter cuboids,
//! the cyclic coordinate rotation, Kuhn decompositions, tessellation checks
//! and a small wireframe renderer.
//!
//! Throughout, `n` is the dimension of the pyramid's base cube; the ambient
//! space has dimension `n + 1`.

pub mod constructions;
pub mod decomposition;
mod error;
pub mod exact;
pub mod render;
pub mod symmetry;
pub mod verification;

pub use error::{Error, Result};
pub use exact::{RatMat, RatVec, Rational};
