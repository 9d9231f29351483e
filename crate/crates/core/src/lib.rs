//! Combinatorial geometry of CAT(0) cube complexes.
//!
//! Finite cubings are stored as [`CubeComplex`] values; infinite ones are
//! described by [`ImplicitComplex`] implementations and explored in balls.
//! Automorphisms of either kind are classified as elliptic, hyperbolic or
//! inverting by [`automorphism::classify`].

pub mod automorphism;
pub mod complex;
pub mod demos;
pub mod error;
pub mod hyperplanes;
pub mod metric;
pub mod standard;
pub mod subdivision;
pub mod wallspace;

pub use automorphism::{Automorphism, Classification, ClassifyParams, Verdict};
pub use complex::{emit_ccx, parse_ccx, validate, CubeComplex, CubeId, ImplicitComplex, VertexId};
pub use error::{Error, Result};
pub use hyperplanes::{walls, Halfspaces, Wall, Walls};
pub use metric::DistanceMatrix;
