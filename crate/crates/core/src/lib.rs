//! Exact-arithmetic engine for orbits of spherical modules and the duality
//! that matches orbits in `V` with orbits in `V*` through conormal bundles.
//!
//! Layers, bottom-up:
//!
//! * [`exactlin`]: rational scalars, dense matrices, canonical subspaces.
//! * [`repcat`]: Lie algebra generators on `V` for every case.
//! * [`classify`]: orbit labels, classifiers, representatives.
//! * [`conormal`]: tangent and conormal spaces, sampled duals.
//! * [`poset`]: closure order, dimensions, closed-form duality, exports.
//! * [`cones`]: colored faces and the Sp(2n)×GL(3) semi-invariants.

pub mod classify;
pub mod cones;
pub mod conormal;
pub mod error;
pub mod exactlin;
pub mod poset;
pub mod repcat;

pub use classify::{Comp, OrbitLabel, ZData};
pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar, Subspace, Vector};
pub use poset::OrbitPoset;
pub use repcat::{CaseId, CaseSpec, Family};
