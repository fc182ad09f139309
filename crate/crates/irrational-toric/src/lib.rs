//! Computational toolkit for irrational toric geometry.
//!
//! Polyhedral cones and fans over the reals, nonnegative toric varieties as spaces of monoid
//! homomorphisms, the Birch moment-map solver, secondary polytopes of point configurations
//! and Hausdorff limits of torus translates.

pub mod error;
pub mod cone;
pub mod fan;
pub mod hausdorff;
pub mod io;
pub mod monoid;
pub mod numeric;
pub mod secondary;
pub mod variety;

pub use error::{Error, Result};
pub use numeric::{Matrix, Mode, Scalar, Vector};
