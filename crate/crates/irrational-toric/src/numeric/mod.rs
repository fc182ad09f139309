//! Scalars, vectors, matrices and a small LP solver, in exact or float mode.

pub mod integer;
pub mod lp;
mod matrix;
mod scalar;
mod vector;

pub use lp::{lp_feasible, LpOutcome, LpProblem, Relation};
pub use matrix::{Matrix, Rref};
pub use scalar::{set_tolerance, tolerance, Mode, Scalar};
pub use vector::Vector;

/// `<u, v>` for `u` in `M` and `v` in `N`.
pub fn pairing(u: &Vector, v: &Vector) -> crate::Result<Scalar> {
    u.pairing(v)
}

/// Right null space basis of `m`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    m.kernel_basis()
}
