//! Lattice points of rational cones: Hilbert bases, face monoids and toric binomials.

mod binomial;
mod hilbert;

pub use binomial::{toric_lattice_binomials, LatticeBinomial};
pub use hilbert::{face_monoid_check, hilbert_basis, FaceWitness, HilbertBasis};
