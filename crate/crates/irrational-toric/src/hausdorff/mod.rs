//! Translated toric complexes in the simplex, sampled Hausdorff distances, minimum faces of
//! boundedness for power-sum paths and the correspondence between limits and the
//! secondary-fan toric variety.

mod complex;
mod distance;
mod path;
mod sample;

pub use complex::{
    aff_basis, cell_dependencies, in_aff, limit_complex, psi_correspondence, LimitCorrespondence, TranslatedComplex,
};
pub use distance::{directed_distance, hausdorff_distance, sampling_resolution};
pub use path::{min_face_of_boundedness, PowerSumPath};
pub use sample::{moment_grid, sample_translate};
