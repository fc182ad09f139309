use std::cmp::Ordering;

use super::{validate_fan, Fan, PointConfiguration};
use crate::cone::Cone;
use crate::error::Result;
use crate::numeric::{Scalar, Vector};

/// The normal fan of `conv(A)`: for each face `F`, the cone of `v` minimized on `F`.
/// Each cone is labelled by the indices of the points it minimizes.
pub fn normal_fan(p: &PointConfiguration) -> Result<Fan> {
    let (n, mode) = (p.dim(), p.mode());
    let hom = p.homogenized().cone();
    let vertices: Vec<usize> = hom
        .all_faces()
        .iter()
        .filter(|f| f.dimension() == 1)
        .map(|f| f.generators[0])
        .collect();
    let mut maximal = Vec::new();
    for &v in &vertices {
        let f0 = &p.points()[v];
        let ineqs: Vec<Vector> = p.points().iter().map(|a| a.sub(f0)).filter(|d| !d.is_zero()).collect();
        maximal.push(Cone::from_hrep(n, mode, &ineqs, &[])?);
    }
    let fan = validate_fan(n, &maximal)?;
    let labels = fan.cones().iter().map(|c| minimizers(p, &c.relint_point())).collect();
    Ok(fan.with_labels(labels))
}

/// Indices of the points minimizing `<a, v>`.
pub(crate) fn minimizers(p: &PointConfiguration, v: &Vector) -> Vec<usize> {
    let vals: Vec<Scalar> = p.points().iter().map(|a| a.dot(v)).collect();
    let min = vals
        .iter()
        .min_by(|a, b| a.cmp_tol(b))
        .cloned()
        .expect("nonempty configuration");
    (0..vals.len()).filter(|&i| vals[i].cmp_tol(&min) == Ordering::Equal).collect()
}
