use std::cmp::Ordering;

use super::{dot_f64, ToricPoint, ToricVariety};
use crate::cone::eval_sign;
use crate::error::{Error, Result};
use crate::fan::PointConfiguration;

/// `Psi_A(x)`: the point `(phi(a - f))_a` scaled into the simplex, using the first point `f`
/// of the face labelling the orbit of `x`.
pub fn projective_embed(p: &PointConfiguration, var: &ToricVariety, x: &ToricPoint) -> Result<Vec<f64>> {
    projective_embed_via(p, var, x, None)
}

/// As [`projective_embed`], with an explicit base point `f` (index into `A`) from the orbit's face.
pub fn projective_embed_via(p: &PointConfiguration, var: &ToricVariety, x: &ToricPoint, f: Option<usize>) -> Result<Vec<f64>> {
    if p.dim() != var.dim() {
        return Err(Error::DimensionMismatch { expected: var.dim(), found: p.dim() });
    }
    let labels = var.fan().labels().ok_or(Error::ChartMismatch)?;
    if labels.len() != var.fan().len() {
        return Err(Error::ChartMismatch);
    }
    let (tau, w) = var.orbit_coordinates(x)?;
    let face = &labels[tau];
    let f = match f {
        Some(i) if face.contains(&i) => i,
        Some(_) => return Err(Error::ChartMismatch),
        None => *face.first().ok_or(Error::ChartMismatch)?,
    };
    let tau_gens = var.fan().cones()[tau].generators();
    let wv = crate::numeric::Vector::from_f64s_or_empty(&w);
    let base = &p.points()[f];
    let logs: Vec<f64> = p
        .points()
        .iter()
        .map(|a| {
            let u = a.sub(base);
            if tau_gens.iter().all(|t| eval_sign(&u, t) == Ordering::Equal) {
                -dot_f64(&u, &wv)
            } else {
                f64::NEG_INFINITY
            }
        })
        .collect();
    let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let vals: Vec<f64> = logs.iter().map(|l| (l - top).exp()).collect();
    let total: f64 = vals.iter().sum();
    Ok(vals.iter().map(|v| v / total).collect())
}

/// `sum z_a a`.
pub fn moment_map(p: &PointConfiguration, z: &[f64]) -> Result<Vec<f64>> {
    if z.len() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), found: z.len() });
    }
    let mut out = vec![0.0; p.dim()];
    for (a, zi) in p.points().iter().zip(z) {
        for (o, c) in out.iter_mut().zip(a.to_f64s()) {
            *o += zi * c;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::normal_fan;
    use crate::variety::TorusElement;

    fn setup() -> (PointConfiguration, ToricVariety) {
        let p = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let var = ToricVariety::new(normal_fan(&p).unwrap());
        (p, var)
    }

    #[test]
    fn dense_identity_is_uniform() {
        let (p, var) = setup();
        let z = projective_embed(&p, &var, &var.identity()).unwrap();
        for v in &z {
            assert!((v - 1.0 / 3.0).abs() < 1e-12);
        }
        let m = moment_map(&p, &z).unwrap();
        assert!((m[0] - 1.0 / 3.0).abs() < 1e-12 && (m[1] - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn vertices_and_choice_of_base() {
        let (p, var) = setup();
        let labels = var.fan().labels().unwrap().to_vec();
        for (i, face) in labels.iter().enumerate() {
            let x = var.act(&TorusElement::from_f64s(&[0.3, -0.4]), &var.distinguished_point(i).unwrap()).unwrap();
            let z0 = projective_embed(&p, &var, &x).unwrap();
            for &f in face {
                let z = projective_embed_via(&p, &var, &x, Some(f)).unwrap();
                for (a, b) in z.iter().zip(&z0) {
                    assert!((a - b).abs() < 1e-10);
                }
            }
            if face.len() == 1 {
                let z = projective_embed(&p, &var, &var.distinguished_point(i).unwrap()).unwrap();
                assert_eq!(z[face[0]], 1.0);
            }
        }
    }
}
