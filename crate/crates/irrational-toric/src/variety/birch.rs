use nalgebra::{DMatrix, DVector};

use super::{face_indices, Chart, ToricPoint};
use crate::error::{Error, Result};
use crate::fan::PointConfiguration;
use crate::numeric::{lp_feasible, LpProblem, Relation, Scalar, Vector};

const MAX_ITERATIONS: usize = 200;
const TARGET: f64 = 1e-10;

/// The unique `x ∈ X_A` with `sum x_a a = b`.
pub fn birch_solve(p: &PointConfiguration, b: &Vector) -> Result<ToricPoint> {
    birch_solve_weighted(p, &vec![0.0; p.len()], b)
}

/// The unique `x ∈ omega · X_A` with `sum x_a a = b`, for `log omega` given.
pub fn birch_solve_weighted(p: &PointConfiguration, log_omega: &[f64], b: &Vector) -> Result<ToricPoint> {
    let (n, s) = (p.dim(), p.len());
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
    }
    if log_omega.len() != s {
        return Err(Error::DimensionMismatch { expected: s, found: log_omega.len() });
    }
    let b = b.to_mode(p.mode());
    in_cone_lp(p, &b)?;

    let face = face_indices(&p.cone(), p.points(), &b);
    let mut log_values = vec![f64::NEG_INFINITY; s];
    if b.is_zero() && face.iter().all(|&i| p.points()[i].is_zero()) {
        for &i in &face {
            log_values[i] = log_omega[i];
        }
        return Ok(ToricPoint { chart: Chart::Configuration, log_values });
    }

    let pts: Vec<Vec<f64>> = face.iter().map(|&i| p.points()[i].to_f64s()).collect();
    let lw: Vec<f64> = face.iter().map(|&i| log_omega[i]).collect();
    let logs = solve_on_face(&pts, &lw, &b.to_f64s())?;
    for (k, &i) in face.iter().enumerate() {
        log_values[i] = logs[k];
    }
    Ok(ToricPoint { chart: Chart::Configuration, log_values })
}

/// Newton's method for `sum_a exp(l_a + <a, mu>) a = b` over `mu ∈ span(pts)`, where `b` lies in
/// the relative interior of `cone(pts)`. Returns `l_a + <a, mu>` for each point.
pub(crate) fn solve_on_face(pts: &[Vec<f64>], lw: &[f64], b: &[f64]) -> Result<Vec<f64>> {
    let n = b.len();
    let basis = span_basis(pts, n);
    let r = basis.ncols();
    let coords: Vec<DVector<f64>> = pts.iter().map(|a| basis.transpose() * DVector::from_column_slice(a)).collect();
    let bt = basis.transpose() * DVector::from_column_slice(b);
    let scale = bt.amax().max(1.0);
    let weights = |mu: &DVector<f64>| -> Vec<f64> { coords.iter().zip(lw).map(|(a, l)| (a.dot(mu) + l).exp()).collect() };
    let objective = |mu: &DVector<f64>| -> f64 { weights(mu).iter().sum::<f64>() - bt.dot(mu) };
    let gradient = |w: &[f64]| coords.iter().zip(w).fold(-bt.clone(), |g, (a, x)| g + a * *x);

    let mut mu = DVector::<f64>::zeros(r);
    for _ in 0..MAX_ITERATIONS {
        let w = weights(&mu);
        let grad = gradient(&w);
        if grad.amax() / scale <= TARGET * 1e-3 {
            break;
        }
        let mut hess = DMatrix::<f64>::zeros(r, r);
        for (a, x) in coords.iter().zip(&w) {
            hess += a * a.transpose() * *x;
        }
        let step = match hess.cholesky() {
            Some(ch) => -ch.solve(&grad),
            None => -grad.clone(),
        };
        if step.amax() <= 1e-15 * (1.0 + mu.amax()) {
            break;
        }
        let f0 = objective(&mu);
        let slope = grad.dot(&step);
        let mut t = 1.0;
        loop {
            let cand = &mu + &step * t;
            let f1 = objective(&cand);
            let flat = (f1 - f0).abs() <= 1e-13 * f0.abs().max(1.0);
            if f1.is_finite() && (f1 <= f0 + 1e-4 * t * slope || (t == 1.0 && flat)) {
                mu = cand;
                break;
            }
            t *= 0.5;
            if t < 1e-16 {
                break;
            }
        }
    }
    let residual = gradient(&weights(&mu)).amax() / scale;
    if residual > TARGET {
        return Err(Error::NonConvergence { iterations: MAX_ITERATIONS, residual });
    }
    let full_mu = &basis * &mu;
    Ok(pts.iter().zip(lw).map(|(a, l)| DVector::from_column_slice(a).dot(&full_mu) + l).collect())
}

fn in_cone_lp(p: &PointConfiguration, b: &Vector) -> Result<()> {
    let (n, s, mode) = (p.dim(), p.len(), p.mode());
    let mut lp = LpProblem::new(s, mode);
    for i in 0..s {
        lp.add(Vector::unit(s, i, mode), Relation::Ge, Scalar::zero(mode))?;
    }
    let m = p.matrix();
    for row in 0..n {
        lp.add(m.row(row), Relation::Eq, b.get(row).clone())?;
    }
    if lp_feasible(&lp)?.is_feasible() {
        Ok(())
    } else {
        Err(Error::NotInCone)
    }
}

/// Orthonormal basis (columns) of the span of the given points.
fn span_basis(pts: &[Vec<f64>], n: usize) -> DMatrix<f64> {
    if pts.is_empty() {
        return DMatrix::zeros(n, 0);
    }
    let a = DMatrix::from_fn(n, pts.len(), |i, j| pts[j][i]);
    let svd = a.svd(true, false);
    let u = svd.u.expect("left singular vectors");
    let top = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cols: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&k| svd.singular_values[k] > 1e-10 * top.max(1.0))
        .collect();
    DMatrix::from_fn(n, cols.len(), |i, j| u[(i, cols[j])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::{affine_point, TorusElement};

    #[test]
    fn symmetric_segment_is_uniform() {
        let p = PointConfiguration::from_ints(&[&[0, 1], &[1, 1], &[2, 1]]).unwrap();
        let x = birch_solve(&p, &Vector::from_ints(&[3, 3])).unwrap();
        let v = x.values();
        assert!((v[0] - 1.0).abs() < 1e-9 && (v[1] - 1.0).abs() < 1e-9 && (v[2] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn round_trip() {
        let p = PointConfiguration::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1], &[2, 0, 1]]).unwrap();
        let t = TorusElement::from_f64s(&[0.4, -0.7, 0.2]);
        let x = affine_point(&p, &t);
        let b: Vec<f64> = (0..3).map(|k| p.points().iter().zip(x.values()).map(|(a, z)| z * a.get(k).to_f64()).sum()).collect();
        let b = Vector::from_f64s(&b);
        let y = birch_solve(&p.to_mode(crate::Mode::Float), &b).unwrap();
        for (u, v) in x.values().iter().zip(y.values()) {
            assert!((u - v).abs() < 1e-8);
        }
    }

    #[test]
    fn boundary_target_has_face_support() {
        let p = PointConfiguration::from_ints(&[&[0, 1], &[1, 1], &[2, 1]]).unwrap();
        let x = birch_solve(&p, &Vector::from_ints(&[0, 2])).unwrap();
        assert_eq!(x.support(), vec![0]);
        assert!((x.values()[0] - 2.0).abs() < 1e-12);
        assert_eq!(birch_solve(&p, &Vector::from_ints(&[-1, 1])).unwrap_err(), Error::NotInCone);
    }
}
