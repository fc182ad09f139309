use std::collections::HashSet;

use crate::cone::{pulling_triangulation, Cone};
use crate::error::{Error, Result};
use crate::fan::PointConfiguration;
use crate::secondary::cell_cone;
use crate::variety::birch::solve_on_face;

/// Simplices (as point indices) triangulating `conv(A)` using only its vertices.
pub(crate) fn hull_triangulation(p: &PointConfiguration) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..p.len()).collect();
    let c = cell_cone(p, &all);
    let rays: Vec<usize> = c.all_faces().iter().filter(|f| f.dimension() == 1).map(|f| f.generators[0]).collect();
    let verts = Cone::new(c.ambient_dim(), c.mode(), rays.iter().map(|&i| c.generators()[i].clone()).collect())?;
    let kept: Vec<usize> = rays.iter().map(|&i| all[i]).collect();
    Ok(pulling_triangulation(&verts).into_iter().map(|s| s.iter().map(|&k| kept[k]).collect()).collect())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn compositions(k: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        cur.push(k);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for i in 0..=k {
        cur.push(i);
        compositions(k - i, parts - 1, cur, out);
        cur.pop();
    }
}

/// Barycentric lattice points of resolution `k` on each simplex of a triangulation of `conv(A)`,
/// with `k` the smallest giving at least `density` points in total.
pub fn moment_grid(p: &PointConfiguration, density: usize) -> Result<Vec<Vec<f64>>> {
    if p.is_empty() {
        return Err(Error::Invalid("empty configuration".into()));
    }
    let simplices = hull_triangulation(p)?;
    let d = simplices[0].len() - 1;
    let mut k = 0;
    while simplices.len() * binomial(k + d, d) < density.max(1) {
        k += 1;
    }
    let pts: Vec<Vec<f64>> = p.points().iter().map(|a| a.to_f64s()).collect();
    let mut weights = Vec::new();
    compositions(k, d + 1, &mut Vec::new(), &mut weights);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in &simplices {
        for w in &weights {
            let mut b = vec![0.0; p.dim()];
            for (wi, &vi) in w.iter().zip(s) {
                let t = if k == 0 { 1.0 / (d + 1) as f64 } else { *wi as f64 / k as f64 };
                for (bj, aj) in b.iter_mut().zip(&pts[vi]) {
                    *bj += t * aj;
                }
            }
            let key: Vec<i64> = b.iter().map(|x| (x * 1e9).round() as i64).collect();
            if seen.insert(key) {
                out.push(b);
            }
        }
    }
    Ok(out)
}

/// Deterministic sample of `omega · Z_A` in the simplex, one point over each moment-grid point.
pub fn sample_translate(p: &PointConfiguration, log_omega: &[f64], density: usize) -> Result<Vec<Vec<f64>>> {
    if log_omega.len() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), found: log_omega.len() });
    }
    if log_omega.iter().any(|x| !x.is_finite()) {
        return Err(Error::Invalid("translation must be positive".into()));
    }
    let all: Vec<usize> = (0..p.len()).collect();
    let hull = cell_cone(p, &all);
    let facets: Vec<Vec<f64>> = hull.hrep().inequalities.iter().map(|h| h.to_f64s()).collect();
    let hom: Vec<Vec<f64>> = p.homogenized().points().iter().map(|a| a.to_f64s()).collect();
    let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(x, y)| x * y).sum::<f64>();
    let norm = |u: &[f64]| dot(u, u).sqrt();
    let mut out = Vec::new();
    for mut b in moment_grid(p, density)? {
        b.push(1.0);
        let tight: Vec<&Vec<f64>> =
            facets.iter().filter(|h| dot(h, &b).abs() <= 1e-9 * norm(h) * norm(&b).max(1.0)).collect();
        let face: Vec<usize> = all.iter().copied().filter(|&i| tight.iter().all(|h| dot(h, &hom[i]).abs() <= 1e-9 * norm(h) * norm(&hom[i]))).collect();
        let fp: Vec<Vec<f64>> = face.iter().map(|&i| hom[i].clone()).collect();
        let lw: Vec<f64> = face.iter().map(|&i| log_omega[i]).collect();
        let logs = solve_on_face(&fp, &lw, &b)?;
        let mut z = vec![0.0; p.len()];
        for (&i, l) in face.iter().zip(logs) {
            z[i] = l.exp();
        }
        let total: f64 = z.iter().sum();
        out.push(z.into_iter().map(|x| x / total).collect());
    }
    Ok(out)
}
