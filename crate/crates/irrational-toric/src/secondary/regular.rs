use std::cmp::Ordering;

use super::{all_triangulations, cell_cone, hom_points, validate_subdivision, Subdivision};
use crate::cone::{eval_sign, Cone};
use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan, PointConfiguration};
use crate::numeric::{lp_feasible, LpProblem, Matrix, Relation, Scalar, Vector};

/// Projection of the lower faces of the hull of the lifted points `(a, lambda_a)`.
pub fn regular_subdivision(p: &PointConfiguration, lambda: &Vector) -> Result<Subdivision> {
    if lambda.dim() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), found: lambda.dim() });
    }
    let (n, mode) = (p.dim(), p.mode());
    let lambda = lambda.to_mode(mode);
    let lifted: Vec<Vector> = p
        .points()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let tail = Vector::with_mode(vec![lambda.get(i).clone(), Scalar::one(mode)], mode).expect("uniform");
            a.concat(&tail)
        })
        .collect();
    let c = Cone::new(n + 2, mode, lifted.clone())?;
    let hrep = c.hrep();
    if hrep.equations.iter().any(|e| !e.get(n).is_zero()) {
        return Ok(Subdivision::trivial(p));
    }
    let cells = hrep
        .inequalities
        .iter()
        .filter(|h| h.get(n).is_positive())
        .map(|h| (0..p.len()).filter(|&i| eval_sign(h, &lifted[i]) == Ordering::Equal).collect())
        .collect();
    Ok(Subdivision::new(cells))
}

/// Indices of a maximal affinely independent subset, chosen greedily.
fn affine_basis(p: &PointConfiguration) -> Vec<usize> {
    let hom = hom_points(p, &(0..p.len()).collect::<Vec<_>>());
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..p.len() {
        let mut rows: Vec<Vector> = basis.iter().map(|&j| hom[j].clone()).collect();
        rows.push(hom[i].clone());
        if Matrix::from_rows(&rows, p.dim() + 1, p.mode()).expect("rows").rank() == rows.len() {
            basis.push(i);
        }
    }
    basis
}

/// `lambda` minus the affine function agreeing with it on an affine basis of `A`,
/// scaled to a primitive vector.
fn normalize_lifting(p: &PointConfiguration, lambda: &Vector) -> Result<Vector> {
    let basis = affine_basis(p);
    let hom = hom_points(p, &(0..p.len()).collect::<Vec<_>>());
    let rows: Vec<Vector> = basis.iter().map(|&j| hom[j].clone()).collect();
    let m = Matrix::from_rows(&rows, p.dim() + 1, p.mode())?;
    let rhs = Vector::with_mode(basis.iter().map(|&j| lambda.get(j).clone()).collect(), p.mode())?;
    let f = m.solve(&rhs)?.ok_or(Error::Invalid("affine basis is degenerate".into()))?;
    let coords: Vec<Scalar> = (0..p.len()).map(|i| lambda.get(i) - &f.dot(&hom[i])).collect();
    Ok(Vector::with_mode(coords, p.mode())?.primitive())
}

/// A lifting inducing `s`, or `None` when `s` is not regular.
pub fn is_regular(p: &PointConfiguration, s: &Subdivision) -> Result<Option<Vector>> {
    validate_subdivision(p, s)?;
    let (n, k, mode) = (p.dim(), p.len(), p.mode());
    let hom = hom_points(p, &(0..k).collect::<Vec<_>>());
    let cells = s.cells();
    let vars = k + cells.len() * (n + 1);
    let mut lp = LpProblem::new(vars, mode);
    for (c, cell) in cells.iter().enumerate() {
        let off = k + c * (n + 1);
        for i in 0..k {
            let mut row = vec![Scalar::zero(mode); vars];
            row[i] = Scalar::one(mode);
            for (j, x) in hom[i].coords().iter().enumerate() {
                row[off + j] = -x;
            }
            let rel = if cell.contains(&i) { Relation::Eq } else { Relation::Gt };
            lp.add(Vector::with_mode(row, mode)?, rel, Scalar::zero(mode))?;
        }
    }
    let Some(x) = lp_feasible(&lp)?.point().cloned() else { return Ok(None) };
    let lambda = Vector::with_mode(x.coords()[..k].to_vec(), mode)?;
    Ok(Some(normalize_lifting(p, &lambda)?))
}

/// The closed cone of liftings inducing the regular triangulation `t`.
pub fn secondary_cone(p: &PointConfiguration, t: &Subdivision) -> Result<Cone> {
    if !t.is_triangulation(p) {
        return Err(Error::NotSimplex);
    }
    if is_regular(p, t)?.is_none() {
        return Err(Error::NotRegular);
    }
    let (k, mode) = (p.len(), p.mode());
    let hom = hom_points(p, &(0..k).collect::<Vec<_>>());
    let mut ineqs: Vec<Vector> = Vec::new();
    let mut push = |v: Vector| {
        let v = v.primitive();
        if !v.is_zero() && !ineqs.contains(&v) {
            ineqs.push(v);
        }
    };
    let cells = t.cells();
    for (a, f) in cells.iter().enumerate() {
        for g in &cells[a + 1..] {
            let shared: Vec<usize> = f.iter().filter(|i| g.contains(i)).copied().collect();
            if shared.len() + 1 != f.len() {
                continue;
            }
            let x = *f.iter().find(|i| !shared.contains(i)).expect("apex");
            let mut idx = shared.clone();
            idx.push(x);
            idx.push(*g.iter().find(|i| !shared.contains(i)).expect("apex"));
            let cols: Vec<Vector> = idx.iter().map(|&i| hom[i].clone()).collect();
            let circuit = Matrix::from_columns(&cols, p.dim() + 1, mode)?.kernel_basis();
            let c = circuit.first().ok_or(Error::NotSimplex)?;
            let sign = if c.get(idx.len() - 2).is_negative() { Scalar::from_int(-1, mode) } else { Scalar::one(mode) };
            let mut row = vec![Scalar::zero(mode); k];
            for (j, &i) in idx.iter().enumerate() {
                row[i] = &sign * c.get(j);
            }
            push(Vector::with_mode(row, mode)?);
        }
    }
    let used = t.used_points();
    for z in (0..k).filter(|z| !used.contains(z)) {
        let cell = cells
            .iter()
            .find(|c| cell_cone(p, c).contains(&hom[z]))
            .ok_or_else(|| Error::InvalidSubdivision(format!("point {z} is not covered")))?;
        let cols: Vec<Vector> = cell.iter().map(|&i| hom[i].clone()).collect();
        let mu = Matrix::from_columns(&cols, p.dim() + 1, mode)?.solve(&hom[z])?.ok_or(Error::NotSimplex)?;
        let mut row = vec![Scalar::zero(mode); k];
        row[z] = Scalar::one(mode);
        for (j, &i) in cell.iter().enumerate() {
            row[i] = -mu.get(j);
        }
        push(Vector::with_mode(row, mode)?);
    }
    Cone::from_hrep(k, mode, &ineqs, &[])
}

/// The fan of secondary cones of all regular triangulations.
pub fn secondary_fan(p: &PointConfiguration) -> Result<Fan> {
    let mut cones = Vec::new();
    for t in all_triangulations(p)? {
        if is_regular(p, &t)?.is_some() {
            cones.push(secondary_cone(p, &t)?);
        }
    }
    validate_fan(p.len(), &cones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Mode;

    fn segment() -> PointConfiguration {
        PointConfiguration::from_ints(&[&[0], &[1], &[2]]).unwrap()
    }

    #[test]
    fn flat_and_coplanar_lifts_are_trivial() {
        let p = segment();
        assert_eq!(regular_subdivision(&p, &Vector::from_ints(&[0, 0, 0])).unwrap(), Subdivision::trivial(&p));
        let sq = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(regular_subdivision(&sq, &Vector::from_ints(&[0, 1, 1, 2])).unwrap(), Subdivision::trivial(&sq));
        let s = regular_subdivision(&sq, &Vector::from_ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(s.cells(), &[vec![0, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn segment_secondary_cones() {
        let p = segment();
        let fine = Subdivision::new(vec![vec![0, 1], vec![1, 2]]);
        let coarse = Subdivision::new(vec![vec![0, 2]]);
        let c1 = secondary_cone(&p, &fine).unwrap();
        let c2 = secondary_cone(&p, &coarse).unwrap();
        assert!(c1.equals(&Cone::from_hrep(3, Mode::Exact, &[Vector::from_ints(&[1, -2, 1])], &[]).unwrap()));
        assert!(c2.equals(&Cone::from_hrep(3, Mode::Exact, &[Vector::from_ints(&[-1, 2, -1])], &[]).unwrap()));
        let f = secondary_fan(&p).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.maximal_cones().len(), 2);
    }

    #[test]
    fn witness_reproduces_subdivision() {
        let p = segment();
        let coarse = Subdivision::new(vec![vec![0, 2]]);
        let w = is_regular(&p, &coarse).unwrap().unwrap();
        assert_eq!(regular_subdivision(&p, &w).unwrap(), coarse);
        let w0 = is_regular(&p, &Subdivision::trivial(&p)).unwrap().unwrap();
        assert!(w0.is_zero());
    }

    fn concentric() -> PointConfiguration {
        let pts: Vec<Vec<Scalar>> = [(2, 1, 4, 1), (0, 1, 0, 1), (4, 1, 0, 1), (2, 1, 2, 1), (3, 2, 1, 1), (5, 2, 1, 1)]
            .iter()
            .map(|&(a, b, c, d)| vec![Scalar::ratio(a, b).unwrap(), Scalar::ratio(c, d).unwrap()])
            .collect();
        PointConfiguration::new(2, Mode::Exact, pts.into_iter().map(|c| Vector::new(c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn concentric_triangles() {
        let p = concentric();
        let s1 = Subdivision::new(vec![
            vec![3, 4, 5],
            vec![0, 3, 4],
            vec![0, 3, 5],
            vec![0, 1, 4],
            vec![1, 4, 5],
            vec![1, 2, 5],
            vec![0, 2, 5],
        ]);
        let s2 = Subdivision::new(vec![
            vec![3, 4, 5],
            vec![0, 3, 4],
            vec![2, 3, 5],
            vec![0, 2, 3],
            vec![0, 1, 4],
            vec![1, 4, 5],
            vec![1, 2, 5],
        ]);
        assert_eq!(regular_subdivision(&p, &Vector::from_ints(&[1, 2, 3, 0, 0, 0])).unwrap(), s1);
        let other = regular_subdivision(&p, &Vector::from_ints(&[3, 2, 1, 0, 0, 0])).unwrap();
        assert!(other.is_triangulation(&p) && other != s1 && other != s2);
        let w = is_regular(&p, &s1).unwrap().unwrap();
        assert_eq!(regular_subdivision(&p, &w).unwrap(), s1);
        assert!(validate_subdivision(&p, &s2).is_ok());
        assert_eq!(is_regular(&p, &s2).unwrap(), None);
    }
}
