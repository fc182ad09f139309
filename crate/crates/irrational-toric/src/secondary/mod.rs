//! Subdivisions and triangulations of point configurations, regular subdivisions,
//! characteristic vectors, the secondary polytope and the secondary fan.

mod regular;
mod triangulate;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cone::{pulling_triangulation, Cone};
use crate::error::{Error, Result};
use crate::fan::PointConfiguration;
use crate::numeric::{Matrix, Scalar, Vector};

pub use regular::{is_regular, regular_subdivision, secondary_cone, secondary_fan};
pub use triangulate::{
    all_triangulations, all_triangulations_bounded, characteristic_vector, secondary_polytope, SecondaryPolytope,
    DEFAULT_SIZE_BOUND,
};

/// A subdivision, recorded by its maximal cells as sorted point-index sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subdivision {
    cells: Vec<Vec<usize>>,
}

impl Subdivision {
    pub fn new(cells: Vec<Vec<usize>>) -> Self {
        let set: BTreeSet<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        Subdivision { cells: set.into_iter().collect() }
    }

    /// The subdivision with the single cell `A`.
    pub fn trivial(p: &PointConfiguration) -> Self {
        Subdivision { cells: vec![(0..p.len()).collect()] }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Points appearing in some cell.
    pub fn used_points(&self) -> Vec<usize> {
        self.cells.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// Whether every one of the `n` points belongs to some cell.
    pub fn absorbs_all_points(&self, n: usize) -> bool {
        self.used_points().len() == n
    }

    /// Whether every cell is a simplex of full dimension.
    pub fn is_triangulation(&self, p: &PointConfiguration) -> bool {
        let r = p.affine_rank();
        self.cells.iter().all(|c| c.len() == r)
    }

    /// `self ≺ other`: every cell of `other` lies in some cell of `self`.
    pub fn is_refined_by(&self, other: &Subdivision) -> bool {
        other.cells.iter().all(|g| self.cells.iter().any(|f| g.iter().all(|i| f.contains(i))))
    }
}

pub fn hom_points(p: &PointConfiguration, idx: &[usize]) -> Vec<Vector> {
    let h = p.homogenized();
    idx.iter().map(|&i| h.points()[i].clone()).collect()
}

pub fn cell_cone(p: &PointConfiguration, idx: &[usize]) -> Cone {
    Cone::new(p.dim() + 1, p.mode(), hom_points(p, idx)).expect("homogenized points")
}

fn factorial(d: usize) -> BigInt {
    (1..=d).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

fn exact_sqrt(q: &BigRational) -> Option<BigRational> {
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Euclidean volume of a simplex inside its affine hull.
pub fn simplex_volume(p: &PointConfiguration, simplex: &[usize]) -> Result<Scalar> {
    let mode = p.mode();
    let d = simplex.len().saturating_sub(1);
    if simplex.is_empty() {
        return Err(Error::NotSimplex);
    }
    let pts: Vec<&Vector> = simplex.iter().map(|&i| &p.points()[i]).collect();
    let fact = Scalar::exact(BigRational::from_integer(factorial(d))).to_mode(mode);
    if d == p.dim() {
        let det = Matrix::from_rows(&hom_points(p, simplex), d + 1, mode)?.determinant()?;
        if det.is_zero() {
            return Err(Error::NotSimplex);
        }
        return Ok(det.abs().checked_div(&fact)?);
    }
    let edges: Vec<Vector> = pts[1..].iter().map(|v| v.sub(pts[0])).collect();
    let gram: Vec<Vector> = edges
        .iter()
        .map(|e| Vector::with_mode(edges.iter().map(|f| e.dot(f)).collect(), mode).expect("uniform"))
        .collect();
    let g = Matrix::from_rows(&gram, d, mode)?.determinant()?;
    if g.is_zero() || g.is_negative() {
        return Err(Error::NotSimplex);
    }
    let root = match g.as_rational().and_then(exact_sqrt) {
        Some(r) => Scalar::exact(r).to_mode(mode),
        None => Scalar::float(g.to_f64().sqrt()),
    };
    Ok(root.checked_div(&fact.to_mode(root.mode()))?)
}

/// Volume of `conv` of the given points inside the affine hull of the whole configuration.
pub fn cell_volume(p: &PointConfiguration, idx: &[usize]) -> Result<Scalar> {
    let c = cell_cone(p, idx);
    let rays: Vec<usize> = c.all_faces().iter().filter(|f| f.dimension() == 1).map(|f| f.generators[0]).collect();
    let verts = Cone::new(c.ambient_dim(), c.mode(), rays.iter().map(|&i| c.generators()[i].clone()).collect())?;
    let kept: Vec<usize> = rays.iter().map(|&i| idx[i]).collect();
    let mut total: Option<Scalar> = None;
    for s in pulling_triangulation(&verts) {
        let simplex: Vec<usize> = s.iter().map(|&k| kept[k]).collect();
        let v = simplex_volume(p, &simplex)?;
        total = Some(match total {
            None => v,
            Some(t) if t.mode() == v.mode() => &t + &v,
            Some(t) => Scalar::float(t.to_f64() + v.to_f64()),
        });
    }
    total.ok_or(Error::NotSimplex)
}

fn volumes_agree(a: &Scalar, b: &Scalar) -> bool {
    if a.mode() == b.mode() {
        a.eq_tol(b)
    } else {
        (a.to_f64() - b.to_f64()).abs() <= 1e-9 * a.to_f64().abs().max(1.0)
    }
}

/// Whether `conv(F) ∩ conv(G) = conv(F ∩ G)` is a common face of both cells.
pub(crate) fn meet_properly(p: &PointConfiguration, f: &[usize], g: &[usize]) -> bool {
    let (cf, cg) = (cell_cone(p, f), cell_cone(p, g));
    if cf.separate(&cg).is_err() {
        return false;
    }
    let common: Vec<usize> = f.iter().filter(|i| g.contains(i)).copied().collect();
    match cf.intersect(&cg) {
        Ok(c) => c.equals(&cell_cone(p, &common)),
        Err(_) => false,
    }
}

/// Checks cell dimensions, pairwise intersections and that the cells cover `conv(A)`.
pub fn validate_subdivision(p: &PointConfiguration, s: &Subdivision) -> Result<()> {
    let r = p.affine_rank();
    if s.cells.is_empty() {
        return Err(Error::InvalidSubdivision("no cells".into()));
    }
    for c in &s.cells {
        if let Some(&i) = c.iter().find(|&&i| i >= p.len()) {
            return Err(Error::IndexOutOfRange(i));
        }
        if cell_cone(p, c).dimension() != r {
            return Err(Error::InvalidSubdivision(format!("cell {c:?} is not full-dimensional")));
        }
    }
    for (i, f) in s.cells.iter().enumerate() {
        for g in &s.cells[i + 1..] {
            if !meet_properly(p, f, g) {
                return Err(Error::InvalidSubdivision(format!("cells {f:?} and {g:?} overlap improperly")));
            }
        }
    }
    let total = cell_volume(p, &(0..p.len()).collect::<Vec<_>>())?;
    let mut sum = 0.0;
    let mut exact: Option<Scalar> = Some(Scalar::zero(total.mode()));
    for c in &s.cells {
        let v = cell_volume(p, c)?;
        sum += v.to_f64();
        exact = match exact {
            Some(e) if e.mode() == v.mode() => Some(&e + &v),
            _ => None,
        };
    }
    let covered = match exact {
        Some(e) => volumes_agree(&e, &total),
        None => (sum - total.to_f64()).abs() <= 1e-9 * total.to_f64().abs().max(1.0),
    };
    if !covered {
        return Err(Error::InvalidSubdivision("cells do not cover the convex hull".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn volumes() {
        let sq = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(cell_volume(&sq, &[0, 1, 2, 3]).unwrap(), Scalar::from_int(1, crate::Mode::Exact));
        assert_eq!(simplex_volume(&sq, &[0, 1, 3]).unwrap(), Scalar::ratio(1, 2).unwrap());
        let line = PointConfiguration::from_ints(&[&[0, 1], &[1, 1], &[2, 1]]).unwrap();
        assert_eq!(simplex_volume(&line, &[0, 2]).unwrap(), Scalar::from_int(2, crate::Mode::Exact));
        let diag = PointConfiguration::from_ints(&[&[0, 0], &[1, 1]]).unwrap();
        assert!((simplex_volume(&diag, &[0, 1]).unwrap().to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn validation() {
        let sq = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(validate_subdivision(&sq, &Subdivision::new(vec![vec![0, 1, 3], vec![0, 2, 3]])).is_ok());
        assert!(validate_subdivision(&sq, &Subdivision::trivial(&sq)).is_ok());
        let crossing = Subdivision::new(vec![vec![0, 1, 3], vec![0, 1, 2]]);
        assert!(matches!(validate_subdivision(&sq, &crossing), Err(Error::InvalidSubdivision(_))));
        let partial = Subdivision::new(vec![vec![0, 1, 3]]);
        assert!(matches!(validate_subdivision(&sq, &partial), Err(Error::InvalidSubdivision(_))));
    }

    #[test]
    fn refinement() {
        let t = Subdivision::new(vec![vec![0, 1], vec![1, 2]]);
        let s = Subdivision::new(vec![vec![0, 1, 2]]);
        assert!(s.is_refined_by(&t));
        assert!(!t.is_refined_by(&s));
    }
}
