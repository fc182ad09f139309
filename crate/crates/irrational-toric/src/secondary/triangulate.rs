use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{cell_cone, hom_points, is_regular, meet_properly, simplex_volume, Subdivision};
use crate::cone::{eval_sign, Cone};
use crate::error::{Error, Result};
use crate::fan::PointConfiguration;
use crate::numeric::{Matrix, Mode, Scalar, Vector};

pub const DEFAULT_SIZE_BOUND: usize = 9;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

struct Walker<'a> {
    p: &'a PointConfiguration,
    hom: Vec<Vector>,
    simplices: Vec<Vec<usize>>,
    boundary: Vec<Vector>,
    span_perp: Vec<Vector>,
    compatible: HashMap<(usize, usize), bool>,
    found: BTreeSet<Subdivision>,
}

impl Walker<'_> {
    /// A functional vanishing on the ridge within the span of the configuration.
    fn ridge_normal(&self, ridge: &[usize]) -> Vector {
        let mut rows: Vec<Vector> = ridge.iter().map(|&i| self.hom[i].clone()).collect();
        rows.extend(self.span_perp.iter().cloned());
        let m = Matrix::from_rows(&rows, self.p.dim() + 1, self.p.mode()).expect("rows");
        m.kernel_basis().into_iter().next().expect("ridge spans a hyperplane")
    }

    fn on_boundary(&self, ridge: &[usize]) -> bool {
        self.boundary.iter().any(|h| ridge.iter().all(|&i| eval_sign(h, &self.hom[i]) == Ordering::Equal))
    }

    fn compatible(&mut self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        if let Some(&c) = self.compatible.get(&key) {
            return c;
        }
        let c = meet_properly(self.p, &self.simplices[a], &self.simplices[b]);
        self.compatible.insert(key, c);
        c
    }

    fn extend(&mut self, chosen: &mut Vec<usize>) {
        // every ridge seen once is free; the first free interior ridge must be crossed
        let mut count: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
        for &s in chosen.iter() {
            let simplex = &self.simplices[s];
            for (k, &opp) in simplex.iter().enumerate() {
                let mut ridge = simplex.clone();
                ridge.remove(k);
                count.entry(ridge).and_modify(|e| e.0 += 1).or_insert((1, opp));
            }
        }
        let free = count.into_iter().find(|(r, (c, _))| *c == 1 && !self.on_boundary(r));
        let Some((ridge, (_, opp))) = free else {
            let cells = chosen.iter().map(|&s| self.simplices[s].clone()).collect();
            self.found.insert(Subdivision::new(cells));
            return;
        };
        let h = self.ridge_normal(&ridge);
        let side = eval_sign(&h, &self.hom[opp]);
        for cand in 0..self.simplices.len() {
            let s = &self.simplices[cand];
            if !ridge.iter().all(|i| s.contains(i)) {
                continue;
            }
            let apex = *s.iter().find(|i| !ridge.contains(i)).expect("one extra vertex");
            if eval_sign(&h, &self.hom[apex]) != side.reverse() {
                continue;
            }
            if chosen.iter().all(|&c| self.compatible(c, cand)) {
                chosen.push(cand);
                self.extend(chosen);
                chosen.pop();
            }
        }
    }
}

/// A point of `cone(Â)` off every hyperplane spanned by points of `A`.
fn generic_point(p: &PointConfiguration, hom: &[Vector], normals: &[Vector]) -> Vector {
    let mode = p.mode();
    for shift in 1i64.. {
        let mut g = Vector::zeros(p.dim() + 1, mode);
        for (i, a) in hom.iter().enumerate() {
            let w = Scalar::ratio(shift * 1000 + (i as i64 + 1) * (i as i64 + 3), 997 * shift).expect("nonzero");
            g = g.axpy(&w.to_mode(mode), a);
        }
        if normals.iter().all(|h| eval_sign(h, &g) != Ordering::Equal) {
            return g;
        }
    }
    unreachable!()
}

/// Every triangulation of `A`, with at most `bound` points.
pub fn all_triangulations_bounded(p: &PointConfiguration, bound: usize) -> Result<Vec<Subdivision>> {
    if p.len() > bound {
        return Err(Error::SizeBound(p.len(), bound));
    }
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let r = p.affine_rank();
    let all: Vec<usize> = (0..p.len()).collect();
    let hom = hom_points(p, &all);
    let whole = cell_cone(p, &all);
    let simplices: Vec<Vec<usize>> =
        subsets(p.len(), r).into_iter().filter(|s| cell_cone(p, s).dimension() == r).collect();
    let mut w = Walker {
        p,
        hom: hom.clone(),
        simplices,
        boundary: whole.hrep().inequalities.clone(),
        span_perp: whole.hrep().equations.clone(),
        compatible: HashMap::new(),
        found: BTreeSet::new(),
    };
    let normals: Vec<Vector> = subsets(p.len(), r - 1)
        .into_iter()
        .filter(|q| cell_cone(p, q).dimension() + 1 == r)
        .map(|q| w.ridge_normal(&q))
        .collect();
    let g = generic_point(p, &hom, &normals);
    for s in 0..w.simplices.len() {
        if cell_cone(p, &w.simplices[s]).contains(&g) {
            w.extend(&mut vec![s]);
        }
    }
    Ok(w.found.into_iter().collect())
}

/// Every triangulation of `A` (at most [`DEFAULT_SIZE_BOUND`] points).
pub fn all_triangulations(p: &PointConfiguration) -> Result<Vec<Subdivision>> {
    all_triangulations_bounded(p, DEFAULT_SIZE_BOUND)
}

/// `phi_T(w)`: the summed volume of the simplices of `T` having `w` as a vertex.
pub fn characteristic_vector(p: &PointConfiguration, t: &Subdivision) -> Result<Vector> {
    if !t.is_triangulation(p) {
        return Err(Error::NotSimplex);
    }
    let vols: Vec<Scalar> = t.cells().iter().map(|c| simplex_volume(p, c)).collect::<Result<_>>()?;
    let mode = if vols.iter().all(|v| v.mode() == p.mode()) { p.mode() } else { Mode::Float };
    let mut phi = vec![Scalar::zero(mode); p.len()];
    for (c, v) in t.cells().iter().zip(&vols) {
        for &i in c {
            phi[i] = &phi[i] + &v.to_mode(mode);
        }
    }
    Vector::with_mode(phi, mode)
}

/// Characteristic vectors of all triangulations, with the hull vertices marked.
#[derive(Clone, Debug)]
pub struct SecondaryPolytope {
    pub triangulations: Vec<Subdivision>,
    pub vectors: Vec<Vector>,
    /// Indices into `triangulations` whose vectors are the distinct vertices of the hull.
    pub vertices: Vec<usize>,
    /// A lifting inducing each vertex triangulation.
    pub witnesses: Vec<Vector>,
}

impl SecondaryPolytope {
    pub fn vertex_vectors(&self) -> Vec<Vector> {
        self.vertices.iter().map(|&i| self.vectors[i].clone()).collect()
    }

    /// Dimension of the hull.
    pub fn dimension(&self) -> usize {
        let Some(first) = self.vectors.first() else { return 0 };
        let diffs: Vec<Vector> = self.vectors.iter().map(|v| v.sub(first)).collect();
        Matrix::from_rows(&diffs, first.dim(), first.mode()).map(|m| m.rank()).unwrap_or(0)
    }

    /// Indices of triangulations refining `s`.
    pub fn refining(&self, s: &Subdivision) -> Vec<usize> {
        (0..self.triangulations.len()).filter(|&i| s.is_refined_by(&self.triangulations[i])).collect()
    }
}

pub fn secondary_polytope(p: &PointConfiguration) -> Result<SecondaryPolytope> {
    let triangulations = all_triangulations(p)?;
    let vectors: Vec<Vector> = triangulations.iter().map(|t| characteristic_vector(p, t)).collect::<Result<_>>()?;
    let mut distinct: Vec<usize> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if !distinct.iter().any(|&j| &vectors[j] == v) {
            distinct.push(i);
        }
    }
    let vertices = match vectors.first() {
        None => Vec::new(),
        Some(first) => {
            let mode = first.mode();
            let one = Vector::with_mode(vec![Scalar::one(mode)], mode)?;
            let lifted: Vec<Vector> = distinct.iter().map(|&i| vectors[i].concat(&one)).collect();
            let c = Cone::new(first.dim() + 1, mode, lifted)?;
            let mut v: Vec<usize> = c
                .all_faces()
                .iter()
                .filter(|f| f.dimension() == 1)
                .map(|f| distinct[f.generators[0]])
                .collect();
            v.sort_unstable();
            v
        }
    };
    let mut witnesses = Vec::with_capacity(vertices.len());
    for &i in &vertices {
        witnesses.push(is_regular(p, &triangulations[i])?.ok_or(Error::NotRegular)?);
    }
    Ok(SecondaryPolytope { triangulations, vectors, vertices, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(t: &Subdivision) -> Vec<Vec<usize>> {
        t.cells().to_vec()
    }

    #[test]
    fn segment_with_middle_point() {
        let p = PointConfiguration::from_ints(&[&[0], &[1], &[2]]).unwrap();
        let ts = all_triangulations(&p).unwrap();
        assert_eq!(ts.len(), 2);
        assert!(ts.iter().any(|t| cells(t) == vec![vec![0, 1], vec![1, 2]]));
        assert!(ts.iter().any(|t| cells(t) == vec![vec![0, 2]]));
        let phi: Vec<Vector> = ts.iter().map(|t| characteristic_vector(&p, t).unwrap()).collect();
        assert!(phi.contains(&Vector::from_ints(&[1, 2, 1])));
        assert!(phi.contains(&Vector::from_ints(&[2, 0, 2])));
    }

    #[test]
    fn square_and_triangle() {
        let sq = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(all_triangulations(&sq).unwrap().len(), 2);
        let tri = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let ts = all_triangulations(&tri).unwrap();
        assert_eq!(ts.len(), 1);
        let sp = secondary_polytope(&tri).unwrap();
        assert_eq!(sp.vertices.len(), 1);
        assert_eq!(sp.dimension(), 0);
    }

    #[test]
    fn pentagon_has_five() {
        let p = PointConfiguration::from_ints(&[&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 2]]).unwrap();
        assert_eq!(all_triangulations(&p).unwrap().len(), 5);
    }

    #[test]
    fn size_bound() {
        let pts: Vec<Vec<i64>> = (0..10).map(|i| vec![i]).collect();
        let refs: Vec<&[i64]> = pts.iter().map(|v| v.as_slice()).collect();
        let p = PointConfiguration::from_ints(&refs).unwrap();
        assert_eq!(all_triangulations(&p).unwrap_err(), Error::SizeBound(10, 9));
    }
}
