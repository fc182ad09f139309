//! Polyhedral cones with dual representation, faces, lineality and separation.

pub(crate) mod dd;
mod face;

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::numeric::{Matrix, Mode, Scalar, Vector};

pub use face::Face;
pub(crate) use dd::eval_sign;

/// Inner facet normals and a basis of the orthogonal complement of the span.
#[derive(Clone, Debug)]
pub struct HRep {
    pub inequalities: Vec<Vector>,
    pub equations: Vec<Vector>,
}

/// Canonical generators: extreme rays of the pointed part (projected onto the complement of
/// the lineality space, primitive or unit, sorted) and a reduced echelon lineality basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Canonical {
    pub rays: Vec<Vector>,
    pub lineality: Vec<Vector>,
}

/// A finitely generated cone `cone{v_1, ..., v_r}` in an `n`-dimensional space.
pub struct Cone {
    dim: usize,
    mode: Mode,
    generators: Vec<Vector>,
    hrep: OnceLock<HRep>,
    canonical: OnceLock<Canonical>,
    faces: OnceLock<Vec<Face>>,
}

impl Clone for Cone {
    fn clone(&self) -> Self {
        Cone {
            dim: self.dim,
            mode: self.mode,
            generators: self.generators.clone(),
            hrep: self.hrep.clone(),
            canonical: self.canonical.clone(),
            faces: OnceLock::new(),
        }
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cone").field("dim", &self.dim).field("generators", &self.generators).finish()
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone{{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Cone {
    /// Zero generators and positive multiples of earlier generators are dropped.
    pub fn new(dim: usize, mode: Mode, generators: Vec<Vector>) -> Result<Self> {
        let mut kept: Vec<Vector> = Vec::new();
        let mut normals: Vec<Vector> = Vec::new();
        for g in generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
            }
            if g.mode() != mode {
                return Err(Error::ModeMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let p = g.primitive();
            if normals.iter().any(|q| q == &p) {
                continue;
            }
            normals.push(p);
            kept.push(g);
        }
        Ok(Cone {
            dim,
            mode,
            generators: kept,
            hrep: OnceLock::new(),
            canonical: OnceLock::new(),
            faces: OnceLock::new(),
        })
    }

    pub fn from_ints(dim: usize, generators: &[&[i64]]) -> Result<Self> {
        Self::new(dim, Mode::Exact, generators.iter().map(|g| Vector::from_ints(g)).collect())
    }

    /// The origin `{0}`.
    pub fn origin(dim: usize, mode: Mode) -> Self {
        Self::new(dim, mode, Vec::new()).expect("no generators")
    }

    /// The whole space.
    pub fn full(dim: usize, mode: Mode) -> Self {
        let mut g = Vec::new();
        for i in 0..dim {
            g.push(Vector::unit(dim, i, mode));
            g.push(Vector::unit(dim, i, mode).neg());
        }
        Self::new(dim, mode, g).expect("consistent generators")
    }

    /// `{x : <h, x> >= 0 for h in inequalities, <e, x> = 0 for e in equations}`.
    pub fn from_hrep(dim: usize, mode: Mode, inequalities: &[Vector], equations: &[Vector]) -> Result<Self> {
        let mut cons = Vec::new();
        for h in inequalities.iter().chain(equations) {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
            }
            if h.mode() != mode {
                return Err(Error::ModeMismatch);
            }
            cons.push(h.clone());
        }
        for e in equations {
            cons.push(e.neg());
        }
        let g = dd::double_description(dim, mode, &cons);
        let mut gens = g.rays;
        for l in g.lineality {
            gens.push(l.neg());
            gens.push(l);
        }
        Self::new(dim, mode, gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn to_mode(&self, mode: Mode) -> Self {
        Self::new(self.dim, mode, self.generators.iter().map(|g| g.to_mode(mode)).collect())
            .expect("same generators")
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        if self.generators.is_empty() {
            return 0;
        }
        Matrix::from_rows(&self.generators, self.dim, self.mode).expect("uniform").rank()
    }

    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| {
            let g = dd::double_description(self.dim, self.mode, &self.generators);
            HRep { inequalities: g.rays, equations: g.lineality }
        })
    }

    pub fn canonical(&self) -> &Canonical {
        self.canonical.get_or_init(|| self.compute_canonical())
    }

    fn compute_canonical(&self) -> Canonical {
        let h = self.hrep();
        let mut cons = h.inequalities.clone();
        for e in &h.equations {
            cons.push(e.clone());
            cons.push(e.neg());
        }
        let g = dd::double_description(self.dim, self.mode, &cons);
        let lineality = if g.lineality.is_empty() {
            Vec::new()
        } else {
            let r = Matrix::from_rows(&g.lineality, self.dim, self.mode).expect("uniform").rref();
            (0..r.pivots.len()).map(|i| r.matrix.row(i).primitive()).collect()
        };
        let mut rays: Vec<Vector> =
            g.rays.iter().map(|r| project_off(r, &lineality, self.mode).primitive()).collect();
        rays.sort_by(|a, b| a.cmp_lex(b));
        rays.dedup_by(|a, b| a == b);
        Canonical { rays, lineality }
    }

    /// Membership under tolerance.
    pub fn contains(&self, v: &Vector) -> bool {
        if v.dim() != self.dim {
            return false;
        }
        let v = v.to_mode(self.mode);
        let h = self.hrep();
        h.inequalities.iter().all(|f| eval_sign(f, &v) != Ordering::Less)
            && h.equations.iter().all(|e| eval_sign(e, &v) == Ordering::Equal)
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Set equality.
    pub fn equals(&self, other: &Cone) -> bool {
        self.dim == other.dim && self.contains_cone(other) && other.contains_cone(self)
    }

    /// Whether `v` lies in the relative interior.
    pub fn relint_contains(&self, v: &Vector) -> bool {
        self.contains(v) && {
            let v = v.to_mode(self.mode);
            self.hrep().inequalities.iter().all(|f| eval_sign(f, &v) == Ordering::Greater)
        }
    }

    /// A point of the relative interior: the sum of the generators.
    pub fn relint_point(&self) -> Vector {
        self.generators.iter().fold(Vector::zeros(self.dim, self.mode), |s, g| s.add(g))
    }

    /// The dual cone in `M`, generated by facet normals and a signed basis of `span^perp`.
    pub fn dual(&self) -> Cone {
        let h = self.hrep();
        let mut gens = h.inequalities.clone();
        for e in &h.equations {
            gens.push(e.clone());
            gens.push(e.neg());
        }
        Cone::new(self.dim, self.mode, gens).expect("consistent dual generators")
    }

    /// The minimal face `sigma ∩ (-sigma)`, generated by a signed basis.
    pub fn lineality(&self) -> Cone {
        let mut gens = Vec::new();
        for l in &self.canonical().lineality {
            gens.push(l.clone());
            gens.push(l.neg());
        }
        Cone::new(self.dim, self.mode, gens).expect("consistent lineality")
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.canonical().lineality.is_empty()
    }

    /// `sigma ∩ other`.
    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        let (a, b) = (self.hrep(), other.hrep());
        let ineqs: Vec<Vector> = a.inequalities.iter().chain(&b.inequalities).cloned().collect();
        let eqs: Vec<Vector> = a.equations.iter().chain(&b.equations).cloned().collect();
        Cone::from_hrep(self.dim, self.mode, &ineqs, &eqs)
    }

    /// The cone spanned by the union of generators.
    pub fn join(&self, other: &Cone) -> Result<Cone> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Cone::new(self.dim, self.mode, gens)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Result<Cone> {
        let gens = self.generators.iter().map(|g| map.mul_vec(g)).collect::<Result<Vec<_>>>()?;
        Cone::new(map.nrows(), self.mode, gens)
    }

    /// Canonical order: by dimension, then by canonical generators.
    pub fn cmp_canonical(&self, other: &Cone) -> Ordering {
        self.dimension()
            .cmp(&other.dimension())
            .then_with(|| cmp_lists(&self.canonical().lineality, &other.canonical().lineality))
            .then_with(|| cmp_lists(&self.canonical().rays, &other.canonical().rays))
    }

    /// A functional `m` in `sigma^vee ∩ (-other)^vee` with `H_m ∩ sigma = H_m ∩ other = sigma ∩ other`.
    pub fn separate(&self, other: &Cone) -> Result<Vector> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().map(Vector::neg));
        let gamma = Cone::new(self.dim, self.mode, gens)?;
        let m = gamma
            .hrep()
            .inequalities
            .iter()
            .fold(Vector::zeros(self.dim, self.mode), |s, h| s.add(h))
            .primitive();
        let common = self.intersect(other)?;
        let f1 = self.face_by_functional(&m)?;
        let f2 = other.face_by_functional(&m.neg())?;
        if f1.cone.equals(&common) && f2.cone.equals(&common) {
            Ok(m)
        } else {
            Err(Error::NotCommonFace)
        }
    }
}

fn cmp_lists(a: &[Vector], b: &[Vector]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp_lex(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`.
pub(crate) fn project_off(v: &Vector, basis: &[Vector], mode: Mode) -> Vector {
    if basis.is_empty() {
        return v.clone();
    }
    let k = basis.len();
    let gram_rows: Vec<Vector> = (0..k)
        .map(|i| Vector::with_mode((0..k).map(|j| basis[i].dot(&basis[j])).collect(), mode).expect("uniform"))
        .collect();
    let gram = Matrix::from_rows(&gram_rows, k, mode).expect("square");
    let rhs = Vector::with_mode(basis.iter().map(|b| b.dot(v)).collect(), mode).expect("uniform");
    let c = gram.solve(&rhs).expect("dimensions").expect("independent basis");
    let mut out = v.clone();
    for (b, ci) in basis.iter().zip(c.coords()) {
        out = out.axpy(&-ci, b);
    }
    out
}

/// Splits `w ∈ tau^vee` as `w = u - v` with `u ∈ sigma^vee` and `v ∈ sigma^vee ∩ tau^perp`.
pub fn decompose_in_face_dual(sigma: &Cone, tau: &Face, w: &Vector) -> Result<(Vector, Vector)> {
    if !tau.cone.dual().contains(w) {
        return Err(Error::NotInDual);
    }
    let m = &tau.functional;
    let mut r = Scalar::zero(sigma.mode);
    for g in &sigma.generators {
        let mg = m.dot(g);
        if mg.is_positive() {
            let need = &(-&w.dot(g)) / &mg;
            if need.cmp_tol(&r) == Ordering::Greater {
                r = need;
            }
        }
    }
    let v = m.scale(&r);
    Ok((w.add(&v), v))
}

/// Pulling triangulation of a strongly convex cone whose generators are its extreme rays.
/// Each simplicial cone is a list of generator indices.
pub fn pulling_triangulation(c: &Cone) -> Vec<Vec<usize>> {
    let faces = c.all_faces();
    let all: Vec<usize> = (0..c.generators.len()).collect();
    let mut out = Vec::new();
    pull(c, faces, &all, c.dimension(), &mut out);
    out
}

fn pull(c: &Cone, faces: &[Face], gens: &[usize], d: usize, out: &mut Vec<Vec<usize>>) {
    if gens.len() == d {
        out.push(gens.to_vec());
        return;
    }
    let r0 = gens[0];
    for f in faces {
        if f.dimension() + 1 != d || f.generators.contains(&r0) {
            continue;
        }
        if !f.generators.iter().all(|i| gens.contains(i)) {
            continue;
        }
        let mut sub = Vec::new();
        pull(c, faces, &f.generators, d - 1, &mut sub);
        for mut s in sub {
            s.insert(0, r0);
            out.push(s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma3() -> Cone {
        Cone::from_ints(2, &[&[2, -1], &[0, 1]]).unwrap()
    }

    #[test]
    fn dual_of_ray_has_lineality() {
        let c = Cone::from_ints(2, &[&[1, 0]]).unwrap();
        let d = c.dual();
        let expect = Cone::from_ints(2, &[&[1, 0], &[0, 1], &[0, -1]]).unwrap();
        assert!(d.equals(&expect));
    }

    #[test]
    fn dual_of_sigma3() {
        let d = sigma3().dual();
        assert!(d.equals(&Cone::from_ints(2, &[&[1, 0], &[1, 2]]).unwrap()));
        assert_eq!(d.canonical().rays, vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[1, 2])]);
    }

    #[test]
    fn dual_of_origin_is_everything() {
        let d = Cone::origin(3, Mode::Exact).dual();
        assert!(d.equals(&Cone::full(3, Mode::Exact)));
        assert_eq!(d.canonical().lineality.len(), 3);
    }

    #[test]
    fn relint() {
        let q = Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(q.relint_contains(&Vector::from_ints(&[1, 1])));
        assert!(!q.relint_contains(&Vector::from_ints(&[1, 0])));
        assert!(sigma3().relint_contains(&Vector::from_ints(&[1, 0])));
    }

    #[test]
    fn lineality_of_halfplane() {
        let c = Cone::from_ints(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(c.canonical().lineality, vec![Vector::from_ints(&[1, 0])]);
        assert!(c.lineality().equals(&Cone::from_ints(2, &[&[1, 0], &[-1, 0]]).unwrap()));
    }

    #[test]
    fn separate_adjacent_quadrants() {
        let a = Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        let b = Cone::from_ints(2, &[&[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(a.separate(&b).unwrap(), Vector::from_ints(&[1, 0]));
        assert!(a.separate(&a).unwrap().is_zero());
    }

    #[test]
    fn separate_rejects_overlap() {
        let a = Cone::from_ints(2, &[&[1, 0], &[1, 1]]).unwrap();
        let b = Cone::from_ints(2, &[&[1, 0], &[2, 1]]).unwrap();
        assert_eq!(a.separate(&b), Err(Error::NotCommonFace));
    }

    #[test]
    fn triangulate_square_cone() {
        let c = Cone::from_ints(3, &[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]).unwrap();
        let t = pulling_triangulation(&c);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn float_dual_involution() {
        let s = 2f64.sqrt();
        let c = Cone::new(2, Mode::Float, vec![Vector::from_f64s(&[1.0, 0.0]), Vector::from_f64s(&[-1.0, s])]).unwrap();
        assert!(c.dual().dual().equals(&c));
    }
}
