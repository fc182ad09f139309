use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{eval_sign, Cone};
use crate::error::{Error, Result};
use crate::numeric::{Mode, Vector};

/// A face `tau = H_m ∩ sigma` of a parent cone, recorded by an exposing functional and the
/// indices of the parent's generators that it contains.
#[derive(Clone, Debug)]
pub struct Face {
    pub functional: Vector,
    pub generators: Vec<usize>,
    pub cone: Cone,
}

impl Face {
    pub fn dimension(&self) -> usize {
        self.cone.dimension()
    }

    /// Whether the exposing functional is zero, so the face is the whole cone.
    pub fn is_whole(&self) -> bool {
        self.functional.is_zero()
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.generators.iter().all(|i| other.generators.contains(i))
    }
}

impl PartialEq for Face {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Cone {
    fn face_from_indices(&self, functional: Vector, generators: Vec<usize>) -> Face {
        let gens = generators.iter().map(|&i| self.generators()[i].clone()).collect();
        let cone = Cone::new(self.ambient_dim(), self.mode(), gens).expect("subset of generators");
        Face { functional, generators, cone }
    }

    /// The face exposed by `m`; fails unless `m ∈ sigma^vee`.
    pub fn face_by_functional(&self, m: &Vector) -> Result<Face> {
        if m.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: m.dim() });
        }
        let m = m.to_mode(self.mode());
        let mut idx = Vec::new();
        for (i, g) in self.generators().iter().enumerate() {
            match eval_sign(&m, g) {
                Ordering::Less => return Err(Error::NotInDual),
                Ordering::Equal => idx.push(i),
                Ordering::Greater => {}
            }
        }
        Ok(self.face_from_indices(m, idx))
    }

    /// Every face, from the lineality space up to the cone itself, sorted by dimension.
    pub fn all_faces(&self) -> &[Face] {
        self.faces.get_or_init(|| self.compute_faces())
    }

    fn compute_faces(&self) -> Vec<Face> {
        let facets = &self.hrep().inequalities;
        let n = self.generators().len();
        let zero: Vec<Vec<bool>> = facets
            .iter()
            .map(|f| self.generators().iter().map(|g| eval_sign(f, g) == Ordering::Equal).collect())
            .collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let all: Vec<usize> = (0..n).collect();
        seen.insert(all.clone());
        let mut queue = vec![all];
        let mut k = 0;
        while k < queue.len() {
            let cur = queue[k].clone();
            k += 1;
            for z in &zero {
                if cur.iter().all(|&i| z[i]) {
                    continue;
                }
                let next: Vec<usize> = cur.iter().copied().filter(|&i| z[i]).collect();
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut faces: Vec<Face> = queue
            .into_iter()
            .map(|idx| {
                let m = facets
                    .iter()
                    .zip(&zero)
                    .filter(|(_, z)| idx.iter().all(|&i| z[i]))
                    .fold(Vector::zeros(self.ambient_dim(), self.mode()), |s, (f, _)| s.add(f));
                let m = if self.mode() == Mode::Exact { m.primitive() } else { m };
                self.face_from_indices(m, idx)
            })
            .collect();
        faces.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| a.generators.cmp(&b.generators)));
        faces
    }

    /// `tau^* = sigma^vee ∩ tau^perp`, as a face of [`Cone::dual`].
    pub fn dual_face(&self, face: &Face) -> Result<Face> {
        if !face.generators.iter().all(|&i| i < self.generators().len()) {
            return Err(Error::NotAFace);
        }
        let exposed = self.face_by_functional(&face.functional)?;
        if exposed.generators != face.generators {
            return Err(Error::NotAFace);
        }
        let v = face.cone.relint_point();
        self.dual().face_by_functional(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_of_sigma3() {
        let c = Cone::from_ints(2, &[&[2, -1], &[0, 1]]).unwrap();
        let f = c.all_faces();
        assert_eq!(f.len(), 4);
        let t1 = c.face_by_functional(&Vector::from_ints(&[1, 0])).unwrap();
        assert!(t1.cone.equals(&Cone::from_ints(2, &[&[0, 1]]).unwrap()));
        let t2 = c.face_by_functional(&Vector::from_ints(&[1, 2])).unwrap();
        assert!(t2.cone.equals(&Cone::from_ints(2, &[&[2, -1]]).unwrap()));
        assert!(c.face_by_functional(&Vector::from_ints(&[0, 0])).unwrap().cone.equals(&c));
        assert_eq!(c.face_by_functional(&Vector::from_ints(&[0, 1])).unwrap_err(), Error::NotInDual);
    }

    #[test]
    fn exposing_functionals_expose() {
        let c = Cone::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(c.all_faces().len(), 8);
        for f in c.all_faces() {
            assert_eq!(c.face_by_functional(&f.functional).unwrap().generators, f.generators);
        }
    }

    #[test]
    fn dual_face_of_ray() {
        let c = Cone::from_ints(2, &[&[2, -1], &[0, 1]]).unwrap();
        let tau = c.face_by_functional(&Vector::from_ints(&[1, 0])).unwrap();
        let d = c.dual_face(&tau).unwrap();
        assert!(d.cone.equals(&Cone::from_ints(2, &[&[1, 0]]).unwrap()));
    }
}
