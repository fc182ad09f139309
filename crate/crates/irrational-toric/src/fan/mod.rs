//! Fans: validation, products, stars, completeness, normal fans and maps of fans.

mod config;
mod map;
mod normal;

use std::collections::VecDeque;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::numeric::{Matrix, Mode, Scalar, Vector};

pub use config::PointConfiguration;
pub use map::{validate_fan_map, FanMap};
pub use normal::normal_fan;

/// A face-closed collection of cones meeting pairwise in common faces.
#[derive(Clone, Debug)]
pub struct Fan {
    dim: usize,
    mode: Mode,
    cones: Vec<Cone>,
    incidence: Vec<(usize, usize)>,
    labels: Option<Vec<Vec<usize>>>,
}

/// A star `star(sigma)` with the quotient map `N -> N / span(sigma)` that produced it.
#[derive(Clone, Debug)]
pub struct Star {
    pub fan: Fan,
    pub quotient: Matrix,
    /// Coordinates of `N` kept as a basis of the quotient.
    pub complement: Vec<usize>,
}

/// Checks the fan axioms on `cones` and closes the collection under faces.
/// The error names the first pair of input indices whose intersection is not a common face.
pub fn validate_fan(dim: usize, cones: &[Cone]) -> Result<Fan> {
    let mode = cones.first().map_or(Mode::Exact, Cone::mode);
    for c in cones {
        if c.ambient_dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: c.ambient_dim() });
        }
        if c.mode() != mode {
            return Err(Error::ModeMismatch);
        }
    }
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            if cones[i].separate(&cones[j]).is_err() {
                return Err(Error::FanViolation(i, j));
            }
        }
    }
    let mut all: Vec<Cone> = Vec::new();
    for c in cones {
        for f in c.all_faces() {
            if !all.iter().any(|x| x.equals(&f.cone)) {
                all.push(f.cone.clone());
            }
        }
    }
    if all.is_empty() {
        all.push(Cone::origin(dim, mode));
    }
    Ok(Fan::assemble(dim, mode, all))
}

impl Fan {
    fn assemble(dim: usize, mode: Mode, mut cones: Vec<Cone>) -> Fan {
        cones.sort_by(|a, b| a.cmp_canonical(b));
        let mut incidence = Vec::new();
        for i in 0..cones.len() {
            for j in 0..cones.len() {
                if i != j && cones[i].dimension() < cones[j].dimension() && cones[j].contains_cone(&cones[i]) {
                    incidence.push((i, j));
                }
            }
        }
        Fan { dim, mode, cones, incidence, labels: None }
    }

    /// The fan consisting of the origin alone.
    pub fn origin(dim: usize, mode: Mode) -> Fan {
        Fan::assemble(dim, mode, vec![Cone::origin(dim, mode)])
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, i: usize) -> Result<&Cone> {
        self.cones.get(i).ok_or(Error::IndexOutOfRange(i))
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Pairs `(i, j)` with cone `i` a proper face of cone `j`.
    pub fn incidence(&self) -> &[(usize, usize)] {
        &self.incidence
    }

    pub fn labels(&self) -> Option<&[Vec<usize>]> {
        self.labels.as_deref()
    }

    pub(crate) fn with_labels(mut self, labels: Vec<Vec<usize>>) -> Fan {
        self.labels = Some(labels);
        self
    }

    /// Whether cone `i` is a face of cone `j` (including `i == j`).
    pub fn is_face(&self, i: usize, j: usize) -> bool {
        i == j || self.incidence.contains(&(i, j))
    }

    /// The common minimal face.
    pub fn lineality(&self) -> &Cone {
        &self.cones[0]
    }

    pub fn maximal_cones(&self) -> Vec<usize> {
        (0..self.cones.len()).filter(|&i| !self.incidence.iter().any(|&(a, _)| a == i)).collect()
    }

    /// Index of the cone equal to `c` as a set.
    pub fn index_of(&self, c: &Cone) -> Option<usize> {
        self.cones.iter().position(|x| x.equals(c))
    }

    /// The smallest cone containing `v` (the one with `v` in its relative interior).
    pub fn cone_containing(&self, v: &Vector) -> Option<usize> {
        (0..self.cones.len()).find(|&i| self.cones[i].contains(v))
    }

    /// Whether the union of the cones is the whole space.
    pub fn is_complete(&self) -> bool {
        let n = self.dim;
        if n == 0 {
            return true;
        }
        let top: Vec<usize> = (0..self.cones.len()).filter(|&i| self.cones[i].dimension() == n).collect();
        if top.is_empty() {
            return false;
        }
        let walls: Vec<usize> = (0..self.cones.len()).filter(|&i| self.cones[i].dimension() + 1 == n).collect();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); top.len()];
        for &w in &walls {
            let owners: Vec<usize> = (0..top.len()).filter(|&k| self.is_face(w, top[k])).collect();
            if owners.len() != 2 {
                return false;
            }
            adj[owners[0]].push(owners[1]);
            adj[owners[1]].push(owners[0]);
        }
        let mut seen = vec![false; top.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(k) = queue.pop_front() {
            for &l in &adj[k] {
                if !seen[l] {
                    seen[l] = true;
                    queue.push_back(l);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// The fan of images of the cones containing cone `i` in `N / span(cone_i)`.
    pub fn star(&self, i: usize) -> Result<Star> {
        let sigma = self.cone(i)?;
        let n = self.dim;
        let (pivots, rows) = if sigma.generators().is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let r = Matrix::from_rows(sigma.generators(), n, self.mode)?.rref();
            let rows: Vec<Vector> = (0..r.pivots.len()).map(|k| r.matrix.row(k)).collect();
            (r.pivots, rows)
        };
        let complement: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let qrows: Vec<Vector> = complement
            .iter()
            .map(|&f| {
                let coords = (0..n)
                    .map(|j| {
                        let mut x = if j == f { Scalar::one(self.mode) } else { Scalar::zero(self.mode) };
                        if let Some(r) = pivots.iter().position(|&p| p == j) {
                            x = &x - rows[r].get(f);
                        }
                        x
                    })
                    .collect();
                Vector::with_mode(coords, self.mode).expect("uniform")
            })
            .collect();
        let quotient = Matrix::from_rows(&qrows, n, self.mode)?;
        let k = complement.len();
        let mut images = Vec::new();
        for j in 0..self.cones.len() {
            if self.is_face(i, j) && self.maximal_cones().contains(&j) {
                let gens = self.cones[j]
                    .generators()
                    .iter()
                    .map(|g| {
                        let v = quotient.mul_vec(g)?;
                        Ok(if k == 0 { Vector::with_mode(Vec::new(), self.mode)? } else { v })
                    })
                    .collect::<Result<Vec<_>>>()?;
                images.push(Cone::new(k, self.mode, gens)?);
            }
        }
        let fan = if k == 0 { Fan::origin(0, self.mode) } else { validate_fan(k, &images)? };
        Ok(Star { fan, quotient, complement })
    }

    /// All products `sigma x sigma'` in `N ⊕ N'`.
    pub fn product(&self, other: &Fan) -> Result<Fan> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        let (n1, n2) = (self.dim, other.dim);
        let embed = |v: &Vector, first: bool| -> Vector {
            let z1 = Vector::with_mode(vec![Scalar::zero(self.mode); n1], self.mode).expect("uniform");
            let z2 = Vector::with_mode(vec![Scalar::zero(self.mode); n2], self.mode).expect("uniform");
            if first {
                v.concat(&z2)
            } else {
                z1.concat(v)
            }
        };
        let mut prods = Vec::new();
        for &i in &self.maximal_cones() {
            for &j in &other.maximal_cones() {
                let mut gens: Vec<Vector> = self.cones[i].generators().iter().map(|g| embed(g, true)).collect();
                gens.extend(other.cones[j].generators().iter().map(|g| embed(g, false)));
                prods.push(Cone::new(n1 + n2, self.mode, gens)?);
            }
        }
        validate_fan(n1 + n2, &prods)
    }

    pub fn to_mode(&self, mode: Mode) -> Fan {
        let mut f = Fan::assemble(self.dim, mode, self.cones.iter().map(|c| c.to_mode(mode)).collect());
        f.labels = self.labels.clone();
        f
    }
}

/// The product of two fans.
pub fn product_fan(f1: &Fan, f2: &Fan) -> Result<Fan> {
    f1.product(f2)
}
