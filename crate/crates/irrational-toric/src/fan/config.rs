use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::numeric::{Matrix, Mode, Scalar, Vector};

/// A finite labelled set `A` of distinct points in `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration {
    dim: usize,
    mode: Mode,
    points: Vec<Vector>,
    affine: bool,
}

impl PointConfiguration {
    pub fn new(dim: usize, mode: Mode, points: Vec<Vector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Invalid("empty point configuration".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
            if p.mode() != mode {
                return Err(Error::ModeMismatch);
            }
            if points[..i].iter().any(|q| q == p) {
                return Err(Error::Invalid(format!("duplicate point {i}")));
            }
        }
        let affine = if dim == 0 {
            false
        } else {
            let m = Matrix::from_rows(&points, dim, mode)?;
            let ext: Vec<Vector> = points.iter().map(|p| p.concat(&Vector::with_mode(vec![Scalar::one(mode)], mode).expect("one"))).collect();
            m.rank() == Matrix::from_rows(&ext, dim + 1, mode)?.rank()
        };
        Ok(PointConfiguration { dim, mode, points, affine })
    }

    pub fn from_ints(points: &[&[i64]]) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        Self::new(dim, Mode::Exact, points.iter().map(|p| Vector::from_ints(p)).collect())
    }

    pub fn from_f64s(points: &[&[f64]]) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        Self::new(dim, Mode::Float, points.iter().map(|p| Vector::from_f64s(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether all points lie on an affine hyperplane missing the origin.
    pub fn is_affine(&self) -> bool {
        self.affine
    }

    /// Points `(a, 1)`.
    pub fn homogenized(&self) -> PointConfiguration {
        let one = Vector::with_mode(vec![Scalar::one(self.mode)], self.mode).expect("one");
        Self::new(self.dim + 1, self.mode, self.points.iter().map(|p| p.concat(&one)).collect())
            .expect("distinct points stay distinct")
    }

    /// Sub-configuration on the given indices.
    pub fn subset(&self, idx: &[usize]) -> Result<PointConfiguration> {
        let pts = idx
            .iter()
            .map(|&i| self.points.get(i).cloned().ok_or(Error::IndexOutOfRange(i)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, self.mode, pts)
    }

    /// `cone(A)`.
    pub fn cone(&self) -> Cone {
        Cone::new(self.dim, self.mode, self.points.clone()).expect("consistent points")
    }

    /// Matrix with the points as columns.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_columns(&self.points, self.dim, self.mode).expect("consistent points")
    }

    pub fn to_mode(&self, mode: Mode) -> PointConfiguration {
        Self::new(self.dim, mode, self.points.iter().map(|p| p.to_mode(mode)).collect()).expect("same points")
    }

    /// Rank of the affine span plus one.
    pub fn affine_rank(&self) -> usize {
        Matrix::from_rows(&self.homogenized().points, self.dim + 1, self.mode).expect("rows").rank()
    }
}
