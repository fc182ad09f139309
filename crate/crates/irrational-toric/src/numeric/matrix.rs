use super::scalar::{tolerance, Mode, Scalar};
use super::vector::Vector;
use crate::error::{Error, Result};

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
    mode: Mode,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize, mode: Mode) -> Self {
        Matrix { rows: vec![vec![Scalar::zero(mode); ncols]; nrows], ncols, mode }
    }

    pub fn identity(n: usize, mode: Mode) -> Self {
        let mut m = Self::zeros(n, n, mode);
        for i in 0..n {
            m.rows[i][i] = Scalar::one(mode);
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_rows(rows: &[Vector], ncols: usize, mode: Mode) -> Result<Self> {
        for r in rows {
            if r.dim() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, found: r.dim() });
            }
            if r.mode() != mode {
                return Err(Error::ModeMismatch);
            }
        }
        Ok(Matrix { rows: rows.iter().map(|r| r.coords().to_vec()).collect(), ncols, mode })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector], nrows: usize, mode: Mode) -> Result<Self> {
        Ok(Self::from_rows(cols, nrows, mode)?.transpose())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_ints(r)).collect();
        Self::from_rows(&vs, ncols, Mode::Exact).expect("rectangular integer rows")
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::with_mode(self.rows[i].clone(), self.mode).expect("uniform mode")
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::with_mode(self.rows.iter().map(|r| r[j].clone()).collect(), self.mode)
            .expect("uniform mode")
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.nrows()).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows(), self.mode);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.ncols {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: v.dim() });
        }
        if v.mode() != self.mode {
            return Err(Error::ModeMismatch);
        }
        let out = self
            .rows
            .iter()
            .map(|r| Vector::with_mode(r.clone(), self.mode).expect("uniform mode").dot(v))
            .collect();
        Vector::with_mode(out, self.mode)
    }

    pub fn to_mode(&self, mode: Mode) -> Self {
        Matrix {
            rows: self.rows.iter().map(|r| r.iter().map(|x| x.to_mode(mode)).collect()).collect(),
            ncols: self.ncols,
            mode,
        }
    }

    /// Gauss-Jordan elimination; float mode uses partial pivoting and the global tolerance
    /// scaled by the largest entry.
    pub fn rref(&self) -> Rref {
        let mut a = self.rows.clone();
        let (m, n) = (self.nrows(), self.ncols);
        let scale = match self.mode {
            Mode::Exact => 1.0,
            Mode::Float => a.iter().flatten().fold(1.0f64, |s, x| s.max(x.to_f64().abs())),
        };
        let negligible = |x: &Scalar| match x {
            Scalar::Exact(_) => x.is_zero(),
            Scalar::Float(f) => f.abs() <= tolerance() * scale,
        };
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let pick = match self.mode {
                Mode::Exact => (r..m).find(|&i| !a[i][c].is_zero()),
                Mode::Float => (r..m)
                    .filter(|&i| !negligible(&a[i][c]))
                    .max_by(|&i, &j| a[i][c].to_f64().abs().total_cmp(&a[j][c].to_f64().abs())),
            };
            let Some(p) = pick else {
                if self.mode == Mode::Float {
                    for row in a.iter_mut().skip(r) {
                        row[c] = Scalar::zero(self.mode);
                    }
                }
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip().expect("nonzero pivot");
            for x in a[r].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() && self.mode == Mode::Exact {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
                if self.mode == Mode::Float {
                    row[c] = Scalar::zero(self.mode);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: Matrix { rows: a, ncols: n, mode: self.mode }, pivots }
    }

    /// Determinant of a square matrix by elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(Error::DimensionMismatch { expected: n, found: self.ncols });
        }
        let mut a = self.rows.clone();
        let mut det = Scalar::one(self.mode);
        for c in 0..n {
            let pick = (c..n)
                .filter(|&i| !a[i][c].is_zero())
                .max_by(|&i, &j| a[i][c].to_f64().abs().total_cmp(&a[j][c].to_f64().abs()));
            let Some(p) = pick else { return Ok(Scalar::zero(self.mode)) };
            if p != c {
                a.swap(p, c);
                det = -&det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].recip()?;
            for i in c + 1..n {
                let f = &a[i][c] * &inv;
                if f.is_zero() {
                    continue;
                }
                for k in c..n {
                    let d = &f * &a[c][k];
                    a[i][k] = &a[i][k] - &d;
                }
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space. Exact mode returns primitive integer vectors with a
    /// positive first nonzero entry; float mode returns unit vectors with the same sign rule.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref { matrix: r, pivots } = self.rref();
        let n = self.ncols;
        let mut out = Vec::new();
        for free in (0..n).filter(|j| !pivots.contains(j)) {
            let mut v = Vector::zeros(n, self.mode);
            v.set(free, Scalar::one(self.mode));
            for (i, &p) in pivots.iter().enumerate() {
                v.set(p, -r.get(i, free));
            }
            out.push(v.primitive().sign_normalized());
        }
        out
    }

    /// One solution of `A x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        if b.dim() != self.nrows() {
            return Err(Error::DimensionMismatch { expected: self.nrows(), found: b.dim() });
        }
        if b.mode() != self.mode {
            return Err(Error::ModeMismatch);
        }
        let mut aug = self.rows.clone();
        for (row, x) in aug.iter_mut().zip(b.coords()) {
            row.push(x.clone());
        }
        let n = self.ncols;
        let Rref { matrix: r, pivots } =
            Matrix { rows: aug, ncols: n + 1, mode: self.mode }.rref();
        if pivots.contains(&n) {
            return Ok(None);
        }
        let mut x = Vector::zeros(n, self.mode);
        for (i, &p) in pivots.iter().enumerate() {
            x.set(p, r.get(i, n).clone());
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_two_three() {
        let m = Matrix::from_ints(&[&[2, 3]]);
        assert_eq!(m.kernel_basis(), vec![Vector::from_ints(&[3, -2])]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(3, Mode::Exact).kernel_basis().is_empty());
        assert!(Matrix::identity(3, Mode::Float).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_three_rows() {
        let m = Matrix::from_ints(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, -1]]);
        assert_eq!(m.kernel_basis(), vec![Vector::from_ints(&[1, 1, -1, -1])]);
    }

    #[test]
    fn float_kernel_is_small_residual() {
        let s = 2f64.sqrt();
        let m = Matrix::from_rows(
            &[Vector::from_f64s(&[-s, 1.0, 1.0]), Vector::from_f64s(&[1.0, 0.0, 1.0])],
            3,
            Mode::Float,
        )
        .unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let r = m.mul_vec(&k[0]).unwrap();
        assert!(r.max_abs_f64() <= 1e-9 * 2.0);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_ints(&[&[1, 1], &[2, 2]]);
        let x = m.solve(&Vector::from_ints(&[1, 2])).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), Vector::from_ints(&[1, 2]));
        assert!(m.solve(&Vector::from_ints(&[1, 3])).unwrap().is_none());
    }
}
