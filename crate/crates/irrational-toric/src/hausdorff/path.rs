use std::cmp::Ordering;

use crate::cone::{eval_sign, Cone, Face};
use crate::error::{Error, Result};
use crate::numeric::{Matrix, Mode, Vector};

/// `v(s) = sum_k c_k s^{alpha_k}` with strictly decreasing exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumPath {
    terms: Vec<(f64, Vector)>,
}

impl PowerSumPath {
    pub fn new(mut terms: Vec<(f64, Vector)>) -> Result<Self> {
        terms.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(Ordering::Equal));
        if terms.is_empty() {
            return Err(Error::Invalid("path needs at least one term".into()));
        }
        if terms.iter().any(|(a, _)| !a.is_finite()) {
            return Err(Error::Invalid("exponents must be finite".into()));
        }
        if terms.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Invalid("repeated exponent".into()));
        }
        let n = terms[0].1.dim();
        if let Some((_, c)) = terms.iter().find(|(_, c)| c.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: c.dim() });
        }
        Ok(PowerSumPath { terms })
    }

    /// The constant path `c`.
    pub fn constant(c: Vector) -> Self {
        PowerSumPath { terms: vec![(0.0, c)] }
    }

    /// `s·lambda + c`.
    pub fn linear(lambda: Vector, c: Vector) -> Result<Self> {
        PowerSumPath::new(vec![(1.0, lambda), (0.0, c)])
    }

    pub fn terms(&self) -> &[(f64, Vector)] {
        &self.terms
    }

    pub fn dim(&self) -> usize {
        self.terms[0].1.dim()
    }

    pub fn eval(&self, s: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.dim()];
        for (a, c) in &self.terms {
            let w = s.powf(*a);
            for (o, x) in out.iter_mut().zip(c.to_f64s()) {
                *o += w * x;
            }
        }
        out
    }

    /// Sum of the terms with exponent zero.
    pub fn bounded_part(&self) -> Vector {
        let mode = self.terms[0].1.mode();
        self.terms
            .iter()
            .filter(|(a, _)| *a == 0.0)
            .fold(Vector::zeros(self.dim(), mode), |acc, (_, c)| acc.add(&c.to_mode(mode)))
    }

    /// Coefficients of the terms with positive exponent.
    pub fn growing(&self) -> Vec<&Vector> {
        self.terms.iter().filter(|(a, _)| *a > 0.0).map(|(_, c)| c).collect()
    }

    /// Whether `v(s) ∈ sigma` for all sufficiently large `s`, decided from leading terms.
    pub fn eventually_in(&self, sigma: &Cone) -> bool {
        let mode = sigma.mode();
        let coeffs: Vec<Vector> = self.terms.iter().map(|(_, c)| c.to_mode(mode)).collect();
        let h = sigma.hrep();
        let leading = |f: &Vector| coeffs.iter().map(|c| eval_sign(f, c)).find(|s| *s != Ordering::Equal);
        h.equations.iter().all(|e| leading(e).is_none())
            && h.inequalities.iter().all(|f| leading(f) != Some(Ordering::Less))
    }
}

fn in_span(c: &Cone, v: &Vector) -> bool {
    let n = c.ambient_dim();
    let mode = if c.mode() == Mode::Exact && v.mode() == Mode::Exact { Mode::Exact } else { Mode::Float };
    let mut rows: Vec<Vector> = c.generators().iter().map(|g| g.to_mode(mode)).collect();
    let before = Matrix::from_rows(&rows, n, mode).map(|m| m.rank()).unwrap_or(0);
    rows.push(v.to_mode(mode));
    Matrix::from_rows(&rows, n, mode).map(|m| m.rank()).unwrap_or(0) == before
}

/// The smallest face `tau` of `sigma` whose span absorbs every growing term of the path.
pub fn min_face_of_boundedness(sigma: &Cone, path: &PowerSumPath) -> Result<Face> {
    if path.dim() != sigma.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: sigma.ambient_dim(), found: path.dim() });
    }
    if !path.eventually_in(sigma) {
        return Err(Error::PathOutsideCone);
    }
    let growing = path.growing();
    let drift: Vec<(f64, Vector)> = path.terms.iter().filter(|(a, _)| *a > 0.0).cloned().collect();
    let drift = (!drift.is_empty()).then_some(PowerSumPath { terms: drift });
    sigma
        .all_faces()
        .iter()
        .find(|f| growing.iter().all(|c| in_span(&f.cone, c)) && drift.as_ref().is_none_or(|d| d.eventually_in(&f.cone)))
        .cloned()
        .ok_or(Error::PathOutsideCone)
}
