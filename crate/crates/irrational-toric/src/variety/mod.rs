//! Points of irrational toric varieties as monoid homomorphisms to the nonnegative reals.

pub(crate) mod birch;
mod limits;
mod projective;

use std::cmp::Ordering;

use nalgebra::{DMatrix, DVector};

use crate::cone::{eval_sign, Cone};
use crate::error::{Error, Result};
use crate::fan::{Fan, PointConfiguration};
use crate::monoid::hilbert_basis;
use crate::numeric::{Matrix, Mode, Scalar, Vector};

pub use birch::{birch_solve, birch_solve_weighted};
pub use limits::{is_compact, limit_one_parameter, recover_fan, sample_directions, Recovery};
pub use projective::{moment_map, projective_embed, projective_embed_via};

/// The torus element `gamma_v`, acting by `u ↦ exp(-<u, v>)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement {
    pub v: Vector,
}

impl TorusElement {
    pub fn new(v: Vector) -> Self {
        TorusElement { v }
    }

    pub fn from_f64s(v: &[f64]) -> Self {
        TorusElement { v: Vector::from_f64s(v) }
    }

    pub fn identity(n: usize) -> Self {
        TorusElement { v: Vector::zeros(n, Mode::Float) }
    }

    /// `log t^u = -<u, v>`.
    pub fn log_character(&self, u: &Vector) -> f64 {
        -dot_f64(u, &self.v)
    }
}

/// Which chart a point is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chart {
    /// `Hom(sigma^vee, R_>=)` for the cone with this index in the fan.
    Cone(usize),
    /// The affine variety `X_A` in `R^A`.
    Configuration,
}

/// A point given by the logarithms of its values on the chart's generating set.
/// A value of `-inf` encodes zero.
#[derive(Clone, Debug, PartialEq)]
pub struct ToricPoint {
    pub chart: Chart,
    pub log_values: Vec<f64>,
}

impl ToricPoint {
    pub fn values(&self) -> Vec<f64> {
        self.log_values.iter().map(|l| l.exp()).collect()
    }

    /// Indices of the generators with positive value.
    pub fn support(&self) -> Vec<usize> {
        (0..self.log_values.len()).filter(|&i| self.log_values[i].is_finite()).collect()
    }

    pub fn from_values(chart: Chart, values: &[f64]) -> Self {
        ToricPoint { chart, log_values: values.iter().map(|v| if *v > 0.0 { v.ln() } else { f64::NEG_INFINITY }).collect() }
    }

    /// Agreement of values within `tol` (relative to magnitude).
    pub fn approx_eq(&self, other: &ToricPoint, tol: f64) -> bool {
        self.chart == other.chart
            && self.log_values.len() == other.log_values.len()
            && self.log_values.iter().zip(&other.log_values).all(|(a, b)| match (a.is_finite(), b.is_finite()) {
                (false, false) => true,
                (true, true) => (a - b).abs() <= tol,
                _ => false,
            })
    }
}

/// Element of the monoid `X_{Σ^+}`: a point or the absorbing element.
#[derive(Clone, Debug, PartialEq)]
pub enum MonoidElement {
    Point(ToricPoint),
    Absorbing,
}

/// An orbit: a cone of the fan, or a face of the configuration given by point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitId {
    Cone(usize),
    Face(Vec<usize>),
}

pub(crate) fn dot_f64(a: &Vector, b: &Vector) -> f64 {
    a.to_f64s().iter().zip(b.to_f64s()).map(|(x, y)| x * y).sum()
}

/// Indices of `gens` lying in the smallest face of `c` that contains `v`.
pub(crate) fn face_indices(c: &Cone, gens: &[Vector], v: &Vector) -> Vec<usize> {
    let tight: Vec<&Vector> = c.hrep().inequalities.iter().filter(|f| eval_sign(f, v) == Ordering::Equal).collect();
    (0..gens.len())
        .filter(|&i| tight.iter().all(|f| eval_sign(f, &gens[i]) == Ordering::Equal))
        .collect()
}

fn sum_of(gens: &[Vector], idx: &[usize], n: usize, mode: Mode) -> Vector {
    idx.iter().fold(Vector::zeros(n, mode), |s, &i| s.add(&gens[i]))
}

/// Least-squares `w` with `-<g_i, w> = logs_i` over the support, and the worst residual.
pub(crate) fn solve_orbit(gens: &[Vector], support: &[usize], logs: &[f64], n: usize) -> (Vec<f64>, f64) {
    if support.is_empty() || n == 0 {
        return (vec![0.0; n], 0.0);
    }
    let rows: Vec<f64> = support.iter().flat_map(|&i| gens[i].to_f64s()).collect();
    let a = DMatrix::from_row_slice(support.len(), n, &rows);
    let rhs = DVector::from_iterator(support.len(), support.iter().map(|&i| -logs[i]));
    let svd = a.clone().svd(true, true);
    let w = svd.solve(&rhs, 1e-12).unwrap_or_else(|_| DVector::zeros(n));
    let r = &a * &w - &rhs;
    let scale = rhs.amax().max(1.0);
    (w.iter().copied().collect(), r.amax() / scale)
}

/// Generators of `sigma^vee` used as chart coordinates: the Hilbert basis for exact cones,
/// otherwise extreme rays together with a signed lineality basis.
pub fn chart_generators(sigma: &Cone) -> Vec<Vector> {
    if sigma.mode() == Mode::Exact {
        if let Ok(h) = hilbert_basis(sigma) {
            return h.elements();
        }
    }
    let d = sigma.dual();
    let can = d.canonical();
    let mut out = can.rays.clone();
    for l in &can.lineality {
        out.push(l.clone());
        out.push(l.neg());
    }
    out
}

/// The irrational toric variety `X_Σ`, glued from the charts of its cones.
#[derive(Clone, Debug)]
pub struct ToricVariety {
    fan: Fan,
    charts: Vec<Vec<Vector>>,
    duals: Vec<Cone>,
}

impl ToricVariety {
    pub fn new(fan: Fan) -> Self {
        let charts = fan.cones().iter().map(chart_generators).collect();
        let duals = fan.cones().iter().map(Cone::dual).collect();
        ToricVariety { fan, charts, duals }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.ambient_dim()
    }

    /// Chart coordinates of cone `i`.
    pub fn chart(&self, i: usize) -> Result<&[Vector]> {
        self.charts.get(i).map(Vec::as_slice).ok_or(Error::IndexOutOfRange(i))
    }

    fn chart_index(&self, x: &ToricPoint) -> Result<usize> {
        match x.chart {
            Chart::Cone(i) if i < self.charts.len() => {
                if x.log_values.len() != self.charts[i].len() {
                    return Err(Error::DimensionMismatch { expected: self.charts[i].len(), found: x.log_values.len() });
                }
                Ok(i)
            }
            Chart::Cone(i) => Err(Error::IndexOutOfRange(i)),
            Chart::Configuration => Err(Error::ChartMismatch),
        }
    }

    /// `gamma_w · x_tau` in the chart of cone `j` (requires `tau` to be a face of cone `j`).
    pub fn point_from_orbit(&self, tau: usize, w: &[f64], j: usize) -> Result<ToricPoint> {
        if !self.fan.is_face(tau, j) {
            return Err(Error::ChartMismatch);
        }
        let tau_gens = self.fan.cones()[tau].generators();
        let wv = Vector::from_f64s_or_empty(w);
        let log_values = self.charts[j]
            .iter()
            .map(|g| {
                if tau_gens.iter().all(|t| eval_sign(g, t) == Ordering::Equal) {
                    -dot_f64(g, &wv)
                } else {
                    f64::NEG_INFINITY
                }
            })
            .collect();
        Ok(ToricPoint { chart: Chart::Cone(j), log_values })
    }

    /// The distinguished point `x_sigma` in its own chart.
    pub fn distinguished_point(&self, i: usize) -> Result<ToricPoint> {
        self.fan.cone(i)?;
        self.point_from_orbit(i, &vec![0.0; self.dim()], i)
    }

    /// `gamma_v · epsilon` of the dense orbit, written in chart `j`.
    pub fn dense_point(&self, t: &TorusElement, j: usize) -> Result<ToricPoint> {
        self.fan.cone(j)?;
        self.point_from_orbit(0, &t.v.to_f64s(), j)
    }

    /// The orbit cone `tau` and a torus parameter `w` with `x = gamma_w · x_tau`.
    pub fn orbit_coordinates(&self, x: &ToricPoint) -> Result<(usize, Vec<f64>)> {
        let j = self.chart_index(x)?;
        let gens = &self.charts[j];
        let support = x.support();
        let n = self.dim();
        let mode = self.fan.mode();
        let m = sum_of(gens, &support, n, mode);
        if face_indices(&self.duals[j], gens, &m) != support {
            return Err(Error::InvalidSupport);
        }
        let tau = self.fan.cones()[j].face_by_functional(&m)?;
        let idx = self.fan.index_of(&tau.cone).ok_or(Error::InvalidSupport)?;
        let (w, _) = solve_orbit(gens, &support, &x.log_values, n);
        Ok((idx, w))
    }

    /// Failure of multiplicativity on the support (0 for a genuine point).
    pub fn residual(&self, x: &ToricPoint) -> Result<f64> {
        let j = self.chart_index(x)?;
        let support = x.support();
        let gens = &self.charts[j];
        let m = sum_of(gens, &support, self.dim(), self.fan.mode());
        if face_indices(&self.duals[j], gens, &m) != support {
            return Err(Error::InvalidSupport);
        }
        Ok(solve_orbit(gens, &support, &x.log_values, self.dim()).1)
    }

    pub fn orbit_of(&self, x: &ToricPoint) -> Result<OrbitId> {
        Ok(OrbitId::Cone(self.orbit_coordinates(x)?.0))
    }

    /// Rewrites `x` in the chart of cone `j`.
    pub fn to_chart(&self, x: &ToricPoint, j: usize) -> Result<ToricPoint> {
        let (tau, w) = self.orbit_coordinates(x)?;
        self.point_from_orbit(tau, &w, j)
    }

    /// `t · x`.
    pub fn act(&self, t: &TorusElement, x: &ToricPoint) -> Result<ToricPoint> {
        let j = self.chart_index(x)?;
        Ok(act_on(&self.charts[j], t, x))
    }

    /// Equality of points, possibly written in different charts.
    pub fn points_equal(&self, x: &ToricPoint, y: &ToricPoint, tol: f64) -> bool {
        let Chart::Cone(j) = x.chart else { return false };
        match self.to_chart(y, j) {
            Ok(y) => x.approx_eq(&y, tol),
            Err(_) => false,
        }
    }

    /// Product in the monoid `X_{Σ^+}`: pointwise in the smallest common chart, or absorbing.
    pub fn monoid_product(&self, x: &MonoidElement, y: &MonoidElement) -> Result<MonoidElement> {
        let (x, y) = match (x, y) {
            (MonoidElement::Point(x), MonoidElement::Point(y)) => (x, y),
            _ => return Ok(MonoidElement::Absorbing),
        };
        let (tx, wx) = self.orbit_coordinates(x)?;
        let (ty, wy) = self.orbit_coordinates(y)?;
        let common = (0..self.fan.len()).find(|&k| self.fan.is_face(tx, k) && self.fan.is_face(ty, k));
        let Some(k) = common else { return Ok(MonoidElement::Absorbing) };
        let w: Vec<f64> = wx.iter().zip(&wy).map(|(a, b)| a + b).collect();
        Ok(MonoidElement::Point(self.point_from_orbit(k, &w, k)?))
    }

    /// The identity `epsilon` of the dense orbit, in the chart of the minimal cone.
    pub fn identity(&self) -> ToricPoint {
        self.point_from_orbit(0, &vec![0.0; self.dim()], 0).expect("minimal cone")
    }
}

fn act_on(gens: &[Vector], t: &TorusElement, x: &ToricPoint) -> ToricPoint {
    let log_values = gens
        .iter()
        .zip(&x.log_values)
        .map(|(g, l)| if l.is_finite() { l + t.log_character(g) } else { *l })
        .collect();
    ToricPoint { chart: x.chart.clone(), log_values }
}

/// `(t^a | a ∈ A)`.
pub fn affine_point(p: &PointConfiguration, t: &TorusElement) -> ToricPoint {
    ToricPoint { chart: Chart::Configuration, log_values: p.points().iter().map(|a| t.log_character(a)).collect() }
}

/// Translate of a point of `X_A` by `t`.
pub fn act_affine(p: &PointConfiguration, t: &TorusElement, x: &ToricPoint) -> ToricPoint {
    act_on(p.points(), t, x)
}

/// The point `epsilon_F`: 1 on the face `F`, 0 elsewhere.
pub fn face_point(p: &PointConfiguration, face: &[usize]) -> ToricPoint {
    let log_values = (0..p.len()).map(|i| if face.contains(&i) { 0.0 } else { f64::NEG_INFINITY }).collect();
    ToricPoint { chart: Chart::Configuration, log_values }
}

/// Whether the index set is a face of the configuration.
pub fn is_face_of(p: &PointConfiguration, face: &[usize]) -> bool {
    let v = sum_of(p.points(), face, p.dim(), p.mode());
    face_indices(&p.cone(), p.points(), &v) == face
}

/// The face `F` with `x` in the orbit `X°_F`.
pub fn orbit_of_affine(p: &PointConfiguration, x: &ToricPoint) -> Result<OrbitId> {
    if x.chart != Chart::Configuration || x.log_values.len() != p.len() {
        return Err(Error::ChartMismatch);
    }
    let s = x.support();
    if !is_face_of(p, &s) {
        return Err(Error::InvalidSupport);
    }
    Ok(OrbitId::Face(s))
}

/// Deviation of `z ∈ R^A_>=` from `X_A`: zero exactly on the variety.
/// Exact rational inputs give an exact answer; otherwise binomials are evaluated in floating point.
pub fn membership_residual(p: &PointConfiguration, z: &[Scalar]) -> Result<Scalar> {
    if z.len() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), found: z.len() });
    }
    if z.iter().any(Scalar::is_negative) {
        return Err(Error::Invalid("coordinates must be nonnegative".into()));
    }
    let exact = p.mode() == Mode::Exact && z.iter().all(|x| x.mode() == Mode::Exact);
    let mode = if exact { Mode::Exact } else { Mode::Float };
    let s: Vec<usize> = (0..z.len()).filter(|&i| !z[i].is_zero()).collect();
    if !is_face_of(p, &s) {
        let prod = s.iter().fold(Scalar::one(mode), |acc, &i| &acc * &z[i].to_mode(mode));
        return Ok(prod);
    }
    if s.is_empty() {
        return Ok(Scalar::zero(mode));
    }
    let cols: Vec<Vector> = s.iter().map(|&i| p.points()[i].clone()).collect();
    let m = Matrix::from_columns(&cols, p.dim(), p.mode())?;
    let mut worst = Scalar::zero(mode);
    for k in m.kernel_basis() {
        let r = if exact {
            let mut plus = Scalar::one(Mode::Exact);
            let mut minus = Scalar::one(Mode::Exact);
            for (j, &i) in s.iter().enumerate() {
                let e = k.get(j).as_rational().expect("exact kernel").to_integer();
                let e: i32 = e.to_string().parse().map_err(|_| Error::Overflow)?;
                let q = z[i].as_rational().expect("exact").clone();
                if e > 0 {
                    plus = &plus * &Scalar::exact(num_traits::Pow::pow(q, e));
                } else if e < 0 {
                    minus = &minus * &Scalar::exact(num_traits::Pow::pow(q, -e));
                }
            }
            (&plus - &minus).abs()
        } else {
            let (mut lp, mut lm) = (0.0, 0.0);
            for (j, &i) in s.iter().enumerate() {
                let e = k.get(j).to_f64();
                let l = z[i].to_f64().ln();
                if e > 0.0 {
                    lp += e * l;
                } else {
                    lm -= e * l;
                }
            }
            Scalar::float((lp.exp() - lm.exp()).abs())
        };
        if r.cmp_tol(&worst) == Ordering::Greater {
            worst = r;
        }
    }
    Ok(worst)
}
