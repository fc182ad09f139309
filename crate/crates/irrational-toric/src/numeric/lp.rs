//! Dense tableau simplex over [`Scalar`] with Bland's rule.
//!
//! All variables are free. Strict rows are handled through an auxiliary gap variable `t`:
//! `a.x > b` becomes `a.x - t >= b`, the solver maximises `t` subject to `t <= margin`, and
//! the system is strictly feasible exactly when the optimum is positive.

use super::scalar::{Mode, Scalar};
use super::vector::Vector;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
    Lt,
    Gt,
}

impl Relation {
    fn is_strict(self) -> bool {
        matches!(self, Relation::Lt | Relation::Gt)
    }
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vector,
    pub relation: Relation,
    pub rhs: Scalar,
}

#[derive(Clone, Debug)]
pub struct LpProblem {
    num_vars: usize,
    mode: Mode,
    constraints: Vec<Constraint>,
    objective: Option<Vector>,
    margin: Scalar,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    /// A point satisfying every row; `gap` is the achieved strict margin when strict rows exist.
    Feasible { point: Vector, gap: Option<Scalar>, objective: Option<Scalar> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn point(&self) -> Option<&Vector> {
        match self {
            LpOutcome::Feasible { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible { .. })
    }
}

impl LpProblem {
    pub fn new(num_vars: usize, mode: Mode) -> Self {
        LpProblem {
            num_vars,
            mode,
            constraints: Vec::new(),
            objective: None,
            margin: Scalar::one(mode),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn add(&mut self, coeffs: Vector, relation: Relation, rhs: Scalar) -> Result<&mut Self> {
        if coeffs.dim() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: coeffs.dim() });
        }
        if coeffs.mode() != self.mode || rhs.mode() != self.mode {
            return Err(Error::ModeMismatch);
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(self)
    }

    /// Maximise `c.x` (only without strict rows).
    pub fn maximize(&mut self, c: Vector) -> Result<&mut Self> {
        if c.dim() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: c.dim() });
        }
        self.objective = Some(c);
        Ok(self)
    }

    pub fn with_margin(&mut self, margin: Scalar) -> &mut Self {
        self.margin = margin;
        self
    }

    fn has_strict(&self) -> bool {
        self.constraints.iter().any(|c| c.relation.is_strict())
    }

    /// Substitutes a point back into every row.
    pub fn check(&self, x: &Vector) -> bool {
        self.constraints.iter().all(|c| {
            let d = &c.coeffs.dot(x) - &c.rhs;
            match c.relation {
                Relation::Le => !d.is_positive(),
                Relation::Ge => !d.is_negative(),
                Relation::Eq => d.is_zero(),
                Relation::Lt => d.is_negative(),
                Relation::Gt => d.is_positive(),
            }
        })
    }
}

/// Solves the feasibility (or optimisation) problem and re-checks the witness.
pub fn lp_feasible(p: &LpProblem) -> Result<LpOutcome> {
    let strict = p.has_strict();
    if strict && p.objective.is_some() {
        return Err(Error::Invalid("strict rows are only allowed in feasibility mode".into()));
    }
    let mode = p.mode;
    let n = p.num_vars;
    let t_col = 2 * n;
    let first_slack = if strict { t_col + 1 } else { t_col };
    let mut rows: Vec<(Vec<(usize, Scalar)>, Scalar)> = Vec::new();
    let mut nslack = 0;
    for c in &p.constraints {
        let mut entries = Vec::new();
        for (i, a) in c.coeffs.coords().iter().enumerate() {
            if !a.is_zero() {
                entries.push((2 * i, a.clone()));
                entries.push((2 * i + 1, -a));
            }
        }
        let one = Scalar::one(mode);
        let mut slack = |sign: Scalar, entries: &mut Vec<(usize, Scalar)>| {
            entries.push((first_slack + nslack, sign));
            nslack += 1;
        };
        match c.relation {
            Relation::Le => slack(one.clone(), &mut entries),
            Relation::Ge => slack(-&one, &mut entries),
            Relation::Eq => {}
            Relation::Gt => {
                entries.push((t_col, -&one));
                slack(-&one, &mut entries);
            }
            Relation::Lt => {
                entries.push((t_col, one.clone()));
                slack(one.clone(), &mut entries);
            }
        }
        rows.push((entries, c.rhs.clone()));
    }
    if strict {
        rows.push((vec![(t_col, Scalar::one(mode)), (first_slack + nslack, Scalar::one(mode))], p.margin.clone()));
        nslack += 1;
    }
    let ncols = first_slack + nslack;
    let mut objective = vec![Scalar::zero(mode); ncols];
    if strict {
        objective[t_col] = Scalar::one(mode);
    } else if let Some(c) = &p.objective {
        for (i, a) in c.coords().iter().enumerate() {
            objective[2 * i] = a.clone();
            objective[2 * i + 1] = -a;
        }
    }

    let mut tab = Tableau::new(mode, ncols, &rows);
    if !tab.phase_one() {
        return Ok(LpOutcome::Infeasible);
    }
    if !tab.optimize(&objective) {
        return Ok(LpOutcome::Unbounded);
    }
    let y = tab.solution();
    let x = Vector::with_mode(
        (0..n).map(|i| &y[2 * i] - &y[2 * i + 1]).collect(),
        mode,
    )?;
    let value = tab.objective_value();
    if strict {
        let t = y[t_col].clone();
        if !t.is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
        if !p.check(&x) {
            return Err(Error::Invalid("strict witness failed re-check".into()));
        }
        return Ok(LpOutcome::Feasible { point: x, gap: Some(t), objective: None });
    }
    if !p.check(&x) {
        return Err(Error::Invalid("witness failed re-check".into()));
    }
    Ok(LpOutcome::Feasible {
        point: x,
        gap: None,
        objective: p.objective.as_ref().map(|_| value),
    })
}

struct Tableau {
    mode: Mode,
    /// Constraint rows, last entry is the right-hand side.
    a: Vec<Vec<Scalar>>,
    basis: Vec<usize>,
    /// Reduced costs (maximisation form), last entry is minus the objective value.
    z: Vec<Scalar>,
    ncols: usize,
}

impl Tableau {
    fn new(mode: Mode, ncols: usize, rows: &[(Vec<(usize, Scalar)>, Scalar)]) -> Self {
        let m = rows.len();
        let width = ncols + m + 1;
        let mut a = vec![vec![Scalar::zero(mode); width]; m];
        for (r, (entries, rhs)) in rows.iter().enumerate() {
            let flip = rhs.is_negative();
            for (j, v) in entries {
                a[r][*j] = &a[r][*j] + v;
            }
            a[r][width - 1] = rhs.clone();
            if flip {
                for x in a[r].iter_mut() {
                    *x = -&*x;
                }
            }
            a[r][ncols + r] = Scalar::one(mode);
        }
        Tableau { mode, a, basis: (ncols..ncols + m).collect(), z: vec![], ncols }
    }

    fn width(&self) -> usize {
        self.a.first().map_or(self.ncols + 1, Vec::len)
    }

    fn set_objective(&mut self, c: &[Scalar]) {
        let w = self.width();
        let cost = |j: usize| if j < c.len() { c[j].clone() } else { Scalar::zero(self.mode) };
        let mut z = vec![Scalar::zero(self.mode); w];
        for j in 0..w {
            let mut s = if j == w - 1 { Scalar::zero(self.mode) } else { -&cost(j) };
            for (r, &b) in self.basis.iter().enumerate() {
                let cb = cost(b);
                if !cb.is_zero() {
                    s = &s + &(&cb * &self.a[r][j]);
                }
            }
            z[j] = s;
        }
        self.z = z;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.a[r][c].recip().expect("nonzero pivot");
        for x in self.a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = self.a[r].clone();
        let clean = |row: &mut Vec<Scalar>| {
            let f = row[c].clone();
            if f.is_zero() && self_exact(&f) {
                return;
            }
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() || !self_exact(p) {
                    *x = &*x - &(&f * p);
                }
            }
            row[c] = Scalar::zero(f.mode());
        };
        for (i, row) in self.a.iter_mut().enumerate() {
            if i != r {
                clean(row);
            }
        }
        clean(&mut self.z);
        self.basis[r] = c;
    }

    /// Bland's rule simplex on the current objective row; false when unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.z[j].is_negative()) else {
                return true;
            };
            let last = self.width() - 1;
            let mut best: Option<(usize, Scalar)> = None;
            for (r, row) in self.a.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[last] / &row[c];
                let better = match &best {
                    None => true,
                    Some((br, bv)) => match ratio.cmp_tol(bv) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => self.basis[r] < self.basis[*br],
                        _ => false,
                    },
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn phase_one(&mut self) -> bool {
        let w = self.width();
        let mut cost = vec![Scalar::zero(self.mode); w - 1];
        for c in cost.iter_mut().skip(self.ncols) {
            *c = Scalar::from_int(-1, self.mode);
        }
        self.set_objective(&cost);
        self.run(w - 1);
        if !self.z[w - 1].is_zero() {
            return false;
        }
        // drive artificial variables out of the basis
        let mut r = 0;
        while r < self.a.len() {
            if self.basis[r] >= self.ncols {
                match (0..self.ncols).find(|&j| !self.a[r][j].is_zero()) {
                    Some(j) => self.pivot(r, j),
                    None => {
                        self.a.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        let keep = self.ncols;
        for row in self.a.iter_mut() {
            let rhs = row.pop().expect("rhs");
            row.truncate(keep);
            row.push(rhs);
        }
        true
    }

    fn optimize(&mut self, c: &[Scalar]) -> bool {
        self.set_objective(c);
        self.run(self.ncols)
    }

    fn solution(&self) -> Vec<Scalar> {
        let mut y = vec![Scalar::zero(self.mode); self.ncols];
        let last = self.width() - 1;
        for (r, &b) in self.basis.iter().enumerate() {
            y[b] = self.a[r][last].clone();
        }
        y
    }

    fn objective_value(&self) -> Scalar {
        self.z[self.width() - 1].clone()
    }
}

fn self_exact(x: &Scalar) -> bool {
    x.mode() == Mode::Exact
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n, Mode::Exact)
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let mut p = LpProblem::new(1, Mode::Exact);
        p.add(Vector::from_ints(&[1]), Relation::Ge, s(1)).unwrap();
        p.add(Vector::from_ints(&[1]), Relation::Le, s(0)).unwrap();
        assert_eq!(lp_feasible(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn strict_positive_has_witness() {
        let mut p = LpProblem::new(1, Mode::Exact);
        p.add(Vector::from_ints(&[1]), Relation::Gt, s(0)).unwrap();
        match lp_feasible(&p).unwrap() {
            LpOutcome::Feasible { point, gap, .. } => {
                assert!(point.get(0).is_positive());
                assert_eq!(gap, Some(s(1)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn strict_empty_interior_is_infeasible() {
        let mut p = LpProblem::new(1, Mode::Exact);
        p.add(Vector::from_ints(&[1]), Relation::Gt, s(0)).unwrap();
        p.add(Vector::from_ints(&[1]), Relation::Le, s(0)).unwrap();
        assert_eq!(lp_feasible(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn optimum_and_unbounded() {
        let mut p = LpProblem::new(2, Mode::Exact);
        p.add(Vector::from_ints(&[1, 1]), Relation::Le, s(4)).unwrap();
        p.add(Vector::from_ints(&[1, 0]), Relation::Ge, s(0)).unwrap();
        p.add(Vector::from_ints(&[0, 1]), Relation::Ge, s(0)).unwrap();
        p.maximize(Vector::from_ints(&[1, 2])).unwrap();
        match lp_feasible(&p).unwrap() {
            LpOutcome::Feasible { point, objective, .. } => {
                assert_eq!(point, Vector::from_ints(&[0, 4]));
                assert_eq!(objective, Some(s(8)));
            }
            other => panic!("{other:?}"),
        }
        let mut q = LpProblem::new(1, Mode::Exact);
        q.add(Vector::from_ints(&[1]), Relation::Ge, s(0)).unwrap();
        q.maximize(Vector::from_ints(&[1])).unwrap();
        assert_eq!(lp_feasible(&q).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn float_mode_equalities() {
        let mut p = LpProblem::new(2, Mode::Float);
        p.add(Vector::from_f64s(&[1.0, 1.0]), Relation::Eq, Scalar::float(1.0)).unwrap();
        p.add(Vector::from_f64s(&[1.0, -1.0]), Relation::Gt, Scalar::float(0.0)).unwrap();
        let out = lp_feasible(&p).unwrap();
        let x = out.point().unwrap().to_f64s();
        assert!((x[0] + x[1] - 1.0).abs() < 1e-12 && x[0] > x[1]);
    }

    #[test]
    fn redundant_equalities() {
        let mut p = LpProblem::new(2, Mode::Exact);
        p.add(Vector::from_ints(&[1, 1]), Relation::Eq, s(2)).unwrap();
        p.add(Vector::from_ints(&[2, 2]), Relation::Eq, s(4)).unwrap();
        p.add(Vector::from_ints(&[1, -1]), Relation::Eq, s(0)).unwrap();
        assert_eq!(lp_feasible(&p).unwrap().point(), Some(&Vector::from_ints(&[1, 1])));
    }
}
