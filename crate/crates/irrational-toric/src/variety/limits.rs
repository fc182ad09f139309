use std::f64::consts::PI;

use super::{ToricPoint, ToricVariety};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan};
use crate::numeric::{Mode, Scalar, Vector};

const SAMPLES: usize = 2000;
const GRID: f64 = 64.0;

/// `lim_{s -> inf} gamma_{s v} · base` for `base` in the dense orbit.
pub fn limit_one_parameter(var: &ToricVariety, v: &Vector, base: &ToricPoint) -> Result<ToricPoint> {
    let (orbit, w) = var.orbit_coordinates(base)?;
    if orbit != 0 {
        return Err(Error::Invalid("base point must lie in the dense orbit".into()));
    }
    if v.dim() != var.dim() {
        return Err(Error::DimensionMismatch { expected: var.dim(), found: v.dim() });
    }
    let v = v.to_mode(var.fan().mode());
    let sigma = var.fan().cone_containing(&v).ok_or(Error::NoLimit)?;
    var.point_from_orbit(sigma, &w, sigma)
}

/// Whether `X_Σ` is compact, i.e. the fan is complete.
pub fn is_compact(f: &Fan) -> bool {
    f.is_complete()
}

/// Deterministic directions on the unit sphere of `R^n`: a circle for `n = 2`,
/// the spherical Fibonacci lattice for `n = 3`, Gaussian-normalised Halton points beyond.
pub fn sample_directions(n: usize, count: usize) -> Vec<Vec<f64>> {
    match n {
        0 => vec![vec![]],
        1 => vec![vec![1.0], vec![-1.0]],
        2 => (0..count)
            .map(|k| {
                let t = 2.0 * PI * (k as f64 + 0.5) / count as f64;
                vec![t.cos(), t.sin()]
            })
            .collect(),
        3 => {
            let golden = PI * (3.0 - 5f64.sqrt());
            (0..count)
                .map(|k| {
                    let z = 1.0 - 2.0 * (k as f64 + 0.5) / count as f64;
                    let r = (1.0 - z * z).sqrt();
                    let t = golden * k as f64;
                    vec![r * t.cos(), r * t.sin(), z]
                })
                .collect()
        }
        _ => {
            let primes = first_primes(n + n % 2);
            (1..=count)
                .map(|k| {
                    let u: Vec<f64> = primes.iter().map(|&p| halton(k, p)).collect();
                    let mut g = Vec::with_capacity(n);
                    for pair in u.chunks(2) {
                        let r = (-2.0 * pair[0].ln()).sqrt();
                        g.push(r * (2.0 * PI * pair[1]).cos());
                        g.push(r * (2.0 * PI * pair[1]).sin());
                    }
                    g.truncate(n);
                    let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
                    g.iter().map(|x| x / norm).collect()
                })
                .collect()
        }
    }
}

fn halton(mut k: usize, base: usize) -> f64 {
    let (mut f, mut r) = (1.0, 0.0);
    while k > 0 {
        f /= base as f64;
        r += f * (k % base) as f64;
        k /= base;
    }
    r
}

fn first_primes(m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = 2;
    while out.len() < m {
        if (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0) {
            out.push(k);
        }
        k += 1;
    }
    out
}

/// Outcome of reconstructing a fan from limit points.
#[derive(Clone, Debug)]
pub struct Recovery {
    pub fan: Fan,
    /// Number of sampled directions in each limit class.
    pub class_sizes: Vec<usize>,
    /// Whether every reconstructed cone is a cone of the input fan and vice versa.
    pub matches: bool,
}

fn to_sample(x: &[f64], mode: Mode) -> Vector {
    match mode {
        Mode::Float => Vector::from_f64s_or_empty(x),
        Mode::Exact => {
            let coords = x
                .iter()
                .map(|c| Scalar::from_f64_exact((c * GRID).round() / GRID).expect("finite sample"))
                .collect();
            Vector::with_mode(coords, Mode::Exact).expect("uniform mode")
        }
    }
}

/// Groups sampled directions by their limit point and rebuilds each cone as the hull of
/// the directions whose limits lie in the closure of its orbit's star.
pub fn recover_fan(var: &ToricVariety) -> Result<Recovery> {
    let f = var.fan();
    let (n, mode) = (f.ambient_dim(), f.mode());
    let mut dirs: Vec<Vector> = vec![Vector::zeros(n, mode)];
    dirs.extend(sample_directions(n, SAMPLES).iter().map(|x| to_sample(x, mode)));
    let mut gens: Vec<Vector> = Vec::new();
    for c in f.cones() {
        for g in c.generators() {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
    }
    for (i, g) in gens.iter().enumerate() {
        dirs.push(g.clone());
        for h in &gens[i + 1..] {
            dirs.push(g.add(h));
        }
    }
    dirs.retain(|d| d.dim() == n);

    let base = var.identity();
    let mut reps: Vec<ToricPoint> = Vec::new();
    let mut members: Vec<Vec<Vector>> = Vec::new();
    for d in dirs {
        let Ok(x) = limit_one_parameter(var, &d, &base) else { continue };
        match reps.iter().position(|r| var.points_equal(r, &x, 1e-9)) {
            Some(k) => members[k].push(d),
            None => {
                reps.push(x);
                members.push(vec![d]);
            }
        }
    }

    let supports: Vec<Vec<usize>> = reps.iter().map(ToricPoint::support).collect();
    let mut cones = Vec::with_capacity(reps.len());
    for (c, rep) in reps.iter().enumerate() {
        let mut hull: Vec<Vector> = Vec::new();
        for (d, other) in reps.iter().enumerate() {
            let Ok(y) = var.to_chart(other, rep_chart(rep)) else { continue };
            let supp = y.support();
            if supports[c].iter().all(|i| supp.contains(i)) {
                hull.extend(members[d].iter().cloned());
            }
        }
        cones.push(Cone::new(n, mode, hull)?);
    }
    let rebuilt = validate_fan(n, &cones)?;
    let matches = rebuilt.len() == f.len()
        && reps.len() == f.len()
        && rebuilt.cones().iter().all(|c| f.index_of(c).is_some());
    Ok(Recovery { fan: rebuilt, class_sizes: members.iter().map(Vec::len).collect(), matches })
}

fn rep_chart(x: &ToricPoint) -> usize {
    match x.chart {
        super::Chart::Cone(j) => j,
        super::Chart::Configuration => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{normal_fan, PointConfiguration};
    use crate::variety::TorusElement;

    fn sigma2() -> ToricVariety {
        ToricVariety::new(normal_fan(&PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap()).unwrap())
    }

    #[test]
    fn limits_pick_the_carrier_cone() {
        let var = sigma2();
        let e = var.identity();
        let x = limit_one_parameter(&var, &Vector::from_ints(&[1, 1]), &e).unwrap();
        let q = var.fan().index_of(&Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap()).unwrap();
        assert!(var.points_equal(&x, &var.distinguished_point(q).unwrap(), 1e-12));
        let y = limit_one_parameter(&var, &Vector::from_ints(&[0, 0]), &e).unwrap();
        assert!(var.points_equal(&y, &e, 1e-12));
    }

    #[test]
    fn limits_are_equivariant() {
        let var = sigma2();
        let t = TorusElement::from_f64s(&[0.7, -0.2]);
        let base = var.act(&t, &var.identity()).unwrap();
        let v = Vector::from_ints(&[-1, 2]);
        let a = limit_one_parameter(&var, &v, &base).unwrap();
        let b = limit_one_parameter(&var, &v, &var.identity()).unwrap();
        let b = var.act(&t, &b).unwrap();
        assert!(var.points_equal(&a, &b, 1e-9));
    }

    #[test]
    fn incomplete_fan_has_missing_limits() {
        let f = validate_fan(2, &[Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap(), Cone::from_ints(2, &[&[1, 0], &[2, -1]]).unwrap()]).unwrap();
        assert!(!is_compact(&f));
        let var = ToricVariety::new(f);
        let e = var.identity();
        assert_eq!(limit_one_parameter(&var, &Vector::from_ints(&[0, -1]), &e).unwrap_err(), Error::NoLimit);
    }

    #[test]
    fn recovers_small_fans() {
        let r = recover_fan(&sigma2()).unwrap();
        assert!(r.matches);
        assert_eq!(r.class_sizes.len(), 7);
        let o = recover_fan(&ToricVariety::new(Fan::origin(2, Mode::Exact))).unwrap();
        assert!(o.matches);
        assert_eq!(o.fan.len(), 1);
    }

    #[test]
    fn halton_directions_are_unit() {
        for d in sample_directions(5, 50) {
            let n: f64 = d.iter().map(|x| x * x).sum();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }
}
