//! Double description: the cone `{x : <h, x> >= 0 for all h}` as rays plus a lineality basis.

use std::cmp::Ordering;

use crate::numeric::{tolerance, Mode, Scalar, Vector};

pub(crate) struct Generators {
    pub rays: Vec<Vector>,
    pub lineality: Vec<Vector>,
}

/// Sign of `<h, v>` with a float tolerance scaled by the norms.
pub(crate) fn eval_sign(h: &Vector, v: &Vector) -> Ordering {
    let d = h.dot(v);
    match d {
        Scalar::Exact(_) => d.sign(),
        Scalar::Float(x) => {
            let scale = (h.norm_f64() * v.norm_f64()).max(1.0);
            if x.abs() <= tolerance() * scale {
                Ordering::Equal
            } else if x > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

fn normalize(v: Vector) -> Vector {
    v.primitive()
}

pub(crate) fn double_description(n: usize, mode: Mode, constraints: &[Vector]) -> Generators {
    let mut lineality: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i, mode)).collect();
    let mut rays: Vec<Vector> = Vec::new();
    let mut processed: Vec<Vector> = Vec::new();

    for h in constraints {
        if h.is_zero() {
            continue;
        }
        let h = normalize(h.clone());
        let vals: Vec<Scalar> = lineality.iter().map(|l| h.dot(l)).collect();
        let pick = match mode {
            Mode::Exact => (0..lineality.len()).find(|&i| !vals[i].is_zero()),
            Mode::Float => (0..lineality.len())
                .filter(|&i| eval_sign(&h, &lineality[i]) != Ordering::Equal)
                .max_by(|&i, &j| vals[i].to_f64().abs().total_cmp(&vals[j].to_f64().abs())),
        };
        if let Some(k) = pick {
            let l = lineality.remove(k);
            let hl = vals[k].clone();
            let reduce = |v: &Vector| -> Vector {
                let c = &h.dot(v) / &hl;
                normalize(v.axpy(&-c, &l))
            };
            lineality = lineality.iter().map(reduce).filter(|v| !v.is_zero()).collect();
            rays = rays.iter().map(reduce).filter(|v| !v.is_zero()).collect();
            let ray = if hl.is_negative() { l.neg() } else { l };
            rays.push(normalize(ray));
            processed.push(h);
            dedupe(&mut rays);
            continue;
        }

        let signs: Vec<Ordering> = rays.iter().map(|r| eval_sign(&h, r)).collect();
        let zero_sets: Vec<Vec<bool>> = rays
            .iter()
            .map(|r| processed.iter().map(|p| eval_sign(p, r) == Ordering::Equal).collect())
            .collect();
        let mut next: Vec<Vector> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if signs[i] != Ordering::Less {
                next.push(r.clone());
            }
        }
        for p in (0..rays.len()).filter(|&i| signs[i] == Ordering::Greater) {
            for q in (0..rays.len()).filter(|&i| signs[i] == Ordering::Less) {
                let common: Vec<usize> = (0..processed.len())
                    .filter(|&c| zero_sets[p][c] && zero_sets[q][c])
                    .collect();
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != q)
                    .all(|r| !common.iter().all(|&c| zero_sets[r][c]));
                if !adjacent {
                    continue;
                }
                let hp = h.dot(&rays[p]);
                let hq = h.dot(&rays[q]);
                let v = rays[q].scale(&hp).sub(&rays[p].scale(&hq));
                if !v.is_zero() {
                    next.push(normalize(v));
                }
            }
        }
        rays = next;
        dedupe(&mut rays);
        processed.push(h);
    }
    Generators { rays, lineality }
}

fn dedupe(rays: &mut Vec<Vector>) {
    let mut out: Vec<Vector> = Vec::with_capacity(rays.len());
    for r in rays.drain(..) {
        if !out.iter().any(|o| o == &r) {
            out.push(r);
        }
    }
    *rays = out;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_quadrant() {
        let g = double_description(2, Mode::Exact, &[Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])]);
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays.len(), 2);
    }

    #[test]
    fn halfplane_keeps_lineality() {
        let g = double_description(3, Mode::Exact, &[Vector::from_ints(&[1, 1, 0])]);
        assert_eq!(g.lineality.len(), 2);
        assert_eq!(g.rays.len(), 1);
    }

    #[test]
    fn square_pyramid_has_four_rays() {
        let hs: Vec<Vector> = [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]
            .iter()
            .map(|h| Vector::from_ints(h))
            .collect();
        let g = double_description(3, Mode::Exact, &hs);
        assert_eq!(g.rays.len(), 4);
        for r in &g.rays {
            let zeros = hs.iter().filter(|h| h.dot(r).is_zero()).count();
            assert_eq!(zeros, 2);
        }
    }
}
