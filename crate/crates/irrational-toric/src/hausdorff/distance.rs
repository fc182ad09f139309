use std::num::NonZero;

use kiddo::{ImmutableKdTree, SquaredEuclidean};

use crate::error::{Error, Result};

fn check(x: &[Vec<f64>], y: &[Vec<f64>]) -> Result<usize> {
    let d = x.first().ok_or_else(|| Error::Invalid("empty point cloud".into()))?.len();
    if y.is_empty() {
        return Err(Error::Invalid("empty point cloud".into()));
    }
    if let Some(bad) = x.iter().chain(y).find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: bad.len() });
    }
    Ok(d)
}

fn sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(u, v)| (u - v) * (u - v)).sum()
}

fn to_arrays<const K: usize>(pts: &[Vec<f64>]) -> Vec<[f64; K]> {
    pts.iter().map(|p| std::array::from_fn(|i| p[i])).collect()
}

fn directed_kd<const K: usize>(x: &[Vec<f64>], y: &[Vec<f64>]) -> Option<f64> {
    let tree = ImmutableKdTree::<f64, K>::new_from_slice(&to_arrays::<K>(y)).ok()?;
    let worst = to_arrays::<K>(x)
        .iter()
        .map(|q| tree.query(q).nearest_one::<SquaredEuclidean<f64>>().execute().distance)
        .fold(0.0, f64::max);
    Some(worst.sqrt())
}

fn gaps_kd<const K: usize>(x: &[Vec<f64>]) -> Option<f64> {
    let pts = to_arrays::<K>(x);
    let tree = ImmutableKdTree::<f64, K>::new_from_slice(&pts).ok()?;
    let two = NonZero::new(2usize).expect("nonzero");
    let worst = pts
        .iter()
        .map(|q| {
            let hits = tree.query(q).nearest_n::<SquaredEuclidean<f64>>(two).execute();
            hits.get(1).map_or(0.0, |h| h.distance)
        })
        .fold(0.0, f64::max);
    Some(worst.sqrt())
}

macro_rules! dispatch {
    ($d:expr, $f:ident, $($arg:expr),*) => {
        match $d {
            1 => $f::<1>($($arg),*),
            2 => $f::<2>($($arg),*),
            3 => $f::<3>($($arg),*),
            4 => $f::<4>($($arg),*),
            5 => $f::<5>($($arg),*),
            6 => $f::<6>($($arg),*),
            7 => $f::<7>($($arg),*),
            8 => $f::<8>($($arg),*),
            9 => $f::<9>($($arg),*),
            10 => $f::<10>($($arg),*),
            _ => None,
        }
    };
}

/// `sup_{a ∈ X} inf_{b ∈ Y} |a - b|`.
pub fn directed_distance(x: &[Vec<f64>], y: &[Vec<f64>]) -> Result<f64> {
    let d = check(x, y)?;
    Ok(dispatch!(d, directed_kd, x, y).unwrap_or_else(|| {
        x.iter().map(|a| y.iter().map(|b| sq(a, b)).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max).sqrt()
    }))
}

/// Hausdorff distance between finite clouds: the larger of the two directed distances.
pub fn hausdorff_distance(x: &[Vec<f64>], y: &[Vec<f64>]) -> Result<f64> {
    Ok(directed_distance(x, y)?.max(directed_distance(y, x)?))
}

/// Largest distance from a point of the cloud to its nearest other point.
pub fn sampling_resolution(x: &[Vec<f64>]) -> Result<f64> {
    let d = check(x, x)?;
    if x.len() < 2 {
        return Ok(0.0);
    }
    Ok(dispatch!(d, gaps_kd, x).unwrap_or_else(|| {
        (0..x.len())
            .map(|i| (0..x.len()).filter(|&j| j != i).map(|j| sq(&x[i], &x[j])).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
            .sqrt()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_distances() {
        let x = vec![vec![0.0, 0.0], vec![1.0, 0.0]];
        assert_eq!(hausdorff_distance(&x, &x).unwrap(), 0.0);
        let a = vec![vec![0.0, 0.0]];
        let b = vec![vec![3.0, 4.0]];
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), 5.0);
        let y = vec![vec![0.0, 0.0]];
        assert_eq!(directed_distance(&y, &x).unwrap(), 0.0);
        assert_eq!(hausdorff_distance(&x, &y).unwrap(), 1.0);
        assert!(hausdorff_distance(&x, &[]).is_err());
    }

    #[test]
    fn kd_and_brute_force_agree() {
        let pts: Vec<Vec<f64>> = (0..200).map(|i| (0..11).map(|k| ((i * 7 + k * 13) % 17) as f64 / 17.0).collect()).collect();
        let short: Vec<Vec<f64>> = pts.iter().map(|p| p[..3].to_vec()).collect();
        let other: Vec<Vec<f64>> = short.iter().map(|p| p.iter().map(|x| x * 0.9 + 0.01).collect()).collect();
        let kd = directed_distance(&short, &other).unwrap();
        let brute = short
            .iter()
            .map(|a| other.iter().map(|b| sq(a, b)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
            .sqrt();
        assert!((kd - brute).abs() < 1e-12);
        assert!(sampling_resolution(&pts).unwrap() >= 0.0);
    }
}
