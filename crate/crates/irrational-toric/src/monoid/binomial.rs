use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::PointConfiguration;
use crate::numeric::integer::{integer_kernel, IntMatrix};
use crate::numeric::Mode;

/// A binomial `x^plus - x^minus` with `A plus = A minus` and disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBinomial {
    pub plus: Vec<BigInt>,
    pub minus: Vec<BigInt>,
}

impl LatticeBinomial {
    pub fn from_exponent(w: &[BigInt]) -> Self {
        let plus = w.iter().map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() }).collect();
        let minus = w.iter().map(|x| if x.is_negative() { -x } else { BigInt::zero() }).collect();
        LatticeBinomial { plus, minus }
    }

    /// `plus - minus`.
    pub fn exponent(&self) -> Vec<BigInt> {
        self.plus.iter().zip(&self.minus).map(|(a, b)| a - b).collect()
    }

    /// Evaluates `(z^plus, z^minus)` at a positive point.
    pub fn evaluate(&self, z: &[f64]) -> (f64, f64) {
        let mono = |e: &[BigInt]| -> f64 {
            e.iter().zip(z).map(|(k, x)| x.powf(k.to_string().parse::<f64>().unwrap_or(0.0))).product()
        };
        (mono(&self.plus), mono(&self.minus))
    }
}

fn monomial(e: &[BigInt]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, k)| !k.is_zero())
        .map(|(i, k)| if k.is_one() { format!("x{i}") } else { format!("x{i}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for LatticeBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", monomial(&self.plus), monomial(&self.minus))
    }
}

/// Binomials from a lattice basis of `ker_Z(A)`, one per basis vector.
pub fn toric_lattice_binomials(p: &PointConfiguration) -> Result<Vec<LatticeBinomial>> {
    if p.mode() != Mode::Exact {
        return Err(Error::ExactRequired);
    }
    let cols: Vec<Vec<BigInt>> = p
        .points()
        .iter()
        .map(|a| a.to_bigints().ok_or_else(|| Error::Invalid("points must be integral".into())))
        .collect::<Result<_>>()?;
    let a: IntMatrix = (0..p.dim()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let a = if a.is_empty() { vec![vec![BigInt::zero(); p.len()]] } else { a };
    Ok(integer_kernel(&a, p.len()).iter().map(|w| LatticeBinomial::from_exponent(w)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn twisted_cubic_style() {
        let p = PointConfiguration::from_ints(&[&[1, 0], &[1, 1], &[1, 2]]).unwrap();
        let b = toric_lattice_binomials(&p).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].exponent(), ints(&[1, -2, 1]));
        assert_eq!(b[0].to_string(), "x0*x2 - x1^2");
    }

    #[test]
    fn cusp() {
        let p = PointConfiguration::from_ints(&[&[2], &[3]]).unwrap();
        let b = toric_lattice_binomials(&p).unwrap();
        assert_eq!(b[0].exponent(), ints(&[3, -2]));
        assert_eq!(b[0].to_string(), "x0^3 - x1^2");
    }

    #[test]
    fn independent_points_have_none() {
        let p = PointConfiguration::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(toric_lattice_binomials(&p).unwrap().is_empty());
    }
}
