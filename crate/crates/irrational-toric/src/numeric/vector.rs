use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::scalar::{denominator_lcm, Mode, Scalar};
use crate::error::{Error, Result};

/// A coordinate vector in `M` or `N`; all entries share one scalar mode.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    coords: Vec<Scalar>,
    mode: Mode,
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let mode = coords.first().map(Scalar::mode).ok_or_else(|| {
            Error::Invalid("vector needs at least one coordinate".into())
        })?;
        if coords.iter().any(|c| c.mode() != mode) {
            return Err(Error::ModeMismatch);
        }
        Ok(Vector { coords, mode })
    }

    /// Like [`Vector::new`] but allows the empty vector of a given mode.
    pub fn with_mode(coords: Vec<Scalar>, mode: Mode) -> Result<Self> {
        if coords.iter().any(|c| c.mode() != mode) {
            return Err(Error::ModeMismatch);
        }
        Ok(Vector { coords, mode })
    }

    pub fn zeros(n: usize, mode: Mode) -> Self {
        Vector { coords: vec![Scalar::zero(mode); n], mode }
    }

    pub fn unit(n: usize, i: usize, mode: Mode) -> Self {
        let mut v = Self::zeros(n, mode);
        v.coords[i] = Scalar::one(mode);
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector {
            coords: xs.iter().map(|&x| Scalar::from_int(x, Mode::Exact)).collect(),
            mode: Mode::Exact,
        }
    }

    pub fn from_f64s(xs: &[f64]) -> Self {
        Vector { coords: xs.iter().map(|&x| Scalar::float(x)).collect(), mode: Mode::Float }
    }

    /// Float vector; unlike [`Vector::from_f64s`] the empty vector is allowed.
    pub fn from_f64s_or_empty(xs: &[f64]) -> Self {
        Vector { coords: xs.iter().map(|&x| Scalar::float(x)).collect(), mode: Mode::Float }
    }

    pub fn from_rationals(xs: Vec<BigRational>) -> Self {
        Vector { coords: xs.into_iter().map(Scalar::Exact).collect(), mode: Mode::Exact }
    }

    pub fn from_bigints(xs: &[BigInt]) -> Self {
        Self::from_rationals(xs.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, x: Scalar) {
        assert_eq!(x.mode(), self.mode, "mixed scalar modes");
        self.coords[i] = x;
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64).collect()
    }

    pub fn to_mode(&self, mode: Mode) -> Self {
        Vector { coords: self.coords.iter().map(|c| c.to_mode(mode)).collect(), mode }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    /// The canonical pairing `<u, v>`.
    pub fn pairing(&self, other: &Self) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.dot(other))
    }

    /// Unchecked pairing for validated inputs.
    pub fn dot(&self, other: &Self) -> Scalar {
        let mut acc = Scalar::zero(self.mode);
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc = &acc + &(a * b);
        }
        acc
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Vector { coords: self.coords.iter().map(|c| -c).collect(), mode: self.mode }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Vector { coords: self.coords.iter().map(|c| c * k).collect(), mode: self.mode }
    }

    /// `self + k * other`
    pub fn axpy(&self, k: &Scalar, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + &(k * b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Vector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
            mode: self.mode,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn norm_f64(&self) -> f64 {
        self.to_f64s().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.to_f64s().iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Scalar::is_integer)
    }

    /// Integer entries of an exact integral vector.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.coords
            .iter()
            .map(|c| match c {
                Scalar::Exact(q) if q.is_integer() => Some(q.to_integer()),
                _ => None,
            })
            .collect()
    }

    /// Positive rescaling to a primitive integer vector (exact) or unit vector (float).
    pub fn primitive(&self) -> Self {
        match self.mode {
            Mode::Exact => {
                let qs: Vec<&BigRational> = self.coords.iter().filter_map(Scalar::as_rational).collect();
                let l = denominator_lcm(qs.iter().copied());
                let ints: Vec<BigInt> = qs.iter().map(|q| (*q * &l).to_integer()).collect();
                let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                if g.is_zero() {
                    return self.clone();
                }
                Vector::from_bigints(&ints.iter().map(|x| x / &g).collect::<Vec<_>>())
            }
            Mode::Float => {
                let n = self.norm_f64();
                if n == 0.0 {
                    return self.clone();
                }
                Vector::from_f64s(&self.to_f64s().iter().map(|x| x / n).collect::<Vec<_>>())
            }
        }
    }

    /// Flips the sign so the first nonzero coordinate is positive.
    pub fn sign_normalized(&self) -> Self {
        match self.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Lexicographic comparison under tolerance.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp_tol(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.dim().cmp(&other.dim())
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.mode, other.mode, "mixed scalar modes");
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        Vector { coords, mode: self.mode }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let e1 = Vector::from_ints(&[1, 0]);
        let e2 = Vector::from_ints(&[0, 1]);
        assert!(e1.pairing(&e2).unwrap().is_zero());
        let m = Vector::from_ints(&[1, 2]);
        let v = Vector::from_ints(&[2, -1]);
        assert!(m.pairing(&v).unwrap().is_zero());
        let s = 2f64.sqrt();
        let u = Vector::from_f64s(&[-s, 1.0]);
        let w = Vector::from_f64s(&[1.0, s]);
        assert!(u.pairing(&w).unwrap().is_zero());
    }

    #[test]
    fn pairing_errors() {
        let a = Vector::from_ints(&[1, 0]);
        assert!(matches!(
            a.pairing(&Vector::from_ints(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(a.pairing(&Vector::from_f64s(&[1.0, 0.0])), Err(Error::ModeMismatch));
    }

    #[test]
    fn primitive_scaling() {
        let v = Vector::new(vec![
            Scalar::ratio(-3, 2).unwrap(),
            Scalar::ratio(3, 4).unwrap(),
            Scalar::zero(Mode::Exact),
        ])
        .unwrap();
        assert_eq!(v.primitive(), Vector::from_ints(&[-2, 1, 0]));
        assert_eq!(v.primitive().sign_normalized(), Vector::from_ints(&[2, -1, 0]));
        let f = Vector::from_f64s(&[3.0, 4.0]).primitive();
        assert!((f.norm_f64() - 1.0).abs() < 1e-15);
    }
}
