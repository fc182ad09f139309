use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695);

/// Current float tolerance.
pub fn tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(AtomicOrdering::Relaxed))
}

/// Replace the process-wide tolerance; returns the previous value.
pub fn set_tolerance(eps: f64) -> f64 {
    let eps = if eps.is_finite() && eps >= 0.0 { eps } else { DEFAULT_TOLERANCE };
    f64::from_bits(TOLERANCE_BITS.swap(eps.to_bits(), AtomicOrdering::Relaxed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn zero(mode: Mode) -> Self {
        Self::from_int(0, mode)
    }

    pub fn one(mode: Mode) -> Self {
        Self::from_int(1, mode)
    }

    pub fn from_int(n: i64, mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::from_integer(BigInt::from(n))),
            Mode::Float => Scalar::Float(n as f64),
        }
    }

    pub fn ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Exact(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    pub fn float(x: f64) -> Self {
        Scalar::Float(x)
    }

    pub fn exact(q: BigRational) -> Self {
        Scalar::Exact(q)
    }

    /// Exact binary value of a float.
    pub fn from_f64_exact(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Scalar::Exact)
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Float(_) => None,
        }
    }

    /// Converts to the requested mode (exact conversion of floats uses the binary value).
    pub fn to_mode(&self, mode: Mode) -> Self {
        match (self, mode) {
            (Scalar::Exact(_), Mode::Exact) | (Scalar::Float(_), Mode::Float) => self.clone(),
            (Scalar::Exact(q), Mode::Float) => Scalar::Float(q.to_f64().unwrap_or(f64::NAN)),
            (Scalar::Float(x), Mode::Exact) => {
                Scalar::Exact(BigRational::from_float(*x).unwrap_or_else(BigRational::zero))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Float(x) => x.abs() <= tolerance(),
        }
    }

    /// Sign under the tolerance policy.
    pub fn sign(&self) -> Ordering {
        match self {
            Scalar::Exact(q) => q.cmp(&BigRational::zero()),
            Scalar::Float(x) => {
                if x.abs() <= tolerance() {
                    Ordering::Equal
                } else if *x > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        match self {
            Scalar::Exact(q) => Scalar::Exact(q.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_integer(),
            Scalar::Float(x) => (x - x.round()).abs() <= tolerance(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.mode() == other.mode() {
            Ok(())
        } else {
            Err(Error::ModeMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.is_exact_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }

    fn is_exact_zero(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    /// Total order under tolerance (float values within ε compare equal).
    pub fn cmp_tol(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => (self.to_mode(Mode::Float) - other.to_mode(Mode::Float)).sign(),
        }
    }

    pub fn eq_tol(&self, other: &Self) -> bool {
        self.cmp_tol(other) == Ordering::Equal
    }

    pub fn recip(&self) -> Result<Self> {
        Scalar::one(self.mode()).checked_div(self)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero(Mode::Exact)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.mode() == other.mode() && self.eq_tol(other)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;

    /// `"p/q"` or an integer literal parses as exact; anything else as float.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int =
            |t: &str| t.trim().parse::<BigInt>().map_err(|_| Error::Invalid(format!("bad scalar {s:?}")));
        if let Some((p, q)) = s.split_once('/') {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Scalar::Exact(BigRational::new(p, q)));
        }
        if let Ok(n) = s.parse::<BigInt>() {
            return Ok(Scalar::Exact(BigRational::from_integer(n)));
        }
        s.parse::<f64>()
            .map(Scalar::Float)
            .map_err(|_| Error::Invalid(format!("bad scalar {s:?}")))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    _ => panic!("mixed scalar modes"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(-q),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Least common multiple of the denominators of a list of rationals.
pub(crate) fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    use num_integer::Integer;
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3/4", "-2", "0", "7/1"] {
            let x: Scalar = s.parse().unwrap();
            let back: Scalar = x.to_string().parse().unwrap();
            assert_eq!(x, back);
        }
        assert_eq!("6/8".parse::<Scalar>().unwrap().to_string(), "3/4");
        assert_eq!("0.25".parse::<Scalar>().unwrap().mode(), Mode::Float);
    }

    #[test]
    fn mixed_mode_is_rejected() {
        let a = Scalar::one(Mode::Exact);
        let b = Scalar::one(Mode::Float);
        assert_eq!(a.checked_add(&b), Err(Error::ModeMismatch));
        assert_eq!(a.checked_div(&Scalar::zero(Mode::Exact)), Err(Error::DivisionByZero));
    }

    #[test]
    fn float_zero_test_uses_tolerance() {
        assert!(Scalar::float(1e-12).is_zero());
        assert!(!Scalar::float(1e-6).is_zero());
        assert_eq!(Scalar::float(-1e-3).sign(), Ordering::Less);
        assert!((tolerance() - DEFAULT_TOLERANCE).abs() < 1e-24);
    }
}
