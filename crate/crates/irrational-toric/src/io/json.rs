//! JSON codecs. Exact scalars are strings (`"3"`, `"-1/2"`); floats are numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan, PointConfiguration};
use crate::numeric::{Mode, Scalar, Vector};
use crate::secondary::Subdivision;
use crate::variety::{Chart, ToricPoint};

fn schema(msg: impl std::fmt::Display) -> Error {
    Error::Invalid(msg.to_string())
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let (p, q) = (BigInt::from_str(p.trim()).ok()?, BigInt::from_str(q.trim()).ok()?);
        return (q != BigInt::from(0)).then(|| BigRational::new(p, q));
    }
    if let Ok(n) = BigInt::from_str(s) {
        return Some(BigRational::from_integer(n));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = mantissa.strip_prefix('-').map_or((false, mantissa), |b| (true, b));
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = BigInt::from_str(&format!("{int}{frac}")).ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if shift >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-shift) as usize))
    };
    if neg {
        q = -q;
    }
    Some(q)
}

/// Strings and integers read exactly; other numbers read as floats.
pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_rational(s).map(Scalar::exact).ok_or_else(|| schema(format!("not a rational number: {s:?}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_int(i, Mode::Exact))
            } else {
                n.as_f64().map(Scalar::float).ok_or_else(|| schema(format!("bad number {n}")))
            }
        }
        other => Err(schema(format!("expected a number, found {other}"))),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(q) if q.is_integer() => Value::String(q.numer().to_string()),
        Scalar::Exact(q) => Value::String(format!("{}/{}", q.numer(), q.denom())),
        Scalar::Float(x) if x.is_finite() => json!(x),
        Scalar::Float(x) => Value::String(x.to_string()),
    }
}

pub fn vector_to_json(v: &Vector) -> Value {
    Value::Array(v.coords().iter().map(scalar_to_json).collect())
}

pub fn vectors_to_json(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(vector_to_json).collect())
}

/// Reads rows of scalars. Without `mode`, the rows are exact unless some entry is a float.
pub fn read_vectors(rows: &[Vec<Value>], mode: Option<Mode>) -> Result<Vec<Vector>> {
    let parsed: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(scalar_from_json).collect()).collect::<Result<_>>()?;
    let mode = mode.unwrap_or(if parsed.iter().flatten().all(|s| s.mode() == Mode::Exact) { Mode::Exact } else { Mode::Float });
    parsed
        .into_iter()
        .map(|r| Vector::with_mode(r.into_iter().map(|s| s.to_mode(mode)).collect(), mode))
        .collect()
}

pub fn read_vector(row: &[Value], mode: Option<Mode>) -> Result<Vector> {
    Ok(read_vectors(&[row.to_vec()], mode)?.remove(0))
}

fn common_mode(groups: &[&[Vec<Value>]], mode: Option<Mode>) -> Result<Mode> {
    if let Some(m) = mode {
        return Ok(m);
    }
    for rows in groups {
        for v in rows.iter().flatten() {
            if scalar_from_json(v)?.mode() == Mode::Float {
                return Ok(Mode::Float);
            }
        }
    }
    Ok(Mode::Exact)
}

/// A cone by its generators.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    pub dim: usize,
    pub generators: Vec<Vec<Value>>,
}

impl ConeDoc {
    pub fn from_cone(c: &Cone) -> Self {
        let canon = c.canonical();
        let mut gens: Vec<Vector> = canon.rays.clone();
        for l in &canon.lineality {
            gens.push(l.clone());
            gens.push(l.neg());
        }
        ConeDoc { dim: c.ambient_dim(), generators: gens.iter().map(|g| g.coords().iter().map(scalar_to_json).collect()).collect() }
    }

    pub fn to_cone(&self, mode: Option<Mode>) -> Result<Cone> {
        let mode = common_mode(&[&self.generators], mode)?;
        let gens = read_vectors(&self.generators, Some(mode))?;
        Cone::new(self.dim, mode, gens)
    }
}

/// A fan by generators of its maximal cones, optionally labelled by point indices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    pub dim: usize,
    pub cones: Vec<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<usize>>>,
}

impl FanDoc {
    pub fn from_fan(f: &Fan) -> Self {
        let max = f.maximal_cones();
        let cones = max.iter().map(|&i| ConeDoc::from_cone(&f.cones()[i]).generators).collect();
        let labels = f.labels().map(|l| max.iter().map(|&i| l[i].clone()).collect());
        FanDoc { dim: f.ambient_dim(), cones, labels }
    }

    pub fn to_fan(&self, mode: Option<Mode>) -> Result<Fan> {
        let groups: Vec<&[Vec<Value>]> = self.cones.iter().map(|c| c.as_slice()).collect();
        let mode = common_mode(&groups, mode)?;
        let cones = self
            .cones
            .iter()
            .map(|g| Cone::new(self.dim, mode, read_vectors(g, Some(mode))?))
            .collect::<Result<Vec<_>>>()?;
        validate_fan(self.dim, &cones)
    }
}

/// A point configuration.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PointsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub points: Vec<Vec<Value>>,
}

impl PointsDoc {
    pub fn from_config(p: &PointConfiguration) -> Self {
        PointsDoc { dim: Some(p.dim()), points: p.points().iter().map(|v| v.coords().iter().map(scalar_to_json).collect()).collect() }
    }

    pub fn to_config(&self, mode: Option<Mode>) -> Result<PointConfiguration> {
        let dim = self.dim.or_else(|| self.points.first().map(Vec::len)).ok_or_else(|| schema("empty configuration needs dim"))?;
        let mode = common_mode(&[&self.points], mode)?;
        PointConfiguration::new(dim, mode, read_vectors(&self.points, Some(mode))?)
    }
}

pub fn subdivision_to_json(s: &Subdivision) -> Value {
    json!(s.cells())
}

pub fn toric_point_to_json(x: &ToricPoint) -> Value {
    let chart = match &x.chart {
        Chart::Cone(i) => json!({ "cone": i }),
        Chart::Configuration => json!("configuration"),
    };
    json!({ "chart": chart, "values": x.values(), "support": x.support() })
}

/// Parses a document, mapping serde errors to schema errors.
pub fn parse<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(schema)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_round_trip() {
        for s in ["3", "-1/2", "7/3", "0"] {
            let x = scalar_from_json(&json!(s)).unwrap();
            assert_eq!(scalar_to_json(&x), json!(s));
        }
        assert_eq!(scalar_from_json(&json!("0.25")).unwrap(), Scalar::ratio(1, 4).unwrap());
        assert_eq!(scalar_from_json(&json!("-1.5e2")).unwrap(), Scalar::from_int(-150, Mode::Exact));
        assert_eq!(scalar_from_json(&json!(0.1)).unwrap(), Scalar::float(0.1));
        assert_eq!(scalar_to_json(&Scalar::float(0.1)), json!(0.1));
        assert!(scalar_from_json(&json!("x")).is_err());
        assert!(scalar_from_json(&json!("1/0")).is_err());
    }

    #[test]
    fn documents_round_trip() {
        let c = Cone::from_ints(2, &[&[2, -1], &[0, 1]]).unwrap();
        let doc = ConeDoc::from_cone(&c);
        let text = serde_json::to_value(&doc).unwrap();
        let back: ConeDoc = parse(&text).unwrap();
        assert_eq!(back, doc);
        assert!(back.to_cone(None).unwrap().equals(&c));
        assert!(parse::<ConeDoc>(&json!({"dim": 2, "generators": [], "extra": 1})).is_err());
        let p = PointsDoc { dim: None, points: vec![vec![json!(0)], vec![json!("1/2")]] };
        let q = p.to_config(None).unwrap();
        assert_eq!(PointsDoc::from_config(&q).to_config(None).unwrap(), q);
    }
}
