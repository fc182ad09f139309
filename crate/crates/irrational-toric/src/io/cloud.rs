//! Point clouds as RFC-4180 CSV, one row per point and one column per label.

use std::io::{Read, Write};

use crate::error::{Error, Result};

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Invalid(e.to_string())
}

pub fn write_cloud<W: Write>(out: W, labels: &[String], cloud: &[Vec<f64>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(labels).map_err(io_err)?;
    for row in cloud {
        if row.len() != labels.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: row.len() });
        }
        w.write_record(row.iter().map(|x| x.to_string())).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

pub fn read_cloud<R: Read>(input: R) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let mut r = csv::Reader::from_reader(input);
    let labels = r.headers().map_err(io_err)?.iter().map(str::to_string).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(io_err)?;
        rows.push(rec.iter().map(|s| s.parse::<f64>().map_err(io_err)).collect::<Result<Vec<_>>>()?);
    }
    Ok((labels, rows))
}

/// Column names `a0, a1, ...`.
pub fn point_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("a{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let cloud = vec![vec![0.1, 0.9], vec![1.0 / 3.0, 2.0 / 3.0]];
        let mut buf = Vec::new();
        write_cloud(&mut buf, &point_labels(2), &cloud).unwrap();
        let (labels, back) = read_cloud(buf.as_slice()).unwrap();
        assert_eq!(labels, vec!["a0", "a1"]);
        assert_eq!(back, cloud);
    }
}
