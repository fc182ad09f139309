//! The `toric` batch front end: one JSON job per invocation.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use super::cloud::{point_labels, write_cloud};
use super::gallery::{gallery_report, run_gallery, DEFAULT_GOLDENS};
use super::json::{
    parse, read_vector, read_vectors, subdivision_to_json, toric_point_to_json, vector_to_json, vectors_to_json,
    ConeDoc, FanDoc, PointsDoc,
};
use super::svg::{cloud_svg, fan_svg, subdivision_svg};
use crate::error::{Error, Result};
use crate::fan::{normal_fan, Fan, PointConfiguration};
use crate::hausdorff::{hausdorff_distance, sample_translate, sampling_resolution, LimitCorrespondence, PowerSumPath};
use crate::monoid::{hilbert_basis, toric_lattice_binomials};
use crate::numeric::{set_tolerance, Mode};
use crate::secondary::{
    all_triangulations_bounded, characteristic_vector, is_regular, regular_subdivision, secondary_fan,
    secondary_polytope, Subdivision, DEFAULT_SIZE_BOUND,
};
use crate::variety::{birch_solve_weighted, limit_one_parameter, moment_map, recover_fan, TorusElement, ToricVariety};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Clone, Debug, Default, clap::Args)]
pub struct Options {
    /// Input JSON document (stdin when absent or `-`).
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Arithmetic for parsed scalars; inferred from the input by default.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    /// Float comparison tolerance.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Sample count for point clouds.
    #[arg(long, global = true)]
    pub density: Option<usize>,
    /// Largest configuration for exhaustive triangulation.
    #[arg(long = "size-bound", global = true)]
    pub size_bound: Option<usize>,
    /// Directory for CSV point clouds.
    #[arg(long = "csv-dir", global = true, value_name = "DIR")]
    pub csv_dir: Option<PathBuf>,
    /// Write a drawing of the result.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Golden file for `paper-gallery`.
    #[arg(long, global = true, value_name = "PATH")]
    pub golden: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Dual cone.
    Dual,
    /// All faces with exposing functionals.
    Faces,
    /// Lineality space.
    Lineality,
    /// Separating functional of two cones meeting in a common face.
    Separate,
    /// Hilbert basis of the dual monoid.
    HilbertBasis,
    /// Lattice binomials of a configuration.
    ToricBinomials,
    /// Normal fan of the convex hull.
    NormalFan,
    /// Validate fan axioms.
    CheckFan,
    /// Product of two fans.
    ProductFan,
    /// Star of a cone.
    Star,
    /// Completeness test.
    IsComplete,
    /// Solve the moment map equations.
    BirchSolve,
    /// Algebraic moment map of a simplex point.
    MomentMap,
    /// One-parameter limits.
    LimitOps,
    /// Rebuild a fan from sampled limits.
    RecoverFan,
    /// Subdivision induced by a lifting.
    RegularSubdivision,
    /// Regularity test with a witness.
    IsRegular,
    /// All triangulations.
    Triangulations,
    /// Secondary polytope.
    SecondaryPolytope,
    /// Secondary fan.
    SecondaryFan,
    /// Limit of translates along a path, with sampled distances.
    HausdorffLimit,
    /// Recompute the worked examples and compare with goldens.
    PaperGallery,
}

#[derive(Debug, Parser)]
#[command(name = "toric", version, about = "Cones, fans, toric varieties, secondary polytopes and Hausdorff limits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

/// One command with its parsed input document.
#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    pub input: Option<Value>,
    pub options: Options,
}

/// The JSON result and whether the job counts as successful.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub success: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SeparateDoc {
    first: ConeDoc,
    second: ConeDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductDoc {
    first: FanDoc,
    second: FanDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StarDoc {
    fan: FanDoc,
    cone: Vec<Vec<Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BirchDoc {
    #[serde(default)]
    dim: Option<usize>,
    points: Vec<Vec<Value>>,
    target: Vec<Value>,
    #[serde(default)]
    log_omega: Option<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MomentDoc {
    #[serde(default)]
    dim: Option<usize>,
    points: Vec<Vec<Value>>,
    z: Vec<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LimitDoc {
    fan: FanDoc,
    directions: Vec<Vec<Value>>,
    #[serde(default)]
    base: Option<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LiftingDoc {
    #[serde(default)]
    dim: Option<usize>,
    points: Vec<Vec<Value>>,
    lifting: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CellsDoc {
    #[serde(default)]
    dim: Option<usize>,
    points: Vec<Vec<Value>>,
    cells: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    exponent: f64,
    coefficient: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HausdorffDoc {
    #[serde(default)]
    dim: Option<usize>,
    points: Vec<Vec<Value>>,
    path: Vec<TermDoc>,
    #[serde(default)]
    scales: Option<Vec<f64>>,
}

fn points(dim: Option<usize>, rows: Vec<Vec<Value>>, mode: Option<Mode>) -> Result<PointConfiguration> {
    PointsDoc { dim, points: rows }.to_config(mode)
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Invalid(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    }
    fs::write(path, text).map_err(|e| io_error(path, e))
}

fn fan_json(f: &Fan) -> Value {
    serde_json::to_value(FanDoc::from_fan(f)).expect("serializable")
}

fn cone_json(c: &crate::cone::Cone) -> Value {
    serde_json::to_value(ConeDoc::from_cone(c)).expect("serializable")
}

impl Job {
    fn doc<T: for<'de> Deserialize<'de>>(&self) -> Result<T> {
        parse(self.input.as_ref().ok_or_else(|| Error::Invalid("this command needs an input document".into()))?)
    }

    fn mode(&self) -> Option<Mode> {
        self.options.mode.map(Mode::from)
    }

    fn svg(&self, draw: impl FnOnce() -> Result<String>) -> Result<()> {
        match &self.options.svg {
            Some(path) => write_file(path, &draw()?),
            None => Ok(()),
        }
    }

    fn bound(&self) -> usize {
        self.options.size_bound.unwrap_or(DEFAULT_SIZE_BOUND)
    }
}

/// Executes a job, writing any requested artifacts.
pub fn run(job: &Job) -> Result<Outcome> {
    if let Some(t) = job.options.tolerance {
        set_tolerance(t);
    }
    let mode = job.mode();
    let ok = |json: Value| Ok(Outcome { json, success: true });
    match job.command {
        Command::Dual => ok(cone_json(&job.doc::<ConeDoc>()?.to_cone(mode)?.dual())),
        Command::Faces => {
            let c = job.doc::<ConeDoc>()?.to_cone(mode)?;
            let faces: Vec<Value> = c
                .all_faces()
                .iter()
                .map(|f| {
                    json!({
                        "dimension": f.dimension(),
                        "functional": vector_to_json(&f.functional),
                        "generators": cone_json(&f.cone)["generators"],
                    })
                })
                .collect();
            ok(json!({ "faces": faces }))
        }
        Command::Lineality => {
            let c = job.doc::<ConeDoc>()?.to_cone(mode)?;
            ok(json!({ "dimension": c.canonical().lineality.len(), "basis": vectors_to_json(&c.canonical().lineality) }))
        }
        Command::Separate => {
            let d = job.doc::<SeparateDoc>()?;
            let (a, b) = (d.first.to_cone(mode)?, d.second.to_cone(mode)?);
            let m = a.separate(&b)?;
            ok(json!({ "functional": vector_to_json(&m), "common_face": cone_json(&a.intersect(&b)?) }))
        }
        Command::HilbertBasis => {
            let hb = hilbert_basis(&job.doc::<ConeDoc>()?.to_cone(mode)?)?;
            ok(json!({ "elements": vectors_to_json(&hb.elements()), "pointed": vectors_to_json(&hb.pointed), "lineality": vectors_to_json(&hb.lineality) }))
        }
        Command::ToricBinomials => {
            let p = job.doc::<PointsDoc>()?.to_config(mode)?;
            let bins: Vec<Value> = toric_lattice_binomials(&p)?
                .iter()
                .map(|b| {
                    let e: Vec<String> = b.exponent().iter().map(|k| k.to_string()).collect();
                    json!({ "exponent": e, "binomial": b.to_string() })
                })
                .collect();
            ok(json!({ "binomials": bins }))
        }
        Command::NormalFan => {
            let p = job.doc::<PointsDoc>()?.to_config(mode)?;
            let f = normal_fan(&p)?;
            job.svg(|| fan_svg(&f))?;
            ok(fan_json(&f))
        }
        Command::CheckFan => {
            let f = job.doc::<FanDoc>()?.to_fan(mode)?;
            job.svg(|| fan_svg(&f))?;
            ok(json!({ "valid": true, "cones": f.len(), "maximal": f.maximal_cones().len(), "complete": f.is_complete() }))
        }
        Command::ProductFan => {
            let d = job.doc::<ProductDoc>()?;
            ok(fan_json(&d.first.to_fan(mode)?.product(&d.second.to_fan(mode)?)?))
        }
        Command::Star => {
            let d = job.doc::<StarDoc>()?;
            let f = d.fan.to_fan(mode)?;
            let sigma = ConeDoc { dim: f.ambient_dim(), generators: d.cone }.to_cone(Some(f.mode()))?;
            let i = f.index_of(&sigma).ok_or(Error::NotAFace)?;
            let star = f.star(i)?;
            ok(json!({
                "fan": fan_json(&star.fan),
                "quotient": vectors_to_json(&star.quotient.row_vectors()),
                "complement": star.complement,
            }))
        }
        Command::IsComplete => ok(json!({ "complete": job.doc::<FanDoc>()?.to_fan(mode)?.is_complete() })),
        Command::BirchSolve => {
            let d = job.doc::<BirchDoc>()?;
            let p = points(d.dim, d.points, mode)?;
            let b = read_vector(&d.target, Some(p.mode()))?;
            let lw = d.log_omega.unwrap_or_else(|| vec![0.0; p.len()]);
            let x = birch_solve_weighted(&p, &lw, &b)?;
            let image = moment_map(&p, &x.values())?;
            let residual = image.iter().zip(b.to_f64s()).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max);
            ok(json!({ "values": x.values(), "support": x.support(), "residual": residual }))
        }
        Command::MomentMap => {
            let d = job.doc::<MomentDoc>()?;
            let p = points(d.dim, d.points, mode)?;
            ok(json!({ "image": moment_map(&p, &d.z)? }))
        }
        Command::LimitOps => {
            let d = job.doc::<LimitDoc>()?;
            let f = d.fan.to_fan(mode)?;
            let var = ToricVariety::new(f.clone());
            let base = match d.base {
                Some(w) => var.dense_point(&TorusElement::from_f64s(&w), 0)?,
                None => var.identity(),
            };
            let dirs = read_vectors(&d.directions, Some(f.mode()))?;
            let mut rows = Vec::new();
            for v in &dirs {
                match limit_one_parameter(&var, v, &base) {
                    Ok(x) => {
                        let (tau, _) = var.orbit_coordinates(&x)?;
                        rows.push(json!({
                            "direction": vector_to_json(v),
                            "limit": toric_point_to_json(&x),
                            "orbit": cone_json(&f.cones()[tau])["generators"],
                        }));
                    }
                    Err(Error::NoLimit) => rows.push(json!({ "direction": vector_to_json(v), "limit": null })),
                    Err(e) => return Err(e),
                }
            }
            ok(json!({ "compact": f.is_complete(), "limits": rows }))
        }
        Command::RecoverFan => {
            let f = job.doc::<FanDoc>()?.to_fan(mode)?;
            let r = recover_fan(&ToricVariety::new(f))?;
            job.svg(|| fan_svg(&r.fan))?;
            ok(json!({ "fan": fan_json(&r.fan), "class_sizes": r.class_sizes, "matches": r.matches }))
        }
        Command::RegularSubdivision => {
            let d = job.doc::<LiftingDoc>()?;
            let p = points(d.dim, d.points, mode)?;
            let lambda = read_vector(&d.lifting, Some(p.mode()))?;
            let s = regular_subdivision(&p, &lambda)?;
            job.svg(|| subdivision_svg(&p, &s))?;
            ok(json!({ "cells": subdivision_to_json(&s) }))
        }
        Command::IsRegular => {
            let d = job.doc::<CellsDoc>()?;
            let p = points(d.dim, d.points, mode)?;
            let s = Subdivision::new(d.cells);
            job.svg(|| subdivision_svg(&p, &s))?;
            let w = is_regular(&p, &s)?;
            ok(json!({ "regular": w.is_some(), "lifting": w.as_ref().map(vector_to_json) }))
        }
        Command::Triangulations => {
            let p = job.doc::<PointsDoc>()?.to_config(mode)?;
            let mut rows = Vec::new();
            for t in all_triangulations_bounded(&p, job.bound())? {
                rows.push(json!({
                    "cells": subdivision_to_json(&t),
                    "characteristic_vector": vector_to_json(&characteristic_vector(&p, &t)?),
                    "regular": is_regular(&p, &t)?.is_some(),
                }));
            }
            ok(json!({ "count": rows.len(), "triangulations": rows }))
        }
        Command::SecondaryPolytope => {
            let p = job.doc::<PointsDoc>()?.to_config(mode)?;
            if p.len() > job.bound() {
                return Err(Error::SizeBound(p.len(), job.bound()));
            }
            let sp = secondary_polytope(&p)?;
            let vertices: Vec<Value> = sp
                .vertices
                .iter()
                .zip(&sp.witnesses)
                .map(|(&i, w)| {
                    json!({
                        "cells": subdivision_to_json(&sp.triangulations[i]),
                        "vector": vector_to_json(&sp.vectors[i]),
                        "witness": vector_to_json(w),
                    })
                })
                .collect();
            ok(json!({ "dimension": sp.dimension(), "triangulations": sp.triangulations.len(), "vertices": vertices }))
        }
        Command::SecondaryFan => {
            let p = job.doc::<PointsDoc>()?.to_config(mode)?;
            if p.len() > job.bound() {
                return Err(Error::SizeBound(p.len(), job.bound()));
            }
            let f = secondary_fan(&p)?;
            let subs: Vec<Value> = f
                .maximal_cones()
                .iter()
                .map(|&i| regular_subdivision(&p, &f.cones()[i].relint_point()).map(|s| subdivision_to_json(&s)))
                .collect::<Result<_>>()?;
            job.svg(|| fan_svg(&f))?;
            ok(json!({ "fan": fan_json(&f), "subdivisions": subs, "complete": f.is_complete() }))
        }
        Command::HausdorffLimit => hausdorff_limit(job),
        Command::PaperGallery => {
            let text = match &job.options.golden {
                Some(path) => fs::read_to_string(path).map_err(|e| io_error(path, e))?,
                None => DEFAULT_GOLDENS.to_string(),
            };
            let goldens: Value = serde_json::from_str(&text).map_err(|e| Error::Invalid(e.to_string()))?;
            let items = run_gallery(&goldens)?;
            let report = gallery_report(&items);
            let success = report["all_pass"] == json!(true);
            Ok(Outcome { json: report, success })
        }
    }
}

fn hausdorff_limit(job: &Job) -> Result<Outcome> {
    let d = job.doc::<HausdorffDoc>()?;
    let p = points(d.dim, d.points, job.mode())?;
    let terms = d
        .path
        .iter()
        .map(|t| Ok((t.exponent, read_vector(&t.coefficient, Some(p.mode()))?)))
        .collect::<Result<Vec<_>>>()?;
    let path = PowerSumPath::new(terms)?;
    let density = job.options.density.unwrap_or(2000);
    let scales = d.scales.unwrap_or_else(|| vec![1.0, 2.0, 4.0, 8.0, 16.0]);
    let lc = LimitCorrespondence::new(&p)?;
    let limit = lc.limit_complex(&path)?;
    let psi = lc.psi(&limit)?;
    let target = limit.sample(&p, density)?;
    let labels = point_labels(p.len());
    let csv = |name: String, cloud: &[Vec<f64>]| -> Result<()> {
        if let Some(dir) = &job.options.csv_dir {
            fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
            let path = dir.join(name);
            let file = fs::File::create(&path).map_err(|e| io_error(&path, e))?;
            write_cloud(file, &labels, cloud)?;
        }
        Ok(())
    };
    csv("limit.csv".into(), &target)?;
    let mut rows = Vec::new();
    for (k, &s) in scales.iter().enumerate() {
        let lw: Vec<f64> = path.eval(s).iter().map(|x| 0.0 - x).collect();
        let cloud = sample_translate(&p, &lw, density)?;
        csv(format!("translate_{k:02}.csv"), &cloud)?;
        rows.push(json!({ "s": s, "distance": hausdorff_distance(&cloud, &target)? }));
    }
    job.svg(|| cloud_svg(&target))?;
    Ok(Outcome {
        json: json!({
            "limit": { "cells": subdivision_to_json(&limit.subdivision), "log_omega": limit.log_omega },
            "psi": toric_point_to_json(&psi),
            "resolution": sampling_resolution(&target)?,
            "metric": "euclidean",
            "distances": rows,
        }),
        success: true,
    })
}

fn read_input(options: &Options, command: Command) -> Result<Option<Value>> {
    if command == Command::PaperGallery && options.input.is_none() {
        return Ok(None);
    }
    let text = match options.input.as_deref() {
        Some(path) if path != Path::new("-") => fs::read_to_string(path).map_err(|e| io_error(path, e))?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Invalid(e.to_string()))?;
            s
        }
    };
    serde_json::from_str(&text).map(Some).map_err(|e| Error::Invalid(format!("malformed JSON: {e}")))
}

/// Parses arguments, runs the job and returns the process exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 1;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let result = read_input(&cli.options, cli.command).and_then(|input| {
        let job = Job { command: cli.command, input, options: cli.options.clone() };
        run(&job)
    });
    match result {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n";
            let written = match &cli.options.out {
                Some(path) => write_file(path, &text),
                None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Invalid(e.to_string())),
            };
            match written {
                Err(e) => {
                    let _ = writeln!(stderr, "{}", json!({ "error": e.to_string(), "exit_code": 1 }));
                    1
                }
                Ok(()) if outcome.success => 0,
                Ok(()) => 2,
            }
        }
        Err(e) => {
            let code = e.exit_code();
            let _ = writeln!(stderr, "{}", json!({ "error": e.to_string(), "exit_code": code }));
            code
        }
    }
}
