//! SVG 1.1 drawings of fans, subdivisions and point clouds. Data beyond two dimensions is
//! projected on its two leading principal axes, recorded in the metadata block.

use std::fmt::Write;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::fan::{Fan, PointConfiguration};
use crate::secondary::Subdivision;

const SIZE: f64 = 400.0;
const PALETTE: [&str; 6] = ["#f2c14e", "#5b8def", "#7bc47f", "#e86a5f", "#b48ede", "#5fc7c2"];

/// Projection to the plane: coordinates and the two axes used.
pub fn project_2d(pts: &[Vec<f64>]) -> (Vec<[f64; 2]>, Vec<Vec<f64>>) {
    let d = pts.first().map_or(0, Vec::len);
    let unit = |i: usize| (0..d).map(|k| if k == i { 1.0 } else { 0.0 }).collect::<Vec<f64>>();
    if d <= 2 {
        let axes = (0..d).map(unit).collect();
        return (pts.iter().map(|p| [p.first().copied().unwrap_or(0.0), p.get(1).copied().unwrap_or(0.0)]).collect(), axes);
    }
    let n = pts.len();
    let mean: Vec<f64> = (0..d).map(|k| pts.iter().map(|p| p[k]).sum::<f64>() / n as f64).collect();
    let centered = DMatrix::from_fn(n, d, |i, k| pts[i][k] - mean[k]);
    let svd = centered.svd(false, true);
    let vt = svd.v_t.expect("right singular vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let mut axes: Vec<Vec<f64>> = order.iter().take(2).map(|&r| (0..d).map(|k| vt[(r, k)]).collect()).collect();
    while axes.len() < 2 {
        axes.push(unit(axes.len()));
    }
    let proj = pts
        .iter()
        .map(|p| {
            let c = |ax: &Vec<f64>| p.iter().zip(ax).map(|(x, a)| x * a).sum::<f64>();
            [c(&axes[0]), c(&axes[1])]
        })
        .collect();
    (proj, axes)
}

struct Canvas {
    body: String,
    lo: [f64; 2],
    scale: f64,
}

impl Canvas {
    fn new(extent: &[[f64; 2]]) -> Self {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in extent {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        if !lo[0].is_finite() {
            lo = [0.0; 2];
            hi = [1.0; 2];
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
        let pad = 0.08 * span;
        Canvas { body: String::new(), lo: [lo[0] - pad, lo[1] - pad], scale: SIZE / (span + 2.0 * pad) }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        ((p[0] - self.lo[0]) * self.scale, SIZE - (p[1] - self.lo[1]) * self.scale)
    }

    fn polygon(&mut self, pts: &[[f64; 2]], fill: &str) {
        let coords: Vec<String> = pts.iter().map(|&p| self.map(p)).map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
        let _ = writeln!(self.body, r#"<polygon points="{}" fill="{fill}" fill-opacity="0.45" stroke="black" stroke-width="1"/>"#, coords.join(" "));
    }

    fn line(&mut self, a: [f64; 2], b: [f64; 2]) {
        let ((x1, y1), (x2, y2)) = (self.map(a), self.map(b));
        let _ = writeln!(self.body, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="1.5"/>"#);
    }

    fn dot(&mut self, p: [f64; 2], r: f64) {
        let (x, y) = self.map(p);
        let _ = writeln!(self.body, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{r}" fill="black"/>"#);
    }

    fn finish(self, axes: &[Vec<f64>]) -> String {
        let meta = serde_json::json!({ "axes": axes, "metric": "euclidean" });
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n<metadata>{meta}</metadata>\n{}</svg>\n",
            self.body
        )
    }
}

fn by_angle(mut pts: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    let n = pts.len().max(1) as f64;
    let c = [pts.iter().map(|p| p[0]).sum::<f64>() / n, pts.iter().map(|p| p[1]).sum::<f64>() / n];
    pts.sort_by(|a, b| (a[1] - c[1]).atan2(a[0] - c[0]).total_cmp(&(b[1] - c[1]).atan2(b[0] - c[0])));
    pts
}

fn normalized(v: [f64; 2]) -> [f64; 2] {
    let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
    if n == 0.0 { v } else { [v[0] / n, v[1] / n] }
}

/// Maximal cones as sectors, rays as segments of unit length.
pub fn fan_svg(f: &Fan) -> Result<String> {
    let rays: Vec<Vec<f64>> = f.cones().iter().flat_map(|c| c.generators().iter().map(|g| g.to_f64s())).collect();
    if rays.is_empty() {
        return Err(Error::Invalid("fan has no rays to draw".into()));
    }
    let (_, axes) = project_2d(&rays);
    let proj = |v: Vec<f64>| -> [f64; 2] {
        let c = |k: usize| axes[k].iter().zip(&v).map(|(a, x)| a * x).sum::<f64>();
        normalized([c(0), c(1)])
    };
    let mut canvas = Canvas::new(&[[-1.0, -1.0], [1.0, 1.0]]);
    for (k, &i) in f.maximal_cones().iter().enumerate() {
        let gens: Vec<[f64; 2]> = f.cones()[i].generators().iter().map(|g| proj(g.to_f64s())).collect();
        if gens.len() >= 2 {
            let mut pts = vec![[0.0, 0.0]];
            pts.extend(by_angle(gens).into_iter());
            canvas.polygon(&pts, PALETTE[k % PALETTE.len()]);
        }
    }
    for r in rays {
        canvas.line([0.0, 0.0], proj(r));
    }
    canvas.dot([0.0, 0.0], 3.0);
    Ok(canvas.finish(&axes))
}

/// Cells drawn as convex polygons over the projected points.
pub fn subdivision_svg(p: &PointConfiguration, s: &Subdivision) -> Result<String> {
    let pts: Vec<Vec<f64>> = p.points().iter().map(|a| a.to_f64s()).collect();
    let (proj, axes) = project_2d(&pts);
    let mut canvas = Canvas::new(&proj);
    for (k, cell) in s.cells().iter().enumerate() {
        let poly = by_angle(cell.iter().map(|&i| proj[i]).collect());
        canvas.polygon(&poly, PALETTE[k % PALETTE.len()]);
    }
    for q in &proj {
        canvas.dot(*q, 3.0);
    }
    Ok(canvas.finish(&axes))
}

pub fn cloud_svg(cloud: &[Vec<f64>]) -> Result<String> {
    if cloud.is_empty() {
        return Err(Error::Invalid("empty point cloud".into()));
    }
    let (proj, axes) = project_2d(cloud);
    let mut canvas = Canvas::new(&proj);
    for q in &proj {
        canvas.dot(*q, 1.0);
    }
    Ok(canvas.finish(&axes))
}
