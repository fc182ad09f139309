//! JSON documents with exact scalars, CSV point clouds and SVG drawings.
use irrational_toric::fan::{normal_fan, PointConfiguration};
use irrational_toric::hausdorff::sample_translate;
use irrational_toric::io::cloud::{point_labels, read_cloud, write_cloud};
use irrational_toric::io::json::{ConeDoc, FanDoc};
use irrational_toric::io::svg::fan_svg;
use irrational_toric::{Error, Result};

fn main() -> Result<()> {
    let doc: ConeDoc = serde_json::from_str(r#"{"dim": 2, "generators": [["1/2", 3], [0, "-7/3"]]}"#)
        .map_err(|e| Error::Invalid(e.to_string()))?;
    let cone = doc.to_cone(None)?;
    println!("{}", serde_json::to_string(&ConeDoc::from_cone(&cone.dual())).unwrap());

    let square = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?;
    let fan = normal_fan(&square)?;
    println!("{}", serde_json::to_string(&FanDoc::from_fan(&fan)).unwrap());
    println!("svg of {} bytes", fan_svg(&fan)?.len());

    let cloud = sample_translate(&square, &[0.0, 0.0, 0.0, -1.0], 20)?;
    let mut buf = Vec::new();
    write_cloud(&mut buf, &point_labels(4), &cloud)?;
    let (labels, back) = read_cloud(buf.as_slice())?;
    println!("csv header {labels:?}, {} rows round-tripped", back.len());
    Ok(())
}
