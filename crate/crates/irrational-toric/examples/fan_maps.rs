//! A map of fans from a Hirzebruch fan onto the fan of P^1.
use irrational_toric::cone::Cone;
use irrational_toric::fan::{validate_fan, validate_fan_map};
use irrational_toric::{Matrix, Result};

fn main() -> Result<()> {
    let r = 3;
    let cones = [[[1, 0], [0, 1]], [[1, 0], [0, -1]], [[-1, r], [0, -1]], [[-1, r], [0, 1]]]
        .iter()
        .map(|[a, b]| Cone::from_ints(2, &[a, b]))
        .collect::<Result<Vec<_>>>()?;
    let hirzebruch = validate_fan(2, &cones)?;
    let line = validate_fan(1, &[Cone::from_ints(1, &[&[1]])?, Cone::from_ints(1, &[&[-1]])?])?;
    let m = validate_fan_map(&Matrix::from_ints(&[&[1, 0]]), &hirzebruch, &line)?;
    for (i, j) in m.assignment.iter().enumerate() {
        let rays: Vec<String> = hirzebruch.cones()[i].canonical().rays.iter().map(|v| v.to_string()).collect();
        let image: Vec<String> = line.cones()[*j].canonical().rays.iter().map(|v| v.to_string()).collect();
        println!("cone{{{}}} -> cone{{{}}}", rays.join(", "), image.join(", "));
    }
    Ok(())
}
