//! Triangulations, characteristic vectors, the secondary polytope and the secondary fan.
use irrational_toric::fan::PointConfiguration;
use irrational_toric::secondary::{secondary_fan, secondary_polytope};
use irrational_toric::Result;

fn main() -> Result<()> {
    let configs = [
        ("three points on a line", PointConfiguration::from_ints(&[&[0], &[1], &[2]])?),
        ("unit square", PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?),
        ("pentagon", PointConfiguration::from_ints(&[&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 2]])?),
    ];
    for (name, p) in &configs {
        let sp = secondary_polytope(p)?;
        println!("{name}: {} triangulations, secondary polytope of dimension {}", sp.triangulations.len(), sp.dimension());
        for (&i, w) in sp.vertices.iter().zip(&sp.witnesses) {
            println!("  {:?}  phi = {}  lifting {}", sp.triangulations[i].cells(), sp.vectors[i], w);
        }
        let fan = secondary_fan(p)?;
        println!("  secondary fan: {} cones, complete {}", fan.len(), fan.is_complete());
    }
    Ok(())
}
