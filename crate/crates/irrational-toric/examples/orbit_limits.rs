//! One-parameter limits in X_Σ for the fan of P^2, and rebuilding fans from sampled limits.
use irrational_toric::fan::{normal_fan, PointConfiguration};
use irrational_toric::variety::{limit_one_parameter, projective_embed, recover_fan, ToricVariety};
use irrational_toric::{Result, Vector};

fn main() -> Result<()> {
    let simplex = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1]])?;
    let var = ToricVariety::new(normal_fan(&simplex)?);
    for v in [[0, 0], [1, 0], [0, 1], [-1, -1], [1, 1], [-1, 0], [0, -1]] {
        let x = limit_one_parameter(&var, &Vector::from_ints(&v), &var.identity())?;
        let z = projective_embed(&simplex, &var, &x)?;
        let (tau, _) = var.orbit_coordinates(&x)?;
        println!("v = {v:?}: limit [{:.3?}] in the orbit of cone {tau}", z);
    }
    let r = recover_fan(&var)?;
    println!("recovered {} cones from {} limit classes, matches {}", r.fan.len(), r.class_sizes.len(), r.matches);
    Ok(())
}
