//! Fan validation, normal fans, products, stars and completeness.
use irrational_toric::cone::Cone;
use irrational_toric::fan::{normal_fan, validate_fan, PointConfiguration};
use irrational_toric::{Error, Result};

fn main() -> Result<()> {
    let simplex = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1]])?;
    let p2 = normal_fan(&simplex)?;
    println!("normal fan of the triangle: {} cones, complete {}", p2.len(), p2.is_complete());

    let square = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?;
    let p1p1 = normal_fan(&square)?;
    println!("normal fan of the square: {} cones", p1p1.len());

    let ray = Cone::from_ints(2, &[&[1, 0]])?;
    let star = p2.star(p2.index_of(&ray).ok_or(Error::NotAFace)?)?;
    println!("star of a ray: {} cones in the quotient", star.fan.len());

    let line = validate_fan(1, &[Cone::from_ints(1, &[&[1]])?, Cone::from_ints(1, &[&[-1]])?])?;
    let prod = line.product(&line)?;
    println!("P1 x P1 from a product: {} cones, complete {}", prod.len(), prod.is_complete());

    let partial = validate_fan(2, &[Cone::from_ints(2, &[&[1, 0], &[0, 1]])?, Cone::from_ints(2, &[&[1, 0], &[2, -1]])?])?;
    println!("two cones: complete {}", partial.is_complete());

    let bad = validate_fan(2, &[Cone::from_ints(2, &[&[1, 0], &[0, 1]])?, Cone::from_ints(2, &[&[1, 1], &[-1, 1]])?]);
    println!("overlapping cones: {}", bad.unwrap_err());
    Ok(())
}
