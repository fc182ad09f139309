//! Inverting the moment map: the unique point of X_A over each b in cone(A).
use irrational_toric::fan::PointConfiguration;
use irrational_toric::variety::{birch_solve, birch_solve_weighted, moment_map};
use irrational_toric::{Result, Vector};

fn main() -> Result<()> {
    let a = PointConfiguration::from_ints(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]])?;
    for b in [[1.0, 0.5, 0.5], [2.0, 0.3, 1.9], [1.0, 1.0, 0.25], [1.0, 0.0, 0.0]] {
        let x = birch_solve(&a, &Vector::from_f64s(&b))?;
        let values = x.values();
        println!("b = {b:?} -> x = {values:.6?}, x00*x11 - x10*x01 = {:.1e}", values[0] * values[3] - values[1] * values[2]);
    }

    let square = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?;
    let x = birch_solve_weighted(&a, &[0.0, 0.0, 0.0, 2.0], &Vector::from_f64s(&[1.0, 0.5, 0.5]))?.values();
    println!("translated solution {x:.6?} has moment image {:.6?}", moment_map(&square, &x)?);

    let outside = birch_solve(&a, &Vector::from_f64s(&[1.0, -0.5, 0.0]));
    println!("outside the cone: {}", outside.unwrap_err());
    Ok(())
}
