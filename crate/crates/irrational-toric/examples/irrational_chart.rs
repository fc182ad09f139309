//! The affine irrational toric variety of A = {(-√2, 1), (1, 0), (1, 1)}.
use irrational_toric::fan::PointConfiguration;
use irrational_toric::variety::{affine_point, face_point, is_face_of, TorusElement};
use irrational_toric::Result;

fn main() -> Result<()> {
    let s = 2f64.sqrt();
    let p = PointConfiguration::from_f64s(&[&[-s, 1.0], &[1.0, 0.0], &[1.0, 1.0]])?;
    for w in [[0.0, 0.0], [0.5, -1.0], [-2.0, 0.25]] {
        let phi = affine_point(&p, &TorusElement::from_f64s(&w)).values();
        println!("phi = {phi:.6?}, phi(c) / (phi(a) phi(b)^(1+√2)) = {:.12}", phi[2] / (phi[0] * phi[1].powf(1.0 + s)));
    }
    for face in [vec![0], vec![1], vec![0, 1], vec![2]] {
        if is_face_of(&p, &face) {
            println!("face {face:?} gives the point {:?}", face_point(&p, &face).values());
        } else {
            println!("{face:?} is not a face");
        }
    }
    Ok(())
}
