//! Duals, faces, lineality and separating functionals of cones in N = R^2.
use irrational_toric::cone::Cone;
use irrational_toric::{Mode, Result, Vector};

fn main() -> Result<()> {
    let sigma = Cone::from_ints(2, &[&[2, -1], &[0, 1]])?;
    let dual = sigma.dual();
    println!("dual rays: {:?}", dual.canonical().rays.iter().map(Vector::to_string).collect::<Vec<_>>());
    assert!(dual.dual().equals(&sigma));

    for f in sigma.all_faces() {
        println!("face of dim {} exposed by {}", f.dimension(), f.functional);
    }

    let s = 2f64.sqrt();
    let irrational = Cone::new(2, Mode::Float, vec![Vector::from_f64s(&[1.0, 0.0]), Vector::from_f64s(&[-s, 1.0])])?;
    println!("irrational dual rays: {:?}", irrational.dual().canonical().rays.iter().map(Vector::to_string).collect::<Vec<_>>());

    let half = Cone::from_ints(2, &[&[1, 0], &[0, 1], &[0, -1]])?;
    println!("lineality of a half-plane: {:?}", half.canonical().lineality.iter().map(Vector::to_string).collect::<Vec<_>>());

    let a = Cone::from_ints(2, &[&[1, 0], &[0, 1]])?;
    let b = Cone::from_ints(2, &[&[0, 1], &[-1, -1]])?;
    println!("separating functional: {}", a.separate(&b)?);
    Ok(())
}
