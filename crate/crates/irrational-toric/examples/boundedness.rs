//! Minimum faces of boundedness for power-sum paths in a cone.
use irrational_toric::cone::Cone;
use irrational_toric::hausdorff::{min_face_of_boundedness, PowerSumPath};
use irrational_toric::{Result, Vector};

fn main() -> Result<()> {
    let sigma = Cone::from_ints(2, &[&[-1, -1], &[0, -1]])?;
    let paths = [
        ("s(-1,-1) + (0,-1) + s^-1 (1,0)", vec![(1.0, vec![-1, -1]), (0.0, vec![0, -1]), (-1.0, vec![1, 0])]),
        ("s(-1,-1) + s^(1/2) (1,0)", vec![(1.0, vec![-1, -1]), (0.5, vec![1, 0])]),
        ("(-1,-3)", vec![(0.0, vec![-1, -3])]),
    ];
    for (name, terms) in paths {
        let path = PowerSumPath::new(terms.into_iter().map(|(e, v)| (e, Vector::from_ints(&v))).collect())?;
        let face = min_face_of_boundedness(&sigma, &path)?;
        let rays: Vec<String> = face.cone.canonical().rays.iter().map(|v| v.to_string()).collect();
        println!("{name}: cone{{{}}}", rays.join(", "));
    }
    Ok(())
}
