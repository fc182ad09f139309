//! Regular subdivisions from liftings, and a non-regular triangulation of two concentric triangles.
use irrational_toric::fan::PointConfiguration;
use irrational_toric::io::gallery::concentric_triangles;
use irrational_toric::secondary::{is_regular, regular_subdivision, secondary_cone, Subdivision};
use irrational_toric::{Result, Vector};

fn main() -> Result<()> {
    let square = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?;
    for l in [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 0]] {
        println!("lifting {l:?} -> {:?}", regular_subdivision(&square, &Vector::from_ints(&l))?.cells());
    }

    let p = concentric_triangles()?;
    let s1 = Subdivision::new(vec![vec![3, 4, 5], vec![0, 3, 4], vec![0, 3, 5], vec![0, 1, 4], vec![1, 4, 5], vec![1, 2, 5], vec![0, 2, 5]]);
    let s2 = Subdivision::new(vec![vec![3, 4, 5], vec![0, 3, 4], vec![2, 3, 5], vec![0, 2, 3], vec![0, 1, 4], vec![1, 4, 5], vec![1, 2, 5]]);
    match is_regular(&p, &s1)? {
        Some(w) => println!("S1 is induced by {w}; secondary cone has {} facets", secondary_cone(&p, &s1)?.hrep().inequalities.len()),
        None => println!("S1 is not regular"),
    }
    println!("S2 regular: {}", is_regular(&p, &s2)?.is_some());
    Ok(())
}
