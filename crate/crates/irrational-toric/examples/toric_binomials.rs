//! Lattice binomials z^{u+} - z^{u-} cutting out X_A, and their vanishing on the torus image.
use irrational_toric::fan::PointConfiguration;
use irrational_toric::monoid::toric_lattice_binomials;
use irrational_toric::variety::{affine_point, TorusElement};
use irrational_toric::Result;

fn main() -> Result<()> {
    let configs = [
        PointConfiguration::from_ints(&[&[2], &[3]])?,
        PointConfiguration::from_ints(&[&[1, 0], &[1, 1], &[1, 2]])?,
        PointConfiguration::from_ints(&[&[0, 1], &[1, 1], &[1, 2]])?,
    ];
    let t = TorusElement::from_f64s(&[0.3, -0.7]);
    for p in &configs {
        let t = TorusElement::from_f64s(&t.v.to_f64s()[..p.dim()]);
        let z = affine_point(p, &t).values();
        for b in toric_lattice_binomials(p)? {
            let (l, r) = b.evaluate(&z);
            println!("{b}  (exponent {:?}, residual {:.1e})", b.exponent(), l - r);
        }
    }
    Ok(())
}
