//! Hilbert bases of the monoids sigma^vee ∩ M.
use irrational_toric::cone::Cone;
use irrational_toric::monoid::hilbert_basis;
use irrational_toric::Result;

fn main() -> Result<()> {
    for gens in [&[&[1i64, 0][..]][..], &[&[1, 0], &[0, 1]], &[&[2, -1], &[0, 1]], &[&[1, 0], &[1, 5]]] {
        let sigma = Cone::from_ints(2, gens)?;
        let hb = hilbert_basis(&sigma)?;
        let elems: Vec<String> = hb.elements().iter().map(|v| v.to_string()).collect();
        println!("{:?} -> {}", gens, elems.join(" "));
    }
    Ok(())
}
