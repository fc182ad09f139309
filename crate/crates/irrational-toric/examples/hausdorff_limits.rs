//! Torus translates of Z_A converging to a translated complex Z(S, ω).
use irrational_toric::fan::PointConfiguration;
use irrational_toric::hausdorff::{hausdorff_distance, sample_translate, sampling_resolution, LimitCorrespondence, PowerSumPath};
use irrational_toric::{Result, Vector};

fn main() -> Result<()> {
    let square = PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?;
    let lc = LimitCorrespondence::new(&square)?;
    let lambda = Vector::from_ints(&[0, 0, 0, 1]);
    let path = PowerSumPath::linear(lambda.clone(), Vector::from_ints(&[0, 1, 0, 0]))?;
    let limit = lc.limit_complex(&path)?;
    println!("limit complex: cells {:?}, log ω = {:?}", limit.subdivision.cells(), limit.log_omega);
    println!("its point in X_Σ(A): {:?}", lc.psi(&limit)?.values());

    let density = 2000;
    let target = limit.sample(&square, density)?;
    println!("sampling resolution {:.3e}", sampling_resolution(&target)?);
    for s in [1.0, 2.0, 4.0, 8.0, 16.0] {
        let lw: Vec<f64> = path.eval(s).iter().map(|x| -x).collect();
        let d = hausdorff_distance(&sample_translate(&square, &lw, density)?, &target)?;
        println!("s = {s:>4}: d_H = {d:.3e}");
    }
    Ok(())
}
