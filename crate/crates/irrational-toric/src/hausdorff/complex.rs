use super::path::{min_face_of_boundedness, PowerSumPath};
use super::sample::sample_translate;
use crate::error::{Error, Result};
use crate::fan::PointConfiguration;
use crate::numeric::{Matrix, Vector};
use crate::secondary::{cell_volume, hom_points, regular_subdivision, secondary_fan, validate_subdivision, Subdivision};
use crate::variety::{ToricPoint, ToricVariety};

/// Affine dependencies of every cell, extended by zero to all of `A`. Their common kernel is the
/// space of liftings that are affine on each cell.
pub fn cell_dependencies(p: &PointConfiguration, s: &Subdivision) -> Result<Vec<Vector>> {
    let (k, mode) = (p.len(), p.mode());
    let mut deps = Vec::new();
    for cell in s.cells() {
        let cols = hom_points(p, cell);
        for dep in Matrix::from_columns(&cols, p.dim() + 1, mode)?.kernel_basis() {
            let mut full = Vector::zeros(k, mode);
            for (j, &i) in cell.iter().enumerate() {
                full.set(i, dep.get(j).clone());
            }
            deps.push(full);
        }
    }
    Ok(deps)
}

/// Basis of `Aff(S)`: liftings whose restriction to each cell is affine.
pub fn aff_basis(p: &PointConfiguration, s: &Subdivision) -> Result<Vec<Vector>> {
    let deps = cell_dependencies(p, s)?;
    if deps.is_empty() {
        return Ok((0..p.len()).map(|i| Vector::unit(p.len(), i, p.mode())).collect());
    }
    Ok(Matrix::from_rows(&deps, p.len(), p.mode())?.kernel_basis())
}

/// Whether `x ∈ Aff(S)` up to a relative tolerance.
pub fn in_aff(p: &PointConfiguration, s: &Subdivision, x: &[f64]) -> Result<bool> {
    if x.len() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), found: x.len() });
    }
    let scale = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    Ok(cell_dependencies(p, s)?.iter().all(|d| {
        let d = d.to_f64s();
        let norm = d.iter().map(|v| v.abs()).sum::<f64>();
        d.iter().zip(x).map(|(a, b)| a * b).sum::<f64>().abs() <= 1e-9 * norm * scale
    }))
}

/// `Z(S, omega)`: the union of `omega · Z_F` over the cells `F` of `S`, with `Log omega` stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TranslatedComplex {
    pub subdivision: Subdivision,
    pub log_omega: Vec<f64>,
}

impl TranslatedComplex {
    pub fn new(p: &PointConfiguration, subdivision: Subdivision, log_omega: Vec<f64>) -> Result<Self> {
        if log_omega.len() != p.len() {
            return Err(Error::DimensionMismatch { expected: p.len(), found: log_omega.len() });
        }
        validate_subdivision(p, &subdivision)?;
        Ok(TranslatedComplex { subdivision, log_omega })
    }

    /// `Z_A` itself.
    pub fn whole(p: &PointConfiguration) -> Self {
        TranslatedComplex { subdivision: Subdivision::trivial(p), log_omega: vec![0.0; p.len()] }
    }

    /// `omega' · Z(S, omega)`.
    pub fn translate(&self, log_shift: &[f64]) -> Self {
        let log_omega = self.log_omega.iter().zip(log_shift).map(|(a, b)| a + b).collect();
        TranslatedComplex { subdivision: self.subdivision.clone(), log_omega }
    }

    /// One cloud per cell, each embedded in the simplex on all of `A`. Cells receive a share of
    /// `density` proportional to their volume.
    pub fn face_samples(&self, p: &PointConfiguration, density: usize) -> Result<Vec<Vec<Vec<f64>>>> {
        let all: Vec<usize> = (0..p.len()).collect();
        let total = cell_volume(p, &all)?.to_f64();
        let mut out = Vec::new();
        for cell in self.subdivision.cells() {
            let share = cell_volume(p, cell)?.to_f64() / total;
            let n = ((density as f64) * share).ceil() as usize;
            let sub = p.subset(cell)?;
            let lw: Vec<f64> = cell.iter().map(|&i| self.log_omega[i]).collect();
            let cloud = sample_translate(&sub, &lw, n.max(1))?;
            out.push(
                cloud
                    .into_iter()
                    .map(|z| {
                        let mut full = vec![0.0; p.len()];
                        for (&i, v) in cell.iter().zip(z) {
                            full[i] = v;
                        }
                        full
                    })
                    .collect(),
            );
        }
        Ok(out)
    }

    pub fn sample(&self, p: &PointConfiguration, density: usize) -> Result<Vec<Vec<f64>>> {
        Ok(self.face_samples(p, density)?.into_iter().flatten().collect())
    }

    /// Equality as subsets of the simplex: same subdivision, translations differing by `Aff(S)`.
    pub fn same_set(&self, p: &PointConfiguration, other: &TranslatedComplex) -> Result<bool> {
        if self.subdivision != other.subdivision {
            return Ok(false);
        }
        let diff: Vec<f64> = self.log_omega.iter().zip(&other.log_omega).map(|(a, b)| a - b).collect();
        in_aff(p, &self.subdivision, &diff)
    }
}

/// The secondary-fan toric variety of `A` together with the subdivision induced by each cone.
#[derive(Clone, Debug)]
pub struct LimitCorrespondence {
    p: PointConfiguration,
    variety: ToricVariety,
    subdivisions: Vec<Subdivision>,
}

impl LimitCorrespondence {
    pub fn new(p: &PointConfiguration) -> Result<Self> {
        let fan = secondary_fan(p)?;
        let subdivisions =
            fan.cones().iter().map(|c| regular_subdivision(p, &c.relint_point())).collect::<Result<Vec<_>>>()?;
        Ok(LimitCorrespondence { p: p.clone(), variety: ToricVariety::new(fan), subdivisions })
    }

    pub fn variety(&self) -> &ToricVariety {
        &self.variety
    }

    /// Subdivision induced by the relative interior of each fan cone.
    pub fn subdivisions(&self) -> &[Subdivision] {
        &self.subdivisions
    }

    pub fn cone_of(&self, s: &Subdivision) -> Option<usize> {
        self.subdivisions.iter().position(|t| t == s)
    }

    /// The Hausdorff limit of `gamma_{v(s)} · Z_A` as `s → ∞`.
    pub fn limit_complex(&self, path: &PowerSumPath) -> Result<TranslatedComplex> {
        if path.dim() != self.p.len() {
            return Err(Error::DimensionMismatch { expected: self.p.len(), found: path.dim() });
        }
        let fan = self.variety.fan();
        let sigma = fan
            .maximal_cones()
            .into_iter()
            .find(|&i| path.eventually_in(&fan.cones()[i]))
            .ok_or(Error::PathOutsideCone)?;
        let tau = min_face_of_boundedness(&fan.cones()[sigma], path)?;
        let idx = fan.index_of(&tau.cone).ok_or(Error::PathOutsideCone)?;
        let log_omega = path.bounded_part().to_f64s().iter().map(|x| 0.0 - x).collect();
        Ok(TranslatedComplex { subdivision: self.subdivisions[idx].clone(), log_omega })
    }

    /// `psi(Z(S, omega)) = gamma_v · x_{C(S)}` with `v = -Log omega`, in the chart of `C(S)`.
    pub fn psi(&self, zc: &TranslatedComplex) -> Result<ToricPoint> {
        let i = self.cone_of(&zc.subdivision).ok_or(Error::NotRegular)?;
        let w: Vec<f64> = zc.log_omega.iter().map(|x| 0.0 - x).collect();
        self.variety.point_from_orbit(i, &w, i)
    }

    /// Inverse of [`Self::psi`].
    pub fn complex_of(&self, x: &ToricPoint) -> Result<TranslatedComplex> {
        let (tau, w) = self.variety.orbit_coordinates(x)?;
        Ok(TranslatedComplex { subdivision: self.subdivisions[tau].clone(), log_omega: w.iter().map(|v| 0.0 - v).collect() })
    }
}

pub fn limit_complex(p: &PointConfiguration, path: &PowerSumPath) -> Result<TranslatedComplex> {
    LimitCorrespondence::new(p)?.limit_complex(path)
}

pub fn psi_correspondence(p: &PointConfiguration, zc: &TranslatedComplex) -> Result<ToricPoint> {
    LimitCorrespondence::new(p)?.psi(zc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hausdorff::hausdorff_distance;
    use crate::variety::TorusElement;

    fn square() -> PointConfiguration {
        PointConfiguration::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    fn diagonal() -> Subdivision {
        Subdivision::new(vec![vec![0, 1, 3], vec![0, 2, 3]])
    }

    #[test]
    fn aff_of_square() {
        let p = square();
        assert_eq!(aff_basis(&p, &Subdivision::trivial(&p)).unwrap().len(), 3);
        assert_eq!(aff_basis(&p, &diagonal()).unwrap().len(), 4);
        assert!(in_aff(&p, &Subdivision::trivial(&p), &[1.0, 3.0, -1.0, 1.0]).unwrap());
        assert!(!in_aff(&p, &Subdivision::trivial(&p), &[0.0, 0.0, 0.0, 1.0]).unwrap());
    }

    #[test]
    fn limits_of_paths() {
        let p = square();
        let lc = LimitCorrespondence::new(&p).unwrap();
        let zero = PowerSumPath::constant(Vector::from_ints(&[0, 0, 0, 0]));
        assert_eq!(lc.limit_complex(&zero).unwrap(), TranslatedComplex::whole(&p));
        let lin = PowerSumPath::linear(Vector::from_ints(&[0, 1, 1, 0]), Vector::from_ints(&[1, 0, 2, 0])).unwrap();
        let z = lc.limit_complex(&lin).unwrap();
        assert_eq!(z.subdivision, diagonal());
        assert_eq!(z.log_omega, vec![-1.0, 0.0, -2.0, 0.0]);
        let affine = PowerSumPath::linear(Vector::from_ints(&[1, 2, 3, 4]), Vector::from_ints(&[0, 0, 0, 0])).unwrap();
        assert_eq!(lc.limit_complex(&affine).unwrap().subdivision, Subdivision::trivial(&p));
    }

    #[test]
    fn psi_respects_classes_and_action() {
        let p = square();
        let lc = LimitCorrespondence::new(&p).unwrap();
        let var = lc.variety();
        let eps = lc.psi(&TranslatedComplex::whole(&p)).unwrap();
        assert!(var.points_equal(&eps, &var.identity(), 1e-9));
        let t = TranslatedComplex { subdivision: diagonal(), log_omega: vec![0.0; 4] };
        let i = lc.cone_of(&diagonal()).unwrap();
        assert!(var.points_equal(&lc.psi(&t).unwrap(), &var.distinguished_point(i).unwrap(), 1e-9));
        let z = TranslatedComplex { subdivision: Subdivision::trivial(&p), log_omega: vec![0.2, -0.4, 0.1, 0.5] };
        let shifted = z.translate(&[1.0, 2.0, 4.0, 5.0]);
        assert!(z.same_set(&p, &shifted).unwrap());
        assert!(var.points_equal(&lc.psi(&z).unwrap(), &lc.psi(&shifted).unwrap(), 1e-9));
        let other = z.translate(&[0.0, 0.0, 0.0, 1.0]);
        assert!(!z.same_set(&p, &other).unwrap());
        assert!(!var.points_equal(&lc.psi(&z).unwrap(), &lc.psi(&other).unwrap(), 1e-6));
        let shift = [0.3, -0.2, 0.7, 0.1];
        let g = TorusElement::from_f64s(&shift.iter().map(|x| 0.0 - x).collect::<Vec<_>>());
        let lhs = lc.psi(&z.translate(&shift)).unwrap();
        let rhs = var.act(&g, &lc.psi(&z).unwrap()).unwrap();
        assert!(var.points_equal(&lhs, &rhs, 1e-9));
        let back = lc.complex_of(&lhs).unwrap();
        assert!(back.same_set(&p, &z.translate(&shift)).unwrap());
    }

    #[test]
    fn sampled_equal_classes_coincide() {
        let p = square();
        let z = TranslatedComplex { subdivision: diagonal(), log_omega: vec![0.2, -0.4, 0.1, 0.5] };
        let w = z.translate(&[1.0, 2.0, 3.0, 4.0]);
        assert!(z.same_set(&p, &w).unwrap());
        let d = hausdorff_distance(&z.sample(&p, 400).unwrap(), &w.sample(&p, 400).unwrap()).unwrap();
        assert!(d < 1e-8, "{d}");
    }
}
