use super::Fan;
use crate::error::{Error, Result};
use crate::numeric::Matrix;

/// A linear map sending every source cone into some target cone.
#[derive(Clone, Debug)]
pub struct FanMap {
    pub map: Matrix,
    pub source: Fan,
    pub target: Fan,
    /// For each source cone, the smallest target cone containing its image.
    pub assignment: Vec<usize>,
}

/// Checks that `psi` (a `n2 x n1` matrix) is a map of fans and records the assignment.
pub fn validate_fan_map(psi: &Matrix, source: &Fan, target: &Fan) -> Result<FanMap> {
    if psi.ncols() != source.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: source.ambient_dim(), found: psi.ncols() });
    }
    if psi.nrows() != target.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: target.ambient_dim(), found: psi.nrows() });
    }
    let mut assignment = Vec::with_capacity(source.len());
    for (i, c) in source.cones().iter().enumerate() {
        let images = c.generators().iter().map(|g| psi.mul_vec(g)).collect::<Result<Vec<_>>>()?;
        let hit = (0..target.len())
            .filter(|&j| images.iter().all(|v| target.cones()[j].contains(v)))
            .min_by_key(|&j| target.cones()[j].dimension());
        match hit {
            Some(j) => assignment.push(j),
            None => return Err(Error::Unassignable(i)),
        }
    }
    Ok(FanMap { map: psi.clone(), source: source.clone(), target: target.clone(), assignment })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::Cone;
    use crate::fan::validate_fan;

    fn line() -> Fan {
        validate_fan(1, &[Cone::from_ints(1, &[&[1]]).unwrap(), Cone::from_ints(1, &[&[-1]]).unwrap()]).unwrap()
    }

    fn hirzebruch(r: i64) -> Fan {
        validate_fan(
            2,
            &[
                Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap(),
                Cone::from_ints(2, &[&[1, 0], &[0, -1]]).unwrap(),
                Cone::from_ints(2, &[&[-1, r], &[0, 1]]).unwrap(),
                Cone::from_ints(2, &[&[-1, r], &[0, -1]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hirzebruch_projects_to_line() {
        let f = hirzebruch(2);
        assert_eq!(f.len(), 9);
        assert!(f.is_complete());
        let m = validate_fan_map(&Matrix::from_ints(&[&[1, 0]]), &f, &line()).unwrap();
        assert_eq!(m.assignment.len(), 9);
    }

    #[test]
    fn difference_map_fails_on_quadrant() {
        let s2 = validate_fan(
            2,
            &[
                Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap(),
                Cone::from_ints(2, &[&[0, 1], &[-1, -1]]).unwrap(),
                Cone::from_ints(2, &[&[1, 0], &[-1, -1]]).unwrap(),
            ],
        )
        .unwrap();
        let err = validate_fan_map(&Matrix::from_ints(&[&[1, -1]]), &s2, &line()).unwrap_err();
        let quadrant = s2.index_of(&Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap()).unwrap();
        assert_eq!(err, Error::Unassignable(quadrant));
    }

    #[test]
    fn identity_is_a_map() {
        let f = hirzebruch(1);
        let m = validate_fan_map(&Matrix::identity(2, crate::Mode::Exact), &f, &f).unwrap();
        assert!(m.assignment.iter().enumerate().all(|(i, &j)| i == j));
    }
}
