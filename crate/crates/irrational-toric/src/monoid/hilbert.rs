use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone::{pulling_triangulation, Cone};
use crate::error::{Error, Result};
use crate::numeric::integer::{column_reduce, determinant, integer_kernel, reduce_mod_hnf, row_hnf, IntMatrix};
use crate::numeric::{Matrix, Mode, Scalar, Vector};

/// The minimal generating set of the monoid `sigma^vee ∩ M_Z`.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertBasis {
    /// Irreducible elements of the pointed part, sorted lexicographically.
    pub pointed: Vec<Vector>,
    /// Lattice basis (Hermite form) of the lineality space of the dual.
    pub lineality: Vec<Vector>,
}

impl HilbertBasis {
    /// Pointed elements followed by `l, -l` for each lineality basis vector.
    pub fn elements(&self) -> Vec<Vector> {
        let mut out = self.pointed.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.neg());
        }
        out
    }

    pub fn len(&self) -> usize {
        self.pointed.len() + 2 * self.lineality.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn ints_of(v: &Vector) -> Vec<BigInt> {
    v.primitive().to_bigints().expect("primitive exact vector")
}

fn to_vector(v: &[BigInt]) -> Vector {
    if v.is_empty() {
        return Vector::with_mode(Vec::new(), Mode::Exact).expect("empty");
    }
    Vector::from_bigints(v)
}

/// Hilbert basis of `sigma^vee ∩ M_Z` for a rational cone `sigma`.
pub fn hilbert_basis(sigma: &Cone) -> Result<HilbertBasis> {
    if sigma.mode() != Mode::Exact {
        return Err(Error::ExactRequired);
    }
    let n = sigma.ambient_dim();
    let dual = sigma.dual();

    // Lattice basis W of span(dual) ∩ Z^n.
    let sigma_lin: IntMatrix = sigma.canonical().lineality.iter().map(ints_of).collect();
    let w: IntMatrix = if sigma_lin.is_empty() {
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
    } else {
        integer_kernel(&sigma_lin, n)
    };
    let k = w.len();
    if k == 0 {
        return Ok(HilbertBasis { pointed: Vec::new(), lineality: Vec::new() });
    }
    let w_mat = Matrix::from_rows(&w.iter().map(|r| to_vector(r)).collect::<Vec<_>>(), n, Mode::Exact)?;
    let wt = w_mat.transpose();
    let coords = |v: &Vector| -> Result<Vec<BigInt>> {
        let c = wt.solve(v)?.ok_or_else(|| Error::Invalid("vector outside dual span".into()))?;
        c.to_bigints().ok_or_else(|| Error::Invalid("non-integral lattice coordinates".into()))
    };
    let from_coords = |c: &[BigInt]| -> Vec<BigInt> {
        (0..n).map(|j| c.iter().zip(&w).fold(BigInt::zero(), |s, (ci, row)| s + ci * &row[j])).collect()
    };

    // Dual cone in W coordinates, full dimensional in Q^k.
    let dcan = dual.canonical();
    let rays_k: Vec<Vec<BigInt>> = dcan.rays.iter().map(|r| coords(&r.primitive())).collect::<Result<_>>()?;
    let lin_k: Vec<Vec<BigInt>> = dcan.lineality.iter().map(|l| coords(&l.primitive())).collect::<Result<_>>()?;

    // Lineality lattice Lz in Z^k and quotient map Q : Z^k -> Z^{k - l}.
    let lz: IntMatrix = if lin_k.is_empty() {
        Vec::new()
    } else {
        let perp = integer_kernel(&lin_k, k);
        if perp.is_empty() {
            row_hnf((0..k).map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect())
        } else {
            integer_kernel(&perp, k)
        }
    };
    let q: IntMatrix = if lz.is_empty() {
        (0..k).map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
    } else {
        integer_kernel(&lz, k)
    };
    let d = q.len();

    let mut pointed_k: Vec<Vec<BigInt>> = Vec::new();
    if d > 0 {
        let apply_q = |y: &[BigInt]| -> Vec<BigInt> {
            q.iter().map(|row| row.iter().zip(y).fold(BigInt::zero(), |s, (a, b)| s + a * b)).collect()
        };
        let prays: Vec<Vector> = rays_k.iter().map(|r| to_vector(&apply_q(r)).primitive()).collect();
        let pcone = Cone::new(d, Mode::Exact, prays)?;
        let basis = pointed_hilbert_basis(&pcone);
        let (u, r) = column_reduce(&q, k);
        debug_assert_eq!(r, d);
        let h: IntMatrix = q
            .iter()
            .map(|row| (0..d).map(|j| (0..k).fold(BigInt::zero(), |s, t| s + &row[t] * &u[t][j])).collect())
            .collect();
        for b in basis {
            let c = forward_substitute(&h, &b)?;
            let y: Vec<BigInt> = (0..k)
                .map(|t| (0..d).fold(BigInt::zero(), |s, j| s + &u[t][j] * &c[j]))
                .collect();
            pointed_k.push(y);
        }
    }

    let lin_n = row_hnf(lz.iter().map(|l| from_coords(l)).collect());
    let mut pointed: Vec<Vector> = pointed_k
        .iter()
        .map(|y| to_vector(&reduce_mod_hnf(&from_coords(y), &lin_n)))
        .collect();
    pointed.sort_by(|a, b| a.cmp_lex(b));
    let lineality = lin_n.iter().map(|l| to_vector(l)).collect();
    Ok(HilbertBasis { pointed, lineality })
}

/// Solves `H c = b` for a lower-triangular integer `H` with unit-like pivots.
fn forward_substitute(h: &IntMatrix, b: &[BigInt]) -> Result<Vec<BigInt>> {
    let d = b.len();
    let mut c: Vec<BigInt> = vec![BigInt::zero(); d];
    let mut col = 0;
    for (row, hr) in h.iter().enumerate() {
        if col == d {
            break;
        }
        let acc = (0..col).fold(b[row].clone(), |s, j| s - &hr[j] * &c[j]);
        if hr[col].is_zero() {
            if !acc.is_zero() {
                return Err(Error::Invalid("lift failed".into()));
            }
            continue;
        }
        if !(&acc % &hr[col]).is_zero() {
            return Err(Error::Invalid("lift failed".into()));
        }
        c[col] = acc / &hr[col];
        col += 1;
    }
    Ok(c)
}

/// Hilbert basis of a pointed full-dimensional rational cone with primitive integral rays.
fn pointed_hilbert_basis(p: &Cone) -> Vec<Vec<BigInt>> {
    let d = p.ambient_dim();
    let rays: Vec<Vec<BigInt>> = p.generators().iter().map(ints_of).collect();
    let mut candidates: Vec<Vec<BigInt>> = rays.clone();
    for simplex in pulling_triangulation(p) {
        let cols: Vec<&Vec<BigInt>> = simplex.iter().map(|&i| &rays[i]).collect();
        for x in parallelepiped_points(&cols, d) {
            if !candidates.contains(&x) {
                candidates.push(x);
            }
        }
    }
    let in_cone = |v: &[BigInt]| p.contains(&to_vector(v));
    let keep: Vec<Vec<BigInt>> = candidates
        .iter()
        .filter(|x| {
            !candidates.iter().any(|y| {
                y != *x && {
                    let diff: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                    diff.iter().any(|t| !t.is_zero()) && in_cone(&diff)
                }
            })
        })
        .cloned()
        .collect();
    keep
}

/// Nonzero lattice points `sum lambda_i r_i` with `lambda ∈ [0,1)^d`.
fn parallelepiped_points(cols: &[&Vec<BigInt>], d: usize) -> Vec<Vec<BigInt>> {
    // m has the rays as columns
    let m: IntMatrix = (0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let det = determinant(&m);
    if det.abs().is_one() {
        return Vec::new();
    }
    let adj = adjugate(&m);
    let lo: Vec<BigInt> = (0..d)
        .map(|i| cols.iter().map(|c| c[i].clone()).filter(|x| x.is_negative()).sum())
        .collect();
    let hi: Vec<BigInt> = (0..d)
        .map(|i| cols.iter().map(|c| c[i].clone()).filter(|x| x.is_positive()).sum())
        .collect();
    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        if x.iter().any(|t| !t.is_zero()) {
            let inside = (0..d).all(|i| {
                let num: BigInt = (0..d).fold(BigInt::zero(), |s, j| s + &adj[i][j] * &x[j]);
                let lam = BigRational::new(num, det.clone());
                !lam.is_negative() && lam < BigRational::one()
            });
            if inside {
                out.push(x.clone());
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i].clone();
            i += 1;
        }
    }
}

fn adjugate(m: &IntMatrix) -> IntMatrix {
    let d = m.len();
    let mut adj = vec![vec![BigInt::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let minor: IntMatrix = (0..d)
                .filter(|&r| r != j)
                .map(|r| (0..d).filter(|&c| c != i).map(|c| m[r][c].clone()).collect())
                .collect();
            let s = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            adj[i][j] = s * determinant(&minor);
        }
    }
    adj
}

/// A witness `s = h + k m` with `s ∈ S_sigma` for one Hilbert basis element `h` of `S_tau`.
#[derive(Clone, Debug, PartialEq)]
pub struct FaceWitness {
    pub element: Vector,
    pub shifted: Vector,
    pub multiple: BigInt,
}

/// For `tau = H_m ∩ sigma`, writes every Hilbert basis element of `S_tau` as `s + k(-m)`.
pub fn face_monoid_check(sigma: &Cone, m: &Vector) -> Result<(bool, Vec<FaceWitness>)> {
    if sigma.mode() != Mode::Exact || m.mode() != Mode::Exact {
        return Err(Error::ExactRequired);
    }
    if !m.is_integral() {
        return Err(Error::Invalid("functional must be integral".into()));
    }
    let tau = sigma.face_by_functional(m)?;
    let basis = hilbert_basis(&tau.cone)?;
    let dual = sigma.dual();
    let mut ok = true;
    let mut out = Vec::new();
    for h in basis.elements() {
        let mut k = BigInt::zero();
        for g in sigma.generators() {
            let mg = m.dot(g);
            if mg.is_positive() {
                let need = &(-&h.dot(g)) / &mg;
                let need = need.as_rational().expect("exact").ceil().to_integer();
                if need > k {
                    k = need;
                }
            }
        }
        let shifted = h.add(&m.scale(&Scalar::exact(BigRational::from_integer(k.clone()))));
        ok &= dual.contains(&shifted) && shifted.is_integral();
        out.push(FaceWitness { element: h, shifted, multiple: k });
    }
    Ok((ok, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vector {
        Vector::from_ints(x)
    }

    #[test]
    fn gordan_examples() {
        let s3 = Cone::from_ints(2, &[&[2, -1], &[0, 1]]).unwrap();
        assert_eq!(hilbert_basis(&s3).unwrap().elements(), vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
        let s2 = Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(hilbert_basis(&s2).unwrap().elements(), vec![v(&[0, 1]), v(&[1, 0])]);
        let s1 = Cone::from_ints(2, &[&[1, 0]]).unwrap();
        assert_eq!(hilbert_basis(&s1).unwrap().elements(), vec![v(&[1, 0]), v(&[0, 1]), v(&[0, -1])]);
    }

    #[test]
    fn dual_with_lineality_of_plane_in_space() {
        // sigma = cone{e1, e2} in R^3 has dual with lineality along e3
        let c = Cone::from_ints(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb.pointed, vec![v(&[0, 1, 0]), v(&[1, 0, 0])]);
        assert_eq!(hb.lineality, vec![v(&[0, 0, 1])]);
    }

    #[test]
    fn cone_with_own_lineality() {
        // sigma = halfplane x >= 0 with lineality e2: dual is the ray e1*
        let c = Cone::from_ints(2, &[&[1, 0], &[0, 1], &[0, -1]]).unwrap();
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb.elements(), vec![v(&[1, 0])]);
    }

    #[test]
    fn float_rejected() {
        let c = Cone::from_ints(2, &[&[1, 0]]).unwrap().to_mode(Mode::Float);
        assert_eq!(hilbert_basis(&c).unwrap_err(), Error::ExactRequired);
    }

    #[test]
    fn face_monoid_quadrant() {
        let c = Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        let (ok, w) = face_monoid_check(&c, &v(&[1, 0])).unwrap();
        assert!(ok);
        assert_eq!(w.len(), 3);
        let (ok, _) = face_monoid_check(&c, &v(&[0, 0])).unwrap();
        assert!(ok);
        let c2 = Cone::from_ints(2, &[&[0, 1], &[-1, -1]]).unwrap();
        assert!(face_monoid_check(&c2, &v(&[-1, 0])).unwrap().0);
    }
}
