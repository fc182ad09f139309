//! Unimodular integer elimination: lattice kernels, Hermite forms and reductions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Column reduction `B U = [H | 0]` with `U` unimodular. Returns `(U, r)` where the first
/// `r` columns of `B U` are nonzero and the remaining columns of `U` span `ker_Z(B)`.
pub fn column_reduce(b: &IntMatrix, ncols: usize) -> (IntMatrix, usize) {
    let mut a: IntMatrix = b.clone();
    let mut u: IntMatrix = (0..ncols)
        .map(|i| (0..ncols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut k = 0;
    for row in 0..a.len() {
        if k == ncols {
            break;
        }
        for j in k + 1..ncols {
            if a[row][j].is_zero() {
                continue;
            }
            let (x, y) = (a[row][k].clone(), a[row][j].clone());
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (p, q) = (&x / &g, &y / &g);
            // [col_k, col_j] <- [s col_k + t col_j, -q col_k + p col_j]
            combine_columns(&mut a, k, j, &s, &t, &q, &p);
            combine_columns(&mut u, k, j, &s, &t, &q, &p);
        }
        if !a[row][k].is_zero() {
            if a[row][k].is_negative() {
                negate_column(&mut a, k);
                negate_column(&mut u, k);
            }
            k += 1;
        }
    }
    (u, k)
}

fn combine_columns(m: &mut IntMatrix, k: usize, j: usize, s: &BigInt, t: &BigInt, q: &BigInt, p: &BigInt) {
    for row in m.iter_mut() {
        let (ck, cj) = (row[k].clone(), row[j].clone());
        row[k] = s * &ck + t * &cj;
        row[j] = p * &cj - q * &ck;
    }
}

fn negate_column(m: &mut IntMatrix, k: usize) {
    for row in m.iter_mut() {
        row[k] = -&row[k];
    }
}

/// Column `j` of a matrix.
pub fn column(m: &IntMatrix, j: usize) -> Vec<BigInt> {
    m.iter().map(|r| r[j].clone()).collect()
}

/// A lattice basis of `ker_Z(B)`, in row Hermite normal form.
pub fn integer_kernel(b: &IntMatrix, ncols: usize) -> IntMatrix {
    let (u, r) = column_reduce(b, ncols);
    row_hnf((r..ncols).map(|j| column(&u, j)).collect())
}

/// Row Hermite normal form of the lattice spanned by the rows (zero rows dropped).
/// Pivots are positive and entries above each pivot are reduced into `[0, pivot)`.
pub fn row_hnf(rows: IntMatrix) -> IntMatrix {
    let mut a = rows;
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).expect("nonempty");
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[r][c]);
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -&*x;
                }
            }
            let pivot = a[r].clone();
            for i in 0..r {
                let f = a[i][c].div_floor(&pivot[c]);
                if !f.is_zero() {
                    for (x, y) in a[i].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    a
}

/// Reduces `v` modulo the lattice spanned by HNF rows so that each pivot coordinate lies in
/// `[0, pivot)`.
pub fn reduce_mod_hnf(v: &[BigInt], hnf: &IntMatrix) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for row in hnf {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else { continue };
        let f = out[c].div_floor(&row[c]);
        if !f.is_zero() {
            for (x, y) in out.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
    }
    out
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn kernel_lattice_is_saturated() {
        // kernel of (2 4) over Z is spanned by (2,-1), not by a multiple
        let k = integer_kernel(&ints(&[&[2, 4]]), 2);
        assert_eq!(k, ints(&[&[2, -1]]));
        let k = integer_kernel(&ints(&[&[0, 1, 1], &[1, 1, 2]]), 3);
        assert_eq!(k, ints(&[&[1, 1, -1]]));
    }

    #[test]
    fn hnf_of_sublattice() {
        let h = row_hnf(ints(&[&[1, 1], &[1, -1]]));
        assert_eq!(h, ints(&[&[1, 1], &[0, 2]]));
        assert_eq!(reduce_mod_hnf(&[BigInt::from(3), BigInt::from(5)], &h), vec![BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(determinant(&ints(&[&[2, 0], &[-1, 1]])), BigInt::from(2));
        assert_eq!(determinant(&ints(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&ints(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }
}
