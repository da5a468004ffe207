//! Smith and Hermite normal forms with their unimodular transforms.

use crate::error::{Error, Result};

use super::matrix::IntMatrix;

/// `U·G·V = D`. For the Hermite form `V` is the identity and `D` is the
/// row-style Hermite form of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl NormalFormResult {
    /// Diagonal entries of `D`.
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)]).collect()
    }
}

/// Row-style Hermite reduction of an arbitrary integer matrix.
///
/// Returns `(U, H, rank)` with `U·A = H`, `U` unimodular. The first `rank`
/// rows of `H` are in echelon form with positive pivots and entries above
/// each pivot reduced into `[0, pivot)`; the remaining rows are zero, so the
/// matching rows of `U` span the left kernel of `A`.
pub fn hnf_with_transform(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix, usize)> {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        loop {
            let pivot_row = (r..m).filter(|&i| h[(i, col)] != 0).min_by_key(|&i| (h[(i, col)].unsigned_abs(), i));
            let Some(p) = pivot_row else { break };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let pivot = h[(r, col)];
            let mut clear = true;
            for i in r + 1..m {
                let q = h[(i, col)].div_euclid(pivot);
                h.add_row_multiple(i, r, -q)?;
                u.add_row_multiple(i, r, -q)?;
                clear &= h[(i, col)] == 0;
            }
            if clear {
                break;
            }
        }
        if h[(r, col)] == 0 {
            continue;
        }
        if h[(r, col)] < 0 {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h[(r, col)];
        for i in 0..r {
            let q = h[(i, col)].div_euclid(pivot);
            h.add_row_multiple(i, r, -q)?;
            u.add_row_multiple(i, r, -q)?;
        }
        r += 1;
    }
    Ok((u, h, r))
}

/// Canonical row-style Hermite normal form of a full-row-rank matrix.
pub fn hermite_normal_form(g: &IntMatrix) -> Result<NormalFormResult> {
    let (u, h, rank) = hnf_with_transform(g)?;
    if rank < g.rows() {
        return Err(Error::RankDeficient);
    }
    Ok(NormalFormResult { u, d: h, v: IntMatrix::identity(g.cols()) })
}

/// Smith normal form of a square nonsingular matrix.
///
/// Pivot is the smallest-magnitude nonzero entry of the active block, ties
/// broken by lowest `(row, col)`.
pub fn smith_normal_form(g: &IntMatrix) -> Result<NormalFormResult> {
    if !g.is_square() {
        return Err(Error::InvalidParams(format!("Smith form needs a square matrix, got {}x{}", g.rows(), g.cols())));
    }
    let n = g.rows();
    let mut d = g.clone();
    let mut u = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(n);
    for k in 0..n {
        loop {
            let mut best: Option<(u128, usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    let a = d[(i, j)].unsigned_abs();
                    if a != 0 && best.is_none_or(|(b, _, _)| a < b) {
                        best = Some((a, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                return Err(Error::Singular);
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let pivot = d[(k, k)];
            let mut clear = true;
            for i in k + 1..n {
                let q = d[(i, k)].div_euclid(pivot);
                d.add_row_multiple(i, k, -q)?;
                u.add_row_multiple(i, k, -q)?;
                clear &= d[(i, k)] == 0;
            }
            for j in k + 1..n {
                let q = d[(k, j)].div_euclid(pivot);
                d.add_col_multiple(j, k, -q)?;
                v.add_col_multiple(j, k, -q)?;
                clear &= d[(k, j)] == 0;
            }
            if !clear {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let offender = (k + 1..n).find(|&i| (k + 1..n).any(|j| d[(i, j)] % pivot != 0));
            match offender {
                Some(i) => {
                    d.add_row_multiple(k, i, 1)?;
                    u.add_row_multiple(k, i, 1)?;
                }
                None => break,
            }
        }
        if d[(k, k)] < 0 {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    Ok(NormalFormResult { u, d, v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m<const N: usize>(rows: [[i128; N]; N]) -> IntMatrix {
        IntMatrix::from_rows(&rows).unwrap()
    }

    fn check_snf(g: &IntMatrix) -> NormalFormResult {
        let r = smith_normal_form(g).unwrap();
        assert_eq!(r.u.mul(g).unwrap().mul(&r.v).unwrap(), r.d);
        assert!(r.d.is_diagonal());
        assert_eq!(r.u.abs_det().unwrap(), 1);
        assert_eq!(r.v.abs_det().unwrap(), 1);
        let diag = r.diagonal();
        for w in diag.windows(2) {
            assert!(w[0] >= 1 && w[1] % w[0] == 0, "{diag:?}");
        }
        let prod: i128 = diag.iter().product();
        assert_eq!(prod as u128, g.abs_det().unwrap());
        r
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_snf(&IntMatrix::identity(3)).d, IntMatrix::identity(3));
        assert_eq!(check_snf(&m([[2, 0], [0, 4]])).diagonal(), vec![2, 4]);
        assert_eq!(check_snf(&m([[1, 1], [0, 3]])).diagonal(), vec![1, 3]);
    }

    #[test]
    fn snf_fixes_divisibility() {
        // diag(2,3) is not in Smith form; Z_2 x Z_3 = Z_6.
        assert_eq!(check_snf(&m([[2, 0], [0, 3]])).diagonal(), vec![1, 6]);
        assert_eq!(check_snf(&m([[4, 0, 0], [0, 6, 0], [0, 0, 10]])).diagonal(), vec![2, 2, 60]);
        assert_eq!(check_snf(&m([[-3, 5], [7, 2]])).diagonal(), vec![1, 41]);
    }

    #[test]
    fn snf_rejects_singular() {
        assert_eq!(smith_normal_form(&m([[1, 2], [2, 4]])), Err(Error::Singular));
        assert!(smith_normal_form(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(hermite_normal_form(&IntMatrix::identity(3)).unwrap().d, IntMatrix::identity(3));
        assert_eq!(hermite_normal_form(&m([[0, 1], [1, 0]])).unwrap().d, IntMatrix::identity(2));
        assert_eq!(hermite_normal_form(&m([[2, 1], [0, 3]])).unwrap().d, m([[2, 1], [0, 3]]));
    }

    #[test]
    fn hnf_transform_and_canonical_shape() {
        let g = m([[4, 7, 1], [-2, 3, 5], [6, 0, 9]]);
        let r = hermite_normal_form(&g).unwrap();
        assert_eq!(r.u.mul(&g).unwrap(), r.d);
        assert_eq!(r.u.abs_det().unwrap(), 1);
        assert!(r.d.is_upper_triangular());
        for i in 0..3 {
            let p = r.d[(i, i)];
            assert!(p > 0);
            for above in 0..i {
                assert!((0..p).contains(&r.d[(above, i)]));
            }
        }
        // Same lattice, different basis, same form.
        let mut other = g.clone();
        other.add_row_multiple(0, 2, -3).unwrap();
        other.swap_rows(1, 2);
        other.negate_row(0);
        assert_eq!(hermite_normal_form(&other).unwrap().d, r.d);
    }

    #[test]
    fn hnf_rejects_rank_deficient() {
        assert_eq!(hermite_normal_form(&m([[1, 2], [2, 4]])), Err(Error::RankDeficient));
    }

    #[test]
    fn left_kernel_from_transform() {
        // Kernel of [1, 2, -7] acting on row vectors.
        let a = IntMatrix::from_rows(&[[1], [2], [-7]]).unwrap();
        let (u, h, rank) = hnf_with_transform(&a).unwrap();
        assert_eq!(rank, 1);
        assert_eq!(h[(0, 0)], 1);
        for i in 1..3 {
            assert_eq!(u.row(i)[0] + 2 * u.row(i)[1] - 7 * u.row(i)[2], 0);
        }
    }
}
