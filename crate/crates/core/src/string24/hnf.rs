//! Column-style Hermite normal form over ℤ.
//!
//! Convention: H = A·U with U unimodular, H lower triangular in echelon form,
//! pivots positive, and every entry left of a pivot reduced into
//! `0 ≤ h < pivot`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

type Mat = Vec<Vec<BigInt>>;

fn col_combine(a: &mut Mat, i: usize, j: usize, x: &BigInt, y: &BigInt, u: &BigInt, v: &BigInt) {
    // (col_i, col_j) ← (x·col_i + y·col_j, u·col_i + v·col_j)
    for row in a.iter_mut() {
        let (ci, cj) = (row[i].clone(), row[j].clone());
        row[i] = x * &ci + y * &cj;
        row[j] = u * &ci + v * &cj;
    }
}

fn col_axpy(a: &mut Mat, dst: usize, src: usize, f: &BigInt) {
    // col_dst ← col_dst − f·col_src
    for row in a.iter_mut() {
        let d = f * &row[src];
        row[dst] -= d;
    }
}

/// The column HNF of a rectangular integer matrix given as rows.
pub fn column_hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Mat = rows.to_vec();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut pivot_col = 0;
    for r in 0..n_rows {
        if pivot_col == n_cols {
            break;
        }
        for j in pivot_col + 1..n_cols {
            if a[r][j].is_zero() {
                continue;
            }
            let (p, q) = (a[r][pivot_col].clone(), a[r][j].clone());
            let e = p.extended_gcd(&q);
            // x·p + y·q = g; the second column becomes (−q/g)·col_p + (p/g)·col_q, zero in row r.
            col_combine(&mut a, pivot_col, j, &e.x, &e.y, &(-&q / &e.gcd), &(&p / &e.gcd));
        }
        if a[r][pivot_col].is_zero() {
            continue;
        }
        if a[r][pivot_col].is_negative() {
            for row in a.iter_mut() {
                row[pivot_col] = -&row[pivot_col];
            }
        }
        let pivot = a[r][pivot_col].clone();
        for j in 0..pivot_col {
            let f = a[r][j].div_floor(&pivot);
            if !f.is_zero() {
                col_axpy(&mut a, j, pivot_col, &f);
            }
        }
        pivot_col += 1;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Mat {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn unimodular_gives_identity() {
        let a = m(&[&[2, 1, 0], &[1, 1, 0], &[5, -7, 1]]);
        assert_eq!(column_hnf(&a), m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn reduces_left_of_pivot() {
        let a = m(&[&[4, 6], &[1, 5]]);
        // lattice {(4a+6b, a+5b)}: pivot gcd(4,6) = 2, det 14 ⇒ second pivot 7
        let h = column_hnf(&a);
        assert_eq!(h[0], [BigInt::from(2), BigInt::from(0)]);
        assert_eq!(h[1][1], BigInt::from(7));
        assert!(h[1][0] >= BigInt::zero() && h[1][0] < BigInt::from(7));
    }

    #[test]
    fn rank_deficient() {
        let a = m(&[&[2, 4], &[3, 6]]);
        assert_eq!(column_hnf(&a), m(&[&[2, 0], &[3, 0]]));
    }
}
