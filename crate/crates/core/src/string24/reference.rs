//! Reference matrices, kept as literal data so that the derived
//! matrices in the parent module can be checked against them.

use super::matrix::Matrix4;
use crate::series::int;

fn from_products(rows: [[(i64, &[i64]); 4]; 4]) -> Matrix4 {
    Matrix4::from_fn(|i, j| {
        let (sign, factors) = rows[i][j];
        int(sign * factors.iter().product::<i64>())
    })
}

const P2: i64 = 2;

/// (a₀..a₃) in terms of (Â, Â(·,T)/24, Â(·,Λ²), Sig/8) for string manifolds.
pub fn expected_kappa_matrix() -> Matrix4 {
    let p = |e: u32| P2.pow(e);
    from_products([
        [(1, &[p(18)]), (0, &[]), (0, &[]), (0, &[])],
        [(-1, &[p(15), 3, 5]), (-1, &[p(15), 3]), (0, &[]), (0, &[])],
        [(1, &[p(8), 3, 331]), (1, &[p(9), 243]), (1, &[p(6)]), (0, &[])],
        [(-1, &[p(8), 97]), (-1, &[p(9), 3, 17]), (-1, &[p(6)]), (1, &[p(3)])],
    ])
}

/// (a_j(M_i)) with rows j and columns i.
pub fn expected_image_matrix() -> Matrix4 {
    let p = |e: u32| P2.pow(e);
    from_products([
        [(0, &[]), (1, &[p(18)]), (0, &[]), (0, &[])],
        [(1, &[p(15), 3]), (-1, &[p(15), 3, 5]), (0, &[]), (0, &[])],
        [(-1, &[p(11), 27]), (1, &[p(11), 27, 257]), (-1, &[p(6)]), (0, &[])],
        [(1, &[p(12), 81]), (-1, &[p(12), 81, 41]), (1, &[p(5), 9]), (1, &[p(3)])],
    ])
}
