use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{as_integer, from_bigint, int, to_wire, ExactRational};

/// A 4×4 matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix4(pub [[ExactRational; 4]; 4]);

pub type Vector4 = [ExactRational; 4];

impl Matrix4 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> ExactRational) -> Self {
        Matrix4(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn from_ints(rows: [[i64; 4]; 4]) -> Self {
        Self::from_fn(|i, j| int(rows[i][j]))
    }

    pub fn from_bigints(rows: &[[BigInt; 4]; 4]) -> Self {
        Self::from_fn(|i, j| from_bigint(&rows[i][j]))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { int(1) } else { int(0) })
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactRational {
        &self.0[i][j]
    }

    pub fn row(&self, i: usize) -> Vector4 {
        self.0[i].clone()
    }

    pub fn column(&self, j: usize) -> Vector4 {
        std::array::from_fn(|i| self.0[i][j].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn mul(&self, rhs: &Matrix4) -> Matrix4 {
        Self::from_fn(|i, j| dot(&self.0[i], |l| &rhs.0[l][j]))
    }

    pub fn mul_vec(&self, v: &Vector4) -> Vector4 {
        std::array::from_fn(|i| dot(&self.0[i], |l| &v[l]))
    }

    /// Row i multiplied by `factors[i]`.
    pub fn scale_rows(&self, factors: &Vector4) -> Matrix4 {
        Self::from_fn(|i, j| &self.0[i][j] * &factors[i])
    }

    pub fn det(&self) -> ExactRational {
        let mut a = self.0.clone();
        let mut det = int(1);
        for c in 0..4 {
            let Some(p) = (c..4).find(|&r| !a[r][c].is_zero()) else {
                return int(0);
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= &a[c][c];
            let (top, rest) = a.split_at_mut(c + 1);
            let pivot = &top[c];
            for row in rest.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] / &pivot[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix4> {
        let mut a = self.0.clone();
        let mut inv = Self::identity().0;
        for c in 0..4 {
            let p = (c..4).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(p, c);
            inv.swap(p, c);
            let pivot = a[c][c].recip();
            for j in 0..4 {
                a[c][j] *= &pivot;
                inv[c][j] *= &pivot;
            }
            for r in (0..4).filter(|&r| r != c) {
                let f = a[r][c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..4 {
                    if !a[c][j].is_zero() {
                        let x = &f * &a[c][j];
                        a[r][j] -= x;
                    }
                    if !inv[c][j].is_zero() {
                        let y = &f * &inv[c][j];
                        inv[r][j] -= y;
                    }
                }
            }
        }
        Ok(Matrix4(inv))
    }

    /// Solves `self · x = b` exactly.
    pub fn solve(&self, b: &Vector4) -> Result<Vector4> {
        Ok(self.inverse()?.mul_vec(b))
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_integer())
    }

    pub fn to_integers(&self) -> Option<[[BigInt; 4]; 4]> {
        let mut out: [[BigInt; 4]; 4] = Default::default();
        for (dst, src) in out.iter_mut().zip(&self.0) {
            for (d, x) in dst.iter_mut().zip(src) {
                *d = as_integer(x)?;
            }
        }
        Some(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| i == j || self.0[i][j].is_zero()))
    }

    pub fn diagonal(&self) -> Vector4 {
        std::array::from_fn(|i| self.0[i][i].clone())
    }

    pub fn is_unimodular(&self) -> bool {
        let d = self.det();
        self.is_integral() && (d.is_one() || (-d).is_one())
    }
}

impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|x| if x.is_integer() { x.to_integer().to_string() } else { to_wire(x) })
                .collect();
            write!(f, "[{}]", cells.join(", "))?;
            if i < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn dot<'a>(row: &Vector4, rhs: impl Fn(usize) -> &'a ExactRational) -> ExactRational {
    let mut acc = int(0);
    for (l, x) in row.iter().enumerate() {
        let y = rhs(l);
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn vector_is_integral(v: &Vector4) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn vector_to_integers(v: &Vector4) -> Option<[BigInt; 4]> {
    let mut out: [BigInt; 4] = Default::default();
    for (o, x) in out.iter_mut().zip(v) {
        *o = as_integer(x)?;
    }
    Some(out)
}
