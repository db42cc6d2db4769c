//! Slow, independent reference computations used to cross-check the fast
//! paths.
//!
//! [`root_expansion_genus`] expands Π_{i=1}^k Q(zᵢ) in k formal roots with
//! xᵢ = zᵢ², then writes the weight-k part in elementary symmetric
//! polynomials by solving a linear system over monomial symmetric
//! functions. It shares nothing with the Newton's-identities path.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::genus::{partitions, CharSeries, GenusPolynomial, Partition, SymPoly};
use crate::series::{int, Coeff, ExactRational};

/// Exponent vector of a monomial in x₁..x_k.
type Exps = Vec<u32>;

#[derive(Clone, Debug)]
struct MultiPoly<R> {
    terms: BTreeMap<Exps, R>,
}

impl<R: Coeff> MultiPoly<R> {
    fn one(nvars: usize) -> Self {
        MultiPoly { terms: BTreeMap::from([(vec![0; nvars], R::one())]) }
    }

    /// Product truncated above total degree `cap`.
    fn mul(&self, rhs: &Self, cap: u32) -> Self {
        let mut terms: BTreeMap<Exps, R> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Exps = a.iter().zip(b).map(|(i, j)| i + j).collect();
                if e.iter().sum::<u32>() > cap {
                    continue;
                }
                let v = x.mul_ref(y);
                let slot = terms.entry(e).or_insert_with(R::zero);
                *slot = slot.add_ref(&v);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { terms }
    }

    fn coeff(&self, e: &Exps) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }
}

/// Σ_n cₙ xᵢⁿ for one variable.
fn univariate<R: Coeff>(coeffs: &[R], var: usize, nvars: usize) -> MultiPoly<R> {
    let mut terms = BTreeMap::new();
    for (n, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = vec![0; nvars];
        e[var] = n as u32;
        terms.insert(e, c.clone());
    }
    MultiPoly { terms }
}

/// e_j(x₁..x_k) as a rational polynomial.
fn elementary(j: u32, nvars: usize) -> MultiPoly<ExactRational> {
    let mut terms = BTreeMap::new();
    for mask in 0u32..(1 << nvars) {
        if mask.count_ones() == j {
            let e = (0..nvars).map(|i| (mask >> i) & 1).collect();
            terms.insert(e, int(1));
        }
    }
    MultiPoly { terms }
}

/// Exponent vector of the leading monomial x^μ of m_μ.
fn exps_of(mu: &Partition, nvars: usize) -> Exps {
    let mut e = mu.parts().to_vec();
    e.resize(nvars, 0);
    e
}

/// The degree-4k part of Π Q(zᵢ) written as a polynomial in p₁..p_k.
pub fn root_expansion_genus<R: Coeff>(q: &CharSeries<R>, k: u32) -> GenusPolynomial<R> {
    let nvars = k as usize;
    let series = q.series();
    let qx: Vec<R> = (0..=k as usize).map(|n| series.coeff(2 * n)).collect();
    let mut product = MultiPoly::one(nvars);
    for i in 0..nvars {
        product = product.mul(&univariate(&qx, i, nvars), k);
    }

    let lambdas = partitions(k);
    let n = lambdas.len();
    // a[μ][λ] = coefficient of x^μ in e_λ
    let mut a: Vec<Vec<ExactRational>> = vec![vec![int(0); n]; n];
    for (col, lambda) in lambdas.iter().enumerate() {
        let e_lambda = lambda
            .parts()
            .iter()
            .fold(MultiPoly::one(nvars), |acc, &j| acc.mul(&elementary(j, nvars), k));
        for (row, mu) in lambdas.iter().enumerate() {
            a[row][col] = e_lambda.coeff(&exps_of(mu, nvars));
        }
    }
    let mut b: Vec<R> = lambdas.iter().map(|mu| product.coeff(&exps_of(mu, nvars))).collect();

    // Gauss–Jordan elimination with rational pivots, applied to an R-valued
    // right-hand side.
    for c in 0..n {
        let p = (c..n).find(|&r| !Zero::is_zero(&a[r][c])).expect("e_λ form a basis");
        a.swap(p, c);
        b.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        b[c] = b[c].scale(&inv);
        let pivot = a[c].clone();
        for r in (0..n).filter(|&r| r != c) {
            let f = a[r][c].clone();
            if Zero::is_zero(&f) {
                continue;
            }
            for (x, p) in a[r].iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
            b[r] = b[r].sub_ref(&b[c].scale(&f));
        }
    }

    let mut poly = SymPoly::zero_capped(Some(k));
    for (lambda, c) in lambdas.into_iter().zip(b) {
        poly.add_term(lambda, &c);
    }
    GenusPolynomial::from_sympoly(k, &poly)
}
