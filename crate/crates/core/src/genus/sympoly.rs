//! Polynomials in weighted generators x₁, x₂, … (weight xⱼ = j), indexed by
//! partitions. The same container holds polynomials in the elementary
//! symmetric functions (Pontryagin classes) and in power sums.

use std::collections::BTreeMap;

use super::partition::{partitions_up_to, Partition};
use crate::series::{int, Coeff, ExactRational};

/// `Σ_λ c_λ x_λ` truncated above weight `cap` (no truncation when `None`).
#[derive(Clone, Debug)]
pub struct SymPoly<R> {
    terms: BTreeMap<Partition, R>,
    cap: Option<u32>,
}

fn min_cap(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<R: Coeff> SymPoly<R> {
    pub fn zero_capped(cap: Option<u32>) -> Self {
        SymPoly { terms: BTreeMap::new(), cap }
    }

    pub fn constant(c: R, cap: Option<u32>) -> Self {
        Self::term(Partition::empty(), c, cap)
    }

    pub fn term(p: Partition, c: R, cap: Option<u32>) -> Self {
        let mut s = Self::zero_capped(cap);
        s.add_term(p, &c);
        s
    }

    /// The generator x_j.
    pub fn generator(j: u32, cap: Option<u32>) -> Self {
        Self::term(Partition::new(vec![j]), R::one(), cap)
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    fn admits(&self, p: &Partition) -> bool {
        self.cap.is_none_or(|c| p.weight() <= c)
    }

    pub fn add_term(&mut self, p: Partition, c: &R) {
        if c.is_zero() || !self.admits(&p) {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(e) => {
                *e = e.add_ref(c);
                if e.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, R> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> R {
        self.terms.get(p).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of x_∅.
    pub fn constant_term(&self) -> R {
        self.coeff(&Partition::empty())
    }

    /// The homogeneous part of weight `w`.
    pub fn weight_part(&self, w: u32) -> Self {
        SymPoly {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == w)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
            cap: self.cap,
        }
    }

    pub fn with_cap(&self, cap: Option<u32>) -> Self {
        let cap = min_cap(self.cap, cap);
        let mut s = Self::zero_capped(cap);
        for (p, c) in &self.terms {
            s.add_term(p.clone(), c);
        }
        s
    }

    pub fn map_coeffs<S: Coeff>(&self, mut f: impl FnMut(&R) -> S) -> SymPoly<S> {
        let mut s = SymPoly::zero_capped(self.cap);
        for (p, c) in &self.terms {
            s.add_term(p.clone(), &f(c));
        }
        s
    }

    /// Maps every monomial x_λ to `f(λ) · x_λ`.
    pub fn scale_terms(&self, mut f: impl FnMut(&Partition) -> ExactRational) -> Self {
        let mut s = Self::zero_capped(self.cap);
        for (p, c) in &self.terms {
            s.add_term(p.clone(), &c.scale(&f(p)));
        }
        s
    }

    fn max_weight(&self) -> u32 {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }
}

impl<R: Coeff> PartialEq for SymPoly<R> {
    /// Equality of all terms up to the common cap.
    fn eq(&self, other: &Self) -> bool {
        let cap = min_cap(self.cap, other.cap);
        let keep = |p: &Partition| cap.is_none_or(|c| p.weight() <= c);
        let zero = R::zero();
        self.terms
            .keys()
            .chain(other.terms.keys())
            .filter(|p| keep(p))
            .all(|p| self.terms.get(p).unwrap_or(&zero) == other.terms.get(p).unwrap_or(&zero))
    }
}

impl<R: Coeff> Coeff for SymPoly<R> {
    fn zero() -> Self {
        Self::zero_capped(None)
    }
    fn one() -> Self {
        Self::constant(R::one(), None)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.with_cap(rhs.cap);
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c);
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.with_cap(rhs.cap);
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), &c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let cap = min_cap(self.cap, rhs.cap);
        let mut out = Self::zero_capped(cap);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                if cap.is_some_and(|c| p.weight() + q.weight() > c) {
                    continue;
                }
                out.add_term(p.union(q), &a.mul_ref(b));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }
    fn scale(&self, r: &ExactRational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }
    /// Invertible when the constant term is a unit and either the polynomial
    /// is constant or a cap makes the geometric series finite.
    fn inverse(&self) -> Option<Self> {
        let c0inv = self.constant_term().inverse()?;
        if self.terms.len() == 1 && self.terms.contains_key(&Partition::empty()) {
            return Some(Self::constant(c0inv, self.cap));
        }
        let cap = self.cap?;
        // 1/(c0(1 + u)) = c0⁻¹ Σ (−u)^n, u nilpotent of order ≤ cap.
        let unit = Self::constant(c0inv.clone(), Some(cap));
        let u = self.mul_ref(&unit).sub_ref(&Self::one());
        let mut acc = Self::one().with_cap(Some(cap));
        let mut power = Self::one().with_cap(Some(cap));
        for _ in 0..cap {
            power = power.mul_ref(&u).neg_ref();
            acc = acc.add_ref(&power);
        }
        Some(acc.mul_ref(&unit))
    }
}

/// The weight-≤cap part of exp(Σ_j b_j x_j), where `b[j-1]` = b_j:
/// `Σ_λ Π b_{λᵢ} / Π m_i! · x_λ`.
pub fn exp_of_linear<R: Coeff>(b: &[R], cap: u32) -> SymPoly<R> {
    let mut out = SymPoly::zero_capped(Some(cap));
    for p in partitions_up_to(cap) {
        if p.parts().iter().any(|&j| j as usize > b.len()) {
            continue;
        }
        let mut c = R::one();
        for &j in p.parts() {
            c = c.mul_ref(&b[j as usize - 1]);
        }
        let mut denom = int(1);
        for (_, m) in p.multiplicities() {
            for i in 1..=m {
                denom *= int(i64::from(i));
            }
        }
        out.add_term(p, &c.scale(&denom.recip()));
    }
    out
}

/// Newton's identities: the power sums ps_1..ps_cap written in the
/// elementary symmetric functions e_1..e_cap, as `SymPoly`s over e-partitions.
///
/// `ps_j = Σ_{i=1}^{j-1} (−1)^{i−1} e_i ps_{j−i} + (−1)^{j−1} j e_j`.
pub fn newton_power_sums(cap: u32) -> Vec<SymPoly<ExactRational>> {
    let mut ps: Vec<SymPoly<ExactRational>> = Vec::with_capacity(cap as usize);
    let sign = |i: u32| if i.is_multiple_of(2) { int(1) } else { int(-1) };
    for j in 1..=cap {
        let mut acc = SymPoly::generator(j, Some(cap)).scale(&(sign(j - 1) * int(i64::from(j))));
        for i in 1..j {
            let term = SymPoly::generator(i, Some(cap)).mul_ref(&ps[(j - i - 1) as usize]);
            acc = acc.add_ref(&term.scale(&sign(i - 1)));
        }
        ps.push(acc);
    }
    ps
}

/// Rewrites a polynomial in power sums as a polynomial in elementary
/// symmetric functions.
pub fn power_sums_to_elementary<R: Coeff>(poly: &SymPoly<R>) -> SymPoly<R> {
    let cap = poly.cap.unwrap_or_else(|| poly.max_weight());
    let ps = newton_power_sums(cap);
    let mut out = SymPoly::zero_capped(poly.cap);
    for (lambda, c) in &poly.terms {
        let mut expansion = SymPoly::<ExactRational>::one().with_cap(Some(cap));
        for &j in lambda.parts() {
            expansion = expansion.mul_ref(&ps[j as usize - 1]);
        }
        for (mu, r) in expansion.terms() {
            out.add_term(mu.clone(), &c.scale(r));
        }
    }
    out
}
