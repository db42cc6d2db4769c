//! Truncated univariate power series over an arbitrary [`Coeff`] ring.
//!
//! A series stores its coefficients together with a truncation `order`:
//! coefficients with index `< order` are exact, everything from `order` on is
//! unknown. `order == EXACT` marks a polynomial with no truncation.

use std::fmt::{self, Display, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coeff;
use super::rational::{int, ExactRational};
use crate::error::{Error, Result};

/// Order of an untruncated (polynomial) series.
pub const EXACT: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Parity {
    #[default]
    Any,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, n: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => n.is_multiple_of(2),
            Parity::Odd => n % 2 == 1,
        }
    }

    fn product(self, other: Parity) -> Parity {
        use Parity::*;
        match (self, other) {
            (Even, Even) | (Odd, Odd) => Even,
            (Even, Odd) | (Odd, Even) => Odd,
            _ => Any,
        }
    }

    fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::Any => Parity::Any,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
    order: usize,
    parity: Parity,
}

/// Series in ν = q^{1/2}: index `n` is the coefficient of q^{n/2}.
pub type QSeries<R = ExactRational> = Series<R>;
/// Series in the genus variable z.
pub type ZSeries<R = ExactRational> = Series<R>;

impl<R: Coeff> Series<R> {
    /// Builds a series valid below `order`; coefficients past it are dropped.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.truncate(order);
        let mut s = Series { coeffs, order, parity: Parity::Any };
        s.trim();
        s
    }

    pub fn polynomial(coeffs: Vec<R>) -> Self {
        Self::new(coeffs, EXACT)
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> R) -> Self {
        Self::new((0..order).map(&mut f).collect(), order)
    }

    pub fn zero_to(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one_to(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    pub fn constant(c: R) -> Self {
        Self::polynomial(vec![c])
    }

    /// `c · x^n + O(x^order)`.
    pub fn monomial(c: R, n: usize, order: usize) -> Self {
        let mut v = vec![R::zero(); n];
        v.push(c);
        Self::new(v, order)
    }

    /// The variable itself, `x + O(x^order)`.
    pub fn var(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    /// Projects onto the given parity: coefficients of the other parity are
    /// forced to zero.
    pub fn with_parity(mut self, parity: Parity) -> Self {
        for (n, c) in self.coeffs.iter_mut().enumerate() {
            if !parity.admits(n) {
                *c = R::zero();
            }
        }
        self.parity = parity;
        self.trim();
        self
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Stored coefficients; trailing zeros are trimmed.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    /// Index of the first nonzero coefficient, or `order` for a zero series.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut s = Self::new(self.coeffs.clone(), order);
        s.parity = self.parity;
        s
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl FnMut(&R) -> S) -> Series<S> {
        let mut s = Series::new(self.coeffs.iter().map(f).collect(), self.order);
        s.parity = self.parity;
        s
    }

    /// Nonzero terms as `(index, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add_series(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.add_ref(b))
    }

    pub fn sub_series(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.sub_ref(b))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let order = self.order.min(rhs.order);
        let len = self.coeffs.len().max(rhs.coeffs.len()).min(order);
        let zero = R::zero();
        let coeffs = (0..len)
            .map(|n| {
                f(
                    self.coeffs.get(n).unwrap_or(&zero),
                    rhs.coeffs.get(n).unwrap_or(&zero),
                )
            })
            .collect();
        let mut s = Self::new(coeffs, order);
        s.parity = if self.parity == rhs.parity { self.parity } else { Parity::Any };
        s
    }

    /// Cauchy product. The result is valid below
    /// `min(order(a) + val(b), order(b) + val(a))`.
    pub fn mul_series(&self, rhs: &Self) -> Self {
        let order = self
            .order
            .saturating_add(rhs.valuation())
            .min(rhs.order.saturating_add(self.valuation()));
        let len = (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(1).min(order);
        let mut out = vec![R::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        let mut s = Self::new(out, order);
        s.parity = self.parity.product(rhs.parity);
        s
    }

    pub fn neg_series(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, r: &ExactRational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        Coeff::pow(self, e)
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        let mut s = Self::new(v, self.order.saturating_add(k));
        s.parity = if k.is_multiple_of(2) { self.parity } else { self.parity.flip() };
        s
    }

    /// Divides by x^k; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || self.order < k {
            return Err(Error::NotInvertible);
        }
        let v = self.coeffs.iter().skip(k).cloned().collect();
        let mut s = Self::new(v, self.order - k.min(self.order));
        if self.order == EXACT {
            s.order = EXACT;
        }
        s.parity = if k.is_multiple_of(2) { self.parity } else { self.parity.flip() };
        Ok(s)
    }

    /// Substitutes x ↦ x^k.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut v = vec![R::zero(); (self.coeffs.len().max(1) - 1) * k + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            v[n * k] = c.clone();
        }
        Self::new(v, self.order.saturating_mul(k))
    }

    /// Substitutes x ↦ c·x.
    pub fn scale_var(&self, c: &ExactRational) -> Self {
        let mut p = int(1);
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a.scale(&p));
            p *= c;
        }
        let mut s = Self::new(v, self.order);
        s.parity = self.parity;
        s
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.scale(&int(n as i64)))
            .collect();
        let order = if self.order == EXACT { EXACT } else { self.order.saturating_sub(1) };
        let mut s = Self::new(v, order);
        s.parity = self.parity.flip();
        s
    }

    /// Termwise antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(R::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            v.push(c.scale(&ExactRational::new(1.into(), (n as i64 + 1).into())));
        }
        let mut s = Self::new(v, self.order.saturating_add(1));
        s.parity = self.parity.flip();
        s
    }

    /// Multiplicative inverse; the constant term must be a unit of `R`.
    pub fn invert(&self) -> Result<Self> {
        let c0inv = self.coeff(0).inverse().ok_or(Error::NotInvertible)?;
        if self.order == 0 {
            return Err(Error::InsufficientOrder { needed: 1, available: 0 });
        }
        if self.coeffs.len() <= 1 {
            let mut s = Self::new(vec![c0inv], self.order);
            s.parity = Parity::Even;
            return Ok(s);
        }
        if self.order == EXACT {
            return Err(Error::Unbounded);
        }
        let n_max = self.order;
        let mut b: Vec<R> = Vec::with_capacity(n_max);
        b.push(c0inv.clone());
        for n in 1..n_max {
            let mut acc = R::zero();
            for i in 1..=n.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[i];
                if !a.is_zero() && !b[n - i].is_zero() {
                    acc = acc.add_ref(&a.mul_ref(&b[n - i]));
                }
            }
            b.push(acc.mul_ref(&c0inv).neg_ref());
        }
        let mut s = Self::new(b, self.order);
        s.parity = if self.parity == Parity::Even { Parity::Even } else { Parity::Any };
        Ok(s)
    }

    /// The principal square root of the inverse: `r² · s = 1`, `r(0) = 1`.
    pub fn inv_sqrt(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvSqrtConstant);
        }
        let w = self.invert()?;
        if w.order == EXACT {
            return Ok(w);
        }
        let half = ExactRational::new(1.into(), 2.into());
        let mut r: Vec<R> = Vec::with_capacity(w.order);
        r.push(R::one());
        for n in 1..w.order {
            let mut acc = w.coeff(n);
            for i in 1..n {
                if !r[i].is_zero() && !r[n - i].is_zero() {
                    acc = acc.sub_ref(&r[i].mul_ref(&r[n - i]));
                }
            }
            r.push(acc.scale(&half));
        }
        let mut s = Self::new(r, w.order);
        s.parity = w.parity;
        Ok(s)
    }

    /// `self ∘ inner`, with `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::ComposeConstant);
        }
        let v = inner.valuation();
        let cap = self.order.saturating_mul(v);
        let mut acc = Self::zero_to(EXACT);
        for n in (0..self.coeffs.len()).rev() {
            acc = acc.mul_series(inner).truncate(cap);
            if !self.coeffs[n].is_zero() {
                acc = acc.add_series(&Self::constant(self.coeffs[n].clone()));
            }
        }
        let mut out = acc.truncate(cap);
        if inner.parity == Parity::Odd {
            out.parity = self.parity;
            if self.parity != Parity::Any {
                out = out.with_parity(self.parity);
            }
        }
        Ok(out)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[x^n] g = (1/n) [w^{n-1}] (w / f(w))^n`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() || !self.coeff(1).is_one() {
            return Err(Error::ReversionPrecondition);
        }
        if self.order == EXACT {
            return Err(Error::Unbounded);
        }
        let n_max = self.order;
        let h = self.shift_down(1)?.invert()?;
        let mut g = vec![R::zero(); n_max];
        let mut power = h.clone();
        for (n, slot) in g.iter_mut().enumerate().skip(1) {
            *slot = power.coeff(n - 1).scale(&ExactRational::new(1.into(), (n as i64).into()));
            power = power.mul_series(&h).truncate(n_max);
        }
        let mut s = Self::new(g, n_max);
        if self.parity == Parity::Odd {
            s = s.with_parity(Parity::Odd);
        }
        Ok(s)
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::LogConstant);
        }
        let q = self.derivative().mul_series(&self.invert()?);
        let mut s = q.integrate().truncate(self.order);
        if self.parity == Parity::Even {
            s = s.with_parity(Parity::Even);
        }
        Ok(s)
    }

    /// Formal exponential of a series without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::ExpConstant);
        }
        if self.is_zero() {
            return Ok(Self::one_to(self.order));
        }
        if self.order == EXACT {
            return Err(Error::Unbounded);
        }
        let n_max = self.order;
        let mut e: Vec<R> = Vec::with_capacity(n_max);
        e.push(R::one());
        for n in 1..n_max {
            let mut acc = R::zero();
            for k in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                let a = &self.coeffs[k];
                if !a.is_zero() && !e[n - k].is_zero() {
                    acc = acc.add_ref(&a.mul_ref(&e[n - k]).scale(&int(k as i64)));
                }
            }
            e.push(acc.scale(&ExactRational::new(1.into(), (n as i64).into())));
        }
        let mut s = Self::new(e, n_max);
        if self.parity == Parity::Even {
            s = s.with_parity(Parity::Even);
        }
        Ok(s)
    }
}

impl<R: Coeff> PartialEq for Series<R> {
    /// Equality up to the common valid order.
    fn eq(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len()).min(order);
        (0..len).all(|n| self.coeff(n) == other.coeff(n))
    }
}

impl<R: Coeff> Coeff for Series<R> {
    fn zero() -> Self {
        Self::zero_to(EXACT)
    }
    fn one() -> Self {
        Self::one_to(EXACT)
    }
    fn is_zero(&self) -> bool {
        Series::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_series(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub_series(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_series(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg_series()
    }
    fn scale(&self, r: &ExactRational) -> Self {
        Series::scale(self, r)
    }
    fn inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $impl_fn:ident) => {
        impl<R: Coeff> $tr<&Series<R>> for &Series<R> {
            type Output = Series<R>;
            fn $m(self, rhs: &Series<R>) -> Series<R> {
                self.$impl_fn(rhs)
            }
        }
        impl<R: Coeff> $tr for Series<R> {
            type Output = Series<R>;
            fn $m(self, rhs: Series<R>) -> Series<R> {
                (&self).$impl_fn(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_series);
forward_binop!(Sub, sub, sub_series);
forward_binop!(Mul, mul, mul_series);

impl<R: Coeff> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.neg_series()
    }
}

impl<R: Coeff> Neg for Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.neg_series()
    }
}

/// Formats a single term `c * var^n`, with `first` controlling the leading sign.
pub(crate) fn push_term(out: &mut String, coeff: &str, mono: &str) {
    let first = out.is_empty();
    let (neg, body) = match coeff.strip_prefix('-') {
        Some(b) if !b.contains(['+', '-']) => (true, b.to_string()),
        _ => (false, coeff.to_string()),
    };
    let body = if body.contains(['+', ' ']) || (body.contains('-') && !mono.is_empty()) {
        format!("({body})")
    } else {
        body
    };
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    match (body.as_str(), mono.is_empty()) {
        (_, true) => out.push_str(&body),
        ("1", false) => out.push_str(mono),
        (_, false) => {
            let _ = write!(out, "{body}*{mono}");
        }
    }
}

impl<R: Coeff + Display> Series<R> {
    /// Renders as `c0 + c1*x + c2*x^2 + O(x^N)`.
    pub fn to_string_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (n, c) in self.terms() {
            let mono = match n {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{n}"),
            };
            push_term(&mut out, &c.to_string(), &mono);
        }
        if self.order != EXACT {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let _ = write!(out, "O({var}^{})", self.order);
        } else if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<R: Coeff + Display> Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("z"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::{int, rat};

    fn s(v: &[i64], order: usize) -> Series<ExactRational> {
        Series::new(v.iter().map(|&x| int(x)).collect(), order)
    }

    #[test]
    fn difference_of_squares_in_nu() {
        // (1+ν²)(1−ν²) = 1−ν⁴
        let a = s(&[1, 0, 1], 10);
        let b = s(&[1, 0, -1], 10);
        assert_eq!(&a * &b, s(&[1, 0, 0, 0, -1], 10));
    }

    #[test]
    fn identity_and_square() {
        let x = s(&[3, 1, 4, 1, 5], 8);
        assert_eq!(&Series::zero_to(8) + &x, x);
        let one_plus_q = s(&[1, 1], 6);
        assert_eq!(&one_plus_q * &one_plus_q, s(&[1, 2, 1], 6));
    }

    #[test]
    fn mul_order_rule_tracks_valuation() {
        let a = s(&[0, 0, 1], 5); // x² + O(x⁵)
        let b = s(&[1, 1], 4); // 1 + x + O(x⁴)
        assert_eq!(a.mul_series(&b).order(), 5);
        let exact = Series::polynomial(vec![int(0), int(1)]);
        assert_eq!(exact.mul_series(&b).order(), 5);
    }

    #[test]
    fn geometric_and_constant_inverse() {
        let inv = s(&[1, -1], 6).invert().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1, 1], 6));
        let half = Series::constant(int(2)).invert().unwrap();
        assert_eq!(half.coeff(0), rat(1, 2));
        assert_eq!(s(&[0, 1], 4).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn inv_sqrt_central_binomials() {
        let r = s(&[1, -4], 8).inv_sqrt().unwrap();
        assert_eq!(r, s(&[1, 2, 6, 20, 70, 252, 924, 3432], 8));
        assert_eq!(Series::constant(int(1)).inv_sqrt().unwrap(), Series::constant(int(1)));
        assert_eq!(s(&[2, 1], 4).inv_sqrt(), Err(Error::InvSqrtConstant));
    }

    #[test]
    fn integrate_termwise() {
        let one = Series::<ExactRational>::one_to(5);
        assert_eq!(one.integrate(), s(&[0, 1], 6));
        let f = Series::new(vec![int(1), int(0), rat(1, 1)], 5).integrate();
        assert_eq!(f.coeff(3), rat(1, 3));
        let g = s(&[2, 7, 1, 8], 6);
        assert_eq!(g.integrate().derivative(), g);
    }

    #[test]
    fn compose_examples() {
        let f = s(&[1, 2, 3, 4], 6);
        assert_eq!(f.compose(&Series::var(6)).unwrap(), f);
        let z2 = s(&[0, 0, 1], 8);
        let inner = s(&[0, 1, 1], 8);
        assert_eq!(z2.compose(&inner).unwrap(), s(&[0, 0, 1, 2, 1], 8));
        let two_z = s(&[0, 2], 8);
        assert_eq!(f.compose(&two_z).unwrap(), f.scale_var(&int(2)));
        assert_eq!(f.compose(&s(&[1, 1], 8)), Err(Error::ComposeConstant));
    }

    #[test]
    fn reversion_examples() {
        let z = Series::<ExactRational>::var(9);
        assert_eq!(z.reversion().unwrap(), z);
        let f = s(&[0, 1, 0, 1], 9).with_parity(Parity::Odd);
        let g = f.reversion().unwrap();
        assert_eq!(g, s(&[0, 1, 0, -1, 0, 3, 0, -12, 0], 9));
        assert_eq!(f.compose(&g).unwrap(), z);
        assert_eq!(s(&[0, 2], 5).reversion(), Err(Error::ReversionPrecondition));
    }

    #[test]
    fn log_exp_inverse_pair() {
        let a = s(&[0, 1, -2, 3], 7);
        let e = a.exp().unwrap();
        assert_eq!(e.log().unwrap(), a);
    }

    #[test]
    fn display() {
        let x = Series::new(vec![rat(1, 4), int(6), int(-1)], 3);
        assert_eq!(x.to_string_in("q"), "1/4 + 6*q - q^2 + O(q^3)");
        assert_eq!(Series::<ExactRational>::zero_to(EXACT).to_string(), "0");
    }
}
