//! q-expansions of theta constants, the elliptic parameters δᵢ(τ), εᵢ(τ),
//! the Eisenstein series E₄, the discriminant Δ and Δ̄ = E₄³ − 744Δ, and the
//! two-variable solutions F₁, F₂ of the Jacobi quartic.
//!
//! All q-series are in ν = q^{1/2} (see [`QSeries`]); orders below are in
//! ν-units. τ never appears as a number.
//!
//! The genus variable is normalized as z = 2π√−1·v, so e^{±2π√−1 v} = e^{±z},
//! sin(πv) = −√−1·sinh(z/2) and cos(πv) = cosh(z/2). Under this substitution
//! every factor of 2π√−1 and every q^{1/8} cancels and F₁, F₂ have rational
//! coefficients:
//!
//! ```text
//! F₁(z) = 2 tanh(z/2) · Π_j (1 − c q^j + q^{2j})(1 + q^j)² / ((1 − q^j)² (1 + c q^j + q^{2j}))
//! F₂(z) = 2 sinh(z/2) · Π_j (1 − c q^j + q^{2j})(1 − q^{j−1/2})² / ((1 − q^j)² (1 − c q^{j−1/2} + q^{2j−1}))
//! ```
//!
//! with c = e^z + e^{−z}.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::series::{int, rat, Coeff, ExactRational, Parity, QSeries, Series, ZSeries};

/// Theta constants at v = 0. `θ(0, τ)` vanishes identically and has no entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    /// θ₁(0,τ) = 2q^{1/8} Π(1−qʲ)(1+qʲ)²
    Theta1,
    /// θ₂(0,τ) = Π(1−qʲ)(1−q^{j−1/2})²
    Theta2,
    /// θ₃(0,τ) = Π(1−qʲ)(1+q^{j−1/2})²
    Theta3,
    /// θ′(0,τ)/π = 2q^{1/8} Π(1−qʲ)³, the v-derivative of θ at 0 without
    /// its transcendental factor π.
    ThetaPrime,
}

/// `q^{prefactor_eighths/8} · body`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaConstant {
    pub prefactor_eighths: i64,
    pub body: QSeries,
}

impl ThetaConstant {
    pub fn mul(&self, rhs: &Self) -> Self {
        ThetaConstant {
            prefactor_eighths: self.prefactor_eighths + rhs.prefactor_eighths,
            body: &self.body * &rhs.body,
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(ThetaConstant {
            prefactor_eighths: self.prefactor_eighths - rhs.prefactor_eighths,
            body: &self.body * &rhs.body.invert()?,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        ThetaConstant {
            prefactor_eighths: self.prefactor_eighths * i64::from(e),
            body: self.body.pow(e),
        }
    }

    /// Resolves the prefactor into ν-powers. Only multiples of q^{1/2} with
    /// nonnegative exponent are representable.
    pub fn to_qseries(&self) -> Result<QSeries> {
        let e = self.prefactor_eighths;
        if e < 0 || e % 4 != 0 {
            return Err(Error::FractionalPrefactor(e));
        }
        Ok(self.body.shift_up((e / 4) as usize))
    }
}

/// `1 + c·ν^exp + O(ν^order)`.
fn binomial_factor(c: i64, exp: usize, order: usize) -> QSeries {
    let mut v = vec![int(0); exp + 1];
    v[0] = int(1);
    v[exp] = int(c);
    Series::new(v, order)
}

/// Number of product factors j = 1, 2, … that can touch coefficients below
/// `order`: (1 ± q^j) needs 2j < order and (1 ± q^{j−1/2}) needs 2j − 1 < order.
pub fn factors_needed(order: usize) -> usize {
    order / 2
}

/// Π_{j=1..n} (1 + sign·ν^{step·j − shift})^power
fn product(n: usize, step: usize, shift: usize, sign: i64, power: u32, order: usize) -> QSeries {
    let mut acc = QSeries::one_to(order);
    for j in 1..=n {
        let exp = step * j - shift;
        if exp >= order {
            break;
        }
        acc = &acc * &binomial_factor(sign, exp, order).pow(power);
    }
    acc
}

/// Theta constant with the product truncated to `n_factors` factors.
pub fn theta_constant_with_factors(which: ThetaKind, n_factors: usize, order: usize) -> ThetaConstant {
    let euler = product(n_factors, 2, 0, -1, 1, order);
    match which {
        ThetaKind::Theta1 => ThetaConstant {
            prefactor_eighths: 1,
            body: (&euler * &product(n_factors, 2, 0, 1, 2, order)).scale(&int(2)),
        },
        ThetaKind::Theta2 => ThetaConstant {
            prefactor_eighths: 0,
            body: &euler * &product(n_factors, 2, 1, -1, 2, order),
        },
        ThetaKind::Theta3 => ThetaConstant {
            prefactor_eighths: 0,
            body: &euler * &product(n_factors, 2, 1, 1, 2, order),
        },
        ThetaKind::ThetaPrime => ThetaConstant {
            prefactor_eighths: 1,
            body: euler.pow(3).scale(&int(2)),
        },
    }
}

pub fn theta_constant(which: ThetaKind, order: usize) -> ThetaConstant {
    theta_constant_with_factors(which, factors_needed(order), order)
}

fn theta4(which: ThetaKind, order: usize) -> ThetaConstant {
    theta_constant(which, order).pow(4)
}

/// δ₁ = (θ₂⁴ + θ₃⁴)/8 = 1/4 + 6q + 6q² + …
pub fn delta1(order: usize) -> QSeries {
    let s = &theta4(ThetaKind::Theta2, order).to_qseries().unwrap()
        + &theta4(ThetaKind::Theta3, order).to_qseries().unwrap();
    s.scale(&rat(1, 8))
}

/// ε₁ = θ₂⁴θ₃⁴/16 = 1/16 − q + 7q² + …
pub fn eps1(order: usize) -> QSeries {
    theta4(ThetaKind::Theta2, order)
        .mul(&theta4(ThetaKind::Theta3, order))
        .to_qseries()
        .unwrap()
        .scale(&rat(1, 16))
}

/// δ₂ = −(θ₁⁴ + θ₃⁴)/8 = −1/8 − 3q^{1/2} − 3q + …
pub fn delta2(order: usize) -> QSeries {
    let s = &theta4(ThetaKind::Theta1, order).to_qseries().unwrap()
        + &theta4(ThetaKind::Theta3, order).to_qseries().unwrap();
    s.scale(&rat(-1, 8)).truncate(order)
}

/// ε₂ = θ₁⁴θ₃⁴/16 = q^{1/2} + 8q + …
pub fn eps2(order: usize) -> QSeries {
    theta4(ThetaKind::Theta1, order)
        .mul(&theta4(ThetaKind::Theta3, order))
        .to_qseries()
        .unwrap()
        .scale(&rat(1, 16))
        .truncate(order)
}

/// (δᵢ, εᵢ) for Jacobi solution `kind` ∈ {1, 2}.
pub fn elliptic_params(kind: u8, order: usize) -> (QSeries, QSeries) {
    match kind {
        1 => (delta1(order), eps1(order)),
        2 => (delta2(order), eps2(order)),
        _ => panic!("Jacobi solution kind must be 1 or 2, got {kind}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllipticParam {
    Delta1,
    Eps1,
    Delta2,
    Eps2,
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// The same δᵢ, εᵢ computed purely from divisor sums.
pub fn divisor_sum_oracle(which: EllipticParam, order: usize) -> QSeries {
    use EllipticParam::*;
    let coeff = |idx: usize| -> ExactRational {
        match which {
            Delta1 | Eps1 if idx % 2 == 1 => int(0),
            Delta1 if idx == 0 => rat(1, 4),
            Eps1 if idx == 0 => rat(1, 16),
            Delta2 if idx == 0 => rat(-1, 8),
            Eps2 if idx == 0 => int(0),
            Delta1 => {
                let n = (idx / 2) as u64;
                int(6 * divisors(n).filter(|d| d % 2 == 1).sum::<u64>() as i64)
            }
            Eps1 => {
                let n = (idx / 2) as u64;
                int(divisors(n)
                    .map(|d| if d % 2 == 0 { 1 } else { -1 } * (d as i64).pow(3))
                    .sum())
            }
            Delta2 => {
                let n = idx as u64;
                int(-3 * divisors(n).filter(|d| d % 2 == 1).sum::<u64>() as i64)
            }
            Eps2 => {
                let n = idx as u64;
                int(divisors(n).filter(|d| (n / d) % 2 == 1).map(|d| (d as i64).pow(3)).sum())
            }
        }
    };
    Series::from_fn(order, coeff)
}

fn sigma3(n: u64) -> i64 {
    divisors(n).map(|d| (d as i64).pow(3)).sum()
}

/// E₄ = 1 + 240 Σ σ₃(n) qⁿ.
pub fn e4(order: usize) -> QSeries {
    Series::from_fn(order, |idx| match idx {
        0 => int(1),
        _ if idx % 2 == 1 => int(0),
        _ => int(240 * sigma3((idx / 2) as u64)),
    })
}

/// Δ = q Π (1 − qⁿ)²⁴.
pub fn discriminant(order: usize) -> QSeries {
    if order <= 2 {
        return QSeries::zero_to(order);
    }
    product(factors_needed(order), 2, 0, -1, 24, order - 2).shift_up(2)
}

/// Δ̄ = E₄³ − 744Δ.
pub fn delta_bar(order: usize) -> QSeries {
    &e4(order).pow(3) - &discriminant(order).scale(&int(744))
}

/// Renders a ν-series with q-exponents: `1/4 + 6*q + q^(3/2) + O(q^2)`.
pub fn format_q(s: &QSeries) -> String {
    let mono = |n: usize| -> String {
        match n {
            0 => String::new(),
            2 => "q".into(),
            _ if n.is_multiple_of(2) => format!("q^{}", n / 2),
            _ => format!("q^({n}/2)"),
        }
    };
    let mut out = String::new();
    for (n, c) in s.terms() {
        crate::series::push_term(&mut out, &c.to_string(), &mono(n));
    }
    if s.is_exact() {
        if out.is_empty() {
            out.push('0');
        }
        return out;
    }
    if !out.is_empty() {
        out.push_str(" + ");
    }
    let o = s.order();
    let _ = match o {
        0 => write!(out, "O(1)"),
        _ => write!(out, "O({})", mono(o)),
    };
    out
}

/// An odd z-series with rational q-series coefficients, F(z) = z + O(z³).
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiSolution {
    pub kind: u8,
    pub series: ZSeries<QSeries>,
}

fn factorial(n: u64) -> ExactRational {
    (1..=n).fold(int(1), |acc, k| acc * int(k as i64))
}

/// cosh(z) − 1 as a z-series with exact constant q-series coefficients.
fn cosh_minus_one(z_order: usize) -> ZSeries<QSeries> {
    Series::from_fn(z_order, |n| {
        if n == 0 || n % 2 == 1 {
            QSeries::zero()
        } else {
            QSeries::constant(factorial(n as u64).recip())
        }
    })
    .with_parity(Parity::Even)
}

/// 2 sinh(z/2) and 2 cosh(z/2) as rational z-series.
fn half_angle(z_order: usize) -> (ZSeries, ZSeries) {
    let term = |n: usize| factorial(n as u64).recip() * rat(1, 2).pow(n as i32) * int(2);
    let sinh = Series::from_fn(z_order, |n| if n % 2 == 1 { term(n) } else { int(0) });
    let cosh = Series::from_fn(z_order, |n| if n % 2 == 0 { term(n) } else { int(0) });
    (sinh.with_parity(Parity::Odd), cosh.with_parity(Parity::Even))
}

/// `t/(1 − t)²` (sign = −1) or `t/(1 + t)²` (sign = +1) for t = ν^exp.
fn t_over_square(exp: usize, sign: i64, q_order: usize) -> QSeries {
    let t = Series::monomial(int(1), exp, q_order);
    let denom = binomial_factor(sign, exp, q_order).pow(2);
    &t * &denom.invert().expect("constant term 1")
}

/// `1 + scale·(c − 2)·T` where c − 2 = 2(cosh z − 1) and T is a q-series.
fn product_factor(cm1: &ZSeries<QSeries>, t: &QSeries, scale: i64) -> ZSeries<QSeries> {
    let t = t.scale(&int(2 * scale));
    let body = cm1.mul_coeff(&t);
    &ZSeries::<QSeries>::one_to(cm1.order()) + &body
}

/// F₁ or F₂ to z-order `z_order` and ν-order `q_order`.
pub fn jacobi_solution(kind: u8, z_order: usize, q_order: usize) -> Result<JacobiSolution> {
    let cm1 = cosh_minus_one(z_order);
    let (sinh, cosh) = half_angle(z_order);
    let base = match kind {
        1 => (&sinh * &cosh.invert()?).scale(&int(2)),
        2 => sinh,
        _ => panic!("Jacobi solution kind must be 1 or 2, got {kind}"),
    };
    let mut numer = base.map_coeffs(|c| QSeries::constant(c.clone()).truncate(q_order));
    let mut denom = ZSeries::<QSeries>::one_to(z_order);
    for j in 1..=factors_needed(q_order) {
        if 2 * j < q_order {
            numer = &numer * &product_factor(&cm1, &t_over_square(2 * j, -1, q_order), -1);
        }
        let (exp, sign, scale) = if kind == 1 { (2 * j, 1, 1) } else { (2 * j - 1, -1, -1) };
        if exp < q_order {
            denom = &denom * &product_factor(&cm1, &t_over_square(exp, sign, q_order), scale);
        }
    }
    let series = (&numer * &denom.invert()?).truncate(z_order).with_parity(Parity::Odd);
    Ok(JacobiSolution { kind, series })
}

impl JacobiSolution {
    /// The q = 0 limit, a rational z-series.
    pub fn at_q_zero(&self) -> ZSeries {
        self.series.map_coeffs(|c| c.coeff(0))
    }

    /// (F′)² − (1 − 2δF² + εF⁴).
    pub fn quartic_residual(&self, delta: &QSeries, eps: &QSeries) -> ZSeries<QSeries> {
        let f = &self.series;
        let df = f.derivative();
        let f2 = f * f;
        let f4 = &f2 * &f2;
        let one = ZSeries::<QSeries>::one_to(f.order());
        let rhs = &(&one - &f2.mul_coeff(&delta.scale(&int(2)))) + &f4.mul_coeff(eps);
        &(&df * &df) - &rhs
    }
}

/// Finite-product expansion of θ₃(0,τ) term by term, used as an independent
/// check of [`theta_constant`].
pub fn theta3_direct(order: usize) -> QSeries {
    let mut coeffs = vec![int(0); order];
    // Jacobi triple product: θ₃(0,τ) = Σ_{n∈ℤ} q^{n²/2}, i.e. ν^{n²}.
    let mut n: usize = 0;
    while n * n < order {
        coeffs[n * n] += if n == 0 { int(1) } else { int(2) };
        n += 1;
    }
    Series::new(coeffs, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[ExactRational], order: usize) -> QSeries {
        Series::new(v.to_vec(), order)
    }

    #[test]
    fn leading_terms() {
        assert_eq!(delta1(5), q(&[rat(1, 4), int(0), int(6), int(0), int(6)], 5));
        assert_eq!(eps1(5), q(&[rat(1, 16), int(0), int(-1), int(0), int(7)], 5));
        assert_eq!(delta2(3), q(&[rat(-1, 8), int(-3), int(-3)], 3));
        assert_eq!(eps2(3), q(&[int(0), int(1), int(8)], 3));
    }

    #[test]
    fn theta_constant_shapes() {
        let t1 = theta_constant(ThetaKind::Theta1, 6);
        assert_eq!(t1.prefactor_eighths, 1);
        assert_eq!(t1.body.coeff(0), int(2));
        assert_eq!(t1.to_qseries(), Err(Error::FractionalPrefactor(1)));
        assert_eq!(theta_constant(ThetaKind::Theta3, 20).body, theta3_direct(20));
        let quotient = t1.div(&theta_constant(ThetaKind::ThetaPrime, 6)).unwrap();
        assert_eq!(quotient.prefactor_eighths, 0);
        assert_eq!(quotient.to_qseries().unwrap().coeff(0), int(1));
    }

    #[test]
    fn theta_products_equal_divisor_sums() {
        let n = 21;
        assert_eq!(delta1(n), divisor_sum_oracle(EllipticParam::Delta1, n));
        assert_eq!(eps1(n), divisor_sum_oracle(EllipticParam::Eps1, n));
        assert_eq!(delta2(n), divisor_sum_oracle(EllipticParam::Delta2, n));
        assert_eq!(eps2(n), divisor_sum_oracle(EllipticParam::Eps2, n));
    }

    #[test]
    fn divisor_sum_spot_values() {
        assert_eq!(divisor_sum_oracle(EllipticParam::Delta1, 8).coeff(6), int(24));
        assert_eq!(divisor_sum_oracle(EllipticParam::Eps1, 8).coeff(4), int(7));
        assert_eq!(divisor_sum_oracle(EllipticParam::Eps2, 8).coeff(2), int(8));
    }

    #[test]
    fn eisenstein_and_discriminant() {
        assert_eq!(e4(5).coeff(2), int(240));
        assert_eq!(e4(5).coeff(4), int(2160));
        let d = discriminant(8);
        assert_eq!(d, q(&[int(0), int(0), int(1), int(0), int(-24), int(0), int(252)], 8));
        assert_eq!(delta_bar(6).coeff(0), int(1));
        assert_eq!(delta_bar(6).coeff(2), int(-24));
    }

    #[test]
    fn q_formatting() {
        assert_eq!(format_q(&delta1(6)), "1/4 + 6*q + 6*q^2 + O(q^3)");
        assert_eq!(format_q(&eps2(3)), "q^(1/2) + 8*q + O(q^(3/2))");
        assert_eq!(format_q(&e4(4)), "1 + 240*q + O(q^2)");
        assert_eq!(format_q(&delta2(3)), "-1/8 - 3*q^(1/2) - 3*q + O(q^(3/2))");
        assert_eq!(format_q(&QSeries::zero()), "0");
    }

    #[test]
    fn q_zero_limits() {
        let f1 = jacobi_solution(1, 8, 3).unwrap().at_q_zero();
        assert_eq!(f1.coeff(1), int(1));
        assert_eq!(f1.coeff(3), rat(-1, 12));
        let f2 = jacobi_solution(2, 8, 3).unwrap().at_q_zero();
        assert_eq!(f2.coeff(3), rat(1, 24));
    }

    #[test]
    fn quartic_annihilated_small_orders() {
        for kind in [1, 2] {
            let f = jacobi_solution(kind, 8, 5).unwrap();
            let (d, e) = elliptic_params(kind, 5);
            let r = f.quartic_residual(&d, &e);
            assert!(r.is_zero(), "kind {kind}: {r:?}");
            assert_eq!(r.order(), 7);
        }
    }
}
