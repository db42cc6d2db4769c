//! Chern characters of bundles built from the tangent bundle, and the
//! twisted genera Â(M, E), Sig(M, E), Ell₁, Ell₂.
//!
//! A [`CharClass`] is a polynomial in the power sums ps_j = Σ zᵢ^{2j} of the
//! squared Chern roots, truncated at weight k (cohomological degree 4k).
//! Exterior and symmetric powers come from the Adams-operation generating
//! functions
//!
//! ```text
//! log ch S_t(E) = Σ_{m≥1} tᵐ ch(ψᵐE)/m,   log ch Λ_t(E) = Σ_{m≥1} (−1)^{m+1} tᵐ ch(ψᵐE)/m
//! ```
//!
//! where ch(ψᵐE)(z) = ch(E)(mz).

use crate::error::{Error, Result};
use crate::genus::{exp_of_linear, partitions, power_sums_to_elementary, GenusPolynomial, PontryaginVector, SymPoly};
use crate::series::{int, pow2, rat, Coeff, ExactRational, QSeries, Series, ZSeries};

/// A cohomology class written in power sums of squared Chern roots.
pub type CharClass = SymPoly<ExactRational>;

fn factorial(n: u64) -> ExactRational {
    (1..=n).fold(int(1), |acc, i| acc * int(i as i64))
}

/// ch(T_ℂM) = 4k + Σ_{j≥1} 2/(2j)! · ps_j, truncated at weight k.
pub fn ch_tangent(k: u32) -> CharClass {
    let mut c = CharClass::constant(int(4 * i64::from(k)), Some(k));
    for j in 1..=k {
        c = c.add_ref(&CharClass::generator(j, Some(k)).scale(&(int(2) / factorial(2 * u64::from(j)))));
    }
    c
}

/// ch(T_ℂM − ℂ^{4k}), the virtual rank-zero part.
pub fn ch_reduced_tangent(k: u32) -> CharClass {
    ch_tangent(k).sub_ref(&CharClass::constant(int(4 * i64::from(k)), Some(k)))
}

/// ch(ψᵐE): ps_j ↦ m^{2j} ps_j.
pub fn adams(c: &CharClass, m: u32) -> CharClass {
    assert!(m >= 1, "Adams operation index must be positive");
    let m = int(i64::from(m));
    c.scale_terms(|p| m.pow(2 * p.weight() as i32))
}

fn power_operation(base: &CharClass, t_order: usize, alternating: bool) -> Series<CharClass> {
    let log = Series::from_fn(t_order, |m| {
        if m == 0 {
            return CharClass::zero().with_cap(base.cap());
        }
        let sign = if alternating && m % 2 == 0 { -1 } else { 1 };
        adams(base, m as u32).scale(&rat(sign, m as i64))
    });
    log.exp().expect("zero constant term")
}

/// ch Λ_t(E) as a series in t.
pub fn ch_lambda_t(base: &CharClass, t_order: usize) -> Series<CharClass> {
    power_operation(base, t_order, true)
}

/// ch S_t(E) as a series in t.
pub fn ch_s_t(base: &CharClass, t_order: usize) -> Series<CharClass> {
    power_operation(base, t_order, false)
}

/// ch Λʲ(E).
pub fn ch_exterior_power(base: &CharClass, j: usize) -> CharClass {
    ch_lambda_t(base, j + 1).coeff(j)
}

/// ch Θ₁(T_ℂM) or ch Θ₂(T_ℂM) as a ν-series of characteristic classes.
#[derive(Clone, Debug, PartialEq)]
pub struct WittenBundleCh {
    pub kind: u8,
    pub k: u32,
    pub series: QSeries<CharClass>,
}

impl WittenBundleCh {
    pub fn coefficient(&self, n: usize) -> CharClass {
        self.series.coeff(n).with_cap(Some(self.k))
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

/// `gen(t)` with t ↦ sign·ν^exp, kept below ν^q_order.
fn substitute(gen: impl Fn(usize) -> Series<CharClass>, exp: usize, negate: bool, q_order: usize) -> QSeries<CharClass> {
    let t_order = (q_order - 1) / exp + 1;
    let mut s = gen(t_order);
    if negate {
        s = s.scale_var(&int(-1));
    }
    s.substitute_power(exp).truncate(q_order)
}

/// Θ₁ = ⊗_n S_{qⁿ}(T̃) ⊗ ⊗_m Λ_{qᵐ}(T̃),  Θ₂ = ⊗_n S_{qⁿ}(T̃) ⊗ ⊗_m Λ_{−q^{m−1/2}}(T̃),
/// with T̃ = T_ℂM − ℂ^{4k} and ν = q^{1/2}.
pub fn witten_bundle_ch(kind: u8, k: u32, q_order: usize) -> WittenBundleCh {
    assert!(kind == 1 || kind == 2, "Witten bundle kind must be 1 or 2");
    let e = ch_reduced_tangent(k);
    let mut acc = QSeries::<CharClass>::one_to(q_order);
    for n in 1.. {
        let exp = 2 * n;
        if exp >= q_order {
            break;
        }
        acc = &acc * &substitute(|t| ch_s_t(&e, t), exp, false, q_order);
        if kind == 1 {
            acc = &acc * &substitute(|t| ch_lambda_t(&e, t), exp, false, q_order);
        }
    }
    if kind == 2 {
        for m in 1.. {
            let exp = 2 * m - 1;
            if exp >= q_order {
                break;
            }
            acc = &acc * &substitute(|t| ch_lambda_t(&e, t), exp, true, q_order);
        }
    }
    WittenBundleCh { kind, k, series: acc }
}

fn sinh_half_over_half(order: usize) -> ZSeries {
    // sinh(z/2)/(z/2) = Σ (z/2)^{2n} / (2n+1)!
    Series::from_fn(order, |n| {
        if n % 2 == 1 {
            int(0)
        } else {
            rat(1, 2).pow(n as i32) / factorial(n as u64 + 1)
        }
    })
}

fn cosh_half(order: usize) -> ZSeries {
    Series::from_fn(order, |n| if n % 2 == 1 { int(0) } else { rat(1, 2).pow(n as i32) / factorial(n as u64) })
}

fn multiplicative_class(q: &ZSeries, k: u32) -> CharClass {
    let log = q.log().expect("Q(0) = 1");
    let b: Vec<ExactRational> = (1..=k as usize).map(|j| log.coeff(2 * j)).collect();
    exp_of_linear(&b, k)
}

/// Â(M) = Π (zᵢ/2) / sinh(zᵢ/2).
pub fn a_hat_class(k: u32) -> CharClass {
    let order = 2 * k as usize + 1;
    multiplicative_class(&sinh_half_over_half(order).invert().unwrap(), k)
}

/// L̂(M) = Π zᵢ / tanh(zᵢ/2); its degree-0 part is 2^{2k}.
pub fn l_hat_class(k: u32) -> CharClass {
    let order = 2 * k as usize + 1;
    let q = &cosh_half(order) * &sinh_half_over_half(order).invert().unwrap();
    multiplicative_class(&q, k).scale(&pow2(2 * k as i32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseClass {
    AHat,
    LHat,
}

impl BaseClass {
    pub fn class(self, k: u32) -> CharClass {
        match self {
            BaseClass::AHat => a_hat_class(k),
            BaseClass::LHat => l_hat_class(k),
        }
    }
}

/// The functional v ↦ ⟨class · twist, [M]⟩ in dimension 4k.
pub fn twisted_genus_polynomial(class: &CharClass, twist: &CharClass, k: u32) -> GenusPolynomial<ExactRational> {
    let top = class.with_cap(Some(k)).mul_ref(&twist.with_cap(Some(k))).weight_part(k);
    GenusPolynomial::from_sympoly(k, &power_sums_to_elementary(&top))
}

pub fn twisted_genus(base: BaseClass, twist: &CharClass, v: &PontryaginVector) -> Result<ExactRational> {
    if twist.cap().is_some_and(|c| c < v.k()) {
        return Err(Error::DimensionMismatch { expected: 4 * twist.cap().unwrap(), got: v.dim() });
    }
    twisted_genus_polynomial(&base.class(v.k()), twist, v.k()).evaluate(v)
}

/// ⟨class · ch Θ, [M]⟩ as a functional with ν-series values.
pub fn witten_genus_polynomial(base: BaseClass, theta: &WittenBundleCh) -> GenusPolynomial<QSeries> {
    let k = theta.k;
    let class = base.class(k);
    let per_nu: Vec<GenusPolynomial<ExactRational>> = (0..theta.order())
        .map(|n| twisted_genus_polynomial(&class, &theta.coefficient(n), k))
        .collect();
    let mut poly = SymPoly::<QSeries>::zero_capped(Some(k));
    for p in partitions(k) {
        let c = Series::from_fn(theta.order(), |n| per_nu[n].coeff(&p));
        poly.add_term(p, &c);
    }
    GenusPolynomial::from_sympoly(k, &poly)
}

/// Ell₁(M, τ) = ⟨L̂(M) ch Θ₁(T_ℂM), [M]⟩ ∈ ℚ[[q]].
pub fn ell1(v: &PontryaginVector, q_order: usize) -> QSeries {
    witten_genus_polynomial(BaseClass::LHat, &witten_bundle_ch(1, v.k(), q_order))
        .evaluate(v)
        .expect("matching k")
}

/// Ell₂(M, τ) = ⟨Â(M) ch Θ₂(T_ℂM), [M]⟩ ∈ ℚ[[q^{1/2}]].
pub fn ell2(v: &PontryaginVector, q_order: usize) -> QSeries {
    witten_genus_polynomial(BaseClass::AHat, &witten_bundle_ch(2, v.k(), q_order))
        .evaluate(v)
        .expect("matching k")
}

/// The untwisted and tangent-twisted indices entering the dimension-24
/// formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentIndices {
    pub ahat: ExactRational,
    pub ahat_t: ExactRational,
    pub ahat_lambda2: ExactRational,
    pub sig: ExactRational,
    pub sig_t: ExactRational,
}

/// Reusable linear functionals for [`TangentIndices`] in dimension 4k.
#[derive(Clone, Debug)]
pub struct TangentIndexFunctionals {
    ahat: GenusPolynomial<ExactRational>,
    ahat_t: GenusPolynomial<ExactRational>,
    ahat_lambda2: GenusPolynomial<ExactRational>,
    sig: GenusPolynomial<ExactRational>,
    sig_t: GenusPolynomial<ExactRational>,
}

impl TangentIndexFunctionals {
    pub fn new(k: u32) -> Self {
        let a = a_hat_class(k);
        let l = l_hat_class(k);
        let one = CharClass::one().with_cap(Some(k));
        let t = ch_tangent(k);
        let l2 = ch_exterior_power(&t, 2);
        TangentIndexFunctionals {
            ahat: twisted_genus_polynomial(&a, &one, k),
            ahat_t: twisted_genus_polynomial(&a, &t, k),
            ahat_lambda2: twisted_genus_polynomial(&a, &l2, k),
            sig: twisted_genus_polynomial(&l, &one, k),
            sig_t: twisted_genus_polynomial(&l, &t, k),
        }
    }

    pub fn evaluate(&self, v: &PontryaginVector) -> Result<TangentIndices> {
        Ok(TangentIndices {
            ahat: self.ahat.evaluate(v)?,
            ahat_t: self.ahat_t.evaluate(v)?,
            ahat_lambda2: self.ahat_lambda2.evaluate(v)?,
            sig: self.sig.evaluate(v)?,
            sig_t: self.sig_t.evaluate(v)?,
        })
    }
}

pub fn tangent_indices(v: &PontryaginVector) -> TangentIndices {
    TangentIndexFunctionals::new(v.k()).evaluate(v).expect("matching k")
}
