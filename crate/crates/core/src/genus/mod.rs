//! Hirzebruch multiplicative sequences: from a characteristic power series
//! Q(z) to a genus polynomial in Pontryagin classes.
//!
//! Chern roots of T_ℂM are ±z₁, …, ±z_{2k} in a normalization where the
//! factor 2π√−1 is absorbed into zᵢ, and pⱼ = eⱼ(z₁², …, z_{2k}²). A genus
//! with characteristic series Q is ⟨Π Q(zᵢ), [M]⟩. We compute it as
//!
//! ```text
//! Π Q(zᵢ) = exp(Σ_j b_j ps_j),   log Q(z) = Σ_j b_j z^{2j},   ps_j = Σ zᵢ^{2j}
//! ```
//!
//! and convert power sums to Pontryagin classes with Newton's identities.

mod partition;
mod sympoly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

pub use partition::{partitions, partitions_up_to, Partition};
pub use sympoly::{exp_of_linear, newton_power_sums, power_sums_to_elementary, SymPoly};

use crate::error::{Error, Result};
use crate::series::{from_bigint, int, to_wire, Coeff, DeltaEpsPoly, ExactRational, Parity, ZSeries};

/// An even series Q(z) with Q(0) = 1.
#[derive(Clone, Debug)]
pub struct CharSeries<R>(ZSeries<R>);

impl<R: Coeff> CharSeries<R> {
    pub fn new(series: ZSeries<R>) -> Result<Self> {
        if !series.coeff(0).is_one() {
            return Err(Error::LogConstant);
        }
        if series.terms().any(|(n, _)| n % 2 == 1) {
            return Err(Error::Parse("characteristic series must be even".into()));
        }
        Ok(CharSeries(series.with_parity(Parity::Even)))
    }

    /// Q(z) = z / f(z) for an odd f with f(z) = z + O(z³).
    pub fn from_odd_function(f: &ZSeries<R>) -> Result<Self> {
        Self::new(f.shift_down(1)?.invert()?)
    }

    pub fn series(&self) -> &ZSeries<R> {
        &self.0
    }

    /// b_j with log Q(z) = Σ_j b_j z^{2j}, for j = 1..=k.
    pub fn log_coefficients(&self, k: u32) -> Result<Vec<R>> {
        let needed = 2 * k as usize + 1;
        if self.0.order() < needed {
            return Err(Error::InsufficientOrder { needed, available: self.0.order() });
        }
        let log = self.0.log()?;
        Ok((1..=k as usize).map(|j| log.coeff(2 * j)).collect())
    }
}

/// Pontryagin numbers of a 4k-manifold, one per partition of k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontryaginVector {
    k: u32,
    numbers: BTreeMap<Partition, BigInt>,
}

impl PontryaginVector {
    /// Every partition of `k` must be present exactly once.
    pub fn new(k: u32, numbers: BTreeMap<Partition, BigInt>) -> Result<Self> {
        let expected = partitions(k);
        for p in numbers.keys() {
            if p.weight() != k {
                return Err(Error::PartitionMismatch(format!("{p} is not a partition of {k}")));
            }
        }
        if let Some(missing) = expected.iter().find(|p| !numbers.contains_key(p)) {
            return Err(Error::PartitionMismatch(format!("missing Pontryagin number {missing}")));
        }
        Ok(PontryaginVector { k, numbers })
    }

    pub fn from_values(k: u32, values: &[i64]) -> Result<Self> {
        let parts = partitions(k);
        if parts.len() != values.len() {
            return Err(Error::PartitionMismatch(format!(
                "{} values for {} partitions of {k}",
                values.len(),
                parts.len()
            )));
        }
        Self::new(k, parts.into_iter().zip(values.iter().map(|&v| BigInt::from(v))).collect())
    }

    pub fn zero(k: u32) -> Self {
        PontryaginVector { k, numbers: partitions(k).into_iter().map(|p| (p, BigInt::zero())).collect() }
    }

    /// Pontryagin numbers of ℂP^{2n}: p(ℂP^m) = (1 + x²)^{m+1}, so
    /// p_λ[ℂP^{2n}] = Π_i C(2n+1, λᵢ).
    pub fn complex_projective(n: u32) -> Self {
        let binom = |m: u32, j: u32| -> BigInt {
            (0..j).fold(BigInt::from(1), |acc, i| acc * BigInt::from(m - i) / BigInt::from(i + 1))
        };
        let numbers = partitions(n)
            .into_iter()
            .map(|p| {
                let v = p.parts().iter().map(|&j| binom(2 * n + 1, j)).product();
                (p, v)
            })
            .collect();
        PontryaginVector { k: n, numbers }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn dim(&self) -> u32 {
        4 * self.k
    }

    pub fn get(&self, p: &Partition) -> Option<&BigInt> {
        self.numbers.get(p)
    }

    pub fn numbers(&self) -> &BTreeMap<Partition, BigInt> {
        &self.numbers
    }

    pub fn is_zero(&self) -> bool {
        self.numbers.values().all(Zero::is_zero)
    }
}

/// A genus restricted to dimension 4k: Σ_λ c_λ p_λ over partitions of k.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusPolynomial<R> {
    k: u32,
    coeffs: BTreeMap<Partition, R>,
}

impl<R: Coeff> GenusPolynomial<R> {
    pub fn from_sympoly(k: u32, poly: &SymPoly<R>) -> Self {
        let coeffs = partitions(k).into_iter().map(|p| {
            let c = poly.coeff(&p);
            (p, c)
        });
        GenusPolynomial { k, coeffs: coeffs.collect() }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coeff(&self, p: &Partition) -> R {
        self.coeffs.get(p).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficients in decreasing-lexicographic partition order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &R)> {
        self.coeffs.iter()
    }

    pub fn evaluate(&self, v: &PontryaginVector) -> Result<R> {
        if v.k != self.k {
            return Err(Error::DimensionMismatch { expected: 4 * self.k, got: v.dim() });
        }
        Ok(self.coeffs.iter().fold(R::zero(), |acc, (p, c)| {
            let n = v.numbers.get(p).cloned().unwrap_or_default();
            if n.is_zero() {
                acc
            } else {
                acc.add_ref(&c.scale(&from_bigint(&n)))
            }
        }))
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl FnMut(&R) -> S) -> GenusPolynomial<S> {
        let mut f = f;
        GenusPolynomial { k: self.k, coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), f(c))).collect() }
    }
}

impl GenusPolynomial<DeltaEpsPoly> {
    /// Substitutes δ ↦ δ₀, ε ↦ ε₀ in every coefficient.
    pub fn specialize<R: Coeff>(&self, delta: &R, eps: &R) -> GenusPolynomial<R> {
        self.map_coeffs(|c| c.evaluate(delta, eps))
    }

    /// `[["[a,b,...]", [[a, b, "num/den"], ...]], ...]`
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(p, c)| json!([p.to_string(), serde_json::to_value(c).unwrap()]))
                .collect(),
        )
    }
}

impl GenusPolynomial<ExactRational> {
    /// `[["[a,b,...]", "num/den"], ...]`
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|(p, c)| json!([p.to_string(), to_wire(c)])).collect())
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for GenusPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (p, c) in self.coeffs.iter().filter(|(_, c)| !c.is_zero()) {
            let mono: Vec<String> = p.parts().iter().map(|j| format!("p{j}")).collect();
            crate::series::push_term(&mut out, &c.to_string(), &mono.join("*"));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// The multiplicative sequence of Q in degree 4k.
pub fn genus_polynomial<R: Coeff>(q: &CharSeries<R>, k: u32) -> Result<GenusPolynomial<R>> {
    let b = q.log_coefficients(k)?;
    let in_power_sums = exp_of_linear(&b, k).weight_part(k);
    Ok(GenusPolynomial::from_sympoly(k, &power_sums_to_elementary(&in_power_sums)))
}

/// 1 − 2δt² + εt⁴ to the given order.
fn quartic(order: usize) -> ZSeries<DeltaEpsPoly> {
    ZSeries::new(
        vec![
            DeltaEpsPoly::one(),
            DeltaEpsPoly::zero(),
            DeltaEpsPoly::delta().scale(&int(-2)),
            DeltaEpsPoly::zero(),
            DeltaEpsPoly::eps(),
        ],
        order,
    )
    .with_parity(Parity::Even)
}

/// The logarithm g(z) = ∫₀^z dt / √(1 − 2δt² + εt⁴), valid below `order`.
pub fn elliptic_log(order: usize) -> ZSeries<DeltaEpsPoly> {
    let integrand = quartic(order.saturating_sub(1)).inv_sqrt().expect("constant term 1");
    integrand.integrate()
}

/// f = g⁻¹, the universal solution of (f′)² = 1 − 2δf² + εf⁴.
pub fn universal_f(order: usize) -> ZSeries<DeltaEpsPoly> {
    elliptic_log(order).reversion().expect("g(z) = z + O(z³)")
}

/// Q(z) = z / f(z) for the universal elliptic genus.
pub fn universal_char_series(order: usize) -> CharSeries<DeltaEpsPoly> {
    CharSeries::from_odd_function(&universal_f(order + 1)).expect("f(z) = z + O(z³)")
}

/// The universal elliptic genus in dimension 4k, over ℚ[δ, ε].
pub fn universal_genus(k: u32) -> GenusPolynomial<DeltaEpsPoly> {
    let q = universal_char_series(2 * k as usize + 1);
    genus_polynomial(&q, k).expect("order suffices")
}

/// The elliptic genus φ(M) ∈ ℚ[δ, ε].
pub fn elliptic_genus(v: &PontryaginVector) -> DeltaEpsPoly {
    universal_genus(v.k()).evaluate(v).expect("matching k")
}

/// Q for the L-genus, z / tanh z (δ = ε = 1).
pub fn l_genus_series(order: usize) -> CharSeries<ExactRational> {
    let f = universal_f(order + 1).map_coeffs(|c| c.evaluate(&int(1), &int(1)));
    CharSeries::from_odd_function(&f).expect("odd")
}

/// Q for the Â-genus, (z/2) / sinh(z/2) (δ = −1/8, ε = 0).
pub fn a_hat_genus_series(order: usize) -> CharSeries<ExactRational> {
    let f = universal_f(order + 1).map_coeffs(|c| c.evaluate(&crate::series::rat(-1, 8), &int(0)));
    CharSeries::from_odd_function(&f).expect("odd")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn elliptic_log_coefficients() {
        let g = elliptic_log(8);
        assert_eq!(g.coeff(1), DeltaEpsPoly::one());
        assert_eq!(g.coeff(3), DeltaEpsPoly::delta().scale(&rat(1, 3)));
        let c5 = DeltaEpsPoly::from_terms([((2, 0), rat(3, 10)), ((0, 1), rat(-1, 10))]);
        assert_eq!(g.coeff(5), c5);
        assert_eq!(g.parity(), Parity::Odd);
    }

    #[test]
    fn universal_f_satisfies_quartic() {
        let f = universal_f(12);
        assert_eq!(f.coeff(3), DeltaEpsPoly::delta().scale(&rat(-1, 3)));
        let df = f.derivative();
        let f2 = &f * &f;
        let rhs = &(&ZSeries::one_to(12) - &f2.mul_coeff(&DeltaEpsPoly::delta().scale(&int(2))))
            + &(&f2 * &f2).mul_coeff(&DeltaEpsPoly::eps());
        assert!((&(&df * &df) - &rhs).is_zero());
    }

    #[test]
    fn tanh_specialization() {
        let f = universal_f(8).map_coeffs(|c| c.evaluate(&int(1), &int(1)));
        assert_eq!(f, ZSeries::new(vec![int(0), int(1), int(0), rat(-1, 3), int(0), rat(2, 15), int(0), rat(-17, 315)], 8));
    }

    #[test]
    fn dimension_four_genera() {
        let p1 = Partition::new(vec![1]);
        assert_eq!(universal_genus(1).coeff(&p1), DeltaEpsPoly::delta().scale(&rat(1, 3)));
        assert_eq!(genus_polynomial(&l_genus_series(3), 1).unwrap().coeff(&p1), rat(1, 3));
        assert_eq!(genus_polynomial(&a_hat_genus_series(3), 1).unwrap().coeff(&p1), rat(-1, 24));
    }

    #[test]
    fn evaluation_examples() {
        let cp2 = PontryaginVector::from_values(1, &[3]).unwrap();
        assert_eq!(elliptic_genus(&cp2), DeltaEpsPoly::delta());
        assert_eq!(elliptic_genus(&PontryaginVector::zero(6)), DeltaEpsPoly::zero());
        let k3 = PontryaginVector::from_values(1, &[-48]).unwrap();
        let a_hat = genus_polynomial(&a_hat_genus_series(3), 1).unwrap();
        assert_eq!(a_hat.evaluate(&k3).unwrap(), int(2));
        let sig = universal_genus(1).specialize(&int(1), &int(1));
        assert_eq!(sig.evaluate(&cp2).unwrap(), int(1));
        let ahat = universal_genus(1).specialize(&rat(-1, 8), &int(0));
        assert_eq!(ahat.evaluate(&cp2).unwrap(), rat(-1, 8));
    }

    #[test]
    fn logarithm_generates_projective_spaces() {
        // g′(z) = Σ φ(ℂP^{2n}) z^{2n}
        let dg = elliptic_log(10).derivative();
        for n in 1..=2u32 {
            let v = PontryaginVector::complex_projective(n);
            assert_eq!(elliptic_genus(&v), dg.coeff(2 * n as usize), "CP^{}", 2 * n);
        }
    }

    #[test]
    fn weight_six_is_homogeneous() {
        let v = PontryaginVector::from_values(6, &[3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5]).unwrap();
        assert_eq!(elliptic_genus(&v).homogeneous_weight(), Some(6));
    }

    #[test]
    fn errors() {
        let p = universal_genus(2);
        assert!(matches!(
            p.evaluate(&PontryaginVector::zero(1)),
            Err(Error::DimensionMismatch { expected: 8, got: 4 })
        ));
        assert!(PontryaginVector::from_values(2, &[1]).is_err());
        let short = CharSeries::<ExactRational>::new(ZSeries::one_to(3)).unwrap();
        assert!(matches!(genus_polynomial(&short, 2), Err(Error::InsufficientOrder { .. })));
    }
}
