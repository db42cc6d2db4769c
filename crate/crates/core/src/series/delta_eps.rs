//! Polynomials in the elliptic-genus parameters δ and ε.
//!
//! Graded with weight(δ) = 1 and weight(ε) = 2, so the genus of a
//! 4k-manifold is homogeneous of weight k.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::coeff::Coeff;
use super::power::push_term;
use super::rational::{to_wire, ExactRational};

/// Exponent pair `(a, b)` for the monomial δ^a ε^b.
pub type Monomial = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DeltaEpsPoly {
    terms: BTreeMap<Monomial, ExactRational>,
}

impl DeltaEpsPoly {
    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, ExactRational)>) -> Self {
        let mut p = DeltaEpsPoly::default();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    pub fn monomial(a: u32, b: u32, c: ExactRational) -> Self {
        Self::from_terms([((a, b), c)])
    }

    pub fn delta() -> Self {
        Self::monomial(1, 0, Coeff::one())
    }

    pub fn eps() -> Self {
        Self::monomial(0, 1, Coeff::one())
    }

    fn add_term(&mut self, m: Monomial, c: &ExactRational) {
        if Coeff::is_zero(c) {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Coeff::zero);
        *e += c;
        if Coeff::is_zero(e) {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, ExactRational> {
        &self.terms
    }

    pub fn coeff(&self, a: u32, b: u32) -> ExactRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn weight(m: Monomial) -> u32 {
        m.0 + 2 * m.1
    }

    /// The common weight of all terms, or `None` if mixed. Zero is homogeneous
    /// of every weight and reports `Some(0)`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|&m| Self::weight(m));
        let first = it.next().unwrap_or(0);
        it.all(|w| w == first).then_some(first)
    }

    /// Substitutes values for δ and ε in any coefficient ring.
    pub fn evaluate<R: Coeff>(&self, delta: &R, eps: &R) -> R {
        let max_a = self.terms.keys().map(|m| m.0).max().unwrap_or(0);
        let max_b = self.terms.keys().map(|m| m.1).max().unwrap_or(0);
        let mut dp = vec![R::one()];
        for _ in 0..max_a {
            dp.push(dp.last().unwrap().mul_ref(delta));
        }
        let mut ep = vec![R::one()];
        for _ in 0..max_b {
            ep.push(ep.last().unwrap().mul_ref(eps));
        }
        self.terms.iter().fold(R::zero(), |acc, (&(a, b), c)| {
            acc.add_ref(&dp[a as usize].mul_ref(&ep[b as usize]).scale(c))
        })
    }
}

impl Coeff for DeltaEpsPoly {
    fn zero() -> Self {
        DeltaEpsPoly::default()
    }
    fn one() -> Self {
        Self::monomial(0, 0, Coeff::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, &-c);
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = DeltaEpsPoly::default();
        for (&(a, b), c) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a + a2, b + b2), &(c * c2));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        DeltaEpsPoly { terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect() }
    }
    fn scale(&self, r: &ExactRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&m, c)| (m, c * r)))
    }
    fn inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((&(0, 0), c)) if self.terms.len() == 1 => {
                Some(Self::monomial(0, 0, c.recip()))
            }
            _ => None,
        }
    }
}

impl fmt::Display for DeltaEpsPoly {
    /// Highest δ power first: `delta^6 - 3/2*delta^4*eps + eps^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (&(a, b), c) in self.terms.iter().rev() {
            let mut parts = Vec::new();
            match a {
                0 => {}
                1 => parts.push("delta".to_string()),
                _ => parts.push(format!("delta^{a}")),
            }
            match b {
                0 => {}
                1 => parts.push("eps".to_string()),
                _ => parts.push(format!("eps^{b}")),
            }
            push_term(&mut out, &c.to_string(), &parts.join("*"));
        }
        f.write_str(&out)
    }
}

impl Serialize for DeltaEpsPoly {
    /// A list of `[a, b, "num/den"]` triples for δ^a ε^b.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(a, b), c) in self.terms.iter().rev() {
            seq.serialize_element(&(a, b, to_wire(c)))?;
        }
        seq.end()
    }
}
