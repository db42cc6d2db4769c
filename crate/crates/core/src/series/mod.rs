//! Exact scalars, truncated power series and (δ,ε)-polynomials.

mod coeff;
mod delta_eps;
mod power;
mod rational;

pub use coeff::Coeff;
pub use delta_eps::{DeltaEpsPoly, Monomial};
pub use power::{Parity, QSeries, Series, ZSeries, EXACT};
pub(crate) use power::push_term;
pub use rational::{as_integer, from_bigint, from_wire, int, is_dyadic, pow2, rat, to_wire, ExactRational};

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Serializes a rational-coefficient series as `[[exponent, "num/den"], ...]`,
/// nonzero terms only.
pub struct SeriesWire<'a>(pub &'a Series<ExactRational>);

impl Serialize for SeriesWire<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.0.terms().collect();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (n, c) in terms {
            seq.serialize_element(&(n, to_wire(c)))?;
        }
        seq.end()
    }
}

/// Parses the wire form produced by [`SeriesWire`] back into a series valid
/// below `order`.
pub fn series_from_wire(value: &serde_json::Value, order: usize) -> crate::Result<Series<ExactRational>> {
    let bad = || crate::Error::Parse("series must be an array of [exponent, \"num/den\"]".into());
    let arr = value.as_array().ok_or_else(bad)?;
    let mut coeffs = Vec::new();
    for item in arr {
        let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
        let n = pair[0].as_u64().ok_or_else(bad)? as usize;
        let c = from_wire(pair[1].as_str().ok_or_else(bad)?)?;
        if coeffs.len() <= n {
            coeffs.resize(n + 1, int(0));
        }
        coeffs[n] = c;
    }
    Ok(Series::new(coeffs, order))
}
