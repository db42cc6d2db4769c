//! Manifold records: `{"name", "dim", "pontryagin"?, "kappa"?}`, one per
//! file or as a JSON array.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;

use ellgenus_core::{IndexQuadruple, Partition, PontryaginVector};

#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldRecord {
    pub name: String,
    pub dim: u32,
    pub pontryagin: Option<PontryaginVector>,
    pub kappa: Option<IndexQuadruple>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    name: String,
    dim: u32,
    #[serde(default)]
    pontryagin: Option<BTreeMap<String, Value>>,
    #[serde(default)]
    kappa: Option<Vec<Value>>,
}

fn integer(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| anyhow!("{n} is not an integer")),
        Value::String(s) => s.trim().parse().map_err(|_| anyhow!("{s:?} is not an integer")),
        _ => bail!("{v} is not an integer"),
    }
}

impl ManifoldRecord {
    fn from_raw(raw: RawRecord) -> Result<Self> {
        let name = raw.name;
        if !raw.dim.is_multiple_of(4) {
            bail!("{name}: dim {} is not a multiple of 4", raw.dim);
        }
        if raw.pontryagin.is_none() && raw.kappa.is_none() {
            bail!("{name}: needs pontryagin or kappa");
        }
        let k = raw.dim / 4;
        let pontryagin = match raw.pontryagin {
            None => None,
            Some(map) => {
                let mut numbers = BTreeMap::new();
                for (key, value) in &map {
                    let p: Partition = key.parse().with_context(|| format!("{name}: bad partition key"))?;
                    let n = integer(value).with_context(|| format!("{name}: Pontryagin number {key}"))?;
                    numbers.insert(p, n);
                }
                Some(PontryaginVector::new(k, numbers).with_context(|| format!("{name}: Pontryagin numbers"))?)
            }
        };
        let kappa = match raw.kappa {
            None => None,
            Some(values) => {
                if raw.dim != 24 {
                    bail!("{name}: kappa is only defined in dimension 24");
                }
                if values.len() != 4 {
                    bail!("{name}: kappa needs 4 integers, got {}", values.len());
                }
                let ints: Vec<BigInt> = values.iter().map(integer).collect::<Result<_>>()?;
                let arr: [BigInt; 4] = ints.try_into().expect("length checked");
                Some(IndexQuadruple::from_array(arr))
            }
        };
        Ok(ManifoldRecord { name, dim: raw.dim, pontryagin, kappa })
    }
}

/// Parses a single record or an array of records.
pub fn parse_records(text: &str) -> Result<Vec<ManifoldRecord>> {
    let value: Value = serde_json::from_str(text).context("input is not valid JSON")?;
    let raws: Vec<RawRecord> = match value {
        Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| serde_json::from_value(v).with_context(|| format!("record {i}")))
            .collect::<Result<_>>()?,
        v => vec![serde_json::from_value(v).context("record")?],
    };
    raws.into_iter().map(ManifoldRecord::from_raw).collect()
}
