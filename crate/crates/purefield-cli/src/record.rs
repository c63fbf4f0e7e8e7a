//! Stable machine-readable output records.
//!
//! The JSON schema is fixed: a top-level object with keys `command`, `n`,
//! `a`, `status`, `result` (nullable) and `witness` (nullable), where
//! `result` is `{"sign": 1|-1, "factors": [[p, e], ...], "decimal":
//! string|null}`. Primes are emitted as raw JSON numbers of unbounded
//! length; re-rendering a parsed record is byte-identical.

use purefield::FactoredInteger;
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Reducible,
    HypothesisViolation,
    OreRegularityFailure,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResultRepr {
    pub sign: i8,
    pub factors: Vec<(Number, u64)>,
    pub decimal: Option<String>,
}

impl ResultRepr {
    pub fn new(value: &FactoredInteger, with_decimal: bool) -> Self {
        ResultRepr {
            sign: value.sign(),
            factors: value
                .factors()
                .map(|(p, e)| (Number::from_string_unchecked(p.to_string()), e))
                .collect(),
            decimal: with_decimal.then(|| value.to_bigint().to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub n: String,
    pub a: String,
    pub status: Status,
    pub result: Option<ResultRepr>,
    pub witness: Option<String>,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}
