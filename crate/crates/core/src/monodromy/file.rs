//! JSON form of factorized expressions:
//! `{"strands": 3, "factors": [{"conjugator": "x1 x2^-1", "base": 1, "power": 2}]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::{Factor, FactorizedExpr};
use crate::words::text::{check_text_size, parse_braid};
use crate::words::HalfTwist;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorRecord {
    pub conjugator: String,
    pub base: usize,
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorFile {
    pub strands: usize,
    pub factors: Vec<FactorRecord>,
}

impl FactorFile {
    pub fn to_expr(&self) -> Result<FactorizedExpr> {
        if self.strands < 2 {
            return Err(Error::Size(format!("need at least 2 strands, got {}", self.strands)));
        }
        check_text_size(self.strands)?;
        let factors = self
            .factors
            .iter()
            .map(|r| Factor::new(HalfTwist::new(parse_braid(&r.conjugator, self.strands)?, r.base)?, r.power))
            .collect::<Result<Vec<_>>>()?;
        FactorizedExpr::new(self.strands, factors)
    }

    pub fn from_expr(e: &FactorizedExpr) -> FactorFile {
        FactorFile {
            strands: e.strands(),
            factors: e
                .factors()
                .iter()
                .map(|f| FactorRecord {
                    conjugator: if f.halftwist.conjugator().is_empty() {
                        String::new()
                    } else {
                        f.halftwist.conjugator().to_string()
                    },
                    base: f.halftwist.base(),
                    power: f.power(),
                })
                .collect(),
        }
    }
}

pub fn parse_factorization(s: &str) -> Result<FactorizedExpr> {
    let file: FactorFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_expr()
}

/// Canonical pretty JSON.
pub fn render_factorization(e: &FactorizedExpr) -> String {
    serde_json::to_string_pretty(&FactorFile::from_expr(e)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"strands": 3, "factors": [{"conjugator": "x2^-1 x1", "base": 1, "power": 2},
                      {"conjugator": "", "base": 2, "power": 3}]}"#;
        let e = parse_factorization(text).unwrap();
        assert_eq!(e.factors()[0].power(), 2);
        assert_eq!(parse_factorization(&render_factorization(&e)).unwrap(), e);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse_factorization("{").is_err());
        assert!(parse_factorization(r#"{"strands": 3, "factors": [{"conjugator": "", "base": 3, "power": 1}]}"#).is_err());
        assert!(parse_factorization(r#"{"strands": 3, "factors": [{"conjugator": "x5", "base": 1, "power": 1}]}"#).is_err());
        assert!(parse_factorization(r#"{"strands": 3, "factors": [{"conjugator": "", "base": 1, "power": 0}]}"#).is_err());
        assert!(parse_factorization(r#"{"strands": 1, "factors": []}"#).is_err());
    }
}
