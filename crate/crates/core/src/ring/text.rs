//! Canonical text and JSON forms of [`QSeries`].
//!
//! Text: one `(<poly>)*q^<k>` line per nonzero coefficient in increasing `k`,
//! followed by `O(q^<acc+1>)`. JSON: `{"val":..,"acc":..,"coeffs":{"<k>":"<poly>"}}`.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::poly::LaurentPoly;
use super::series::QSeries;
use crate::error::{Error, Result};

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.terms() {
            writeln!(f, "({p})*q^{k}")?;
        }
        write!(f, "O(q^{})", self.acc() + 1)
    }
}

impl FromStr for QSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut acc = None;
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("O(q^").and_then(|r| r.strip_suffix(')')) {
                let big: i64 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad order term `{line}`")))?;
                acc = Some(big - 1);
                continue;
            }
            let (poly, k) = line
                .strip_prefix('(')
                .and_then(|r| r.rsplit_once(")*q^"))
                .ok_or_else(|| Error::Parse(format!("expected `(<poly>)*q^<k>`, got `{line}`")))?;
            let k: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{line}`")))?;
            terms.push((k, poly.parse::<LaurentPoly>()?));
        }
        let acc = acc.ok_or_else(|| Error::Parse("missing O(q^k) term".into()))?;
        if let Some((k, _)) = terms.iter().find(|(k, _)| *k > acc) {
            return Err(Error::Parse(format!(
                "term q^{k} lies beyond the stated order"
            )));
        }
        Ok(QSeries::from_terms(terms, acc))
    }
}

impl QSeries {
    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self
            .terms()
            .map(|(k, p)| (k.to_string(), Value::String(p.to_string())))
            .collect();
        json!({ "val": self.val(), "acc": self.acc(), "coeffs": coeffs })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| {
            v.get(name)
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Parse(format!("missing integer `{name}`")))
        };
        let acc = field("acc")?;
        let val = field("val")?;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing object `coeffs`".into()))?;
        let mut terms = Vec::with_capacity(coeffs.len());
        for (k, p) in coeffs {
            let k: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent key `{k}`")))?;
            let p = p
                .as_str()
                .ok_or_else(|| Error::Parse(format!("coefficient of q^{k} is not a string")))?;
            if k < val || k > acc {
                return Err(Error::Parse(format!("exponent {k} outside [{val}, {acc}]")));
            }
            terms.push((k, p.parse::<LaurentPoly>()?));
        }
        let s = QSeries::from_terms(terms, acc);
        if !s.is_zero() && s.val() != val {
            return Err(Error::Parse(format!(
                "stated val {val} but lowest term is q^{}",
                s.val()
            )));
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn sample() -> QSeries {
        QSeries::monomial(&Monomial::new(-2, 1, -1, -1), 4)
            .add(&QSeries::monomial(&Monomial::new(5, 0, 3, 2), 4))
    }

    #[test]
    fn text_form() {
        assert_eq!(
            sample().to_string(),
            "(-2*z*a^-1)*q^-1\n(5*a^3)*q^2\nO(q^5)"
        );
        assert_eq!(QSeries::zero(3).to_string(), "O(q^4)");
    }

    #[test]
    fn text_round_trip() {
        let s = sample();
        assert_eq!(s.to_string().parse::<QSeries>().unwrap(), s);
        assert_eq!("O(q^4)".parse::<QSeries>().unwrap(), QSeries::zero(3));
    }

    #[test]
    fn json_round_trip() {
        let s = sample();
        let v = s.to_json();
        assert_eq!(v["coeffs"]["2"], "5*a^3");
        assert_eq!(QSeries::from_json(&v).unwrap(), s);
    }

    #[test]
    fn rejects_malformed() {
        assert!("(1)*q^0".parse::<QSeries>().is_err());
        assert!("(1)*q^9\nO(q^3)".parse::<QSeries>().is_err());
        assert!(QSeries::from_json(&json!({"val": 0, "acc": 3})).is_err());
    }
}
