use serde::Serialize;

use crate::ring::QSeries;

/// Whether an identity is expected to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Pass,
    Fail,
}

/// Where an identity comes from: a short anchor and a descriptive line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub anchor: String,
    pub quote: String,
}

/// A named pair of expanded sides, ready for coefficientwise comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub id: String,
    pub lhs: QSeries,
    pub rhs: QSeries,
    pub citation: Citation,
    pub default_acc: i64,
    pub expected: Expected,
}
