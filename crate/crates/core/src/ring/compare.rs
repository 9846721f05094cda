use serde::Serialize;

use super::poly::LaurentPoly;
use super::series::QSeries;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub q_exp: i64,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub status: Status,
    pub compared_through: i64,
    pub first_mismatch: Option<Mismatch>,
}

/// Compares `a` and `b` coefficientwise through `q^through`.
///
/// Refuses with [`Error::InsufficientAccuracy`] rather than comparing fewer
/// coefficients than asked for.
pub fn series_compare(a: &QSeries, b: &QSeries, through: i64) -> Result<ComparisonReport> {
    let available = a.acc().min(b.acc());
    if through > available {
        return Err(Error::InsufficientAccuracy { through, available });
    }
    for k in a.val().min(b.val())..=through {
        let (x, y) = (a.coeff(k), b.coeff(k));
        if x != y {
            return Ok(ComparisonReport {
                status: Status::Fail,
                compared_through: through,
                first_mismatch: Some(Mismatch {
                    q_exp: k,
                    lhs: x.clone(),
                    rhs: y.clone(),
                }),
            });
        }
    }
    Ok(ComparisonReport {
        status: Status::Pass,
        compared_through: through,
        first_mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    #[test]
    fn self_comparison_passes() {
        let s = QSeries::one(6).add(&QSeries::monomial(&Monomial::new(3, 1, -1, 2), 6));
        assert_eq!(series_compare(&s, &s, 6).unwrap().status, Status::Pass);
    }

    #[test]
    fn first_mismatch_is_reported() {
        let a = QSeries::one(5).add(&QSeries::monomial(&Monomial::q(1), 5));
        let b = QSeries::one(5).sub(&QSeries::monomial(&Monomial::q(1), 5));
        let r = series_compare(&a, &b, 5).unwrap();
        assert_eq!(r.status, Status::Fail);
        let m = r.first_mismatch.unwrap();
        assert_eq!(m.q_exp, 1);
        assert_eq!(m.lhs, LaurentPoly::one());
        assert_eq!(m.rhs, LaurentPoly::one().neg());
    }

    #[test]
    fn refuses_beyond_accuracy() {
        let a = QSeries::one(5);
        let b = QSeries::one(3);
        assert_eq!(
            series_compare(&a, &b, 4),
            Err(Error::InsufficientAccuracy {
                through: 4,
                available: 3
            })
        );
    }
}
