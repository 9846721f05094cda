//! Exact coefficient arithmetic and truncated Laurent series in `q`.

mod compare;
mod int;
mod monomial;
mod poly;
mod series;
mod text;

pub use compare::{series_compare, ComparisonReport, Mismatch, Status};
pub use int::Int;
pub use monomial::Monomial;
pub use poly::{Exp, LaurentPoly};
pub use series::{at_accuracy, QSeries};
