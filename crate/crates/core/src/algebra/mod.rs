//! Exact arithmetic: rationals, cyclotomic numbers, univariate polynomials,
//! truncated power series and small exact matrices.

mod cyclotomic;
mod matrix;
mod poly;
mod series;

pub use cyclotomic::{cyclo_reduce, cyclotomic_polynomial, Cyclotomic, DEFAULT_CYCLOTOMIC_ORDER};
pub use matrix::{charpoly_i64, det_one_minus_u, IntMatrix, RationalMatrix};
pub use poly::{poly_negate_variable, Poly};
pub use series::{guard_band, series_divide_exact, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type ExactRational = BigRational;

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `num/den` with a unit denominator printed explicitly.
pub fn rational_fraction_string(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
