use num_traits::Zero;

use super::{ExactRational, Poly};
use crate::error::{Error, Result};

/// Power series in `u` known through `u^order`. Coefficients past the
/// truncation order are never read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![ExactRational::zero(); order + 1] }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(|k| p.coeff(k)).collect() }
    }

    /// Expansion of `1 / p(u)`.
    pub fn reciprocal_of_poly(p: &Poly, order: usize) -> Result<Self> {
        TruncatedSeries::from_poly(p, order).inverse()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &ExactRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add_assign_scaled(&mut self, other: &TruncatedSeries, c: &ExactRational) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &TruncatedSeries) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.coeffs.len();
        let mut out: Vec<ExactRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = ExactRational::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[k - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

/// Default guard band used with [`series_divide_exact`]: `2 * expected + 1`.
pub fn guard_band(expected_degree: usize) -> usize {
    2 * expected_degree + 1
}

/// Divide two series whose quotient is known to be a polynomial of degree at
/// most `expected_degree`, and confirm it through the full truncation order.
///
/// Panics if either series is truncated below `expected_degree` plus a guard
/// band of `expected_degree + 1`.
pub fn series_divide_exact(numer: &TruncatedSeries, denom: &TruncatedSeries, expected_degree: usize) -> Result<Poly> {
    let order = numer.order().min(denom.order());
    assert!(order > 2 * expected_degree, "series truncated at {order}, need at least {}", 2 * expected_degree + 1);
    if denom.coeffs[0].is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let q = numer.truncate(order).mul(&denom.truncate(order).inverse()?);
    if let Some(at) = (expected_degree + 1..=order).find(|&k| !q.coeffs[k].is_zero()) {
        return Err(Error::NonPolynomialQuotient { expected_degree, at });
    }
    Ok(Poly::from_coeffs(q.coeffs[..=expected_degree].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn series(coeffs: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_poly(&Poly::from_ints(coeffs), order)
    }

    #[test]
    fn divides_product_of_q_integers() {
        // (1-u^2)(1-u^4) over (1-u)^2, expanded by hand:
        // 1 - u^2 - u^4 + u^6 divided by 1 - 2u + u^2.
        let order = 4 + guard_band(4);
        let numer = series(&[1, 0, -1, 0, -1, 0, 1], order);
        let denom = series(&[1, -2, 1], order);
        let q = series_divide_exact(&numer, &denom, 4).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 2, 2, 2, 1]));
    }

    #[test]
    fn identity_quotient() {
        let one = series(&[1], 1);
        assert_eq!(series_divide_exact(&one, &one, 0).unwrap(), Poly::one());
    }

    #[test]
    fn geometric_series_is_not_polynomial() {
        let numer = series(&[1], 1);
        let denom = series(&[1, -1], 1);
        assert_eq!(
            series_divide_exact(&numer, &denom, 0),
            Err(Error::NonPolynomialQuotient { expected_degree: 0, at: 1 })
        );
    }

    #[test]
    fn zero_constant_term() {
        let numer = series(&[1], 3);
        let denom = series(&[0, 1], 3);
        assert_eq!(series_divide_exact(&numer, &denom, 1), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn reciprocal() {
        let s = TruncatedSeries::reciprocal_of_poly(&Poly::from_ints(&[1, -1]), 5).unwrap();
        assert!(s.coeffs().iter().all(|c| *c == int(1)));
    }
}
