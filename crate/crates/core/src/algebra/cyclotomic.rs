use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::{int, ExactRational, Poly};

/// Field order used for Fourier matrices of the groups Γ up to S4.
pub const DEFAULT_CYCLOTOMIC_ORDER: u32 = 12;

/// Element of Q(ζ_n) in the power basis `1, ζ, ..., ζ^(φ(n)-1)`, always
/// reduced modulo the n-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<ExactRational>,
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut coeffs = vec![0i64; n as usize + 1];
    coeffs[0] = -1;
    coeffs[n as usize] = 1;
    let mut p = Poly::from_ints(&coeffs);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d);
        p = p.div_exact(&Poly::from_ints(&phi_d)).expect("x^n - 1 is divisible by every Φ_d with d | n");
    }
    let out: Vec<i64> =
        p.coeffs().iter().map(|c| i64::try_from(c.to_integer()).expect("cyclotomic coefficient overflow")).collect();
    let out = Arc::new(out);
    phi_cache().write().unwrap().insert(n, out.clone());
    out
}

/// Normal form of `Σ_k coeffs[k] ζ_n^k` for an arbitrary coefficient list.
pub fn cyclo_reduce(order: u32, coeffs: &[ExactRational]) -> Cyclotomic {
    let n = order as usize;
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    // first fold exponents modulo n, then reduce modulo Φ_n
    let mut work = vec![ExactRational::zero(); n.max(deg)];
    for (k, c) in coeffs.iter().enumerate() {
        work[k % n] += c;
    }
    for k in (deg..work.len()).rev() {
        if work[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut work[k]);
        for (j, &p) in phi.iter().enumerate().take(deg) {
            if p != 0 {
                work[k - deg + j] -= &c * int(p);
            }
        }
    }
    work.truncate(deg);
    Cyclotomic { order, coeffs: work }
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        cyclo_reduce(order, &[])
    }

    pub fn one(order: u32) -> Self {
        Cyclotomic::from_rational(order, int(1))
    }

    pub fn from_rational(order: u32, r: ExactRational) -> Self {
        cyclo_reduce(order, &[r])
    }

    /// ζ_n^k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![ExactRational::zero(); e + 1];
        coeffs[e] = int(1);
        cyclo_reduce(order, &coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<ExactRational> {
        self.is_rational().then(|| self.coeffs.first().cloned().unwrap_or_else(ExactRational::zero))
    }

    /// Image under ζ -> ζ^(-1).
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut raw = vec![ExactRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(n - k) % n] += c;
        }
        cyclo_reduce(self.order, &raw)
    }

    /// View inside Q(ζ_m) for a multiple `m` of the current order.
    pub fn embed(&self, order: u32) -> Self {
        assert!(order.is_multiple_of(self.order), "Q(ζ_{}) does not embed in Q(ζ_{order})", self.order);
        let step = (order / self.order) as usize;
        let mut raw = vec![ExactRational::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        cyclo_reduce(order, &raw)
    }

    pub fn scale(&self, r: &ExactRational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    fn check_order(&self, other: &Cyclotomic) {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let mut raw = vec![ExactRational::zero(); (2 * self.coeffs.len()).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        cyclo_reduce(self.order, &raw)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "z{}^{k}", self.order)?,
                _ => write!(f, "({c})*z{}^{k}", self.order)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn reduce_examples() {
        assert!(cyclo_reduce(3, &[int(1), int(1), int(1)]).is_zero());
        let z4 = Cyclotomic::zeta_pow(4, 1);
        assert_eq!(&z4 * &z4, Cyclotomic::from_rational(4, int(-1)));
        let z3 = Cyclotomic::zeta_pow(3, 1);
        let z3sq = Cyclotomic::zeta_pow(3, 2);
        assert_eq!(&z3 * &z3sq, Cyclotomic::one(3));
        assert!((&z3 * &z3sq).is_rational());
        assert!(!z3.is_rational());
    }

    #[test]
    fn conjugation_and_embedding() {
        let z3 = Cyclotomic::zeta_pow(3, 1);
        assert_eq!(z3.conj(), Cyclotomic::zeta_pow(3, 2));
        assert_eq!(z3.embed(12), Cyclotomic::zeta_pow(12, 4));
        // ζ + ζ^-1 = 2cos(2π/4) = 0 in Q(ζ_4)
        let z4 = Cyclotomic::zeta_pow(4, 1);
        assert!((&z4 + &z4.conj()).is_zero());
    }
}
