//! Bernoulli numbers as exact rationals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{ensure_domain, Result};

/// Bernoulli numbers B₀ … B_max, stored exactly and converted to f64 on
/// demand.
///
/// B_{2k} grows roughly like 2(2k)!/(2π)^{2k}, so float recursion loses
/// digits quickly; the recursion Σ_{k=0}^{n} C(n+1,k) B_k = 0 is run over
/// `BigRational` instead and each entry rounds exactly once.
///
/// Convention: B₁ = −1/2 (the one the Euler–Maclaurin tail wants).
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
    floats: Vec<f64>,
    max_index: usize,
}

impl BernoulliTable {
    /// Build B₀ … B_{max_index} by the defining recursion.
    pub fn new(max_index: usize) -> Result<Self> {
        ensure_domain!(max_index >= 2, "max_index", "max_index >= 2", max_index as f64);
        let mut values: Vec<BigRational> = Vec::with_capacity(max_index + 1);
        values.push(BigRational::one());
        for n in 1..=max_index {
            if n > 1 && n % 2 == 1 {
                values.push(BigRational::zero());
                continue;
            }
            // B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(n+1, 0)
            for (k, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(binom.clone());
                }
                // C(n+1, k+1) = C(n+1, k) * (n+1-k) / (k+1)
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            values.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        let floats = values.iter().map(|v| rational_to_f64(v)).collect();
        Ok(BernoulliTable {
            values,
            floats,
            max_index,
        })
    }

    /// Largest stored index.
    pub fn max_index(&self) -> usize {
        self.max_index
    }

    /// Exact rational B_n.
    pub fn rational(&self, n: usize) -> &BigRational {
        &self.values[n]
    }

    /// B_n rounded to f64.
    pub fn get(&self, n: usize) -> f64 {
        self.floats[n]
    }

    /// B_{2k}/(2k)! rounded to f64 after exact rational division; these are
    /// the coefficients the Euler–Maclaurin correction terms consume.
    pub fn b2k_over_factorial(&self, k: usize) -> f64 {
        let mut fact = BigInt::one();
        for i in 2..=(2 * k) {
            fact *= BigInt::from(i);
        }
        rational_to_f64(&(self.rational(2 * k) / BigRational::from_integer(fact)))
    }
}

/// Accurate BigRational → f64: scale the quotient into the integer range
/// where a single division rounds correctly.
fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    let num = r.numer().abs();
    let den = r.denom().abs();
    // Shift numerator so num/den has ~64 significant bits, divide, undo.
    let shift = 64i64 + (den.bits() as i64) - (num.bits() as i64);
    let scaled = if shift >= 0 {
        (num << shift as u64) / &den
    } else {
        num / (&den << (-shift) as u64)
    };
    let q = scaled.to_f64().unwrap_or(f64::INFINITY);
    sign * q * crate::fmath::powf(2.0, -shift as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn spot_values_match_standard_table() {
        let t = BernoulliTable::new(62).unwrap();
        assert_eq!(*t.rational(0), frac(1, 1));
        assert_eq!(*t.rational(1), frac(-1, 2));
        assert_eq!(*t.rational(2), frac(1, 6));
        assert_eq!(*t.rational(4), frac(-1, 30));
        assert_eq!(*t.rational(6), frac(1, 42));
        assert_eq!(*t.rational(12), frac(-691, 2730));
        for n in (3..=61).step_by(2) {
            assert!(t.rational(n).is_zero(), "B_{n} must vanish");
        }
    }

    #[test]
    fn recursion_closes_exactly() {
        // sum_{k=0}^{n} C(n+1,k) B_k = 0 for every n >= 1, exactly.
        let t = BernoulliTable::new(60).unwrap();
        for n in 1..=60usize {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::from(1);
            for k in 0..=n {
                acc += t.rational(k) * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            assert!(acc.is_zero(), "recursion open at n = {n}: {acc}");
        }
    }

    #[test]
    fn float_conversion_is_faithful() {
        let t = BernoulliTable::new(62).unwrap();
        assert_eq!(t.get(0), 1.0);
        assert_eq!(t.get(1), -0.5);
        assert_eq!(t.get(2), 1.0 / 6.0);
        assert_eq!(t.get(4), -1.0 / 30.0);
        assert!((t.get(12) - (-691.0 / 2730.0)).abs() < 1e-18);
        // B_60 ~ -2.139994925722533e34; check magnitude and sign survive.
        let b60 = t.get(60);
        assert!(b60 < -2.1e34 && b60 > -2.2e34, "B_60 = {b60:e}");
        // B2k/(2k)! = 2 zeta(2k)/(2pi)^{2k} up to sign; spot check k=1: 1/12.
        assert!((t.b2k_over_factorial(1) - 1.0 / 12.0).abs() < 1e-18);
    }
}
