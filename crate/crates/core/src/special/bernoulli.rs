use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{domain, Result};
use crate::Rational;

/// Exact Bernoulli numbers B₀ … B_max.
///
/// Computed from `B_m = −1/(m+1) Σ_{j<m} C(m+1, j) B_j`, which stores the
/// B₁ = −1/2 convention. Faulhaber sums flip that sign themselves.
pub fn bernoulli_numbers(max: usize) -> Result<Vec<Rational>> {
    if max < 2 {
        return Err(domain(format!(
            "bernoulli_numbers requires max >= 2, got {max}"
        )));
    }
    Ok(bernoulli_table(max))
}

pub(crate) fn bernoulli_table(max: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(max + 1);
    out.push(BigRational::one());
    for m in 1..=max {
        // odd indices above 1 vanish
        if m > 1 && m % 2 == 1 {
            out.push(BigRational::zero());
            continue;
        }
        let mut binom = BigInt::one(); // C(m+1, 0)
        let mut acc = BigRational::zero();
        for (j, b) in out.iter().enumerate() {
            if !b.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * b;
            }
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        out.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    out
}

static BERNOULLI_F64: Lazy<Vec<f64>> = Lazy::new(|| {
    bernoulli_table(64)
        .iter()
        .map(|b| {
            b.to_f64()
                .expect("bernoulli numbers up to B64 fit in binary64")
        })
        .collect()
});

/// B_k rounded to binary64, `k ≤ 64`.
pub fn bernoulli_f64(k: usize) -> f64 {
    BERNOULLI_F64[k]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn standard_values() {
        let b = bernoulli_numbers(12).unwrap();
        assert_eq!(b[0], r(1, 1));
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[12], r(-691, 2730));
    }

    #[test]
    fn von_staudt_clausen_denominators() {
        // denominator of B_2k is the product of primes p with (p−1) | 2k
        let b = bernoulli_numbers(30).unwrap();
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
        for k in 1..=15usize {
            let den: u64 = primes
                .iter()
                .filter(|&&p| (2 * k as u64).is_multiple_of(p - 1))
                .product();
            assert_eq!(b[2 * k].denom(), &BigInt::from(den), "B_{}", 2 * k);
        }
    }

    #[test]
    fn odd_vanish_and_even_alternate() {
        let b = bernoulli_numbers(40).unwrap();
        for k in 1..20 {
            assert!(b[2 * k + 1].is_zero());
        }
        for k in 1..20 {
            let s = b[2 * k].numer().sign();
            let t = b[2 * k + 2].numer().sign();
            assert_ne!(s, t, "k={k}");
        }
    }

    #[test]
    fn rejects_small_max() {
        assert!(bernoulli_numbers(1).is_err());
    }

    #[test]
    fn float_table() {
        assert_eq!(bernoulli_f64(2), 1.0 / 6.0);
        assert!((bernoulli_f64(12) + 691.0 / 2730.0).abs() < 1e-16);
    }
}
