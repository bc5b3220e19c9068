//! Exact rational engine: Faulhaber power sums and the polynomials
//! ζ_w(N; 1−n) in the variable N.
//!
//! With s = 1−n the summand of the truncated sum becomes
//! `m(m+1)^{n−1} − mⁿ + (1−n)m^{n−1}`; its mⁿ and m^{n−1} coefficients
//! cancel, leaving `Σ_{k=1}^{n−2} C(n−1, k−1) mᵏ`, so
//!
//! ```text
//! ζ_w(N; 1−n) = −(1/n) Σ_{k=1}^{n−2} C(n−1, k−1) P_k(N),   P_k(N) = Σ_{m=1}^{N} mᵏ.
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::special::bernoulli_numbers;
use crate::Rational;

/// Golden copy of the ζ_w(N; 1−n) table, rows n = 2…12.
pub const GOLDEN_TABLE: &str = include_str!("../data/zeta_w_neg_table.txt");

pub const TABLE_MIN_N: u32 = 2;
pub const TABLE_MAX_N: u32 = 12;
pub const FAULHABER_MAX_K: usize = 16;

/// Dense polynomial in N with exact rational coefficients, lowest degree
/// first. Trailing zeros are trimmed; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

fn rat(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: u64) -> Rational {
        self.eval(&rat(x))
    }

    /// Exact evaluation rounded once to binary64.
    pub fn eval_f64(&self, x: u64) -> f64 {
        self.eval_int(x).to_f64().unwrap_or(f64::NAN)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Coefficients as `p/q` strings (integers without a denominator),
    /// lowest degree first; `["0"]` for the zero polynomial. `pad_to` pads
    /// with zero coefficients up to that many entries.
    pub fn coeff_strings(&self, pad_to: usize) -> Vec<String> {
        let mut out: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        while out.len() < pad_to.max(1) {
            out.push("0".into());
        }
        out
    }
}

impl fmt::Display for RationalPolynomial {
    /// Space-separated `p/q` coefficients, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coeff_strings(0).join(" "))
    }
}

impl FromStr for RationalPolynomial {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let coeffs = line
            .split_whitespace()
            .map(|tok| {
                let tok = tok.replace('\u{2212}', "-");
                tok.parse::<Rational>()
                    .map_err(|e| Error::Golden(format!("bad coefficient {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Golden("empty row".into()));
        }
        Ok(Self::new(coeffs))
    }
}

/// `P_k` with `P_k(N) = Σ_{m=1}^{N} mᵏ`, `0 ≤ k ≤ 16`.
///
/// `P_k(N) = 1/(k+1) Σ_{j=0}^{k} C(k+1, j) B⁺_j N^{k+1−j}` where B⁺ is the
/// Bernoulli sequence with B₁ = +1/2, so the m = N term is included.
pub fn faulhaber(k: usize) -> Result<RationalPolynomial> {
    if k > FAULHABER_MAX_K {
        return Err(domain(format!(
            "faulhaber supports k <= {FAULHABER_MAX_K}, got {k}"
        )));
    }
    Ok(faulhaber_unchecked(k))
}

fn faulhaber_unchecked(k: usize) -> RationalPolynomial {
    let mut bern = bernoulli_numbers(k.max(2)).expect("max >= 2");
    bern[1] = -bern[1].clone();
    let mut coeffs = vec![Rational::zero(); k + 2];
    let inv = BigRational::new(BigInt::one(), BigInt::from(k + 1));
    for (j, b) in bern.iter().enumerate().take(k + 1) {
        let c = rat(binomial(BigInt::from(k + 1), BigInt::from(j)));
        coeffs[k + 1 - j] = &inv * c * b;
    }
    RationalPolynomial::new(coeffs)
}

/// The summand coefficients `c_k` of `mᵏ` in `m(m+1)^{n−1} − mⁿ + (1−n)m^{n−1}`,
/// before any cancellation is applied. Index = power of m.
pub fn neg_summand_coefficients(n: u32) -> Vec<BigInt> {
    let n_us = n as usize;
    let mut out = vec![BigInt::zero(); n_us + 1];
    for j in 0..n_us {
        // m·C(n−1, j) m^j
        out[j + 1] += binomial(BigInt::from(n - 1), BigInt::from(j));
    }
    out[n_us] -= BigInt::one();
    out[n_us - 1] += BigInt::from(1i64 - n as i64);
    out
}

/// Exact ζ_w(N; 1−n) for `n ≥ 2` without the table-range check.
pub fn zeta_w_neg_poly_unchecked(n: u32) -> RationalPolynomial {
    assert!(n >= 2, "n must be at least 2");
    let summand = neg_summand_coefficients(n);
    let mut acc = RationalPolynomial::zero();
    for (k, c) in summand.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&faulhaber_unchecked(k).scale(&rat(c.clone())));
    }
    acc.scale(&BigRational::new(-BigInt::one(), BigInt::from(n)))
}

/// Exact polynomial ζ_w(N; 1−n), `2 ≤ n ≤ 12`.
pub fn zeta_w_neg_poly(n: u32) -> Result<RationalPolynomial> {
    if !(TABLE_MIN_N..=TABLE_MAX_N).contains(&n) {
        return Err(domain(format!(
            "table rows cover n = {TABLE_MIN_N}..={TABLE_MAX_N}, got {n}"
        )));
    }
    Ok(zeta_w_neg_poly_unchecked(n))
}

fn pow_int(m: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(m), e as usize)
}

/// Left side `Σ_{k=1}^{n−2} (mᵏ/n) C(n−1, k−1)`.
fn binomial_side(n: u32, m: u64) -> Rational {
    let mut acc = BigInt::zero();
    for k in 1..=n.saturating_sub(2) {
        acc += pow_int(m, k) * binomial(BigInt::from(n - 1), BigInt::from(k - 1));
    }
    BigRational::new(acc, BigInt::from(n))
}

/// Right side `(1/n)((n−1)m^{n−1} + mⁿ − (m+1)^{n−1} m)`.
fn expanded_side(n: u32, m: u64) -> Rational {
    let v = BigInt::from(n - 1) * pow_int(m, n - 1) + pow_int(m, n)
        - pow_int(m + 1, n - 1) * BigInt::from(m);
    BigRational::new(v, BigInt::from(n))
}

fn check_identity_args(n: u32, m: u64) -> Result<()> {
    if !(TABLE_MIN_N..=TABLE_MAX_N).contains(&n) || m == 0 {
        return Err(domain(format!(
            "identity needs 2 <= n <= 12 and m >= 1, got ({n}, {m})"
        )));
    }
    Ok(())
}

/// Whether `Σ_{k=1}^{n−2}(mᵏ/n)C(n−1,k−1) = (1/n)((n−1)m^{n−1} + mⁿ − (m+1)^{n−1}m)`
/// holds exactly, as the two numerator forms of χ(N; n) are written.
///
/// The two sides are negatives of each other, so this is `true` only when
/// both vanish (n = 2). [`chi_numerator_identity_negated`] is the identity
/// that actually holds.
pub fn chi_numerator_identity(n: u32, m: u64) -> Result<bool> {
    check_identity_args(n, m)?;
    Ok(binomial_side(n, m) == expanded_side(n, m))
}

/// `Σ_{k=1}^{n−2}(mᵏ/n)C(n−1,k−1) = −(1/n)((n−1)m^{n−1} + mⁿ − (m+1)^{n−1}m)`.
pub fn chi_numerator_identity_negated(n: u32, m: u64) -> Result<bool> {
    check_identity_args(n, m)?;
    Ok(binomial_side(n, m) == -expanded_side(n, m))
}

/// Side-by-side ζ_w(N; 1−2n) and `B_{2n} (N+1)² (2n+1)/2`. No relation
/// between them is asserted.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliComparison {
    pub n: u32,
    pub left: RationalPolynomial,
    pub right: RationalPolynomial,
    pub difference: RationalPolynomial,
}

pub fn bernoulli_comparison(n: u32) -> Result<BernoulliComparison> {
    if !(1..=6).contains(&n) {
        return Err(domain(format!(
            "bernoulli_comparison covers n = 1..=6, got {n}"
        )));
    }
    let left = zeta_w_neg_poly(2 * n)?;
    let b = bernoulli_numbers(2 * n as usize)?[2 * n as usize].clone();
    let n_plus_1_sq = RationalPolynomial::new(vec![rat(1), rat(2), rat(1)]);
    let right =
        n_plus_1_sq.scale(&(b * BigRational::new(BigInt::from(2 * n + 1), BigInt::from(2))));
    let difference = left.sub(&right);
    Ok(BernoulliComparison {
        n,
        left,
        right,
        difference,
    })
}

/// Parse a golden table: one row per n starting at n = 2, `#` comments and
/// blank lines ignored.
pub fn parse_golden_table(text: &str) -> Result<Vec<(u32, RationalPolynomial)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .enumerate()
        .map(|(i, line)| Ok((TABLE_MIN_N + i as u32, line.parse()?)))
        .collect()
}

/// Rows `n` where the engine disagrees with `golden`, plus missing rows.
pub fn table_mismatches(golden: &[(u32, RationalPolynomial)]) -> Vec<u32> {
    let mut bad = Vec::new();
    for n in TABLE_MIN_N..=TABLE_MAX_N {
        let engine = zeta_w_neg_poly_unchecked(n);
        match golden.iter().find(|(k, _)| *k == n) {
            Some((_, row)) if *row == engine => {}
            _ => bad.push(n),
        }
    }
    bad
}

/// Largest |numerator| in the table; used to show 64-bit overflow headroom.
pub fn max_abs_coefficient_numerator() -> BigInt {
    (TABLE_MIN_N..=TABLE_MAX_N)
        .flat_map(|n| zeta_w_neg_poly_unchecked(n).coeffs.clone())
        .map(|c| c.numer().abs())
        .max()
        .unwrap_or_default()
}
