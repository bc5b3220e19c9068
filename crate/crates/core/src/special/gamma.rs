use num_complex::Complex64;

use super::bernoulli::bernoulli_f64;
use super::EULER_GAMMA;
use crate::error::{domain, Result};
use crate::sum::Neumaier;

/// Argument above which the asymptotic (Stirling-type) series is used.
const ASYMPTOTIC_FROM: f64 = 15.0;

fn stirling_log_gamma(x: f64) -> f64 {
    let half_ln_2pi = 0.918_938_533_204_672_8;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for k in 1..=10 {
        let two_k = 2.0 * k as f64;
        corr += bernoulli_f64(2 * k) / (two_k * (two_k - 1.0)) * pow;
        pow *= inv2;
    }
    (x - 0.5) * x.ln() - x + half_ln_2pi + corr
}

/// ln Γ(x) for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    if x >= ASYMPTOTIC_FROM {
        return Ok(stirling_log_gamma(x));
    }
    let mut shifted = x;
    let mut prod = 1.0;
    while shifted < ASYMPTOTIC_FROM {
        prod *= shifted;
        shifted += 1.0;
    }
    Ok(stirling_log_gamma(shifted) - prod.ln())
}

/// Γ(z) for complex `z` off the poles, via recurrence and Stirling's series.
pub fn complex_gamma(z: Complex64) -> Complex64 {
    let mut shifted = z;
    let mut prod = Complex64::new(1.0, 0.0);
    while shifted.re < ASYMPTOTIC_FROM {
        prod *= shifted;
        shifted += 1.0;
    }
    let half_ln_2pi = 0.918_938_533_204_672_8;
    let inv = shifted.inv();
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for k in 1..=12 {
        let two_k = 2.0 * k as f64;
        corr += pow * (bernoulli_f64(2 * k) / (two_k * (two_k - 1.0)));
        pow *= inv2;
    }
    let ln_gamma = (shifted - 0.5) * shifted.ln() - shifted + half_ln_2pi + corr;
    ln_gamma.exp() / prod
}

/// Digamma Ψ(x) = d/dx ln Γ(x) for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("digamma requires x > 0, got {x}")));
    }
    if x == 1.0 {
        return Ok(-EULER_GAMMA);
    }
    let mut acc = Neumaier::new();
    let mut shifted = x;
    while shifted < ASYMPTOTIC_FROM {
        acc.add(-1.0 / shifted);
        shifted += 1.0;
    }
    let inv2 = 1.0 / (shifted * shifted);
    let mut pow = inv2;
    let mut series = 0.0;
    for k in 1..=10 {
        let two_k = 2.0 * k as f64;
        series += bernoulli_f64(2 * k) / two_k * pow;
        pow *= inv2;
    }
    acc.add(shifted.ln() - 0.5 / shifted - series);
    Ok(acc.value())
}

/// Polygamma Ψ(m, x) = dᵐ/dxᵐ Ψ(x), argument order (order, argument).
///
/// Uses `Ψ(m, x) = (−1)^{m+1} m! Σ_{k≥0} (x+k)^{−m−1}`: the first terms are
/// summed directly until the argument exceeds the asymptotic threshold, then
/// the Euler–Maclaurin tail takes over. All contributions share one sign.
pub fn polygamma_int(m: u32, x: f64) -> Result<f64> {
    if m == 0 {
        return digamma(x);
    }
    if m > 150 {
        return Err(domain(format!(
            "polygamma order {m} is too large for binary64"
        )));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("polygamma requires x > 0, got {x}")));
    }
    let mf = m as f64;
    let threshold = ASYMPTOTIC_FROM + 1.5 * mf;

    let mut acc = Neumaier::new();
    let mut shifted = x;
    while shifted < threshold {
        acc.add(shifted.powi(-(m as i32) - 1));
        shifted += 1.0;
    }

    // Σ_{k≥0} (y+k)^{-m-1} ≈ y^{-m}/m + y^{-m-1}/2 + Σ_j B_2j (m+1)_{2j-1}/(2j)! y^{-m-2j}
    let y = shifted;
    let lead = y.powi(-(m as i32));
    let inv = 1.0 / y;
    let mut tail = Neumaier::new();
    tail.add(lead / mf);
    tail.add(0.5 * lead * inv);
    let mut rising = mf + 1.0; // (m+1)_{2j-1}
    let mut fact = 2.0; // (2j)!
    let mut pow = lead * inv * inv;
    for j in 1..=20usize {
        let term = bernoulli_f64(2 * j) * rising / fact * pow;
        tail.add(term);
        if term.abs() < 1e-18 * tail.value().abs() {
            break;
        }
        let a = mf + 2.0 * j as f64;
        rising *= a * (a + 1.0);
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
        pow *= inv * inv;
    }
    acc.add(tail.value());

    let factorial: f64 = (1..=m).map(|k| k as f64).product();
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * factorial * acc.value())
}

/// Ψ(1, N+1) = ζ(2) − Σ_{k=1}^{N} k⁻², the tail of the Basel series.
///
/// Small `N` subtract the partial sum from ζ(2); larger `N` use the
/// Euler–Maclaurin expansion of Σ_{k>N} k⁻², which keeps full relative
/// accuracy as the tail shrinks.
pub fn trigamma_tail(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(domain("trigamma_tail requires N >= 1"));
    }
    if n < 10 {
        let mut acc = Neumaier::new();
        acc.add(super::ZETA_2);
        for k in 1..=n {
            let k = k as f64;
            acc.add(-1.0 / (k * k));
        }
        return Ok(acc.value());
    }
    let nf = n as f64;
    let inv = 1.0 / nf;
    let inv2 = inv * inv;
    let mut acc = Neumaier::new();
    acc.add(inv);
    acc.add(-0.5 * inv2);
    let mut pow = inv2 * inv;
    for j in 1..=10 {
        acc.add(bernoulli_f64(2 * j) * pow);
        pow *= inv2;
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::ZETA_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn log_gamma_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        let expect = 3_628_800f64.ln();
        assert!((log_gamma(11.0).unwrap() - expect).abs() <= 1e-13 * expect);
        // Γ(1/2) = √π
        let half = std::f64::consts::PI.sqrt().ln();
        assert!(close(log_gamma(0.5).unwrap(), half, 1e-14));
        // near the minimum, value and neighbours from Γ(x+1) = xΓ(x)
        for &x in &[1.5, 2.5, 3.7, 14.9, 15.0, 30.5] {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + f64::ln(x);
            assert!(close(lhs, rhs, 1e-13 * lhs.abs().max(1.0)), "x={x}");
        }
    }

    #[test]
    fn log_gamma_rejects_nonpositive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
    }

    #[test]
    fn log_gamma_matches_factorials() {
        let mut fact = 1.0f64;
        for n in 1..=25u32 {
            fact *= n as f64;
            let lg = log_gamma(n as f64 + 1.0).unwrap();
            assert!(close(lg, fact.ln(), 1e-13 * fact.ln().max(1.0)), "n={n}");
        }
    }

    #[test]
    fn complex_gamma_reflection() {
        use std::f64::consts::PI;
        // Γ(z)Γ(1−z) = π / sin(πz)
        let z = Complex64::new(0.3, 0.8);
        let lhs = complex_gamma(z) * complex_gamma(1.0 - z);
        let rhs = PI / (z * PI).sin();
        assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
        let five = complex_gamma(Complex64::new(5.0, 0.0));
        assert!((five.re - 24.0).abs() < 1e-12 && five.im == 0.0);
    }

    #[test]
    fn digamma_values() {
        assert_eq!(digamma(1.0).unwrap(), -EULER_GAMMA);
        assert!(close(digamma(2.0).unwrap(), 1.0 - EULER_GAMMA, 1e-15));
        let expect = -EULER_GAMMA + (1..=9).map(|k| 1.0 / k as f64).sum::<f64>();
        assert!(close(digamma(10.0).unwrap(), expect, 1e-13));
        assert!(close(digamma(10.0).unwrap(), 2.251_752_589_066_721, 1e-13));
        assert!(digamma(0.0).is_err());
    }

    #[test]
    fn digamma_recurrence_on_grid() {
        let mut x = 0.5;
        while x <= 100.0 {
            let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
            assert!(close(d, 1.0 / x, 1e-12), "x={x}");
            x += 0.37;
        }
    }

    #[test]
    fn polygamma_values() {
        assert!(close(polygamma_int(1, 1.0).unwrap(), ZETA_2, 1e-14));
        // ζ(3) from its defining series, tail bounded by 1/(2K²)
        let zeta3 = 1.202_056_903_159_594_2;
        assert!(close(polygamma_int(2, 1.0).unwrap(), -2.0 * zeta3, 1e-13));
        assert!(close(
            polygamma_int(1, 6.0).unwrap(),
            trigamma_tail(5).unwrap(),
            1e-14
        ));
    }

    #[test]
    fn polygamma_recurrence() {
        for m in 1..=11u32 {
            let fact: f64 = (1..=m).map(|k| k as f64).product();
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            for &x in &[0.5, 1.0, 2.5, 7.0, 19.3, 40.0] {
                let d = polygamma_int(m, x + 1.0).unwrap() - polygamma_int(m, x).unwrap();
                let expect = sign * fact * x.powi(-(m as i32) - 1);
                assert!(
                    (d - expect).abs() <= 1e-10 * expect.abs().max(1e-300),
                    "m={m} x={x}: {d} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn polygamma_against_direct_series() {
        // brute force Σ (x+k)^{-m-1} with an integral tail correction
        for m in 2..=6u32 {
            let x = 3.25;
            let p = m as i32 + 1;
            let k_max = 200_000;
            let mut acc = Neumaier::new();
            for k in (0..k_max).rev() {
                acc.add((x + k as f64).powi(-p));
            }
            let y = x + k_max as f64;
            acc.add(y.powi(-(p - 1)) / (p - 1) as f64 + 0.5 * y.powi(-p));
            let fact: f64 = (1..=m).map(|k| k as f64).product();
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            let expect = sign * fact * acc.value();
            let got = polygamma_int(m, x).unwrap();
            assert!((got - expect).abs() <= 1e-11 * expect.abs(), "m={m}");
        }
    }

    #[test]
    fn trigamma_tail_values() {
        assert!(close(
            trigamma_tail(1).unwrap(),
            0.644_934_066_848_226_4,
            1e-15
        ));
        assert!(close(trigamma_tail(2).unwrap(), ZETA_2 - 1.25, 1e-15));
        for &n in &[10u64, 100, 10_000, 1_000_000, 100_000_000] {
            let t = trigamma_tail(n).unwrap();
            let nf = n as f64;
            assert!(t > 1.0 / (nf + 1.0) && t < 1.0 / nf, "N={n}");
        }
        // both branches agree with the partial-sum route where it is accurate
        for n in 5..=40u64 {
            let partial: f64 = {
                let mut acc = Neumaier::new();
                acc.add(ZETA_2);
                for k in 1..=n {
                    acc.add(-1.0 / (k * k) as f64);
                }
                acc.value()
            };
            assert!(close(trigamma_tail(n).unwrap(), partial, 1e-14), "N={n}");
        }
    }
}
