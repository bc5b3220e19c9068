//! Reference Riemann zeta function.
//!
//! Euler–Maclaurin summation for Re s ≥ 0 and the classical functional
//! equation for Re s < 0. This is an oracle for checking the truncated
//! approximation and its limits; nothing in the approximation path uses it.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::bernoulli_f64;
use super::{complex_gamma, int_pow_neg, sin_half_pi};
use crate::error::{Error, Result};
use crate::sum::ComplexNeumaier;

const EM_TERMS: usize = 16;

/// ζ(s) for `s ≠ 1`, accurate to about 1e−13 relative for |Im s| ≤ 50.
pub fn zeta_reference(s: Complex64) -> Result<Complex64> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("1 (Riemann zeta)".into()));
    }
    if s.re < 0.0 {
        // ζ(s) = 2ˢ π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
        let reflected = 1.0 - s;
        let z = euler_maclaurin(reflected, -s);
        let prefactor = (s * 2f64.ln() + (s - 1.0) * PI.ln()).exp();
        return Ok(prefactor * sin_half_pi(s) * complex_gamma(reflected) * z);
    }
    Ok(euler_maclaurin(s, s - 1.0))
}

/// Real-argument convenience wrapper.
pub fn zeta_real(x: f64) -> Result<f64> {
    zeta_reference(Complex64::new(x, 0.0)).map(|z| z.re)
}

// `s_minus_one` is passed separately so that it stays exact near the pole.
fn euler_maclaurin(s: Complex64, s_minus_one: Complex64) -> Complex64 {
    let m = 25 + s.norm().ceil() as u64;
    let mf = m as f64;
    let ln_m = mf.ln();

    let mut acc = ComplexNeumaier::new();
    for n in 1..m {
        let nf = n as f64;
        acc.add(int_pow_neg(nf, nf.ln(), s));
    }
    let m_pow = int_pow_neg(mf, ln_m, s); // M^{-s}
    acc.add(m_pow * mf / s_minus_one);
    acc.add(m_pow * 0.5);

    // Σ_k B_2k/(2k)! · s(s+1)…(s+2k−2) · M^{−s−2k+1}
    let mut rising = s; // (s)_{2k-1}
    let mut fact = 2.0; // (2k)!
    let mut pow = m_pow / mf;
    for k in 1..=EM_TERMS {
        let term = rising * pow * (bernoulli_f64(2 * k) / fact);
        acc.add(term);
        let a = s + (2 * k - 1) as f64;
        rising = rising * a * (a + 1.0);
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
        pow /= mf * mf;
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn classical_values() {
        let z2 = zeta_reference(c(2.0)).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-12 * z2.re);
        let z4 = zeta_reference(c(4.0)).unwrap();
        assert!((z4.re - PI.powi(4) / 90.0).abs() < 1e-12 * z4.re);
        assert!((zeta_real(0.0).unwrap() + 0.5).abs() < 1e-15);
        assert!((zeta_real(-1.0).unwrap() + 1.0 / 12.0).abs() < 1e-14);
        assert!((zeta_real(-3.0).unwrap() - 1.0 / 120.0).abs() < 1e-15);
        assert_eq!(zeta_real(-2.0).unwrap(), 0.0);
    }

    #[test]
    fn pole_at_one() {
        assert!(matches!(zeta_reference(c(1.0)), Err(Error::Pole(_))));
    }

    #[test]
    fn first_nontrivial_zero() {
        let rho = Complex64::new(0.5, 14.134_725_141_734_693);
        assert!(zeta_reference(rho).unwrap().norm() < 1e-12);
    }

    #[test]
    fn continuity_across_reflection_boundary() {
        for y in [0.0, 3.0, 20.0, 45.0] {
            let a = zeta_reference(Complex64::new(-1e-9, y)).unwrap();
            let b = zeta_reference(Complex64::new(1e-9, y)).unwrap();
            assert!((a - b).norm() < 1e-7 * a.norm().max(1.0), "y={y}");
        }
    }

    #[test]
    fn matches_direct_sum_at_large_real_part() {
        let s = Complex64::new(8.0, 30.0);
        let mut acc = ComplexNeumaier::new();
        for n in 1..=2000u32 {
            let nf = n as f64;
            acc.add(int_pow_neg(nf, nf.ln(), s));
        }
        assert!((zeta_reference(s).unwrap() - acc.value()).norm() < 1e-13);
    }
}
