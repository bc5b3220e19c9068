//! Real and complex special functions used by the closed forms.
//!
//! Everything here is binary64. The Riemann zeta evaluator in [`zeta_ref`]
//! exists only as a reference oracle; the truncated approximation in
//! [`crate::zeta_w`] never calls it.

mod bernoulli;
mod expint;
mod gamma;
mod zeta_ref;

use num_complex::Complex64;

pub use bernoulli::{bernoulli_f64, bernoulli_numbers};
pub use expint::{exp_integral_e1, log_integral};
pub use gamma::{complex_gamma, digamma, log_gamma, polygamma_int, trigamma_tail};
pub use zeta_ref::{zeta_real, zeta_reference};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ζ(2) = π²/6.
pub const ZETA_2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// `n^{-s}` for a positive integer `n` with `ln n` supplied by the caller.
///
/// The modulus comes from `powf`, so integer exponents with representable
/// results are exact; the phase is `−Im(s)·ln n`. Conjugating `s` conjugates
/// the result bit for bit.
#[inline]
pub(crate) fn int_pow_neg(n: f64, ln_n: f64, s: Complex64) -> Complex64 {
    let modulus = n.powf(-s.re);
    if s.im == 0.0 {
        return Complex64::new(modulus, 0.0);
    }
    let (sin, cos) = (s.im * ln_n).sin_cos();
    Complex64::new(modulus * cos, -modulus * sin)
}

/// sin(π z / 2) with the real part reduced exactly, so even integers give 0.
pub(crate) fn sin_half_pi(z: Complex64) -> Complex64 {
    use std::f64::consts::FRAC_PI_2;
    // symmetric reduction keeps small arguments exact
    let r = z.re - 4.0 * (z.re / 4.0).round();
    let (s, c) = if r == 0.0 {
        (0.0, 1.0)
    } else if r == 1.0 {
        (1.0, 0.0)
    } else if r.abs() == 2.0 {
        (0.0, -1.0)
    } else if r == -1.0 {
        (-1.0, 0.0)
    } else {
        (r * FRAC_PI_2).sin_cos()
    };
    let y = z.im * FRAC_PI_2;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_powers_are_exact() {
        let s = Complex64::new(-2.0, 0.0);
        for n in 1..2000u32 {
            let n = n as f64;
            assert_eq!(int_pow_neg(n, n.ln(), s).re, n * n);
        }
    }

    #[test]
    fn sin_half_pi_vanishes_on_even_integers() {
        for k in -6..=6 {
            let v = sin_half_pi(Complex64::new(2.0 * k as f64, 0.0));
            assert_eq!(v.re, 0.0);
        }
        let v = sin_half_pi(Complex64::new(0.3, 1.7));
        let w = (Complex64::new(0.3, 1.7) * std::f64::consts::FRAC_PI_2).sin();
        assert!((v - w).norm() < 1e-14);
    }
}
