//! Closed-form integrals of ζ_w(N; s), each returned together with an
//! adaptive-quadrature evaluation of the same integral.

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::quad::{integrate, QuadConfig};
use crate::special::{exp_integral_e1, int_pow_neg, log_integral};
use crate::sum::{ComplexNeumaier, Neumaier};
use crate::zeta_w::{zeta_w, TruncationIndex};

/// Agreement required between closed form and quadrature over s ∈ [−1, 0].
pub const UNIT_TOL: f64 = 1e-8;
/// Agreement required across the critical strip.
pub const STRIP_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub closed_form: Complex64,
    pub quadrature: Complex64,
    pub abs_diff: f64,
}

fn quad_config() -> QuadConfig {
    QuadConfig {
        abs_tol: 1e-10,
        max_intervals: 2000,
    }
}

fn pair(closed_form: Complex64, quadrature: Complex64, tol: f64) -> Result<IntegralResult> {
    let abs_diff = (closed_form - quadrature).norm();
    if !(abs_diff <= tol) {
        return Err(Error::Mismatch {
            closed: closed_form.to_string(),
            quadrature: quadrature.to_string(),
            diff: abs_diff,
            tol,
        });
    }
    Ok(IntegralResult {
        closed_form,
        quadrature,
        abs_diff,
    })
}

/// `1 + N/(N+1)·(Li(N+1) − Li((N+1)²)) + Σ_{n=1}^{N−1} n/ln(n+1)`.
pub fn integral_unit_closed(n: TruncationIndex) -> Result<f64> {
    let nf = n.get() as f64;
    let mut acc = Neumaier::new();
    acc.add(1.0);
    acc.add(nf / (nf + 1.0) * (log_integral(nf + 1.0)? - log_integral((nf + 1.0) * (nf + 1.0))?));
    for k in 1..n.get() {
        let kf = k as f64;
        acc.add(kf / (kf + 1.0).ln());
    }
    Ok(acc.value())
}

/// ∫_{−1}^{0} ζ_w(N; s) ds: closed form against adaptive quadrature.
///
/// Both endpoints are zeros of the integrand and the only pole (s = 1) lies
/// outside the path.
pub fn integral_unit(n: TruncationIndex) -> Result<IntegralResult> {
    let closed = integral_unit_closed(n)?;
    let q = integrate(
        |s| zeta_w(n, Complex64::new(s, 0.0)).value,
        -1.0,
        0.0,
        &quad_config(),
    )?;
    pair(Complex64::new(closed, 0.0), q.value, UNIT_TOL)
}

/// `N/(N+1)·(E₁(itL − L) − E₁(itL))`, L = ln(N+1).
pub fn strip_ei_term(n: TruncationIndex, t: f64) -> Result<Complex64> {
    if t == 0.0 {
        return Err(domain("strip integral is singular at t = 0"));
    }
    let nf = n.get() as f64;
    let l = (nf + 1.0).ln();
    let it_l = Complex64::new(0.0, t * l);
    Ok((exp_integral_e1(it_l - l)? - exp_integral_e1(it_l)?) * (nf / (nf + 1.0)))
}

/// `1 + N/(N+1)(E₁(itL − L) − E₁(itL)) + Σ_{n=1}^{N−1} n(n+1)^{−it}/((n+1) ln(n+1))`.
pub fn integral_strip_closed(n: TruncationIndex, t: f64) -> Result<Complex64> {
    let mut acc = ComplexNeumaier::new();
    acc.add(Complex64::new(1.0, 0.0));
    acc.add(strip_ei_term(n, t)?);
    let it = Complex64::new(0.0, t);
    for k in 1..n.get() {
        let next = k as f64 + 1.0;
        let ln_next = next.ln();
        acc.add(int_pow_neg(next, ln_next, it) * (k as f64 / (next * ln_next)));
    }
    Ok(acc.value())
}

/// ∫_0^1 ζ_w(N; c + it) dc: closed form against adaptive quadrature, `t ≠ 0`.
pub fn integral_strip(n: TruncationIndex, t: f64) -> Result<IntegralResult> {
    let closed = integral_strip_closed(n, t)?;
    let q = integrate(
        |c| zeta_w(n, Complex64::new(c, t)).value,
        0.0,
        1.0,
        &quad_config(),
    )?;
    pair(closed, q.value, STRIP_TOL)
}

/// `|N/(N+1)(E₁(itL − L) − E₁(itL))|` for each `t`; `t_values` must be
/// positive and strictly increasing.
pub fn strip_ei_term_decay(n: TruncationIndex, t_values: &[f64]) -> Result<Vec<f64>> {
    if t_values.iter().any(|&t| !(t > 0.0)) || t_values.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(domain("t values must be positive and strictly increasing"));
    }
    t_values
        .iter()
        .map(|&t| strip_ei_term(n, t).map(|z| z.norm()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::log_integral;

    fn idx(n: u64) -> TruncationIndex {
        TruncationIndex::new(n).unwrap()
    }

    #[test]
    fn unit_interval() {
        let one = integral_unit(idx(1)).unwrap();
        let li = 1.0 + 0.5 * (log_integral(2.0).unwrap() - log_integral(4.0).unwrap());
        assert!((one.closed_form.re - li).abs() < 1e-15);
        assert!((one.closed_form.re - 0.038_789_342_539_220_95).abs() < 1e-14);
        let two = integral_unit(idx(2)).unwrap();
        assert!((two.closed_form.re - 0.070_928_935_448_717_81).abs() < 1e-14);
        for n in [1, 2, 5, 25, 100] {
            let r = integral_unit(idx(n)).unwrap();
            assert!(r.abs_diff < UNIT_TOL, "N={n}: {r:?}");
            assert!(r.quadrature.im.abs() <= 1e-13);
        }
    }

    #[test]
    fn strip() {
        let r = integral_strip(idx(1), 1.0).unwrap();
        assert!(
            (r.closed_form - Complex64::new(0.445_106_149_233_130_5, -0.245_610_671_595_282_2))
                .norm()
                < 1e-13
        );
        for (n, t) in [(1, 1.0), (4, 3.0), (10, 0.5), (25, 12.0)] {
            let r = integral_strip(idx(n), t).unwrap();
            assert!(r.abs_diff < STRIP_TOL, "N={n} t={t}: {r:?}");
        }
        let a = integral_strip(idx(3), 2.0).unwrap().closed_form;
        let b = integral_strip(idx(3), -2.0).unwrap().closed_form;
        assert!((a - b.conj()).norm() < 1e-14);
        assert!(integral_strip(idx(3), 0.0).is_err());
    }

    #[test]
    fn strip_sum_exponent_sign() {
        // (n+1)^{+it} in the sum disagrees with quadrature
        let n = idx(4);
        let t = 3.0;
        let q = integral_strip(n, t).unwrap().quadrature;
        let mut wrong = ComplexNeumaier::new();
        wrong.add(Complex64::new(1.0, 0.0));
        wrong.add(strip_ei_term(n, t).unwrap());
        for k in 1..4u64 {
            let next = k as f64 + 1.0;
            let p = int_pow_neg(next, next.ln(), Complex64::new(0.0, -t));
            wrong.add(p * (k as f64 / (next * next.ln())));
        }
        assert!((wrong.value() - q).norm() > 1e-2);
    }

    #[test]
    fn ei_term_decay() {
        let m = strip_ei_term_decay(idx(2), &[10.0, 100.0, 1000.0]).unwrap();
        assert!(m[0] > m[1] && m[1] > m[2]);
        assert!(m[0] >= 5.0 * m[1] && m[1] >= 5.0 * m[2]);
        let far = strip_ei_term_decay(idx(1), &[1e4]).unwrap()[0];
        assert!(far < 1e-3);
        assert!(strip_ei_term_decay(idx(1), &[10.0, 5.0]).is_err());
        assert!(strip_ei_term_decay(idx(1), &[-1.0]).is_err());
    }
}
