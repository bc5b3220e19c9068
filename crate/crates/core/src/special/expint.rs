use num_complex::Complex64;

use super::EULER_GAMMA;
use crate::error::{domain, Error, Result};
use crate::sum::{ComplexNeumaier, Neumaier};

/// |t| above which E₁ is evaluated by continued fraction.
const E1_SERIES_RADIUS: f64 = 4.0;
const E1_CF_MAX_ITER: usize = 5000;

/// Logarithmic integral Li(x) = ∫₀^{ln x} (eʸ − 1)/y dy + ln ln x + γ, `x > 1`.
///
/// Integrating the power series of (eʸ − 1)/y term by term gives
/// γ + ln ln x + Σ_{k≥1} (ln x)ᵏ/(k·k!), all terms positive.
pub fn log_integral(x: f64) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(domain(format!("log_integral requires x > 1, got {x}")));
    }
    let l = x.ln();
    let mut acc = Neumaier::new();
    acc.add(EULER_GAMMA);
    acc.add(l.ln());
    let mut power = 1.0; // lᵏ / k!
    let mut series = Neumaier::new();
    for k in 1..10_000u32 {
        let kf = k as f64;
        power *= l / kf;
        let term = power / kf;
        series.add(term);
        if kf > l && term < 1e-17 * series.value() {
            break;
        }
    }
    acc.add(series.value());
    Ok(acc.value())
}

/// Exponential integral E₁(t) on the principal branch (cut along t < 0).
///
/// Power series inside |t| ≤ 4, modified-Lentz continued fraction outside.
/// Where the fraction stalls (near the negative real axis) the series is
/// used instead; it does not cancel badly when Re t < 0.
pub fn exp_integral_e1(t: Complex64) -> Result<Complex64> {
    if t.re == 0.0 && t.im == 0.0 {
        return Err(Error::Pole("0 (exponential integral)".into()));
    }
    if t.im == 0.0 && t.re < 0.0 {
        return Err(domain(format!("E1 branch cut at t = {}", t.re)));
    }
    if !t.re.is_finite() || !t.im.is_finite() {
        return Err(domain("E1 requires a finite argument"));
    }
    if t.norm() <= E1_SERIES_RADIUS {
        return Ok(e1_series(t));
    }
    match e1_continued_fraction(t) {
        Some(v) => Ok(v),
        None => Ok(e1_series(t)),
    }
}

fn e1_series(t: Complex64) -> Complex64 {
    // E₁(t) = −γ − ln t − Σ_{k≥1} (−t)ᵏ/(k·k!)
    let mut acc = ComplexNeumaier::new();
    acc.add(Complex64::new(-EULER_GAMMA, 0.0));
    acc.add(-t.ln());
    let minus_t = -t;
    let mut power = Complex64::new(1.0, 0.0);
    let mut tail = ComplexNeumaier::new();
    let limit = 40 + (4.0 * t.norm()) as usize;
    for k in 1..=limit.max(60) {
        let kf = k as f64;
        power = power * minus_t / kf;
        let term = power / kf;
        tail.add(term);
        if kf > t.norm() && term.norm() < 1e-18 * tail.value().norm().max(1e-300) {
            break;
        }
    }
    acc.add(-tail.value());
    acc.value()
}

fn e1_continued_fraction(t: Complex64) -> Option<Complex64> {
    // E₁(t) = e^{−t} / (t + 1 − 1²/(t + 3 − 2²/(t + 5 − …)))
    let tiny = 1e-300;
    let mut b = t + 1.0;
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..=E1_CF_MAX_ITER {
        let an = -((i * i) as f64);
        b += 2.0;
        d = (d * an + b).inv();
        c = b + c.inv() * an;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            return Some(h * (-t).exp());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn li_known_values() {
        let li2 = log_integral(2.0).unwrap();
        assert!((li2 - 1.045_163_780_117_493).abs() < 1e-14);
        assert!(log_integral(1.0).is_err());
        assert!(log_integral(0.5).is_err());
    }

    #[test]
    fn li_grows_like_x_over_ln_x() {
        let x: f64 = 1e10;
        let li = log_integral(x).unwrap();
        assert!((li - 455_055_614.586_623_1).abs() < 1e-5);
    }

    #[test]
    fn e1_real_values() {
        let v = exp_integral_e1(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re - 0.219_383_934_395_520_27).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
        // continued-fraction side of the switchover
        let v = exp_integral_e1(Complex64::new(10.0, 0.0)).unwrap();
        assert!((v.re / 4.156_968_929_685_324e-6 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn e1_branch_and_pole() {
        assert!(matches!(
            exp_integral_e1(Complex64::new(0.0, 0.0)),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            exp_integral_e1(Complex64::new(-1.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn e1_continuous_across_switchover() {
        for k in 0..24 {
            let theta = -3.0 + 6.0 * k as f64 / 23.0;
            let z = Complex64::from_polar(4.0, theta);
            let series = e1_series(z);
            let cf = e1_continued_fraction(z).expect("fraction converges at |t| = 4");
            assert!(
                (series - cf).norm() <= 1e-11 * series.norm(),
                "theta={theta}"
            );
        }
    }

    #[test]
    fn e1_conjugate_symmetry() {
        for t in [
            Complex64::new(1.0, 2.0),
            Complex64::new(-3.0, 7.0),
            Complex64::new(0.2, 0.1),
            Complex64::new(-0.7, 300.0),
        ] {
            let a = exp_integral_e1(t.conj()).unwrap();
            let b = exp_integral_e1(t).unwrap().conj();
            assert!((a - b).norm() <= 1e-15 * b.norm());
        }
    }

    #[test]
    fn e1_on_imaginary_axis_decays() {
        let l = 2f64.ln();
        let mut last = f64::INFINITY;
        for s in [10.0, 100.0, 1000.0] {
            let m = exp_integral_e1(Complex64::new(0.0, s * l)).unwrap().norm();
            assert!(m < last);
            last = m;
        }
    }
}
