//! The finite reflection function χ(N; s) = ζ_w(N; 1−s) / ζ_w(N; s).
//!
//! Writing `D(s) = (s−1)·ζ_w(N; s)` (see [`truncated_sum`]), the quotient
//! becomes `χ(N; s) = −(s−1)·D(1−s) / (s·D(s))`. Since `D(0) = 0` and
//! `D(1) = N/(N+1)`, χ has a pole of order two at s = 0; its residue is the
//! `1/s` Laurent coefficient, i.e. `d/ds [s²χ(N; s)]` at 0.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::diff::{central5, richardson_derivative};
use crate::error::{domain, Result};
use crate::special::{digamma, log_gamma, trigamma_tail, zeta_real, EULER_GAMMA, ZETA_2};
use crate::sum::Neumaier;
use crate::zeta_w::{truncated_sum, zeta_w_closed_integer, EvalResult, TruncationIndex};

/// Finite-difference step used by every Laurent fit in this module.
pub const LAURENT_STEP: f64 = 1e-3;

/// Step for the numeric ζ′(−n) in [`nu_residue`].
pub const NU_DIFF_STEP: f64 = 1e-3;

/// χ(N; s). Pole marker at s = 0 and wherever ζ_w(N; s) vanishes; exact
/// zero at s = 1.
pub fn chi(n: TruncationIndex, s: Complex64) -> EvalResult {
    if s.re == 0.0 && s.im == 0.0 {
        return EvalResult::pole();
    }
    if s.re == 1.0 && s.im == 0.0 {
        return EvalResult::finite(Complex64::new(0.0, 0.0));
    }
    let denom = truncated_sum(n, s);
    if denom.re == 0.0 && denom.im == 0.0 {
        return EvalResult::pole();
    }
    let reflected = 1.0 - s;
    // at s = 1/2 both sums are the same sum
    let numer = if reflected == s {
        denom
    } else {
        truncated_sum(n, reflected)
    };
    let value = -((s - 1.0) * numer) / (s * denom);
    EvalResult::finite(value + Complex64::new(0.0, 0.0))
}

fn chi_real(n: TruncationIndex, s: f64) -> f64 {
    chi(n, Complex64::new(s, 0.0)).value.re
}

/// The three logarithmic partial sums entering the s = 0 residue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbcSums {
    /// `Σ n (ln(n+1) − ln n)`
    pub a: f64,
    /// `Σ (n² ln n − n² ln(n+1) − ln n) / (n(n+1))`
    pub b: f64,
    /// `½ Σ n (ln²(n+1) − ln² n)`
    pub c: f64,
    pub n: TruncationIndex,
}

pub fn abc_sums(n: TruncationIndex) -> AbcSums {
    let mut a = Neumaier::new();
    let mut b = Neumaier::new();
    let mut c = Neumaier::new();
    let mut ln_cur = 0.0;
    for k in 1..=n.get() {
        let kf = k as f64;
        let ln_next = (kf + 1.0).ln();
        let step = (1.0 / kf).ln_1p(); // ln(k+1) − ln k
        a.add(kf * step);
        b.add(-(kf * step) / (kf + 1.0) - ln_cur / (kf * (kf + 1.0)));
        c.add(0.5 * kf * step * (ln_next + ln_cur));
        ln_cur = ln_next;
    }
    AbcSums {
        a: a.value(),
        b: b.value(),
        c: c.value(),
        n,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueMethod {
    ClosedForm,
    LaurentFit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidueReport {
    pub value: f64,
    pub method: ResidueMethod,
    pub est_error: f64,
}

/// Closed form of Res_{s=0} χ(N; s):
///
/// ```text
/// (1 + γ + Ψ(N+2) − 2/(N+1) + b(N) − N(ln Γ(N+1) − c(N)) / ((N − a(N))(N+1))) / (a(N) − N)
/// ```
pub fn residue_chi_at_0_closed(n: TruncationIndex) -> Result<f64> {
    let AbcSums { a, b, c, .. } = abc_sums(n);
    let nf = n.get() as f64;
    let gap = nf - a;
    let mut numer = Neumaier::new();
    numer.add(1.0);
    numer.add(EULER_GAMMA);
    numer.add(digamma(nf + 2.0)?);
    numer.add(-2.0 / (nf + 1.0));
    numer.add(b);
    numer.add(-nf * (log_gamma(nf + 1.0)? - c) / (gap * (nf + 1.0)));
    Ok(numer.value() / (a - nf))
}

/// `d/ds [s²χ(N; s)]` at 0 from the five-point stencil ±h, ±2h, h = 1e−3.
pub fn laurent_residue(n: TruncationIndex) -> f64 {
    double_pole_residue(|s| chi_real(n, s), 0.0, LAURENT_STEP)
}

/// `1/(s−c)` coefficient of a function with a pole of order at most two at
/// `c`, as the derivative of `(s−c)² f(s)` on a five-point stencil.
pub fn double_pole_residue<F: Fn(f64) -> f64>(f: F, centre: f64, h: f64) -> f64 {
    central5(&|u: f64| u * u * f(centre + u), 0.0, h)
}

/// Laurent-fit residue with a stencil error estimate (`h` versus `2h`).
pub fn laurent_residue_report(n: TruncationIndex) -> ResidueReport {
    let g = |u: f64| u * u * chi_real(n, u);
    let fine = central5(&g, 0.0, LAURENT_STEP);
    let coarse = central5(&g, 0.0, 2.0 * LAURENT_STEP);
    ResidueReport {
        value: fine,
        method: ResidueMethod::LaurentFit,
        est_error: (fine - coarse).abs() / 15.0,
    }
}

/// Res_{s=0} χ(N; s) by the closed form, with `est_error` covering its
/// disagreement with the Laurent fit.
pub fn residue_chi_at_0(n: TruncationIndex) -> Result<ResidueReport> {
    let closed = residue_chi_at_0_closed(n)?;
    let fit = laurent_residue_report(n);
    Ok(ResidueReport {
        value: closed,
        method: ResidueMethod::ClosedForm,
        est_error: (closed - fit.value).abs().max(fit.est_error),
    })
}

/// Res_{s=2} χ(N; s)⁻¹ in closed form:
///
/// ```text
/// (2N/(N+1)² − 2Ψ(1, N+1) + 2ζ(2)) / ((N+1)²/2 − N/2 − 1/2 − Σ n(ln(n+1) + n ln(n+1) − ln n − n ln n))
/// ```
pub fn residue_inv_chi_at_2(n: TruncationIndex) -> Result<f64> {
    let nf = n.get() as f64;
    let mut numer = Neumaier::new();
    numer.add(2.0 * nf / ((nf + 1.0) * (nf + 1.0)));
    numer.add(-2.0 * trigamma_tail(n.get())?);
    numer.add(2.0 * ZETA_2);

    // (N+1)²/2 − N/2 − 1/2 = N(N+1)/2; the sum term is n(n+1)·ln(1 + 1/n)
    let mut denom = Neumaier::new();
    denom.add(0.5 * nf * (nf + 1.0));
    for k in 1..=n.get() {
        let kf = k as f64;
        denom.add(-kf * (kf + 1.0) * (1.0 / kf).ln_1p());
    }
    Ok(numer.value() / denom.value())
}

/// Laurent-fit oracle for [`residue_inv_chi_at_2`]: the removable value of
/// `(s−2)/χ(N; s)` at 2, Richardson-extrapolated from ±h, ±2h.
pub fn laurent_residue_inv_chi_at_2(n: TruncationIndex) -> f64 {
    let g = |u: f64| u / chi_real(n, 2.0 + u);
    let h = LAURENT_STEP;
    let even1 = 0.5 * (g(h) + g(-h));
    let even2 = 0.5 * (g(2.0 * h) + g(-2.0 * h));
    (4.0 * even1 - even2) / 3.0
}

/// Numerical probes of the limits of χ(N; s) at s → 0, 1/2, 1, 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiLimitsReport {
    pub n: TruncationIndex,
    /// ε used by the pole and zero probes.
    pub eps: [f64; 3],
    /// `ε²·χ(N; ε)`, which settles to a finite nonzero constant.
    pub pole_scaled: [f64; 3],
    /// `ε³·χ′(N; ε)`, which settles to `−2` times the constant above.
    pub pole_derivative_scaled: [f64; 3],
    /// χ(N; 1/2)
    pub at_half: f64,
    /// `χ(N; 1−ε)/ε²`, bounded for the double zero at 1.
    pub zero_scaled: [f64; 3],
    /// χ(N; 2)
    pub at_two: f64,
}

/// Relative settling tolerance between the two smallest ε in the probes.
pub const LIMIT_SETTLE_TOL: f64 = 1e-2;

impl ChiLimitsReport {
    fn settled(v: &[f64; 3]) -> bool {
        let (x, y) = (v[1], v[2]);
        x.is_finite() && y.is_finite() && y != 0.0 && ((x - y) / y).abs() < LIMIT_SETTLE_TOL
    }

    pub fn pole_order_two(&self) -> bool {
        Self::settled(&self.pole_scaled)
    }

    pub fn derivative_diverges(&self) -> bool {
        Self::settled(&self.pole_derivative_scaled)
            && ((self.pole_derivative_scaled[2] + 2.0 * self.pole_scaled[2]) / self.pole_scaled[2])
                .abs()
                < LIMIT_SETTLE_TOL
    }

    pub fn double_zero_at_one(&self) -> bool {
        Self::settled(&self.zero_scaled)
    }

    pub fn passed(&self) -> bool {
        self.pole_order_two()
            && self.derivative_diverges()
            && self.at_half == 1.0
            && self.double_zero_at_one()
            && self.at_two == 0.0
    }
}

pub fn chi_limits_check(n: TruncationIndex) -> ChiLimitsReport {
    let eps = [1e-2, 1e-3, 1e-4];
    let pole_scaled = eps.map(|e| e * e * chi_real(n, e));
    let pole_derivative_scaled = eps.map(|e| {
        let f = |s: f64| chi_real(n, s);
        e * e * e * central5(&f, e, 1e-2 * e)
    });
    let zero_scaled = eps.map(|e| chi_real(n, 1.0 - e) / (e * e));
    ChiLimitsReport {
        n,
        eps,
        pole_scaled,
        pole_derivative_scaled,
        at_half: chi_real(n, 0.5),
        zero_scaled,
        at_two: chi_real(n, 2.0),
    }
}

/// Exact `Σ_{m=1}^{N} (1/n)((n−1)m^{n−1} + m^n − (m+1)^{n−1} m)`.
///
/// This equals ζ_w(N; 1−n), which is what the numerator of χ(N; n) needs.
/// No leading minus sign: that would give −ζ_w(N; 1−n).
pub fn chi_integer_numerator(n: TruncationIndex, k: u32) -> Result<crate::Rational> {
    if k < 2 {
        return Err(domain(format!("integer argument must be >= 2, got {k}")));
    }
    let mut total = BigInt::zero();
    for m in 1..=n.get() {
        let mb = BigInt::from(m);
        let term = BigInt::from(k - 1) * num_traits::pow(mb.clone(), (k - 1) as usize)
            + num_traits::pow(mb.clone(), k as usize)
            - num_traits::pow(mb.clone() + 1u32, (k - 1) as usize) * &mb;
        total += term;
    }
    Ok(BigRational::new(total, BigInt::from(k)))
}

/// χ(N; n) for integer `n ≥ 2` as the exact numerator over the polygamma
/// closed form of ζ_w(N; n).
pub fn chi_integer(n: TruncationIndex, k: u32) -> Result<f64> {
    let numer = chi_integer_numerator(n, k)?
        .to_f64()
        .ok_or_else(|| domain("numerator exceeds binary64 range"))?;
    Ok(numer / zeta_w_closed_integer(n, k)? + 0.0)
}

/// `(N+2)·N·(N+1 − a(N+1)) / ((N+1)²·(N − a(N)))`, the s → 1 limit of
/// χ(N+1; s)/χ(N; s).
pub fn successive_quotient_limit(n: TruncationIndex) -> Result<f64> {
    let next = n
        .next()
        .ok_or_else(|| domain("N + 1 exceeds the truncation guard"))?;
    let nf = n.get() as f64;
    let a_n = abc_sums(n).a;
    let a_next = abc_sums(next).a;
    Ok((nf + 2.0) * nf * (nf + 1.0 - a_next) / ((nf + 1.0) * (nf + 1.0) * (nf - a_n)))
}

/// Oracle for [`successive_quotient_limit`]: `q(ε) = χ(N+1; 1−ε)/χ(N; 1−ε)`
/// extrapolated to ε = 0 from ε, 2ε, 4ε (cancels the ε and ε² terms).
pub fn successive_quotient_extrapolated(n: TruncationIndex, eps: f64) -> Result<f64> {
    let next = n
        .next()
        .ok_or_else(|| domain("N + 1 exceeds the truncation guard"))?;
    let q = |e: f64| chi_real(next, 1.0 - e) / chi_real(n, 1.0 - e);
    Ok((8.0 * q(eps) - 6.0 * q(2.0 * eps) + q(4.0 * eps)) / 3.0)
}

/// Residue of ν(s) = ζ(1−s)/ζ(s) at s = −n.
///
/// Odd `n` give exactly 0. For even `n` the value is ζ(1+n)/ζ′(−n), with
/// ζ′(−n) from a Richardson-extrapolated five-point difference of the
/// reference zeta (step 1e−3).
pub fn nu_residue(n: u32) -> Result<f64> {
    if n == 0 || n > 12 {
        return Err(domain(format!("nu_residue covers 1..=12, got {n}")));
    }
    if n % 2 == 1 {
        return Ok(0.0);
    }
    let nf = n as f64;
    let zeta = |x: f64| zeta_real(x).unwrap_or(f64::NAN);
    let derivative = richardson_derivative(&zeta, -nf, NU_DIFF_STEP);
    Ok(zeta_real(1.0 + nf)? / derivative.value)
}
