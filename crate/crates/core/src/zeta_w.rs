//! The truncated approximation ζ_w(N; s).

use std::fmt;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::quad::{integrate, QuadConfig};
use crate::special::{int_pow_neg, polygamma_int, zeta_real};
use crate::sum::ComplexNeumaier;

/// Truncation point N of the finite sum, `1 ≤ N ≤ 10⁷`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruncationIndex(u64);

impl TruncationIndex {
    pub const MAX: u64 = 10_000_000;

    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n > Self::MAX {
            return Err(domain(format!(
                "truncation index must lie in 1..={}, got {n}",
                Self::MAX
            )));
        }
        Ok(Self(n))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `N + 1`, or `None` past the resource guard.
    pub fn next(self) -> Option<Self> {
        Self::new(self.0 + 1).ok()
    }
}

impl TryFrom<u64> for TruncationIndex {
    type Error = Error;
    fn try_from(n: u64) -> Result<Self> {
        Self::new(n)
    }
}

impl fmt::Display for TruncationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A point evaluation that may land on a pole.
///
/// `value` is finite whenever `pole` is false; at a pole it holds
/// `(+∞, 0)` and callers are expected to branch on the flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub pole: bool,
}

impl EvalResult {
    pub fn finite(value: Complex64) -> Self {
        Self { value, pole: false }
    }

    pub fn pole() -> Self {
        Self {
            value: Complex64::new(f64::INFINITY, 0.0),
            pole: true,
        }
    }

    /// Convert to a `Result`, naming the point `at` in the pole error.
    pub fn into_result(self, at: impl fmt::Display) -> Result<Complex64> {
        if self.pole {
            Err(Error::Pole(at.to_string()))
        } else {
            Ok(self.value)
        }
    }
}

/// The harmonic sawtooth map `w(x) = ⌊1/x⌋(x⌊1/x⌋ + x − 1)` on (0, 1].
pub fn sawtooth_w(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(domain(format!("sawtooth_w requires 0 < x <= 1, got {x}")));
    }
    let k = (1.0 / x).floor();
    Ok(k * (x * k + x - 1.0))
}

/// `Σ_{n=1}^{N} [n(n+1)^{−s} − n^{1−s} + s·n^{−s}]`, i.e. `(s−1)·ζ_w(N; s)`.
///
/// Accumulated in ascending `n` with Neumaier compensation; `(n+1)^{−s}` is
/// carried over to the next step as `n^{−s}`. At s = 0 and s = −1 every term
/// is exactly zero in binary64.
pub fn truncated_sum(n: TruncationIndex, s: Complex64) -> Complex64 {
    let mut acc = ComplexNeumaier::new();
    let mut p_cur = Complex64::new(1.0, 0.0); // 1^{-s}
    for k in 1..=n.get() {
        let kf = k as f64;
        let next = kf + 1.0;
        let p_next = int_pow_neg(next, next.ln(), s);
        acc.add((p_next * kf - p_cur * kf) + s * p_cur);
        p_cur = p_next;
    }
    acc.value()
}

/// ζ_w(N; s); pole marker exactly at s = 1.
pub fn zeta_w(n: TruncationIndex, s: Complex64) -> EvalResult {
    if s.re == 1.0 && s.im == 0.0 {
        return EvalResult::pole();
    }
    EvalResult::finite(truncated_sum(n, s) / (s - 1.0))
}

/// Real-argument convenience wrapper around [`zeta_w`].
pub fn zeta_w_real(n: TruncationIndex, s: f64) -> Result<f64> {
    zeta_w(n, Complex64::new(s, 0.0))
        .into_result(s)
        .map(|z| z.re)
}

/// Integer-argument closed form
/// `N/((k−1)(N+1)^k) − cos(πk) Ψ(k−1, N+1)/Γ(k) + ζ(k)`, `k ≥ 2`.
pub fn zeta_w_closed_integer(n: TruncationIndex, k: u32) -> Result<f64> {
    if k < 2 {
        return Err(domain(format!(
            "integer closed form requires n >= 2, got {k}"
        )));
    }
    let nf = n.get() as f64;
    let kf = k as f64;
    let cos_pi_k = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let gamma_k: f64 = (1..k).map(|j| j as f64).product();
    let poly = polygamma_int(k - 1, nf + 1.0)?;
    let head = nf / ((kf - 1.0) * (nf + 1.0).powi(k as i32));
    Ok(head - cos_pi_k * poly / gamma_k + zeta_real(kf)?)
}

/// `∫_{1/(n+1)}^{1/n} n(xn + x − 1) x^{s−1} dx` by adaptive quadrature.
pub fn mellin_branch(branch: u64, s: Complex64, cfg: &QuadConfig) -> Result<Complex64> {
    if branch == 0 {
        return Err(domain("branch index starts at 1"));
    }
    let nf = branch as f64;
    let lo = 1.0 / (nf + 1.0);
    let hi = 1.0 / nf;
    let sm1 = s - 1.0;
    let r = integrate(
        |x| (sm1 * x.ln()).exp() * (nf * (x * nf + x - 1.0)),
        lo,
        hi,
        cfg,
    )?;
    Ok(r.value)
}

/// `s(s+1)/(s−1) · Σ_{n=1}^{N} ∫_{1/(n+1)}^{1/n} n(xn+x−1)x^{s−1} dx`.
///
/// Independent of [`truncated_sum`]: each sawtooth branch of the Mellin
/// integral is integrated numerically. Requires `Re s > 0`, `s ≠ 1`.
pub fn mellin_integrand_quadrature(n: TruncationIndex, s: Complex64) -> Result<Complex64> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("1".into()));
    }
    if !(s.re > 0.0) {
        return Err(domain(format!(
            "Mellin quadrature requires Re s > 0, got {s}"
        )));
    }
    let cfg = QuadConfig {
        abs_tol: 1e-14,
        max_intervals: 200,
    };
    let mut acc = ComplexNeumaier::new();
    for branch in 1..=n.get() {
        acc.add(mellin_branch(branch, s, &cfg)?);
    }
    Ok(s * (s + 1.0) / (s - 1.0) * acc.value())
}
