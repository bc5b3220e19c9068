//! Self-check suites behind `zetaw verify`.
//!
//! Each suite re-derives a property by an independent route (quadrature,
//! Laurent fits, exact arithmetic) and reports pass/fail with the worst
//! observed deviation.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::exact_poly::{
    chi_numerator_identity_negated, parse_golden_table, table_mismatches, TABLE_MAX_N, TABLE_MIN_N,
};
use crate::integrals::{integral_strip, integral_unit, strip_ei_term_decay};
use crate::quad::{integrate, integrate_real, QuadConfig};
use crate::reflection::{
    chi, chi_limits_check, laurent_residue, nu_residue, residue_chi_at_0_closed,
    residue_inv_chi_at_2,
};
use crate::special::{
    bernoulli_numbers, digamma, exp_integral_e1, log_integral, polygamma_int, zeta_real,
    EULER_GAMMA,
};
use crate::zeta_w::{mellin_integrand_quadrature, zeta_w, zeta_w_real, TruncationIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type SuiteResult = std::result::Result<String, String>;
type Suite<'a> = (&'static str, Box<dyn Fn() -> SuiteResult + 'a>);

fn idx(n: u64) -> TruncationIndex {
    TruncationIndex::new(n).expect("suite indices are in range")
}

fn check(ok: bool, detail: String) -> SuiteResult {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Li(x) from quadrature of its defining integral.
pub fn log_integral_quadrature(x: f64) -> f64 {
    let l = x.ln();
    let cfg = QuadConfig {
        abs_tol: 1e-12,
        max_intervals: 500,
    };
    let (v, _) = integrate_real(|y| y.exp_m1() / y, 0.0, l, &cfg).expect("smooth integrand");
    v + l.ln() + EULER_GAMMA
}

/// E₁(t) from nested quadrature of `t ∫₀¹∫₀¹ e^{−txy} dy dx − γ − ln t`.
pub fn e1_double_integral(t: Complex64) -> Complex64 {
    let cfg = QuadConfig {
        abs_tol: 1e-13,
        max_intervals: 500,
    };
    let outer = integrate(
        |x| {
            integrate(|y| (-t * x * y).exp(), 0.0, 1.0, &cfg)
                .map(|r| r.value)
                .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
        },
        0.0,
        1.0,
        &cfg,
    )
    .map(|r| r.value)
    .unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    t * outer - EULER_GAMMA - t.ln()
}

fn special_functions() -> SuiteResult {
    let mut worst: f64 = 0.0;
    let mut x = 0.5;
    while x <= 100.0 {
        worst = worst.max(
            (digamma(x + 1.0).map_err(|e| e.to_string())?
                - digamma(x).map_err(|e| e.to_string())?
                - 1.0 / x)
                .abs(),
        );
        x += 0.5;
    }
    let mut li_worst: f64 = 0.0;
    for xv in [2.0, 4.0, 10.0, 101.0, 200.0] {
        let series = log_integral(xv).map_err(|e| e.to_string())?;
        li_worst = li_worst.max((series - log_integral_quadrature(xv)).abs() / series.abs());
    }
    let mut e1_worst: f64 = 0.0;
    for t in [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.5, 2.0),
        Complex64::new(3.0, -1.0),
        Complex64::new(5.0, 4.0),
    ] {
        let v = exp_integral_e1(t).map_err(|e| e.to_string())?;
        e1_worst = e1_worst.max((v - e1_double_integral(t)).norm() / v.norm());
    }
    let p = polygamma_int(1, 1.0).map_err(|e| e.to_string())?;
    let z2 = zeta_real(2.0).map_err(|e| e.to_string())?;
    let z4 = zeta_real(4.0).map_err(|e| e.to_string())?;
    let b = bernoulli_numbers(12).map_err(|e| e.to_string())?;
    let b_ok = b[12] == num_rational::BigRational::new((-691).into(), 2730.into());
    let zeta_worst = (z2 - PI * PI / 6.0)
        .abs()
        .max((z4 - PI.powi(4) / 90.0).abs());
    check(
        worst <= 1e-12
            && li_worst <= 1e-10
            && e1_worst <= 1e-8
            && (p - PI * PI / 6.0).abs() < 1e-13
            && zeta_worst <= 1e-12
            && b_ok,
        format!("digamma {worst:.1e}, Li {li_worst:.1e}, E1 {e1_worst:.1e}, zeta {zeta_worst:.1e}"),
    )
}

fn zeta_w_zeros() -> SuiteResult {
    let mut worst: f64 = 0.0;
    for n in [1u64, 10, 100, 1000] {
        for s in [0.0, -1.0] {
            let v = zeta_w(idx(n), Complex64::new(s, 0.0)).value.norm();
            worst = worst.max(v / (1e-13 * n as f64));
        }
    }
    check(worst <= 1.0, format!("max |value|/(1e-13 N) = {worst:.1e}"))
}

fn mellin_consistency() -> SuiteResult {
    let mut worst: f64 = 0.0;
    for (n, s) in [
        (5u64, Complex64::new(2.0, 0.0)),
        (3, Complex64::new(0.5, 0.0)),
        (4, Complex64::new(2.0, 3.0)),
        (10, Complex64::new(1.5, 0.0)),
        (7, Complex64::new(0.25, -6.0)),
    ] {
        let q = mellin_integrand_quadrature(idx(n), s).map_err(|e| e.to_string())?;
        worst = worst.max((q - zeta_w(idx(n), s).value).norm());
    }
    check(worst <= 1e-7, format!("max deviation {worst:.1e}"))
}

fn grid(points: usize, seed: u64) -> Vec<Complex64> {
    // deterministic low-discrepancy points in [−1.5, 2.5] × [−12, 12]
    let g1 = 0.754_877_666_246_692_8;
    let g2 = 0.569_840_290_998_053_3;
    (0..points)
        .map(|i| {
            let k = (i as u64 + seed) as f64;
            let u = (0.5 + g1 * k).fract();
            let v = (0.5 + g2 * k).fract();
            Complex64::new(-1.5 + 4.0 * u, -12.0 + 24.0 * v)
        })
        .filter(|s| (s - 0.5).norm() > 0.05 && s.norm() > 0.05 && (s - 1.0).norm() > 0.05)
        .collect()
}

/// 100 grid points avoiding small neighbourhoods of 0, 1/2 and 1.
pub fn functional_identity_grid() -> Vec<Complex64> {
    let mut pts = grid(140, 1);
    pts.truncate(100);
    pts
}

pub fn functional_identity_worst(n: u64) -> f64 {
    functional_identity_grid()
        .into_iter()
        .map(|s| (chi(idx(n), 1.0 - s).value * chi(idx(n), s).value - 1.0).norm())
        .fold(0.0, f64::max)
}

fn functional_identity() -> SuiteResult {
    let worst = [1u64, 5, 25]
        .into_iter()
        .map(functional_identity_worst)
        .fold(0.0, f64::max);
    check(
        worst <= 1e-11,
        format!("max |chi(1-s)chi(s) - 1| = {worst:.1e}"),
    )
}

pub fn critical_line_worst(n: u64) -> f64 {
    (0..=40)
        .map(|i| {
            let t = -20.0 + i as f64;
            (chi(idx(n), Complex64::new(0.5, t)).value.norm() - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

fn critical_line() -> SuiteResult {
    let worst = [1u64, 10, 100]
        .into_iter()
        .map(critical_line_worst)
        .fold(0.0, f64::max);
    check(worst <= 1e-11, format!("max ||chi| - 1| = {worst:.1e}"))
}

fn conjugate_symmetry() -> SuiteResult {
    let mut worst: f64 = 0.0;
    for s in grid(50, 7) {
        for n in [3u64, 40] {
            let z = zeta_w(idx(n), s);
            let zc = zeta_w(idx(n), s.conj());
            worst = worst.max((zc.value - z.value.conj()).norm() / z.value.norm().max(1.0));
            let c = chi(idx(n), s);
            let cc = chi(idx(n), s.conj());
            if !c.pole {
                worst = worst.max((cc.value - c.value.conj()).norm() / c.value.norm().max(1.0));
            }
        }
    }
    check(
        worst <= 1e-12,
        format!("max relative asymmetry {worst:.1e}"),
    )
}

fn chi_limits() -> SuiteResult {
    for n in [1u64, 7, 12] {
        let r = chi_limits_check(idx(n));
        if !r.passed() {
            return Err(format!("N={n}: {r:?}"));
        }
    }
    Ok("pole order 2 at 0, chi(1/2)=1, double zero at 1, chi(2)=0".into())
}

fn golden_table(text: &str) -> SuiteResult {
    let rows = parse_golden_table(text).map_err(|e| e.to_string())?;
    let bad = table_mismatches(&rows);
    check(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} rows exact", TABLE_MAX_N - TABLE_MIN_N + 1)
        } else {
            format!("mismatched rows n = {bad:?}")
        },
    )
}

fn binomial_identity() -> SuiteResult {
    for n in 2..=12 {
        for m in 1..=50 {
            if !chi_numerator_identity_negated(n, m).map_err(|e| e.to_string())? {
                return Err(format!("fails at n={n}, m={m}"));
            }
        }
    }
    Ok("n = 2..12, m = 1..50 exact".into())
}

fn residue_dual_method(max_n: u64) -> SuiteResult {
    let mut worst: f64 = 0.0;
    for n in 1..=max_n {
        let closed = residue_chi_at_0_closed(idx(n)).map_err(|e| e.to_string())?;
        worst = worst.max((closed - laurent_residue(idx(n))).abs());
    }
    check(
        worst <= 1e-6,
        format!("max |closed - Laurent| = {worst:.1e}"),
    )
}

fn integrals(ns: &[u64], strip: &[(u64, f64)]) -> SuiteResult {
    let mut worst: f64 = 0.0;
    for &n in ns {
        worst = worst.max(integral_unit(idx(n)).map_err(|e| e.to_string())?.abs_diff);
    }
    let mut worst_strip: f64 = 0.0;
    for &(n, t) in strip {
        worst_strip = worst_strip.max(
            integral_strip(idx(n), t)
                .map_err(|e| e.to_string())?
                .abs_diff,
        );
    }
    check(
        worst <= 1e-8 && worst_strip <= 1e-7,
        format!("unit {worst:.1e}, strip {worst_strip:.1e}"),
    )
}

fn nu_residues() -> SuiteResult {
    let two = nu_residue(2).map_err(|e| e.to_string())?;
    let four = nu_residue(4).map_err(|e| e.to_string())?;
    let r2 = (two / (-4.0 * PI * PI) - 1.0).abs();
    let r4 = (four / (4.0 * PI.powi(4) / 3.0) - 1.0).abs();
    let odd_zero = (1..=11)
        .step_by(2)
        .all(|n| matches!(nu_residue(n), Ok(v) if v == 0.0));
    check(
        r2 <= 1e-5 && r4 <= 1e-5 && odd_zero,
        format!("rel err n=2 {r2:.1e}, n=4 {r4:.1e}"),
    )
}

fn sign_change() -> SuiteResult {
    let c176 = residue_chi_at_0_closed(idx(176)).map_err(|e| e.to_string())?;
    let c177 = residue_chi_at_0_closed(idx(177)).map_err(|e| e.to_string())?;
    let l176 = laurent_residue(idx(176));
    let l177 = laurent_residue(idx(177));
    check(
        c176 < 0.0 && c177 > 0.0 && l176 < 0.0 && l177 > 0.0,
        format!("closed {c176:.3e} -> {c177:.3e}, Laurent {l176:.3e} -> {l177:.3e}"),
    )
}

/// Value at N → ∞ of `R(N) = L + A/ln N + B/ln² N` through N = 10³, 10⁴, 10⁵.
pub fn residue_limit_extrapolated() -> std::result::Result<f64, String> {
    let ns = [1_000u64, 10_000, 100_000];
    let xs: Vec<f64> = ns.iter().map(|&n| 1.0 / (n as f64).ln()).collect();
    let mut ys = Vec::new();
    for &n in &ns {
        ys.push(residue_chi_at_0_closed(idx(n)).map_err(|e| e.to_string())?);
    }
    let mut limit = 0.0;
    for i in 0..3 {
        let mut w = 1.0;
        for j in 0..3 {
            if i != j {
                w *= xs[j] / (xs[j] - xs[i]);
            }
        }
        limit += w * ys[i];
    }
    Ok(limit)
}

fn residue_limits() -> SuiteResult {
    let limit = residue_limit_extrapolated()?;
    let r2 = residue_inv_chi_at_2(idx(100)).map_err(|e| e.to_string())?;
    let r4 = residue_inv_chi_at_2(idx(10_000)).map_err(|e| e.to_string())?;
    check(
        (limit - 1.0).abs() < 0.05 && r4.abs() * 10.0 <= r2.abs(),
        format!("Res0 limit (1/ln N extrapolation) {limit:.4}; Res2 {r2:.3e} -> {r4:.3e}"),
    )
}

fn convergence() -> SuiteResult {
    let mut detail = Vec::new();
    let mut ok = true;
    for s in [2.0, 3.0, 4.0] {
        let z = zeta_real(s).map_err(|e| e.to_string())?;
        let e2 = (zeta_w_real(idx(100), s).map_err(|e| e.to_string())? - z).abs();
        let e4 = (zeta_w_real(idx(10_000), s).map_err(|e| e.to_string())? - z).abs();
        ok &= e4 * 10.0 <= e2;
        if s == 2.0 {
            ok &= e4 <= 2e-4;
        }
        detail.push(format!("s={s}: {e2:.1e}->{e4:.1e}"));
    }
    check(ok, detail.join(", "))
}

fn ei_decay() -> SuiteResult {
    let m = strip_ei_term_decay(idx(2), &[10.0, 100.0, 1000.0]).map_err(|e| e.to_string())?;
    check(
        m[0] >= 5.0 * m[1] && m[1] >= 5.0 * m[2],
        format!("{:.2e}, {:.2e}, {:.2e}", m[0], m[1], m[2]),
    )
}

/// Run every suite for `level`, checking the table against `golden`.
pub fn run_suites(level: Level, golden: &str) -> Vec<SuiteOutcome> {
    let mut suites: Vec<Suite<'_>> = vec![
        ("special functions", Box::new(special_functions)),
        ("zeta_w zeros at s=0,-1", Box::new(zeta_w_zeros)),
        (
            "Mellin integral vs finite sum",
            Box::new(mellin_consistency),
        ),
        ("conjugate symmetry", Box::new(conjugate_symmetry)),
        (
            "functional identity chi(1-s)chi(s)=1",
            Box::new(functional_identity),
        ),
        ("critical-line modulus", Box::new(critical_line)),
        ("chi limits", Box::new(chi_limits)),
        ("golden table", Box::new(move || golden_table(golden))),
        (
            "binomial numerator identity (sign-corrected)",
            Box::new(binomial_identity),
        ),
        ("nu residues", Box::new(nu_residues)),
    ];
    match level {
        Level::Fast => {
            suites.push((
                "residue at 0: closed form vs Laurent fit",
                Box::new(|| residue_dual_method(10)),
            ));
            suites.push((
                "integral closed forms",
                Box::new(|| integrals(&[1, 5], &[(1, 1.0)])),
            ));
        }
        Level::Full => {
            suites.push((
                "residue at 0: closed form vs Laurent fit",
                Box::new(|| residue_dual_method(60)),
            ));
            suites.push((
                "integral closed forms",
                Box::new(|| integrals(&[1, 2, 5, 25, 100], &[(1, 1.0), (4, 3.0), (10, 0.5)])),
            ));
            suites.push(("residue sign change at N=176→177", Box::new(sign_change)));
            suites.push(("residue limits", Box::new(residue_limits)));
            suites.push(("convergence to zeta", Box::new(convergence)));
            suites.push(("Ei-term decay", Box::new(ei_decay)));
        }
    }
    suites
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SuiteOutcome {
                name: name.to_string(),
                passed,
                detail,
            }
        })
        .collect()
}
