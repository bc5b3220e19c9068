//! Grid scans over (N, s) and their CSV serialisation.
//!
//! Scans are partitioned by N across a rayon pool; the per-N rows are
//! gathered back in N-major, s-ascending order, so output is identical for
//! every thread count.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::reflection::{chi, residue_chi_at_0_closed};
use crate::zeta_w::{zeta_w, TruncationIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    /// ζ_w(N; s) along a real s-range.
    ZetaFamily,
    /// χ(N; s) along a real s-range.
    ChiFamily,
    /// Res_{s=0} χ(N; s) per N.
    Residue0,
    /// 1 / Res_{s=0} χ(N; s) per N.
    Residue0Inv,
}

impl ScanKind {
    pub fn name(self) -> &'static str {
        match self {
            ScanKind::ZetaFamily => "zeta_family",
            ScanKind::ChiFamily => "chi_family",
            ScanKind::Residue0 => "residue0",
            ScanKind::Residue0Inv => "residue0_inv",
        }
    }

    pub fn has_s(self) -> bool {
        matches!(self, ScanKind::ZetaFamily | ScanKind::ChiFamily)
    }

    pub fn header(self) -> &'static str {
        if self.has_s() {
            "N,s_re,s_im,value_re,value_im"
        } else {
            "N,value_re,value_im"
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta_family" => Ok(ScanKind::ZetaFamily),
            "chi_family" => Ok(ScanKind::ChiFamily),
            "residue0" => Ok(ScanKind::Residue0),
            "residue0_inv" => Ok(ScanKind::Residue0Inv),
            other => Err(domain(format!("unknown scan kind {other:?}"))),
        }
    }
}

/// One CSV row. Residue kinds leave `s_re`/`s_im` at zero and omit them
/// from the output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRecord {
    pub n: u64,
    pub s_re: f64,
    pub s_im: f64,
    pub value_re: f64,
    pub value_im: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanSpec {
    pub kind: ScanKind,
    pub n_min: u64,
    pub n_max: u64,
    pub s_min: f64,
    pub s_max: f64,
    pub s_step: f64,
    pub s_im: f64,
}

impl ScanSpec {
    /// Default ranges for each kind.
    pub fn defaults(kind: ScanKind) -> Self {
        let step = 1.0 / 256.0;
        match kind {
            ScanKind::ZetaFamily => Self {
                kind,
                n_min: 1,
                n_max: 25,
                s_min: -1.0,
                s_max: 0.0,
                s_step: step,
                s_im: 0.0,
            },
            ScanKind::ChiFamily => Self {
                kind,
                n_min: 1,
                n_max: 25,
                s_min: 1.0,
                s_max: 2.0,
                s_step: step,
                s_im: 0.0,
            },
            ScanKind::Residue0 | ScanKind::Residue0Inv => Self {
                kind,
                n_min: 1,
                n_max: 250,
                s_min: 0.0,
                s_max: 0.0,
                s_step: step,
                s_im: 0.0,
            },
        }
    }

    /// The s grid `s_min + i·s_step`, `i = 0..=round((s_max − s_min)/s_step)`.
    pub fn s_grid(&self) -> Result<Vec<f64>> {
        if !(self.s_step > 0.0) || !self.s_min.is_finite() || !self.s_max.is_finite() {
            return Err(domain("s range needs finite bounds and a positive step"));
        }
        if self.s_max < self.s_min {
            return Err(domain("s_max must not be below s_min"));
        }
        let steps = ((self.s_max - self.s_min) / self.s_step).round();
        if steps > 1e7 {
            return Err(domain("s grid has more than 10^7 points"));
        }
        Ok((0..=steps as u64)
            .map(|i| self.s_min + i as f64 * self.s_step)
            .collect())
    }

    fn validate(&self) -> Result<()> {
        TruncationIndex::new(self.n_min)?;
        TruncationIndex::new(self.n_max)?;
        if self.n_max < self.n_min {
            return Err(domain("n_max must not be below n_min"));
        }
        Ok(())
    }
}

fn scan_one(spec: &ScanSpec, n: TruncationIndex, grid: &[f64]) -> Result<Vec<ScanRecord>> {
    let row = |value: Complex64, s: Complex64| ScanRecord {
        n: n.get(),
        s_re: s.re,
        s_im: s.im,
        value_re: value.re,
        value_im: value.im,
    };
    match spec.kind {
        ScanKind::ZetaFamily | ScanKind::ChiFamily => Ok(grid
            .iter()
            .filter_map(|&x| {
                let s = Complex64::new(x, spec.s_im);
                let r = if spec.kind == ScanKind::ZetaFamily {
                    zeta_w(n, s)
                } else {
                    chi(n, s)
                };
                // poles have no finite row
                (!r.pole && r.value.re.is_finite() && r.value.im.is_finite())
                    .then(|| row(r.value, s))
            })
            .collect()),
        ScanKind::Residue0 | ScanKind::Residue0Inv => {
            let mut v = residue_chi_at_0_closed(n)?;
            if spec.kind == ScanKind::Residue0Inv {
                v = 1.0 / v;
            }
            Ok(vec![row(Complex64::new(v, 0.0), Complex64::new(0.0, 0.0))])
        }
    }
}

/// Run a scan on `threads` workers (0 = rayon default).
pub fn run_scan(spec: &ScanSpec, threads: usize) -> Result<Vec<ScanRecord>> {
    spec.validate()?;
    let grid = if spec.kind.has_s() {
        spec.s_grid()?
    } else {
        Vec::new()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| domain(format!("thread pool: {e}")))?;
    let per_n: Vec<Result<Vec<ScanRecord>>> = pool.install(|| {
        (spec.n_min..=spec.n_max)
            .into_par_iter()
            .map(|n| scan_one(spec, TruncationIndex::new(n)?, &grid))
            .collect()
    });
    let mut out = Vec::new();
    for rows in per_n {
        out.extend(rows?);
    }
    Ok(out)
}

/// Shortest text that round-trips the binary64 value (at most 17
/// significant digits); exponent form outside [1e−5, 1e16). `-0` is
/// written as `0`.
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn write_csv<W: Write>(
    kind: ScanKind,
    records: &[ScanRecord],
    mut w: W,
) -> std::io::Result<()> {
    writeln!(w, "{}", kind.header())?;
    for r in records {
        if kind.has_s() {
            writeln!(
                w,
                "{},{},{},{},{}",
                r.n,
                fmt_f64(r.s_re),
                fmt_f64(r.s_im),
                fmt_f64(r.value_re),
                fmt_f64(r.value_im)
            )?;
        } else {
            writeln!(w, "{},{},{}", r.n, fmt_f64(r.value_re), fmt_f64(r.value_im))?;
        }
    }
    w.flush()
}
