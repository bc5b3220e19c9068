//! The `zetaw` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 pole, 3 failed
//! verification suite.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::Error;
use crate::exact_poly::{zeta_w_neg_poly, GOLDEN_TABLE, TABLE_MAX_N, TABLE_MIN_N};
use crate::reflection::chi;
use crate::scan::{fmt_f64, run_scan, write_csv, ScanKind, ScanSpec};
use crate::verify::{run_suites, Level};
use crate::zeta_w::{zeta_w, TruncationIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_POLE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

pub const THREADS_ENV: &str = "ZWS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "zetaw",
    version,
    about = "Truncated zeta approximation and its reflection function"
)]
struct Cli {
    /// Worker threads for scans (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Function {
    #[value(name = "zeta_w")]
    ZetaW,
    Chi,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "zeta_family")]
    ZetaFamily,
    #[value(name = "chi_family")]
    ChiFamily,
    #[value(name = "residue0")]
    Residue0,
    #[value(name = "residue0_inv")]
    Residue0Inv,
}

impl From<KindArg> for ScanKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::ZetaFamily => ScanKind::ZetaFamily,
            KindArg::ChiFamily => ScanKind::ChiFamily,
            KindArg::Residue0 => ScanKind::Residue0,
            KindArg::Residue0Inv => ScanKind::Residue0Inv,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate zeta_w(N; s) or chi(N; s) at one point.
    Eval {
        #[arg(long = "fn", value_enum)]
        function: Function,
        #[arg(long = "N", value_parser = parse_index)]
        n: TruncationIndex,
        /// `re` or `re,im`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
    },
    /// Write a CSV grid of values.
    Scan {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n_min: Option<u64>,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        s_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s_max: Option<f64>,
        #[arg(long)]
        s_step: Option<f64>,
        /// Imaginary part shared by every grid point.
        #[arg(long, allow_hyphen_values = true)]
        s_im: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the exact polynomials zeta_w(N; 1-n), n = 2..=n_max.
    Table {
        #[arg(long, default_value_t = TABLE_MAX_N)]
        n_max: u32,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
        /// Golden table to check against instead of the built-in one.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

fn parse_index(s: &str) -> Result<TruncationIndex, String> {
    let n: u64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    TruncationIndex::new(n).map_err(|e| e.to_string())
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |p: &str| -> Result<f64, String> {
        let v: f64 = p
            .trim()
            .parse()
            .map_err(|_| format!("not a real number: {p:?}"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("not finite: {p:?}"))
        }
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err("expected one or two comma-separated reals".into()),
    }
}

fn thread_count(flag: Option<usize>) -> Result<usize, String> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        return match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            )),
        };
    }
    match flag {
        Some(0) => Err("--threads must be positive".into()),
        Some(n) => Ok(n),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn fmt_s(s: Complex64) -> String {
    if s.im == 0.0 {
        fmt_f64(s.re)
    } else {
        format!("{}{:+}i", fmt_f64(s.re), s.im)
    }
}

/// Parse `args` (program name first) and run, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Eval { function, n, s } => {
            let r = match function {
                Function::ZetaW => zeta_w(n, s),
                Function::Chi => chi(n, s),
            };
            if r.pole {
                let _ = writeln!(err, "{}", Error::Pole(fmt_s(s)));
                return EXIT_POLE;
            }
            let _ = writeln!(out, "{} {}", fmt_f64(r.value.re), fmt_f64(r.value.im));
            EXIT_OK
        }
        Command::Scan {
            kind,
            n_min,
            n_max,
            s_min,
            s_max,
            s_step,
            s_im,
            out: path,
        } => {
            let threads = match thread_count(cli.threads) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let mut spec = ScanSpec::defaults(kind.into());
            spec.n_min = n_min.unwrap_or(spec.n_min);
            spec.n_max = n_max.unwrap_or(spec.n_max);
            spec.s_min = s_min.unwrap_or(spec.s_min);
            spec.s_max = s_max.unwrap_or(spec.s_max);
            spec.s_step = s_step.unwrap_or(spec.s_step);
            spec.s_im = s_im.unwrap_or(spec.s_im);
            let records = match run_scan(&spec, threads) {
                Ok(r) => r,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let written = File::create(&path).and_then(|f| {
                let mut w = BufWriter::new(f);
                write_csv(spec.kind, &records, &mut w)?;
                w.flush()
            });
            match written {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    EXIT_USAGE
                }
            }
        }
        Command::Table { n_max } => {
            if !(TABLE_MIN_N..=TABLE_MAX_N).contains(&n_max) {
                let _ = writeln!(
                    err,
                    "error: --n-max must be in {TABLE_MIN_N}..={TABLE_MAX_N}"
                );
                return EXIT_USAGE;
            }
            for n in TABLE_MIN_N..=n_max {
                match zeta_w_neg_poly(n) {
                    Ok(p) => {
                        let _ = writeln!(out, "{p}");
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return EXIT_USAGE;
                    }
                }
            }
            EXIT_OK
        }
        Command::Verify { level, golden } => {
            let text = match golden {
                Some(p) => match std::fs::read_to_string(&p) {
                    Ok(t) => t,
                    Err(e) => {
                        let _ = writeln!(err, "error: cannot read {}: {e}", p.display());
                        return EXIT_USAGE;
                    }
                },
                None => GOLDEN_TABLE.to_string(),
            };
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let mut all = true;
            for o in run_suites(level, &text) {
                all &= o.passed;
                let verdict = if o.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{}: {verdict} ({})", o.name, o.detail);
            }
            if all {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let argv = std::iter::once("zetaw").chain(args.iter().copied());
        let code = run_with(argv, &mut o, &mut e);
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn complex_flag() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(
            parse_complex("-0.5, 14").unwrap(),
            Complex64::new(-0.5, 14.0)
        );
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("nan").is_err());
    }

    #[test]
    fn eval_points() {
        assert_eq!(
            call(&["eval", "--fn", "zeta_w", "--N", "1", "--s", "2"]).1,
            "1.25 0\n"
        );
        assert_eq!(
            call(&["eval", "--fn", "chi", "--N", "9", "--s", "0.5"]).1,
            "1 0\n"
        );
        let (code, _, e) = call(&["eval", "--fn", "zeta_w", "--N", "5", "--s", "1"]);
        assert_eq!(code, EXIT_POLE);
        assert!(e.contains("pole at s=1"));
        assert_eq!(
            call(&["eval", "--fn", "zeta_w", "--N", "1", "--s", "-1"]).1,
            "0 0\n"
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            call(&["eval", "--fn", "zeta", "--N", "1", "--s", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["eval", "--fn", "chi", "--N", "0", "--s", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["table", "--n-max", "13"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn table_rows() {
        let (code, out, _) = call(&["table", "--n-max", "4"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "0\n0 -1/6 -1/6\n0 -1/4 -1/2 -1/4\n");
    }
}
