//! Numerics for the truncated zeta approximation
//!
//! ```text
//! ζ_w(N; s) = 1/(s−1) · Σ_{n=1}^{N} [ n(n+1)^{−s} − n^{1−s} + s·n^{−s} ]
//! ```
//!
//! obtained by truncating the Mellin transform of the harmonic sawtooth map
//! `w(x) = ⌊1/x⌋(x⌊1/x⌋ + x − 1)`, together with its finite reflection
//! function `χ(N; s) = ζ_w(N; 1−s) / ζ_w(N; s)`.
//!
//! Modules:
//!
//! * [`special`] – log-gamma, digamma/polygamma, Li, E₁, Bernoulli numbers
//!   and a reference ζ(s) used purely as an oracle.
//! * [`zeta_w`] – the sawtooth map, the truncated sum, its integer-argument
//!   closed form and a Mellin-integral quadrature cross-check.
//! * [`reflection`] – χ(N; s), its residues at s = 0 and s = 2, limits,
//!   integer forms and the ν(s) = ζ(1−s)/ζ(s) residues.
//! * [`exact_poly`] – exact rational Faulhaber sums and the polynomials
//!   ζ_w(N; 1−n), n = 2…12.
//! * [`integrals`] – closed-form integrals over s ∈ [−1, 0] and across the
//!   critical strip, each paired with adaptive quadrature.
//! * [`scan`] and [`cli`] – CSV datasets for plotting and the `zetaw`
//!   command-line front end.
//!
//! ```
//! use num_complex::Complex64;
//! use zetaw::{reflection::chi, zeta_w::zeta_w, TruncationIndex};
//!
//! let n = TruncationIndex::new(1)?;
//! assert_eq!(zeta_w(n, Complex64::new(2.0, 0.0)).value, Complex64::new(1.25, 0.0));
//! assert!(zeta_w(n, Complex64::new(1.0, 0.0)).pole);
//!
//! let s = Complex64::new(0.5, 3.0);
//! assert!((chi(n, s).value.norm() - 1.0).abs() < 1e-14);
//! # Ok::<(), zetaw::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod diff;
pub mod error;
pub mod exact_poly;
pub mod integrals;
pub mod quad;
pub mod reflection;
pub mod scan;
pub mod special;
pub mod sum;
pub mod verify;
pub mod zeta_w;

pub use error::{Error, Result};
pub use zeta_w::{EvalResult, TruncationIndex};

/// Complex scalar used for every s-plane evaluation.
pub type ComplexValue = num_complex::Complex64;

/// Exact rational with arbitrary-precision numerator and denominator,
/// always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
