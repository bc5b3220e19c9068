//! Identities of the finite reflection function χ(N; s): the functional
//! equation, unit modulus on Re s = 1/2, the behaviour near s = 0, 1/2, 1, 2,
//! integer arguments, and the successive-N quotient at s → 1.

use num_complex::Complex64;
use zetaw::reflection::{
    chi, chi_integer, chi_limits_check, successive_quotient_extrapolated, successive_quotient_limit,
};
use zetaw::TruncationIndex;

fn main() -> zetaw::Result<()> {
    let n = TruncationIndex::new(12)?;

    let s = Complex64::new(0.2, 7.5);
    let product = chi(n, 1.0 - s).value * chi(n, s).value;
    println!("chi(1-s) chi(s) at s = {s}: {product:.15}");

    for t in [0.0, 5.0, 25.0] {
        let m = chi(n, Complex64::new(0.5, t)).value.norm();
        println!("|chi(1/2 + {t}i)| = {m:.15}");
    }

    let limits = chi_limits_check(n);
    println!("s^2 chi(s) near 0:       {:?}", limits.pole_scaled);
    println!("chi(1-e)/e^2 near 1:     {:?}", limits.zero_scaled);
    println!("chi(1/2) = {}, chi(2) = {}", limits.at_half, limits.at_two);
    println!("limit checks pass: {}", limits.passed());

    for k in 2..=6 {
        let via_sum = chi(n, Complex64::new(k as f64, 0.0)).value.re;
        println!(
            "chi(N; {k}) exact-numerator form {:.15e}, direct {via_sum:.15e}",
            chi_integer(n, k)?
        );
    }

    for n in [1, 5, 50] {
        let n = TruncationIndex::new(n)?;
        println!(
            "chi(N+1; s)/chi(N; s) as s -> 1, N = {n}: closed {:.12}, extrapolated {:.12}",
            successive_quotient_limit(n)?,
            successive_quotient_extrapolated(n, 1e-3)?
        );
    }
    Ok(())
}
