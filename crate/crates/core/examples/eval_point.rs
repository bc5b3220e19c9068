//! Evaluate ζ_w(N; s) and χ(N; s) at a few points and compare with ζ(s).
//!
//! Run with `cargo run --example eval_point`.

use num_complex::Complex64;
use zetaw::reflection::chi;
use zetaw::special::zeta_reference;
use zetaw::zeta_w::zeta_w;
use zetaw::TruncationIndex;

fn main() -> zetaw::Result<()> {
    let points = [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.5, 14.134_725_141_734_693),
        Complex64::new(-0.5, 3.0),
    ];
    for s in points {
        println!("s = {s}");
        let reference = zeta_reference(s)?;
        for n in [1, 10, 100, 10_000] {
            let n = TruncationIndex::new(n)?;
            let z = zeta_w(n, s).into_result(s)?;
            let c = chi(n, s).value;
            println!(
                "  N = {n:>6}  zeta_w = {z:.12}  |zeta_w - zeta| = {:.3e}  chi = {c:.12}",
                (z - reference).norm()
            );
        }
    }

    let pole = zeta_w(TruncationIndex::new(5)?, Complex64::new(1.0, 0.0));
    println!("zeta_w(5; 1) is a pole: {}", pole.pole);
    Ok(())
}
