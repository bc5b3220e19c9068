//! Residues of ν(s) = ζ(1−s)/ζ(s) at the negative integers.

use std::f64::consts::PI;

use zetaw::reflection::nu_residue;

fn main() -> zetaw::Result<()> {
    let mut fact = 1.0;
    for n in 1..=12u32 {
        fact *= n as f64;
        let v = nu_residue(n)?;
        if n % 2 == 0 {
            let k = (n / 2) as i32;
            let classical = (-1f64).powi(k) * 2.0 * (2.0 * PI).powi(n as i32) / fact;
            println!("s = -{n:<2} residue {v:22.15e}  classical {classical:22.15e}");
        } else {
            println!("s = -{n:<2} residue {v}");
        }
    }
    Ok(())
}
