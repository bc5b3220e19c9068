//! Residues of χ(N; s) at s = 0 and of 1/χ(N; s) at s = 2.
//!
//! Shows the residue at 0 crossing zero between N = 176 and N = 177, the
//! slow approach of that residue to 1, and the decay of the residue at 2.

use zetaw::reflection::{laurent_residue, residue_chi_at_0, residue_inv_chi_at_2};
use zetaw::TruncationIndex;

fn main() -> zetaw::Result<()> {
    println!(
        "{:>8} {:>22} {:>22} {:>22}",
        "N", "Res_0 chi (closed)", "Res_0 chi (Laurent)", "Res_2 1/chi"
    );
    for n in [
        1, 2, 10, 100, 175, 176, 177, 178, 1_000, 10_000, 100_000, 1_000_000,
    ] {
        let n = TruncationIndex::new(n)?;
        let report = residue_chi_at_0(n)?;
        let laurent = if n.get() <= 10_000 {
            format!("{:22.12e}", laurent_residue(n))
        } else {
            format!("{:>22}", "-")
        };
        println!(
            "{n:>8} {:22.12e} {laurent} {:22.12e}",
            report.value,
            residue_inv_chi_at_2(n)?
        );
    }
    Ok(())
}
