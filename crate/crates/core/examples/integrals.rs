//! Closed-form integrals of ζ_w(N; s): over s ∈ [−1, 0] and along a
//! horizontal line across the critical strip, each against quadrature.

use zetaw::integrals::{integral_strip, integral_unit, strip_ei_term_decay};
use zetaw::TruncationIndex;

fn main() -> zetaw::Result<()> {
    for n in [1, 2, 5, 25, 100] {
        let r = integral_unit(TruncationIndex::new(n)?)?;
        println!(
            "unit  N = {n:>3}: closed {:.15}  quadrature {:.15}  diff {:.1e}",
            r.closed_form.re, r.quadrature.re, r.abs_diff
        );
    }
    for (n, t) in [(1, 1.0), (4, 3.0), (10, 0.5)] {
        let r = integral_strip(TruncationIndex::new(n)?, t)?;
        println!(
            "strip N = {n:>3}, t = {t}: closed {:.12}  quadrature {:.12}  diff {:.1e}",
            r.closed_form, r.quadrature, r.abs_diff
        );
    }
    let decay = strip_ei_term_decay(TruncationIndex::new(2)?, &[10.0, 100.0, 1000.0, 10_000.0])?;
    for (t, m) in [10.0, 100.0, 1000.0, 10_000.0].iter().zip(&decay) {
        println!("|Ei term| at t = {t}: {m:.3e}");
    }
    Ok(())
}
