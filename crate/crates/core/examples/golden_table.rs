//! Exact polynomials ζ_w(N; 1−n) in N for n = 2..=12, checked against the
//! bundled golden table, plus the binomial identity behind χ at integers
//! and the Bernoulli-number comparison.

use zetaw::exact_poly::{
    bernoulli_comparison, chi_numerator_identity, chi_numerator_identity_negated, faulhaber,
    parse_golden_table, table_mismatches, zeta_w_neg_poly, GOLDEN_TABLE,
};

fn main() -> zetaw::Result<()> {
    for n in 2..=12 {
        println!("n = {n:>2}: {}", zeta_w_neg_poly(n)?);
    }
    let golden = parse_golden_table(GOLDEN_TABLE)?;
    println!(
        "rows differing from the golden table: {:?}",
        table_mismatches(&golden)
    );

    println!("sum_(m<=N) m^3 = {}", faulhaber(3)?);

    for (n, m) in [(2, 5), (3, 1), (4, 3), (7, 10)] {
        println!(
            "n = {n}, m = {m}: identity {}, negated identity {}",
            chi_numerator_identity(n, m)?,
            chi_numerator_identity_negated(n, m)?
        );
    }

    for n in 1..=3 {
        let c = bernoulli_comparison(n)?;
        println!(
            "n = {n}: left {} | right {} | difference {}",
            c.left, c.right, c.difference
        );
    }
    Ok(())
}
