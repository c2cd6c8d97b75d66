//! Brill–Noether strata of M_L(2; (2n-1)l2, 2n) on the quadric P1 x P1.
//!
//!     cargo run --example quadric_stratification -- 6

use bnwalls::quadric_strata;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(6);
    let strata = quadric_strata(n)?;
    let first = &strata[0].record;
    println!("n = {n}: chi = {}, dim M = {}", first.chi, first.moduli_dim);
    println!("{:>3} {:>6} {:>9}  note", "k", "rho", "known_dim");
    for s in &strata {
        let note = if s.negative_yet_nonempty {
            "rho < 0, yet non-empty"
        } else if s.exceeds_expected {
            "larger than expected"
        } else {
            ""
        };
        println!(
            "{:>3} {:>6} {:>9}  {note}",
            s.record.k, s.record.rho, s.known_dim
        );
    }
    Ok(())
}
