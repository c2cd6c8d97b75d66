//! Brill–Noether numbers on the 't Hooft component of instantons on P3.
//!
//!     cargo run --example instanton_table -- 20

use bnwalls::instanton_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(16);
    println!(
        "{:>4} {:>5} {:>5} {:>6} {:>6} {:>6}",
        "n", "chi", "dim", "rho1", "rho2", "rho3"
    );
    for n in 1..=max {
        let r = instanton_report(n)?;
        let rho: Vec<i64> = r.rows.iter().map(|row| row.rho).collect();
        println!(
            "{:>4} {:>5} {:>5} {:>6} {:>6} {:>6}",
            n, r.chi, r.moduli_dim, rho[0], rho[1], rho[2]
        );
    }
    println!(
        "W^k is non-empty exactly for k in {:?}",
        instanton_report(max)?.nonempty_ks
    );
    Ok(())
}
