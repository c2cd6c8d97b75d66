//! Codimension of the top Brill–Noether locus on P2, one example per case.

use bnwalls::{chi_sheaf, gh_codim_bounds, ChernData, DivisorClass, Surface};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (r, c1, c2) in [(2, 1, 1), (2, 0, 2), (2, 0, 5), (3, -2, 4), (4, 3, 2)] {
        let c = ChernData::new(r, DivisorClass::plane(c1), c2);
        let chi = chi_sheaf(&Surface::ProjectivePlane, &c)?;
        let iv = gh_codim_bounds(&c)?;
        let lower = iv.lower.map_or("-".to_string(), |l| l.to_string());
        println!(
            "r={r} c1={c1:>2} c2={c2}: chi = {chi:>3}, codim in [{lower}, {}]",
            iv.upper
        );
    }
    let bad = ChernData::new(2, DivisorClass::plane(-6), 1);
    println!("c1 = -3r: {}", gh_codim_bounds(&bad).unwrap_err());
    Ok(())
}
