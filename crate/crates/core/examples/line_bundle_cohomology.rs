//! Cohomology of line bundles and twisted ideal sheaves on F_e.
//!
//!     cargo run --example line_bundle_cohomology -- 2

use bnwalls::{cohomology_ideal, cohomology_line, DivisorClass, Surface, ZModel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1);
    let s = Surface::hirzebruch(e)?;
    println!("{s}, K = {}", s.canonical());
    println!("{:>9} {:>4} {:>4} {:>4}", "D", "h0", "h1", "h2");
    for (a, b) in [
        (0, 0),
        (1, 0),
        (1, e),
        (0, -2),
        (-1, 0),
        (2, 1),
        (-2, -e - 2),
        (3, -1),
    ] {
        let d = DivisorClass::hirzebruch(a, b);
        let t = cohomology_line(&s, &d)?;
        println!("{:>9} {:>4} {:>4} {:>4}", d.to_string(), t.h0, t.h1, t.h2);
    }

    // Imposing points: a generic cycle kills one section per point until
    // none are left; a special one is declared through an override.
    let m = DivisorClass::hirzebruch(0, 5);
    for len in [0, 3, 6, 8] {
        let t = cohomology_ideal(&s, &m, &ZModel::generic(len))?;
        println!(
            "generic Z of length {len}: h*(I_Z{m}) = ({}, {}, {})",
            t.h0, t.h1, t.h2
        );
    }
    let special = ZModel::generic(6).with_override(m, 2);
    let t = cohomology_ideal(&s, &m, &special)?;
    println!(
        "special Z of length 6:  h*(I_Z{m}) = ({}, {}, {})",
        t.h0, t.h1, t.h2
    );
    Ok(())
}
