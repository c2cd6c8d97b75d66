//! Walls of type (c1, c2) in the ample cone of F_e, and a chamber test.
//!
//!     cargo run --example wall_enumeration -- 1 1,0 6

use bnwalls::{enumerate_walls, same_chamber, separating_walls, DivisorClass, Surface};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let e: i64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);
    let c1: DivisorClass = args
        .next()
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(DivisorClass::hirzebruch(1, 0));
    let c2: i64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let s = Surface::hirzebruch(e)?;

    let walls = enumerate_walls(&s, &c1, c2)?;
    println!("{} walls of type ({c1}, {c2}) on {s}:", walls.len());
    for w in &walls {
        let (p, q) = w.xi().pair().expect("hirzebruch class");
        println!(
            "  xi = {:<9} xi^2 = {:<4} length = {:<3} ray {}C0 + {}F",
            w.xi().to_string(),
            w.xi_sq(),
            w.length(),
            p,
            p * e - q
        );
    }

    let (l1, l2) = (
        DivisorClass::hirzebruch(1, e + 9),
        DivisorClass::hirzebruch(1, e + 1),
    );
    for w in separating_walls(&s, &c1, c2, &l1, &l2)? {
        println!("separates {l1} from {l2}: xi = {}", w.xi());
    }
    println!("same chamber? {:?}", same_chamber(&s, &c1, c2, &l1, &l2)?);
    Ok(())
}
