//! Draws the ample cone of F_e with its walls and two polarizations.
//!
//!     cargo run --example cone_svg -- cone.svg

use bnwalls::{cone_svg, enumerate_walls, DivisorClass, Surface};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "cone.svg".to_string());
    let s = Surface::hirzebruch(1)?;
    let c1 = DivisorClass::hirzebruch(1, 0);
    let c2 = 6;
    let pols = [
        DivisorClass::hirzebruch(1, 4),
        DivisorClass::hirzebruch(2, 9),
    ];
    let svg = cone_svg(&s, &c1, c2, &pols)?;
    std::fs::write(&path, &svg)?;
    println!(
        "wrote {path}: {} walls, {} polarizations, {} bytes",
        enumerate_walls(&s, &c1, c2)?.len(),
        pols.len(),
        svg.len()
    );
    Ok(())
}
