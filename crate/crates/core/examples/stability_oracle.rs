//! Stability of extension bundles on the quadric, including special cycles.
//!
//!     cargo run --example stability_oracle -- 4

use bnwalls::{destabilizers, h0_bundle, DivisorClass, ExtensionData, Surface, ZModel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    let s = Surface::hirzebruch(0)?;
    let l = DivisorClass::hirzebruch(1, n);
    let c1 = DivisorClass::hirzebruch(0, 2 * n - 1);
    let zero = DivisorClass::hirzebruch(0, 0);

    let mut models = vec![("generic".to_string(), ZModel::generic(2 * n))];
    for i in 1..n {
        let z = ZModel::generic(2 * n)
            .with_override(c1, i)
            .with_override(DivisorClass::hirzebruch(0, 2 * n - i - 1), 0);
        models.push((format!("E_{i}"), z));
    }
    for (name, z) in models {
        let ext = ExtensionData::new(zero, c1, z);
        let bad = destabilizers(&s, &l, &ext)?;
        println!(
            "{name:>8}: c2 = {}, h0 = {:?}, stable = {}",
            ext.c2(&s),
            h0_bundle(&s, &ext)?,
            bad.is_empty()
        );
    }

    let split = ExtensionData::new(c1, c1, ZModel::generic(0));
    for x in destabilizers(&s, &l, &split)?.iter().take(3) {
        println!(
            "   split: O{} via {:?}, slope excess {}",
            x.a, x.route, x.slope_excess
        );
    }
    Ok(())
}
