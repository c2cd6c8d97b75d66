//! The L_n / L_(n+1) wall crossing for c1 = C0 + alpha F on F_e.
//!
//!     cargo run --example hirzebruch_wall_crossing -- 1 0 5 2

use bnwalls::hirzebruch_scenario;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let nums: Vec<i64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let [e, alpha, c2, n] = match nums[..] {
        [a, b, c, d] => [a, b, c, d],
        [] => [1, 0, 5, 2],
        _ => return Err("expected four integers: e alpha c2 n".into()),
    };
    let sc = hirzebruch_scenario(e, alpha, c2, n)?;
    println!("F_{e}, c1 = {}, c2 = {c2}, n = {n}", sc.c1);
    println!(
        "L_n = {}, L_(n+1) = {}, xi_n = {} (xi^2 = {}, length {})",
        sc.l_n, sc.l_next, sc.xi_n, sc.xi_sq, sc.wall_length
    );
    let walls: Vec<String> = sc
        .separating_walls
        .iter()
        .map(|w| w.xi().to_string())
        .collect();
    println!("separating walls: {}", walls.join(" "));
    for (name, side) in [("added  E_-xi", &sc.added), ("removed E_xi", &sc.removed)] {
        println!(
            "{name}: dim {:?}, rho^1(2; {}, {}) = {} at {}, closed form {}",
            side.family.dim,
            side.identification.c1,
            side.identification.c2,
            side.identification.rho,
            side.identification.polarization,
            side.closed_form_dim
        );
    }
    if sc.decomposition_applies {
        println!("{}", sc.decomposition);
    } else {
        println!("L_n and L_(n+1) are not in adjacent chambers; the one-wall decomposition does not apply");
    }
    println!("all checks pass: {}", sc.all_checks_pass());
    Ok(())
}
