//! Independent oracles. Nothing here calls into the library's formulas:
//! intersection numbers, section counts and wall conditions are recomputed
//! from first principles on plain integer tuples.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `D1·D2` on `F_e` in the basis `(C0, F)`, written out from `C0² = -e`,
/// `C0·F = 1`, `F² = 0`.
pub fn dot(e: i64, d1: (i64, i64), d2: (i64, i64)) -> i64 {
    -e * d1.0 * d2.0 + d1.0 * d2.1 + d1.1 * d2.0
}

pub fn canonical(e: i64) -> (i64, i64) {
    (-2, -e - 2)
}

/// Lattice points of the toric section polytope of `aC0 + bF` on `F_e`.
///
/// Fan rays `(1,0), (0,1), (-1,e), (0,-1)`; the divisor is `b·D_(1,0) +
/// a·D_(0,1)`, so sections are the `m = (x, y)` with `x ≥ -b`, `y ≥ -a`,
/// `-x + ey ≥ 0`, `y ≤ 0`.
pub fn h0_lattice(e: i64, a: i64, b: i64) -> i64 {
    // The constraints force -|a| ≤ y ≤ 0 and -|b| ≤ x ≤ 0; scan a margin
    // beyond that so the inequalities, not the loop bounds, do the work.
    let mut count = 0;
    for y in -a.abs() - 1..=1 {
        for x in -b.abs() - 1..=1 {
            if x >= -b && y >= -a && -x + e * y >= 0 && y <= 0 {
                count += 1;
            }
        }
    }
    count
}

/// `h⁰(O(m))` on `P²`: monomials of degree `m` in three variables.
pub fn h0_plane(m: i64) -> i64 {
    (0..=m).map(|i| (0..=m - i).count() as i64).sum()
}

/// Hirzebruch–Riemann–Roch on `F_e` with `td = 1 - K/2 + pt`:
/// `χ = r + (c1² - 2c2)/2 - c1·K/2`, evaluated on doubled integers.
pub fn chi_rr_hirzebruch(e: i64, r: i64, c1: (i64, i64), c2: i64) -> i64 {
    let twice = 2 * r + dot(e, c1, c1) - 2 * c2 - dot(e, c1, canonical(e));
    assert_eq!(twice % 2, 0, "Riemann-Roch must be integral");
    twice / 2
}

/// The same on `P²` with `td = 1 + 3H/2 + H²`.
pub fn chi_rr_plane(r: i64, c1: i64, c2: i64) -> i64 {
    let twice = 2 * r + 3 * c1 + c1 * c1 - 2 * c2;
    assert_eq!(twice % 2, 0, "Riemann-Roch must be integral");
    twice / 2
}

/// Walls of type `(c1, c2)` on `F_e` found by scanning `|p|, |q| ≤ B` with
/// `B = 4(4c2 + |c1²| + 4)` and testing the four defining conditions
/// directly. Returned with positive first coordinate as `(p, q, ℓ)`.
pub fn brute_walls(e: i64, c1: (i64, i64), c2: i64) -> BTreeSet<(i64, i64, i64)> {
    let c1_sq = dot(e, c1, c1);
    let bound = 4 * (4 * c2 + c1_sq.abs() + 4);
    let mut out = BTreeSet::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            let xi = (p, q);
            let xi_sq = dot(e, xi, xi);
            if xi_sq >= 0 {
                continue;
            }
            if (p - c1.0).rem_euclid(2) != 0 || (q - c1.1).rem_euclid(2) != 0 {
                continue;
            }
            let diff = xi_sq - c1_sq;
            if diff.rem_euclid(4) != 0 || c2 + diff / 4 < 0 {
                continue;
            }
            // ξ⊥ meets the ample cone iff ξ changes sign between its two
            // boundary rays F and C0 + eF.
            let on_f = dot(e, xi, (0, 1));
            let on_section = dot(e, xi, (1, e));
            if on_f * on_section >= 0 {
                continue;
            }
            if p > 0 {
                out.insert((p, q, c2 + diff / 4));
            }
        }
    }
    out
}

/// Brute-force walls with `ξ·L1 > 0 > ξ·L2`.
pub fn brute_separating(
    e: i64,
    c1: (i64, i64),
    c2: i64,
    l1: (i64, i64),
    l2: (i64, i64),
) -> BTreeSet<(i64, i64, i64)> {
    brute_walls(e, c1, c2)
        .into_iter()
        .flat_map(|(p, q, len)| [(p, q, len), (-p, -q, len)])
        .filter(|&(p, q, _)| dot(e, (p, q), l1) > 0 && dot(e, (p, q), l2) < 0)
        .collect()
}

/// Codimension bounds for the top Brill–Noether locus on `P²`, case by case.
pub fn gh_oracle(r: i64, c1: i64, c2: i64) -> (Option<i64>, i64) {
    let chi = chi_rr_plane(r, c1, c2);
    let chi_plus = chi.max(0);
    if chi > 0 {
        (Some(2), chi + 1)
    } else if chi == 0 {
        (Some(1), 1)
    } else {
        (None, (chi_plus + 1) * (chi_plus + 1 - chi))
    }
}
