mod common;

use bnwalls::chi_line;
use bnwalls::cohomology::{cohomology_ideal, cohomology_line, h0_line, ZModel};
use bnwalls::crossing::crossing_report;
use bnwalls::invariants::{bn_number, chi_sheaf, instanton_report, quadric_strata, ChernData};
use bnwalls::picard::{DivisorClass, Surface};
use bnwalls::stability::{
    destabilizers, destabilizers_in, is_stable, search_box, ExtensionData, SearchBox,
};
use bnwalls::walls::{enumerate_walls, is_wall_class, same_chamber, separating_walls};
use proptest::prelude::*;

fn f(e: i64) -> Surface {
    Surface::hirzebruch(e).unwrap()
}

fn d(a: i64, b: i64) -> DivisorClass {
    DivisorClass::hirzebruch(a, b)
}

proptest! {
    #[test]
    fn intersection_symmetric_and_bilinear(
        e in 0i64..6, x in (-20i64..20, -20i64..20), y in (-20i64..20, -20i64..20),
        z in (-20i64..20, -20i64..20), m in -5i64..5, n in -5i64..5,
    ) {
        let s = f(e);
        let (x, y, z) = (d(x.0, x.1), d(y.0, y.1), d(z.0, z.1));
        let i = |u: &DivisorClass, v: &DivisorClass| s.intersect(u, v).unwrap();
        prop_assert_eq!(i(&x, &y), i(&y, &x));
        prop_assert_eq!(i(&(m * x + n * y), &z), m * i(&x, &z) + n * i(&y, &z));
        let (xp, yp) = (x.pair().unwrap(), y.pair().unwrap());
        prop_assert_eq!(i(&x, &y), common::dot(e, xp, yp));
    }

    #[test]
    fn plane_intersection_is_product(a in -50i64..50, b in -50i64..50) {
        let s = Surface::ProjectivePlane;
        prop_assert_eq!(s.intersect(&DivisorClass::plane(a), &DivisorClass::plane(b)).unwrap(), a * b);
    }

    #[test]
    fn ample_is_effective_and_positive(e in 0i64..6, a in -10i64..10, b in -10i64..30) {
        let s = f(e);
        let l = d(a, b);
        if s.is_ample(&l) {
            prop_assert!(s.is_effective(&l));
            for x in 0..6 {
                for y in 0..6 {
                    if (x, y) != (0, 0) {
                        prop_assert!(s.intersect(&l, &d(x, y)).unwrap() > 0);
                    }
                }
            }
        }
    }

    #[test]
    fn ideal_with_empty_cycle_is_line_bundle(e in 0i64..5, a in -12i64..13, b in -12i64..13) {
        let s = f(e);
        let line = cohomology_line(&s, &d(a, b)).unwrap();
        prop_assert_eq!(cohomology_ideal(&s, &d(a, b), &ZModel::generic(0)).unwrap(), line);
    }

    #[test]
    fn generic_sections_decrease_with_length(e in 0i64..5, a in -6i64..8, b in -6i64..12, len in 0i64..30) {
        let s = f(e);
        let h = |l| cohomology_ideal(&s, &d(a, b), &ZModel::generic(l)).unwrap();
        let (short, long) = (h(len), h(len + 1));
        prop_assert!(long.h0 <= short.h0);
        prop_assert!(long.h1 >= 0);
        prop_assert_eq!(long.h0 - long.h1 + long.h2, chi_line(&s, &d(a, b)).unwrap() - len - 1);
    }

    #[test]
    fn plane_sections_match_monomials(m in -20i64..20) {
        let s = Surface::ProjectivePlane;
        prop_assert_eq!(h0_line(&s, &DivisorClass::plane(m)).unwrap(), common::h0_plane(m));
        let t = cohomology_line(&s, &DivisorClass::plane(m)).unwrap();
        prop_assert_eq!(t.h0 - t.h1 + t.h2, common::chi_rr_plane(1, m, 0));
    }

    #[test]
    fn chi_matches_riemann_roch(e in 0i64..6, r in 1i64..5, a in -8i64..8, b in -8i64..8, c2 in -10i64..20) {
        let s = f(e);
        let c = ChernData::new(r, d(a, b), c2);
        prop_assert_eq!(chi_sheaf(&s, &c).unwrap(), common::chi_rr_hirzebruch(e, r, (a, b), c2));
    }

    #[test]
    fn chi_on_plane_matches_riemann_roch(r in 1i64..5, c1 in -10i64..10, c2 in -10i64..20) {
        let c = ChernData::new(r, DivisorClass::plane(c1), c2);
        prop_assert_eq!(chi_sheaf(&Surface::ProjectivePlane, &c).unwrap(), common::chi_rr_plane(r, c1, c2));
    }

    #[test]
    fn rank_one_chi_is_line_bundle_chi(e in 0i64..5, a in -12i64..13, b in -12i64..13) {
        let s = f(e);
        prop_assert_eq!(
            chi_sheaf(&s, &ChernData::new(1, d(a, b), 0)).unwrap(),
            chi_line(&s, &d(a, b)).unwrap()
        );
    }

    #[test]
    fn bn_record_identity(e in 0i64..5, a in -6i64..6, b in -6i64..6, c2 in -5i64..20, k in 0i64..10) {
        let s = f(e);
        let rec = bn_number(&s, &ChernData::rank2(d(a, b), c2), k).unwrap();
        let chi = common::chi_rr_hirzebruch(e, 2, (a, b), c2);
        let dim = 4 * c2 - common::dot(e, (a, b), (a, b)) - 3;
        prop_assert_eq!((rec.chi, rec.moduli_dim), (chi, dim));
        prop_assert_eq!(rec.rho, dim - k * (k - chi));
    }

    #[test]
    fn wall_sign_symmetry(e in 0i64..4, p in -12i64..12, q in -12i64..12, a in -3i64..4, b in -3i64..4, c2 in 0i64..8) {
        prop_assume!((p, q) != (0, 0));
        let s = f(e);
        let wall = |x: DivisorClass| is_wall_class(&s, &x, &d(a, b), c2).unwrap().wall();
        let (plus, minus) = (wall(d(p, q)), wall(d(-p, -q)));
        prop_assert_eq!(plus.is_some(), minus.is_some());
        if let (Some(w), Some(v)) = (plus, minus) {
            prop_assert_eq!(w.canonical(), v.canonical());
            prop_assert!(w.canonical().xi().coords()[0] > 0);
        }
    }

    #[test]
    fn separating_walls_symmetric(
        e in 0i64..3, a in -2i64..3, b in -2i64..3, c2 in 0i64..7,
        l1 in (1i64..4, 1i64..12), l2 in (1i64..4, 1i64..12),
    ) {
        let s = f(e);
        let (l1, l2) = (d(l1.0, l1.0 * e + l1.1), d(l2.0, l2.0 * e + l2.1));
        let c1 = d(a, b);
        let forward = separating_walls(&s, &c1, c2, &l1, &l2).unwrap();
        let mut back: Vec<_> = separating_walls(&s, &c1, c2, &l2, &l1).unwrap()
            .into_iter().map(|w| w.negated()).collect();
        back.sort();
        prop_assert_eq!(&forward, &back);
        let oracle = common::brute_separating(e, (a, b), c2, l1.pair().unwrap(), l2.pair().unwrap());
        let got: std::collections::BTreeSet<_> = forward.iter()
            .map(|w| { let (p, q) = w.xi().pair().unwrap(); (p, q, w.length()) }).collect();
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn same_chamber_is_an_equivalence(
        e in 0i64..3, c2 in 1i64..6,
        ls in proptest::collection::vec((1i64..4, 1i64..14), 3),
    ) {
        let s = f(e);
        let c1 = d(1, 0);
        let ls: Vec<_> = ls.iter().map(|&(a, x)| d(a, a * e + x)).collect();
        let rel = |x: &DivisorClass, y: &DivisorClass| same_chamber(&s, &c1, c2, x, y);
        // Skip samples sitting on a wall.
        let mut verdicts = Vec::new();
        for x in &ls {
            for y in &ls {
                match rel(x, y) {
                    Ok(r) => match r.is_same() {
                        Some(v) => verdicts.push(v),
                        None => return Ok(()),
                    },
                    Err(_) => return Ok(()),
                }
            }
        }
        let same = |i: usize, j: usize| verdicts[3 * i + j];
        for i in 0..3 {
            prop_assert!(same(i, i));
            for j in 0..3 {
                prop_assert_eq!(same(i, j), same(j, i));
                for k in 0..3 {
                    if same(i, j) && same(j, k) {
                        prop_assert!(same(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn crossing_report_symmetry(
        e in 0i64..3, alpha in 0i64..2, c2 in 1i64..7,
        l1 in (1i64..3, 1i64..14), l2 in (1i64..3, 1i64..14),
    ) {
        let s = f(e);
        let c1 = d(1, alpha);
        let (l1, l2) = (d(l1.0, l1.0 * e + l1.1), d(l2.0, l2.0 * e + l2.1));
        let (Ok(there), Ok(back)) = (
            crossing_report(&s, &c1, c2, &l1, &l2),
            crossing_report(&s, &c1, c2, &l2, &l1),
        ) else {
            return Ok(());
        };
        let key = |v: &[bnwalls::ExtFamily]| {
            let mut k: Vec<_> = v.iter().map(|f| (f.xi, f.d, f.length, f.ext1, f.dim)).collect();
            k.sort();
            k
        };
        prop_assert_eq!(key(&there.removed), key(&back.added));
        prop_assert_eq!(key(&there.added), key(&back.removed));
    }

    #[test]
    fn stability_is_scale_invariant(e in 0i64..3, l in (1i64..4, 1i64..10), n in 2i64..6, i in 0i64..6) {
        let s = f(e);
        let l = d(l.0, l.0 * e + l.1);
        let c1 = d(0, 2 * n - 1);
        let mut z = ZModel::generic(2 * n);
        let top = h0_line(&s, &c1).unwrap();
        let floor = (top - 2 * n).max(0);
        z = z.with_override(c1, (floor + i).min(top));
        let ext = ExtensionData::new(d(0, 0), c1, z);
        prop_assert_eq!(is_stable(&s, &l, &ext).unwrap(), is_stable(&s, &(2 * l), &ext).unwrap());
    }

    #[test]
    fn destabilizers_monotone_in_section_counts(
        e in 0i64..3, n in 2i64..6, twist in (-1i64..2, 0i64..10), extra in 0i64..5, l in (1i64..4, 1i64..10),
    ) {
        let s = f(e);
        let l = d(l.0, l.0 * e + l.1);
        let c1 = d(0, 2 * n - 1);
        let generic = ZModel::generic(2 * n);
        let m = d(twist.0, twist.1);
        let top = h0_line(&s, &m).unwrap();
        let floor = (top - 2 * n).max(0);
        let special = generic.clone().with_override(m, (floor + extra).min(top));
        let fewer = destabilizers(&s, &l, &ExtensionData::new(d(0, 0), c1, generic)).unwrap();
        let more = destabilizers(&s, &l, &ExtensionData::new(d(0, 0), c1, special)).unwrap();
        for x in &fewer {
            prop_assert!(more.iter().any(|y| y.a == x.a), "{} lost", x.a);
        }
    }

    #[test]
    fn inflated_search_box_adds_nothing(
        e in 0i64..3, da in -1i64..2, db in -2i64..4, ca in -1i64..3, cb in -2i64..8,
        len in 0i64..6, l in (1i64..4, 1i64..8),
    ) {
        let s = f(e);
        let l = d(l.0, l.0 * e + l.1);
        let ext = ExtensionData::new(d(da, db), d(ca, cb), ZModel::generic(len));
        prop_assume!(ext.validate(&s).is_ok());
        let tight = search_box(&s, &l, &ext).unwrap();
        let grow = |(lo, hi): (i64, i64)| {
            let w = (hi - lo).abs().max(1);
            (lo - 2 * w, hi + 2 * w)
        };
        let wide = SearchBox { x: grow(tight.x), y: grow(tight.y) };
        prop_assert_eq!(
            destabilizers_in(&s, &l, &ext, tight).unwrap(),
            destabilizers_in(&s, &l, &ext, wide).unwrap()
        );
    }
}

#[test]
fn canonical_squares() {
    for e in 0..20 {
        let s = f(e);
        let k = s.canonical();
        assert_eq!(s.intersect(&k, &k).unwrap(), 8);
    }
    let k = Surface::ProjectivePlane.canonical();
    assert_eq!(Surface::ProjectivePlane.intersect(&k, &k).unwrap(), 9);
}

#[test]
fn serre_duality_of_h1() {
    for e in 0..=4 {
        let s = f(e);
        for a in -12..=12 {
            for b in -12..=12 {
                let x = d(a, b);
                let dual = s.canonical() - x;
                assert_eq!(
                    cohomology_line(&s, &x).unwrap().h1,
                    cohomology_line(&s, &dual).unwrap().h1
                );
            }
        }
    }
}

#[test]
fn walls_match_brute_force_scan() {
    for e in 0..=3 {
        for a in -2..=2 {
            for b in -2..=2 {
                for c2 in 0..=6 {
                    let s = f(e);
                    let got: std::collections::BTreeSet<_> = enumerate_walls(&s, &d(a, b), c2)
                        .unwrap()
                        .into_iter()
                        .map(|w| {
                            let (p, q) = w.xi().pair().unwrap();
                            (p, q, w.length())
                        })
                        .collect();
                    assert_eq!(
                        got,
                        common::brute_walls(e, (a, b), c2),
                        "e={e} c1=({a},{b}) c2={c2}"
                    );
                }
            }
        }
    }
}

#[test]
fn instanton_rho_is_concave_in_k() {
    for n in 1..=100 {
        let report = instanton_report(n).unwrap();
        let rho: Vec<i64> = report.rows.iter().map(|r| r.rho).collect();
        assert!(rho.len() >= 3);
        for w in rho.windows(3) {
            assert_eq!(w[2] - 2 * w[1] + w[0], -2, "n={n}");
        }
    }
}

#[test]
fn quadric_first_stratum_has_expected_dimension() {
    for n in 2..=40 {
        let strata = quadric_strata(n).unwrap();
        assert_eq!(strata[0].record.rho, strata[0].known_dim, "n={n}");
    }
}

#[test]
fn crossing_two_walls_both_directions() {
    let s = f(0);
    let (c1, l1, l2) = (d(1, 0), d(1, 3), d(1, 1));
    let there = crossing_report(&s, &c1, 6, &l1, &l2).unwrap();
    let back = crossing_report(&s, &c1, 6, &l2, &l1).unwrap();
    let sorted = |mut v: Vec<bnwalls::ExtFamily>| {
        v.sort_by_key(|f| f.xi);
        v
    };
    assert_eq!(there.removed.len(), 2);
    assert_eq!(sorted(there.removed), sorted(back.added));
    assert_eq!(sorted(there.added), sorted(back.removed));
}
