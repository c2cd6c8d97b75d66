//! Brute-force slope stability of rank-2 extension bundles on `F_e`.
//!
//! For `0 → O(D) → E → O(c1 - D) ⊗ I_Z → 0`, a sub-line bundle `O(A) ⊂ E`
//! either maps into `O(D)` (so `D - A` is effective) or maps non-trivially
//! into the quotient (so `h⁰(I_Z(c1 - D - A)) > 0`). `E` is `L`-stable iff
//! every such `A` has `2(A·L) < c1·L`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize, Serializer};

use crate::cohomology::{cohomology_line, h0_line_unchecked, ZModel};
use crate::error::{Error, Result};
use crate::picard::{DivisorClass, Surface};

/// Extension data of a rank-2 bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionData {
    pub d: DivisorClass,
    pub c1: DivisorClass,
    pub z: ZModel,
}

impl ExtensionData {
    pub fn new(d: DivisorClass, c1: DivisorClass, z: ZModel) -> Self {
        ExtensionData { d, c1, z }
    }

    /// `c2 = D·(c1 - D) + ℓ`.
    pub fn c2(&self, s: &Surface) -> i64 {
        s.dot(&self.d, &(self.c1 - self.d)) + self.z.length()
    }

    pub fn validate(&self, s: &Surface) -> Result<()> {
        s.require_hirzebruch("the stability oracle")?;
        s.check(&self.d)?;
        s.check(&self.c1)?;
        self.z.validate(s)?;
        let c2 = self.c2(s);
        if c2 < 0 {
            return Err(Error::invalid(format!("implied c2 = {c2} is negative")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    IntoSub,
    IntoQuotient,
}

/// A line bundle `O(A) ⊂ E` violating strict stability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Destabilizer {
    pub a: DivisorClass,
    pub route: Route,
    /// `A·L - c1·L/2 ≥ 0`.
    #[serde(serialize_with = "ratio_as_string")]
    pub slope_excess: Rational64,
    /// Excess zero: `O(A)` only makes `E` strictly semistable.
    pub strictly_semistable: bool,
}

fn ratio_as_string<S: Serializer>(r: &Rational64, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&r.to_string())
}

/// Box of candidate classes `A = (x, y)`: effectivity caps `A` at `upper`
/// componentwise, and `A·L ≥ c1·L/2` with both coefficients of `A·L`
/// positive for ample `L` bounds it from below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub x: (i64, i64),
    pub y: (i64, i64),
}

pub fn search_box(s: &Surface, l: &DivisorClass, ext: &ExtensionData) -> Result<SearchBox> {
    ext.validate(s)?;
    s.require_ample(l, "polarization")?;
    let e = s.e().expect("validated");
    let (la, lb) = l.pair().expect("validated");
    // A·L = x(lb - la·e) + y·la.
    let (kx, ky) = (lb - la * e, la);
    let upper_sub = ext.d;
    let upper_quot = ext.c1 - ext.d;
    let (ux, uy) = (
        upper_sub.coords()[0].max(upper_quot.coords()[0]),
        upper_sub.coords()[1].max(upper_quot.coords()[1]),
    );
    let c1l = s.dot(&ext.c1, l);
    // 2(x·kx + y·ky) ≥ c1l with y ≤ uy gives x ≥ (c1l - 2·uy·ky) / (2·kx).
    let x_min = div_ceil(c1l - 2 * uy * ky, 2 * kx);
    let y_min = div_ceil(c1l - 2 * ux * kx, 2 * ky);
    Ok(SearchBox {
        x: (x_min, ux),
        y: (y_min, uy),
    })
}

fn div_ceil(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    -((-num).div_euclid(den))
}

/// Largest search box scanned by [`destabilizers_in`].
pub const MAX_SEARCH_CELLS: i64 = 1 << 24;

impl SearchBox {
    pub fn cells(&self) -> i64 {
        let span = |(lo, hi): (i64, i64)| (hi - lo + 1).max(0);
        span(self.x).saturating_mul(span(self.y))
    }
}

/// All destabilizing sub-line bundles, scanning `search`.
pub fn destabilizers_in(
    s: &Surface,
    l: &DivisorClass,
    ext: &ExtensionData,
    search: SearchBox,
) -> Result<Vec<Destabilizer>> {
    ext.validate(s)?;
    s.require_ample(l, "polarization")?;
    if search.cells() > MAX_SEARCH_CELLS {
        return Err(Error::invalid(format!(
            "search box of {} classes exceeds {MAX_SEARCH_CELLS}",
            search.cells()
        )));
    }
    let c1l = s.dot(&ext.c1, l);
    let quotient = ext.c1 - ext.d;
    let mut out = Vec::new();
    for x in search.x.0..=search.x.1 {
        for y in search.y.0..=search.y.1 {
            let a = DivisorClass::hirzebruch(x, y);
            let twice_excess = 2 * s.dot(&a, l) - c1l;
            if twice_excess < 0 {
                continue;
            }
            let route = if s.is_effective(&(ext.d - a)) {
                Route::IntoSub
            } else if ext.z.h0_twist(s, &(quotient - a)) > 0 {
                Route::IntoQuotient
            } else {
                continue;
            };
            out.push(Destabilizer {
                a,
                route,
                slope_excess: Rational64::new(twice_excess, 2),
                strictly_semistable: twice_excess == 0,
            });
        }
    }
    Ok(out)
}

pub fn destabilizers(
    s: &Surface,
    l: &DivisorClass,
    ext: &ExtensionData,
) -> Result<Vec<Destabilizer>> {
    let search = search_box(s, l, ext)?;
    destabilizers_in(s, l, ext, search)
}

/// Strict slope stability with respect to `l`.
pub fn is_stable(s: &Surface, l: &DivisorClass, ext: &ExtensionData) -> Result<bool> {
    Ok(destabilizers(s, l, ext)?.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SectionCount {
    Exact { h0: i64 },
    Range { lower: i64, upper: i64 },
}

impl SectionCount {
    pub fn exact(&self) -> Option<i64> {
        match *self {
            SectionCount::Exact { h0 } => Some(h0),
            SectionCount::Range { .. } => None,
        }
    }
}

/// `h⁰(E)` from the long exact sequence of the extension; exact when
/// `h¹(O(D)) = 0`, otherwise only bracketed.
pub fn h0_bundle(s: &Surface, ext: &ExtensionData) -> Result<SectionCount> {
    ext.validate(s)?;
    let sub = cohomology_line(s, &ext.d)?;
    let quotient = ext.z.h0_twist(s, &(ext.c1 - ext.d));
    debug_assert_eq!(sub.h0, h0_line_unchecked(s, &ext.d));
    Ok(if sub.h1 == 0 {
        SectionCount::Exact {
            h0: sub.h0 + quotient,
        }
    } else {
        SectionCount::Range {
            lower: sub.h0,
            upper: sub.h0 + quotient,
        }
    })
}
