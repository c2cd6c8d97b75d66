//! Line-bundle cohomology on `F_e` and `P²`, and twisted ideal sheaves of
//! 0-cycles under a genericity model.
//!
//! `h⁰` comes from the pushforward to `P¹` (on `F_e`,
//! `π_* O(aC0 + bF) = ⊕_{j=0..a} O(b - je)`), `h²` from Serre duality, and
//! `h¹` is whatever Riemann–Roch leaves over. A negative `h¹` would mean the
//! `h⁰` formula is wrong, so it is reported as a consistency failure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{DivisorClass, Surface};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTriple {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl CohomologyTriple {
    pub fn euler_characteristic(&self) -> i64 {
        self.h0 - self.h1 + self.h2
    }
}

/// `χ(O(D)) = 1 + D·(D - K)/2`.
pub fn chi_line(s: &Surface, d: &DivisorClass) -> Result<i64> {
    s.check(d)?;
    Ok(chi_line_unchecked(s, d))
}

pub(crate) fn chi_line_unchecked(s: &Surface, d: &DivisorClass) -> i64 {
    let twice = s.dot(d, &(*d - s.canonical()));
    // D·(D-K) is even by the adjunction formula.
    debug_assert_eq!(twice % 2, 0);
    1 + twice / 2
}

pub fn h0_line(s: &Surface, d: &DivisorClass) -> Result<i64> {
    s.check(d)?;
    Ok(h0_line_unchecked(s, d))
}

pub(crate) fn h0_line_unchecked(s: &Surface, d: &DivisorClass) -> i64 {
    match *s {
        Surface::ProjectivePlane => {
            let m = d.coords()[0];
            if m < 0 {
                0
            } else {
                (m + 1) * (m + 2) / 2
            }
        }
        Surface::Hirzebruch { e } => {
            let (a, b) = d.pair().expect("checked rank");
            if a < 0 || b < 0 {
                return 0;
            }
            // Sum of (b - je + 1) over the j in 0..=a where it is positive.
            let top = if e == 0 { a } else { a.min(b / e) };
            (top + 1) * (b + 1) - e * top * (top + 1) / 2
        }
    }
}

pub fn cohomology_line(s: &Surface, d: &DivisorClass) -> Result<CohomologyTriple> {
    s.check(d)?;
    let h0 = h0_line_unchecked(s, d);
    let h2 = h0_line_unchecked(s, &(s.canonical() - *d));
    let h1 = h0 + h2 - chi_line_unchecked(s, d);
    if h1 < 0 {
        return Err(Error::consistency(format!("h1(O{d}) = {h1} < 0 on {s}")));
    }
    Ok(CohomologyTriple { h0, h1, h2 })
}

/// A length-`ℓ` 0-cycle `Z`, described only through `h⁰(I_Z(M))`.
///
/// Without an override the cycle is generic: it imposes independent
/// conditions, so `h⁰(I_Z(M)) = max(0, h⁰(M) - ℓ)`. Overrides pin the value
/// for specific twists `M`, which is how special cycles are described.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ZModelRepr", try_from = "ZModelRepr")]
pub struct ZModel {
    length: i64,
    overrides: BTreeMap<DivisorClass, i64>,
}

impl ZModel {
    /// A generic cycle of the given length.
    pub fn generic(length: i64) -> Self {
        ZModel {
            length,
            overrides: BTreeMap::new(),
        }
    }

    /// Declares `h⁰(I_Z(twist)) = h0`. Checked against a surface by
    /// [`ZModel::validate`].
    pub fn with_override(mut self, twist: DivisorClass, h0: i64) -> Self {
        self.overrides.insert(twist, h0);
        self
    }

    pub fn length(&self) -> i64 {
        self.length
    }

    pub fn overrides(&self) -> &BTreeMap<DivisorClass, i64> {
        &self.overrides
    }

    pub fn override_for(&self, twist: &DivisorClass) -> Option<i64> {
        self.overrides.get(twist).copied()
    }

    /// Drops the override for `twist`, falling back to generic behavior there.
    pub fn without_override(mut self, twist: &DivisorClass) -> Self {
        self.overrides.remove(twist);
        self
    }

    /// Each override must lie in `[max(0, h⁰(M) - ℓ), h⁰(M)]`: imposing `ℓ`
    /// points kills at most `ℓ` sections and never creates new ones.
    pub fn validate(&self, s: &Surface) -> Result<()> {
        if self.length < 0 {
            return Err(Error::invalid(format!(
                "0-cycle length {} is negative",
                self.length
            )));
        }
        for (twist, &h0) in &self.overrides {
            s.check(twist)?;
            let full = h0_line_unchecked(s, twist);
            let floor = (full - self.length).max(0);
            if !(floor..=full).contains(&h0) {
                return Err(Error::invalid(format!(
                    "override h0(I_Z{twist}) = {h0} outside [{floor}, {full}] for a cycle of length {}",
                    self.length
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn h0_twist(&self, s: &Surface, d: &DivisorClass) -> i64 {
        self.override_for(d)
            .unwrap_or_else(|| (h0_line_unchecked(s, d) - self.length).max(0))
    }
}

#[derive(Serialize, Deserialize)]
struct ZModelRepr {
    length: i64,
    overrides: Vec<OverrideRepr>,
}

#[derive(Serialize, Deserialize)]
struct OverrideRepr {
    twist: DivisorClass,
    h0: i64,
}

impl From<ZModel> for ZModelRepr {
    fn from(z: ZModel) -> Self {
        ZModelRepr {
            length: z.length,
            overrides: z
                .overrides
                .into_iter()
                .map(|(twist, h0)| OverrideRepr { twist, h0 })
                .collect(),
        }
    }
}

impl TryFrom<ZModelRepr> for ZModel {
    type Error = Error;
    fn try_from(r: ZModelRepr) -> Result<Self> {
        if r.length < 0 || r.overrides.iter().any(|o| o.h0 < 0) {
            return Err(Error::invalid(
                "0-cycle lengths and section counts are non-negative",
            ));
        }
        Ok(ZModel {
            length: r.length,
            overrides: r.overrides.into_iter().map(|o| (o.twist, o.h0)).collect(),
        })
    }
}

/// Cohomology of `I_Z(D)` from `0 → I_Z(D) → O(D) → O_Z → 0`.
pub fn cohomology_ideal(s: &Surface, d: &DivisorClass, z: &ZModel) -> Result<CohomologyTriple> {
    s.check(d)?;
    z.validate(s)?;
    Ok(cohomology_ideal_unchecked(s, d, z))
}

pub(crate) fn cohomology_ideal_unchecked(
    s: &Surface,
    d: &DivisorClass,
    z: &ZModel,
) -> CohomologyTriple {
    let h0 = z.h0_twist(s, d);
    let h2 = h0_line_unchecked(s, &(s.canonical() - *d));
    let chi = chi_line_unchecked(s, d) - z.length;
    // Non-negative whenever the model is valid: h0 ≥ h0(D) - ℓ.
    let h1 = h0 - chi + h2;
    CohomologyTriple { h0, h1, h2 }
}
