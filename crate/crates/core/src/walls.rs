//! Walls of type `(c1, c2)` in the ample cone of `F_e`.
//!
//! A class `ξ` defines a wall when `ξ² < 0`, `ξ + c1` is divisible by two,
//! `ℓ = c2 + (ξ² - c1²)/4` is a non-negative integer, and the hyperplane
//! `ξ⊥` meets the open ample cone. `ξ` and `-ξ` define the same wall; the
//! canonical representative has positive `C0` coefficient.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{DivisorClass, Surface};

/// A class certified to define a wall of a fixed type `(c1, c2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WallClass {
    xi: DivisorClass,
    #[serde(skip)]
    xi_sq: i64,
    length: i64,
}

impl WallClass {
    pub fn xi(&self) -> DivisorClass {
        self.xi
    }

    pub fn xi_sq(&self) -> i64 {
        self.xi_sq
    }

    /// Length `ℓ` of the 0-cycle in the associated extensions.
    pub fn length(&self) -> i64 {
        self.length
    }

    /// The same wall with the opposite orientation.
    pub fn negated(&self) -> WallClass {
        WallClass {
            xi: -self.xi,
            ..*self
        }
    }

    /// Representative with positive first coordinate.
    pub fn canonical(&self) -> WallClass {
        if self.xi.coords()[0] < 0 {
            self.negated()
        } else {
            *self
        }
    }

    /// Orients the class so that `ξ·L > 0`; `None` when `L` lies on the wall.
    pub fn oriented_positive_on(&self, s: &Surface, l: &DivisorClass) -> Option<WallClass> {
        match s.dot(&self.xi, l).signum() {
            1 => Some(*self),
            -1 => Some(self.negated()),
            _ => None,
        }
    }
}

/// The first definitional condition a candidate class fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum WallRejection {
    NonNegativeSquare { xi_sq: i64 },
    ParityMismatch,
    NonIntegralLength,
    NegativeLength { length: i64 },
    MissesAmpleCone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallVerdict {
    Wall(WallClass),
    Rejected(WallRejection),
}

impl WallVerdict {
    pub fn wall(self) -> Option<WallClass> {
        match self {
            WallVerdict::Wall(w) => Some(w),
            WallVerdict::Rejected(_) => None,
        }
    }
}

/// Whether `ξ⊥` meets the open ample cone. With `ξ = (p, q)` and
/// `L = aC0 + bF`, `ξ·L = p(b - ae) + qa` where `a` and `b - ae` range over
/// all positive pairs, so a zero exists iff `p` and `q` have opposite signs.
pub fn wall_meets_ample_cone(s: &Surface, xi: &DivisorClass) -> Result<bool> {
    s.require_hirzebruch("wall geometry")?;
    s.check(xi)?;
    if xi.is_zero() {
        return Err(Error::invalid(
            "the zero class does not cut out a hyperplane",
        ));
    }
    let (p, q) = xi.pair().expect("checked rank");
    Ok(p * q < 0)
}

pub fn is_wall_class(
    s: &Surface,
    xi: &DivisorClass,
    c1: &DivisorClass,
    c2: i64,
) -> Result<WallVerdict> {
    s.require_hirzebruch("wall geometry")?;
    s.check(xi)?;
    s.check(c1)?;
    Ok(classify(s, xi, c1, c2))
}

fn classify(s: &Surface, xi: &DivisorClass, c1: &DivisorClass, c2: i64) -> WallVerdict {
    use WallRejection::*;
    let xi_sq = s.square(xi);
    if xi_sq >= 0 {
        return WallVerdict::Rejected(NonNegativeSquare { xi_sq });
    }
    if !s.parity_compatible(xi, c1) {
        return WallVerdict::Rejected(ParityMismatch);
    }
    let diff = xi_sq - s.square(c1);
    if diff % 4 != 0 {
        // Parity forces 4 | ξ² - c1² on F_e; reaching this is a lattice bug.
        return WallVerdict::Rejected(NonIntegralLength);
    }
    let length = c2 + diff / 4;
    if length < 0 {
        return WallVerdict::Rejected(NegativeLength { length });
    }
    let (p, q) = xi.pair().expect("checked rank");
    if p * q >= 0 {
        return WallVerdict::Rejected(MissesAmpleCone);
    }
    WallVerdict::Wall(WallClass {
        xi: *xi,
        xi_sq,
        length,
    })
}

/// Largest `4c2 - c1²` for which walls are enumerated; the scan visits
/// about `Δ log Δ` classes.
pub const MAX_DISCRIMINANT: i64 = 1 << 20;

/// All walls of type `(c1, c2)`, canonically oriented and sorted.
///
/// With `ξ = (p, q)`, `p > 0 > q` and `Δ = 4c2 - c1²`, the length condition
/// reads `p²e + 2p|q| ≤ Δ`, which bounds both coordinates.
pub fn enumerate_walls(s: &Surface, c1: &DivisorClass, c2: i64) -> Result<Vec<WallClass>> {
    s.require_hirzebruch("wall enumeration")?;
    s.check(c1)?;
    let e = s.e().expect("checked");
    let delta = 4 * c2 - s.square(c1);
    if delta > MAX_DISCRIMINANT {
        return Err(Error::invalid(format!(
            "4c2 - c1^2 = {delta} exceeds {MAX_DISCRIMINANT}; too many candidate wall classes to scan"
        )));
    }
    let mut walls = Vec::new();
    let mut p = 1;
    while p * p * e + 2 * p <= delta {
        let mut q_abs = 1;
        while p * p * e + 2 * p * q_abs <= delta {
            let xi = DivisorClass::hirzebruch(p, -q_abs);
            match classify(s, &xi, c1, c2) {
                WallVerdict::Wall(w) => walls.push(w),
                WallVerdict::Rejected(WallRejection::NonIntegralLength) => {
                    return Err(Error::consistency(format!(
                        "ξ² - c1² not divisible by 4 for ξ = {xi}, c1 = {c1}"
                    )));
                }
                WallVerdict::Rejected(_) => {}
            }
            q_abs += 1;
        }
        p += 1;
    }
    walls.sort();
    Ok(walls)
}

/// Walls with `ξ·L1 > 0 > ξ·L2`, oriented that way and sorted.
pub fn separating_walls(
    s: &Surface,
    c1: &DivisorClass,
    c2: i64,
    l1: &DivisorClass,
    l2: &DivisorClass,
) -> Result<Vec<WallClass>> {
    s.require_ample(l1, "polarization")?;
    s.require_ample(l2, "polarization")?;
    let mut out: Vec<WallClass> = enumerate_walls(s, c1, c2)?
        .into_iter()
        .filter_map(|w| {
            let oriented = w.oriented_positive_on(s, l1)?;
            (s.dot(&oriented.xi, l2) < 0).then_some(oriented)
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum ChamberRelation {
    Same,
    Different {
        separating: Vec<DivisorClass>,
    },
    OnWall {
        polarization: DivisorClass,
        xi: DivisorClass,
    },
}

impl ChamberRelation {
    /// `None` when a polarization lies on a wall.
    pub fn is_same(&self) -> Option<bool> {
        match self {
            ChamberRelation::Same => Some(true),
            ChamberRelation::Different { .. } => Some(false),
            ChamberRelation::OnWall { .. } => None,
        }
    }
}

pub fn same_chamber(
    s: &Surface,
    c1: &DivisorClass,
    c2: i64,
    l1: &DivisorClass,
    l2: &DivisorClass,
) -> Result<ChamberRelation> {
    s.require_ample(l1, "polarization")?;
    s.require_ample(l2, "polarization")?;
    let walls = enumerate_walls(s, c1, c2)?;
    if let Some(err) = first_on_wall(s, &walls, &[*l1, *l2]) {
        return Ok(err);
    }
    let separating: Vec<DivisorClass> = walls
        .iter()
        .filter(|w| s.dot(&w.xi, l1).signum() != s.dot(&w.xi, l2).signum())
        .map(|w| w.xi)
        .collect();
    Ok(if separating.is_empty() {
        ChamberRelation::Same
    } else {
        ChamberRelation::Different { separating }
    })
}

fn first_on_wall(
    s: &Surface,
    walls: &[WallClass],
    pols: &[DivisorClass],
) -> Option<ChamberRelation> {
    pols.iter().find_map(|l| {
        walls
            .iter()
            .find(|w| s.dot(&w.xi, l) == 0)
            .map(|w| ChamberRelation::OnWall {
                polarization: *l,
                xi: w.xi,
            })
    })
}

/// Fails with [`Error::OnWall`] if any polarization lies on a wall.
pub(crate) fn require_off_walls(
    s: &Surface,
    walls: &[WallClass],
    pols: &[DivisorClass],
) -> Result<()> {
    match first_on_wall(s, walls, pols) {
        Some(ChamberRelation::OnWall { polarization, xi }) => {
            Err(Error::OnWall { polarization, xi })
        }
        _ => Ok(()),
    }
}
