//! Picard lattices of the supported rational surfaces.
//!
//! A Hirzebruch surface `F_e` has `Pic = Z·C0 ⊕ Z·F` with `C0² = -e`,
//! `F² = 0`, `C0·F = 1`; the projective plane has `Pic = Z·H` with `H² = 1`.
//! Numerical and linear equivalence agree on both, so a divisor class is
//! just its integer coordinate vector in the fixed basis.
//!
//! Every coordinate (and `e`) accepted at the boundary is bounded by
//! [`COORD_LIMIT`]. All formulas downstream are polynomials of degree at most
//! three in small integer combinations of such values, so `i64` arithmetic
//! cannot overflow.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute value accepted for a divisor coordinate, `e`, or `c2`.
pub const COORD_LIMIT: i64 = 1 << 16;

/// A divisor class in the fixed basis of its surface: `(C0, F)` coefficients
/// on `F_e`, or the `H` coefficient on `P²`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", try_from = "Vec<i64>")]
pub struct DivisorClass {
    rank: u8,
    coords: [i64; 2],
}

impl DivisorClass {
    /// `a·C0 + b·F` on a Hirzebruch surface.
    pub const fn hirzebruch(a: i64, b: i64) -> Self {
        DivisorClass {
            rank: 2,
            coords: [a, b],
        }
    }

    /// `m·H` on the projective plane.
    pub const fn plane(m: i64) -> Self {
        DivisorClass {
            rank: 1,
            coords: [m, 0],
        }
    }

    pub fn from_coords(coords: &[i64]) -> Result<Self> {
        match *coords {
            [m] => Ok(Self::plane(m)),
            [a, b] => Ok(Self::hirzebruch(a, b)),
            _ => Err(Error::invalid(format!(
                "a divisor class has 1 or 2 coordinates, got {}",
                coords.len()
            ))),
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.rank as usize]
    }

    /// Picard rank of the lattice this class belongs to.
    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// The `(C0, F)` coefficients, if this is a Hirzebruch class.
    pub fn pair(&self) -> Option<(i64, i64)> {
        (self.rank == 2).then_some((self.coords[0], self.coords[1]))
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    /// The zero class in the same lattice.
    pub fn zero_like(&self) -> Self {
        DivisorClass {
            rank: self.rank,
            coords: [0, 0],
        }
    }

    /// Exact half of the class, when every coordinate is even.
    pub fn halve(&self) -> Option<Self> {
        if self.coords().iter().all(|c| c % 2 == 0) {
            Some(DivisorClass {
                rank: self.rank,
                coords: [self.coords[0] / 2, self.coords[1] / 2],
            })
        } else {
            None
        }
    }

    fn zip(self, other: Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(
            self.rank, other.rank,
            "mixing divisor classes from lattices of different rank"
        );
        DivisorClass {
            rank: self.rank,
            coords: [
                f(self.coords[0], other.coords[0]),
                f(self.coords[1], other.coords[1]),
            ],
        }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: Self) -> Self {
        self.zip(rhs, |x, y| x + y)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: Self) -> Self {
        self.zip(rhs, |x, y| x - y)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> Self {
        self.zero_like() - self
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass {
            rank: rhs.rank,
            coords: [self * rhs.coords[0], self * rhs.coords[1]],
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<DivisorClass> for Vec<i64> {
    fn from(d: DivisorClass) -> Self {
        d.coords().to_vec()
    }
}

impl TryFrom<Vec<i64>> for DivisorClass {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        DivisorClass::from_coords(&v)
    }
}

/// Parses comma-separated integers, e.g. `"1,-2"` or `"3"`.
impl FromStr for DivisorClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::invalid(format!("bad divisor coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DivisorClass::from_coords(&coords)
    }
}

/// One of the supported rational surfaces. Both have arithmetic genus 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Surface {
    Hirzebruch { e: i64 },
    ProjectivePlane,
}

impl Surface {
    pub fn hirzebruch(e: i64) -> Result<Self> {
        if !(0..=COORD_LIMIT).contains(&e) {
            return Err(Error::invalid(format!(
                "Hirzebruch invariant e={e} out of range 0..={COORD_LIMIT}"
            )));
        }
        Ok(Surface::Hirzebruch { e })
    }

    pub fn e(&self) -> Option<i64> {
        match *self {
            Surface::Hirzebruch { e } => Some(e),
            Surface::ProjectivePlane => None,
        }
    }

    pub fn picard_rank(&self) -> usize {
        match self {
            Surface::Hirzebruch { .. } => 2,
            Surface::ProjectivePlane => 1,
        }
    }

    pub fn arithmetic_genus(&self) -> i64 {
        0
    }

    /// Builds a class on this surface, checking its length and magnitude.
    pub fn class(&self, coords: &[i64]) -> Result<DivisorClass> {
        let d = DivisorClass::from_coords(coords)?;
        self.check(&d)?;
        Ok(d)
    }

    /// Verifies that `d` lives in this surface's lattice and is in range.
    pub fn check(&self, d: &DivisorClass) -> Result<()> {
        if d.rank() != self.picard_rank() {
            return Err(Error::invalid(format!(
                "class {d} has {} coordinates but {self} has Picard rank {}",
                d.rank(),
                self.picard_rank()
            )));
        }
        if let Some(c) = d.coords().iter().find(|c| c.abs() > COORD_LIMIT) {
            return Err(Error::invalid(format!(
                "coordinate {c} of {d} exceeds the supported range ±{COORD_LIMIT}"
            )));
        }
        Ok(())
    }

    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        self.check(d1)?;
        self.check(d2)?;
        Ok(self.dot(d1, d2))
    }

    /// Intersection form without validation; callers guarantee matching ranks.
    pub(crate) fn dot(&self, d1: &DivisorClass, d2: &DivisorClass) -> i64 {
        match *self {
            Surface::Hirzebruch { e } => {
                let [a1, b1] = d1.coords;
                let [a2, b2] = d2.coords;
                -a1 * a2 * e + a1 * b2 + a2 * b1
            }
            Surface::ProjectivePlane => d1.coords[0] * d2.coords[0],
        }
    }

    pub(crate) fn square(&self, d: &DivisorClass) -> i64 {
        self.dot(d, d)
    }

    /// `K = -2C0 - (e+2)F` on `F_e`, `K = -3H` on `P²`.
    pub fn canonical(&self) -> DivisorClass {
        match *self {
            Surface::Hirzebruch { e } => DivisorClass::hirzebruch(-2, -(e + 2)),
            Surface::ProjectivePlane => DivisorClass::plane(-3),
        }
    }

    /// `aC0 + bF` is ample iff `a > 0` and `b > ae`; `mH` iff `m > 0`.
    /// Classes from another lattice are never ample here.
    pub fn is_ample(&self, d: &DivisorClass) -> bool {
        if d.rank() != self.picard_rank() {
            return false;
        }
        match *self {
            Surface::Hirzebruch { e } => {
                let [a, b] = d.coords;
                a > 0 && b > a * e
            }
            Surface::ProjectivePlane => d.coords[0] > 0,
        }
    }

    /// Effective iff every coordinate is non-negative.
    pub fn is_effective(&self, d: &DivisorClass) -> bool {
        d.rank() == self.picard_rank() && d.coords().iter().all(|&c| c >= 0)
    }

    /// True iff `xi + c1` is divisible by two in the Picard lattice.
    pub fn parity_compatible(&self, xi: &DivisorClass, c1: &DivisorClass) -> bool {
        xi.rank() == self.picard_rank()
            && c1.rank() == self.picard_rank()
            && (*xi + *c1).halve().is_some()
    }

    pub(crate) fn require_hirzebruch(&self, what: &str) -> Result<i64> {
        self.e().ok_or_else(|| {
            Error::invalid(format!("{what} is only supported on Hirzebruch surfaces"))
        })
    }

    pub(crate) fn require_ample(&self, d: &DivisorClass, role: &str) -> Result<()> {
        self.check(d)?;
        if self.is_ample(d) {
            return Ok(());
        }
        match (self, d.pair()) {
            (Surface::Hirzebruch { e }, Some((a, b))) if a > 0 && b == a * e => {
                Err(Error::BoundaryPolarization(*d))
            }
            _ => Err(Error::invalid(format!("{role} {d} is not ample on {self}"))),
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Hirzebruch { e } => write!(f, "F_{e}"),
            Surface::ProjectivePlane => f.write_str("P2"),
        }
    }
}

/// Parses `f0`, `f1`, ..., or `p2` (case-insensitive).
impl FromStr for Surface {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "p2" {
            return Ok(Surface::ProjectivePlane);
        }
        lower
            .strip_prefix('f')
            .and_then(|rest| rest.parse::<i64>().ok())
            .ok_or_else(|| Error::invalid(format!("unknown surface {s:?}; expected f<e> or p2")))
            .and_then(Surface::hirzebruch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(e: i64) -> Surface {
        Surface::hirzebruch(e).unwrap()
    }

    const C0: DivisorClass = DivisorClass::hirzebruch(1, 0);
    const F: DivisorClass = DivisorClass::hirzebruch(0, 1);

    #[test]
    fn basis_intersections() {
        for e in 0..6 {
            let s = fe(e);
            assert_eq!(s.intersect(&C0, &F).unwrap(), 1);
            assert_eq!(s.intersect(&C0, &C0).unwrap(), -e);
            assert_eq!(s.intersect(&F, &F).unwrap(), 0);
        }
    }

    #[test]
    fn hirzebruch_polarization_pairs_with_its_wall() {
        for e in 0..4 {
            for alpha in 0..2 {
                for c2 in 2..8 {
                    for n in 1..c2 {
                        let l_n = DivisorClass::hirzebruch(1, e + 2 * c2 - alpha - 2 * n + 1);
                        let xi_n = DivisorClass::hirzebruch(1, -(2 * c2 - alpha - 2 * n));
                        assert_eq!(fe(e).intersect(&l_n, &xi_n).unwrap(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        let err = fe(1).intersect(&C0, &DivisorClass::plane(1)).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        assert!(Surface::ProjectivePlane.intersect(&C0, &C0).is_err());
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(fe(3).canonical(), DivisorClass::hirzebruch(-2, -5));
        assert_eq!(fe(0).canonical(), DivisorClass::hirzebruch(-2, -2));
        assert_eq!(
            Surface::ProjectivePlane.canonical(),
            DivisorClass::plane(-3)
        );
        for e in 0..10 {
            let k = fe(e).canonical();
            assert_eq!(fe(e).intersect(&k, &k).unwrap(), 8);
        }
        let k = Surface::ProjectivePlane.canonical();
        assert_eq!(Surface::ProjectivePlane.intersect(&k, &k).unwrap(), 9);
    }

    #[test]
    fn ample_and_effective_cones() {
        for e in 0..5 {
            let s = fe(e);
            assert!(s.is_ample(&DivisorClass::hirzebruch(1, e + 1)));
            assert!(!s.is_ample(&DivisorClass::hirzebruch(1, e)));
            assert!(s.is_effective(&DivisorClass::hirzebruch(2, 0)));
            assert!(!s.is_effective(&DivisorClass::hirzebruch(-1, 5)));
            assert!(s.is_effective(&DivisorClass::hirzebruch(0, 0)));
        }
        assert!(!fe(0).is_ample(&DivisorClass::hirzebruch(0, 1)));
        assert!(Surface::ProjectivePlane.is_ample(&DivisorClass::plane(1)));
        assert!(!Surface::ProjectivePlane.is_ample(&DivisorClass::plane(0)));
    }

    #[test]
    fn parity() {
        let s = fe(2);
        for c2 in 2..6 {
            for alpha in 0..2 {
                for n in 1..c2 {
                    let xi = DivisorClass::hirzebruch(1, -(2 * c2 - alpha - 2 * n));
                    assert!(s.parity_compatible(&xi, &DivisorClass::hirzebruch(1, alpha)));
                }
            }
        }
        assert!(s.parity_compatible(&C0, &C0));
        assert!(!s.parity_compatible(&C0, &F));
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "1,-2".parse::<DivisorClass>().unwrap(),
            DivisorClass::hirzebruch(1, -2)
        );
        assert_eq!(
            " 3 ".parse::<DivisorClass>().unwrap(),
            DivisorClass::plane(3)
        );
        assert!("1,2,3".parse::<DivisorClass>().is_err());
        assert!("x".parse::<DivisorClass>().is_err());
        assert_eq!(
            "F3".parse::<Surface>().unwrap(),
            Surface::Hirzebruch { e: 3 }
        );
        assert_eq!("p2".parse::<Surface>().unwrap(), Surface::ProjectivePlane);
        assert!("f-1".parse::<Surface>().is_err());
        assert!("q".parse::<Surface>().is_err());
    }

    #[test]
    fn out_of_range_coordinates() {
        assert!(fe(0).class(&[COORD_LIMIT + 1, 0]).is_err());
        assert!(fe(0).class(&[COORD_LIMIT, -COORD_LIMIT]).is_ok());
        assert!(Surface::hirzebruch(-1).is_err());
    }

    #[test]
    fn boundary_polarization_error() {
        let s = fe(2);
        assert_eq!(
            s.require_ample(&DivisorClass::hirzebruch(1, 2), "L"),
            Err(Error::BoundaryPolarization(DivisorClass::hirzebruch(1, 2)))
        );
        assert!(matches!(
            s.require_ample(&DivisorClass::hirzebruch(-1, 2), "L"),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn serde_shape() {
        let d = DivisorClass::hirzebruch(1, -2);
        assert_eq!(serde_json::to_string(&d).unwrap(), "[1,-2]");
        assert_eq!(
            serde_json::from_str::<DivisorClass>("[4]").unwrap(),
            DivisorClass::plane(4)
        );
        assert!(serde_json::from_str::<DivisorClass>("[]").is_err());
    }
}
