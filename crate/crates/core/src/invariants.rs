//! Euler characteristics, moduli dimensions and Brill–Noether numbers.
//!
//! The Brill–Noether number of `W^k ⊂ M` is `ρ^k = dim M - k(k - χ)`, the
//! lower bound on the dimension of every non-empty component of the locus
//! of bundles with at least `k` sections.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{DivisorClass, Surface, COORD_LIMIT};

/// Rank and Chern classes of a bundle on a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernData {
    pub rank: i64,
    pub c1: DivisorClass,
    pub c2: i64,
}

impl ChernData {
    pub fn new(rank: i64, c1: DivisorClass, c2: i64) -> Self {
        ChernData { rank, c1, c2 }
    }

    pub fn rank2(c1: DivisorClass, c2: i64) -> Self {
        ChernData { rank: 2, c1, c2 }
    }

    pub fn validate(&self, s: &Surface) -> Result<()> {
        if self.rank < 1 {
            return Err(Error::invalid(format!(
                "rank {} must be at least 1",
                self.rank
            )));
        }
        if self.rank > COORD_LIMIT || self.c2.abs() > COORD_LIMIT {
            return Err(Error::invalid(format!(
                "rank {} or c2 {} exceeds the supported range ±{COORD_LIMIT}",
                self.rank, self.c2
            )));
        }
        s.check(&self.c1)
    }

    fn require_rank2(&self) -> Result<()> {
        if self.rank != 2 {
            return Err(Error::invalid(format!(
                "moduli dimensions are only known for rank 2, got rank {}",
                self.rank
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BNRecord {
    pub k: i64,
    pub chi: i64,
    pub moduli_dim: i64,
    pub rho: i64,
}

impl BNRecord {
    fn new(k: i64, chi: i64, moduli_dim: i64) -> Self {
        BNRecord {
            k,
            chi,
            moduli_dim,
            rho: moduli_dim - k * (k - chi),
        }
    }
}

/// Codimension interval for a Brill–Noether locus; `lower` is absent when
/// only an upper bound is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimInterval {
    pub lower: Option<i64>,
    pub upper: i64,
}

/// `χ(r; c1, c2) = r(1 + p_a) - c1·K/2 + c1²/2 - c2`.
pub fn chi_sheaf(s: &Surface, c: &ChernData) -> Result<i64> {
    c.validate(s)?;
    let twice = s.square(&c.c1) - s.dot(&c.c1, &s.canonical());
    if twice % 2 != 0 {
        return Err(Error::consistency(format!(
            "c1² - c1·K = {twice} is odd for c1 = {}",
            c.c1
        )));
    }
    Ok(c.rank * (1 + s.arithmetic_genus()) + twice / 2 - c.c2)
}

/// `dim M(2; c1, c2) = 4c2 - c1² - 3` on a rational surface with effective
/// anticanonical class.
pub fn moduli_dim(s: &Surface, c: &ChernData) -> Result<i64> {
    c.validate(s)?;
    c.require_rank2()?;
    Ok(4 * c.c2 - s.square(&c.c1) - 3)
}

pub fn bn_number(s: &Surface, c: &ChernData, k: i64) -> Result<BNRecord> {
    c.require_rank2()?;
    if k < 0 {
        return Err(Error::invalid(format!("k = {k} must be non-negative")));
    }
    Ok(BNRecord::new(k, chi_sheaf(s, c)?, moduli_dim(s, c)?))
}

/// Outcome of the vanishing test `c1·H ≥ r(K·H)` that makes `W^k` defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BnDefined {
    pub holds: bool,
    /// Equality holds; the vanishing argument itself uses the strict form.
    pub at_equality: bool,
    pub c1_h: i64,
    pub rank_k_h: i64,
}

pub fn bn_defined(
    s: &Surface,
    h: &DivisorClass,
    rank: i64,
    c1: &DivisorClass,
) -> Result<BnDefined> {
    s.require_ample(h, "polarization")?;
    s.check(c1)?;
    if rank < 1 {
        return Err(Error::invalid(format!("rank {rank} must be at least 1")));
    }
    let c1_h = s.dot(c1, h);
    let rank_k_h = rank * s.dot(&s.canonical(), h);
    Ok(BnDefined {
        holds: c1_h >= rank_k_h,
        at_equality: c1_h == rank_k_h,
        c1_h,
        rank_k_h,
    })
}

/// Codimension bounds for `W^{χ⁺+1}(r; c1, c2)` on `P²`, assuming `c1 > -3r`.
pub fn gh_codim_bounds(c: &ChernData) -> Result<CodimInterval> {
    let plane = Surface::ProjectivePlane;
    let chi = chi_sheaf(&plane, c)?;
    let c1 = c.c1.coords()[0];
    if c1 <= -3 * c.rank {
        return Err(Error::invalid(format!(
            "hypothesis c1 > -3r fails: c1 = {c1}, r = {}",
            c.rank
        )));
    }
    let chi_plus = chi.max(0);
    Ok(match chi {
        x if x > 0 => CodimInterval {
            lower: Some(2),
            upper: chi + 1,
        },
        0 => CodimInterval {
            lower: Some(1),
            upper: 1,
        },
        _ => CodimInterval {
            lower: None,
            upper: (chi_plus + 1) * (chi_plus + 1 - chi),
        },
    })
}

/// One row of the Brill–Noether stratification of `M(2; (2n-1)l₂, 2n)` on
/// the quadric, polarized by `l₁ + n·l₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricStratum {
    #[serde(flatten)]
    pub record: BNRecord,
    /// Actual dimension of the (non-empty) locus `W^k`.
    pub known_dim: i64,
    /// `ρ^k < 0` although `W^k` is non-empty.
    pub negative_yet_nonempty: bool,
    /// `ρ^k > 0` but the locus is strictly larger than expected.
    pub exceeds_expected: bool,
}

pub fn quadric_strata(n: i64) -> Result<Vec<QuadricStratum>> {
    if !(2..=COORD_LIMIT / 4).contains(&n) {
        return Err(Error::invalid(format!(
            "quadric strata need 2 <= n <= {}, got {n}",
            COORD_LIMIT / 4
        )));
    }
    let quadric = Surface::Hirzebruch { e: 0 };
    let chern = ChernData::rank2(DivisorClass::hirzebruch(0, 2 * n - 1), 2 * n);
    (1..=n)
        .map(|k| {
            let record = bn_number(&quadric, &chern, k)?;
            let known_dim = 8 * n - 2 * k - 1;
            let excess = k * (k - 1);
            let dim_m = record.moduli_dim;
            Ok(QuadricStratum {
                record,
                known_dim,
                negative_yet_nonempty: excess > dim_m,
                exceeds_expected: 2 < excess && excess < dim_m,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantonRow {
    pub k: i64,
    pub rho: i64,
    pub nonempty: bool,
}

/// Brill–Noether data of the 't Hooft component `MI_0(n)` of instanton
/// bundles with `c1 = 2`, `c2 = n` on `P³`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantonReport {
    pub n: i64,
    pub chi: i64,
    pub moduli_dim: i64,
    pub rows: Vec<InstantonRow>,
    pub nonempty_ks: Vec<i64>,
    /// Whether `W^k ≠ ∅ ⇔ ρ^k ≥ 0 ⇔ k < 3` was asserted (only for `n > 13`).
    pub equivalence_asserted: bool,
}

/// `h⁰(E) ≤ 2` on `MI_0(n)`, and both values are attained by 't Hooft
/// bundles (general vs. lines on a quadric).
const INSTANTON_NONEMPTY_KS: [i64; 2] = [1, 2];

fn chi_p3(m: i64) -> i64 {
    (m + 1) * (m + 2) * (m + 3) / 6
}

pub fn instanton_rho(n: i64, k: i64) -> i64 {
    let chi = instanton_chi(n);
    (8 * n - 11) - k * (k - chi)
}

/// `χ(E)` read off the monad `O(-1)^{n-1} → O^{2n} → O(1)^{n-1}` for `E(-1)`.
pub fn instanton_chi(n: i64) -> i64 {
    2 * n * chi_p3(1) - (n - 1) * chi_p3(2) - (n - 1)
}

pub fn instanton_report(n: i64) -> Result<InstantonReport> {
    if !(1..=COORD_LIMIT).contains(&n) {
        return Err(Error::invalid(format!(
            "instanton charge n = {n} out of range 1..={COORD_LIMIT}"
        )));
    }
    let rows: Vec<InstantonRow> = (1..=3)
        .map(|k| InstantonRow {
            k,
            rho: instanton_rho(n, k),
            nonempty: INSTANTON_NONEMPTY_KS.contains(&k),
        })
        .collect();
    let equivalence_asserted = n > 13;
    if equivalence_asserted {
        for row in &rows {
            if row.nonempty != (row.rho >= 0) || row.nonempty != (row.k < 3) {
                return Err(Error::consistency(format!(
                    "n = {n}, k = {}: non-emptiness, ρ ≥ 0 and k < 3 disagree (ρ = {})",
                    row.k, row.rho
                )));
            }
        }
    }
    Ok(InstantonReport {
        n,
        chi: instanton_chi(n),
        moduli_dim: 8 * n - 11,
        rows,
        nonempty_ks: INSTANTON_NONEMPTY_KS.to_vec(),
        equivalence_asserted,
    })
}
