//! Brill-Noether numerology and wall-crossing for rank-2 sheaves on
//! Hirzebruch surfaces and the projective plane.
//!
//! Modules, from the ground up:
//! - [`picard`]: surfaces, divisor classes, intersection form.
//! - [`cohomology`]: line-bundle cohomology and twisted ideal sheaves of 0-cycles.
//! - [`invariants`]: Euler characteristics, moduli dimensions, Brill-Noether numbers.
//! - [`walls`]: certification and enumeration of walls, chamber comparison.
//! - [`crossing`]: the families exchanged across a wall and their Brill-Noether reading.
//! - [`stability`]: a brute-force stability oracle for extension bundles.
//! - [`cli`]: the `bnwalls` command line and SVG rendering.

pub mod cli;
pub mod cohomology;
pub mod crossing;
pub mod error;
pub mod invariants;
pub mod picard;
pub mod stability;
pub mod walls;

pub use cli::svg::cone_svg;
pub use cohomology::{
    chi_line, cohomology_ideal, cohomology_line, h0_line, CohomologyTriple, ZModel,
};
pub use crossing::{
    crossing_report, dim_ext_family, ext_family, hirzebruch_scenario, BnIdentification,
    CrossingReport, ExtFamily, HirzebruchScenario,
};
pub use error::{Error, Result};
pub use invariants::{
    bn_defined, bn_number, chi_sheaf, gh_codim_bounds, instanton_report, moduli_dim,
    quadric_strata, BNRecord, ChernData, CodimInterval, InstantonReport, QuadricStratum,
};
pub use picard::{DivisorClass, Surface, COORD_LIMIT};
pub use stability::{
    destabilizers, h0_bundle, is_stable, Destabilizer, ExtensionData, SectionCount,
};
pub use walls::{
    enumerate_walls, is_wall_class, same_chamber, separating_walls, wall_meets_ample_cone,
    ChamberRelation, WallClass, WallRejection, WallVerdict,
};
