//! Command-line front end.
//!
//! Every subcommand prints one JSON envelope
//! `{command, inputs, result, warnings, version}` (or the same data as a
//! flat table with `--format table`). Exit codes: 0 success, 1 invalid
//! input, 2 internal consistency failure.

pub mod svg;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::ZModel;
use crate::crossing::{crossing_report, hirzebruch_scenario};
use crate::error::{Error, Result};
use crate::invariants::{
    bn_defined, bn_number, chi_sheaf, gh_codim_bounds, instanton_report, moduli_dim,
    quadric_strata, ChernData,
};
use crate::picard::{DivisorClass, Surface};
use crate::stability::{destabilizers, h0_bundle, ExtensionData};
use crate::walls::{enumerate_walls, is_wall_class, same_chamber, separating_walls, WallVerdict};

pub use svg::cone_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;

/// Largest integer magnitude JSON consumers can represent exactly.
const JSON_SAFE_INT: i64 = 1 << 53;

#[derive(Parser, Debug)]
#[command(
    name = "bnwalls",
    version,
    about = "Brill-Noether and wall-crossing numerology on Hirzebruch surfaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    /// Surface: f0, f1, ... for Hirzebruch surfaces, or p2.
    #[arg(long, conflicts_with = "e")]
    surface: Option<Surface>,
    /// Hirzebruch invariant e (shorthand for --surface f<e>).
    #[arg(long)]
    e: Option<i64>,
}

impl SurfaceArgs {
    fn resolve(&self) -> Result<Surface> {
        match (self.surface, self.e) {
            (Some(s), _) => Ok(s),
            (None, Some(e)) => Surface::hirzebruch(e),
            (None, None) => Err(Error::invalid(
                "a surface is required: pass --surface or --e",
            )),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler characteristic chi(r; c1, c2).
    Chi {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 2)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
    /// Dimension 4c2 - c1^2 - 3 of the rank-2 moduli space.
    ModuliDim {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
    /// Brill-Noether number rho^k of a rank-2 moduli space.
    Bn {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        #[arg(long)]
        k: i64,
    },
    /// Check c1.H >= r K.H, which makes the Brill-Noether loci defined.
    BnDefined {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Polarization H.
        #[arg(long, allow_hyphen_values = true)]
        h: DivisorClass,
        #[arg(long, default_value_t = 2)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
    },
    /// Codimension bounds for W^{chi+ + 1}(r; c1, c2) on P2.
    GhBounds {
        #[arg(long, default_value_t = 2)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
    /// Walls of type (c1, c2) in the ample cone of F_e.
    Walls {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        /// Only walls separating two polarizations L1 L2 (oriented xi.L1 > 0).
        #[arg(long, num_args = 2, value_names = ["L1", "L2"], allow_hyphen_values = true,
              conflicts_with_all = ["same_chamber", "xi"])]
        between: Option<Vec<DivisorClass>>,
        /// Decide whether two polarizations lie in the same chamber.
        #[arg(long, num_args = 2, value_names = ["L1", "L2"], allow_hyphen_values = true,
              conflicts_with = "xi")]
        same_chamber: Option<Vec<DivisorClass>>,
        /// Test a single class against the wall conditions.
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<DivisorClass>,
    },
    /// Families swapped when the polarization moves between two chambers.
    Cross {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        #[arg(long, allow_hyphen_values = true)]
        from: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        to: DivisorClass,
    },
    /// The L_n / L_{n+1} wall crossing for c1 = C0 + alpha F on F_e.
    Hirzebruch {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        c2: i64,
        #[arg(long)]
        n: i64,
    },
    /// Brill-Noether stratification of M(2; (2n-1)l2, 2n) on the quadric.
    Quadric {
        #[arg(long)]
        n: i64,
    },
    /// Brill-Noether table of instanton bundles with c1 = 2, c2 = n on P3.
    Instanton {
        #[arg(long)]
        n: i64,
    },
    /// Stability of an extension 0 -> O(D) -> E -> O(c1 - D) (x) I_Z -> 0.
    Stability {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Polarization L.
        #[arg(long, allow_hyphen_values = true)]
        pol: DivisorClass,
        /// Sub-line bundle D.
        #[arg(long, allow_hyphen_values = true)]
        d: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
        /// Length of the 0-cycle Z.
        #[arg(long, default_value_t = 0)]
        length: i64,
        /// Declared h0(I_Z(M)) as M:h0, e.g. 0,3:1 (repeatable).
        #[arg(long = "override", value_name = "M:H0", allow_hyphen_values = true)]
        overrides: Vec<String>,
    },
    /// Write the ample cone with its walls and polarizations as SVG.
    ConeSvg {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        c1: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        /// Polarization to mark (repeatable).
        #[arg(long, allow_hyphen_values = true)]
        pol: Vec<DivisorClass>,
        #[arg(long)]
        out: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Chi { .. } => "chi",
            Command::ModuliDim { .. } => "moduli-dim",
            Command::Bn { .. } => "bn",
            Command::BnDefined { .. } => "bn-defined",
            Command::GhBounds { .. } => "gh-bounds",
            Command::Walls { .. } => "walls",
            Command::Cross { .. } => "cross",
            Command::Hirzebruch { .. } => "hirzebruch",
            Command::Quadric { .. } => "quadric",
            Command::Instanton { .. } => "instanton",
            Command::Stability { .. } => "stability",
            Command::ConeSvg { .. } => "cone-svg",
        }
    }
}

/// The document printed on standard output.
#[derive(Debug, Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub warnings: Vec<String>,
    pub version: String,
}

struct Outcome {
    inputs: Value,
    result: Value,
    warnings: Vec<String>,
}

fn to_value<T: Serialize>(t: &T) -> Result<Value> {
    serde_json::to_value(t).map_err(|e| Error::consistency(format!("serialization failed: {e}")))
}

fn surface_json(s: &Surface) -> Value {
    json!(s.to_string())
}

fn parse_override(s: &Surface, raw: &str) -> Result<(DivisorClass, i64)> {
    let (twist, h0) = raw.split_once(':').ok_or_else(|| {
        Error::invalid(format!("override {raw:?} must look like M:h0, e.g. 0,3:1"))
    })?;
    let twist: DivisorClass = twist.parse()?;
    s.check(&twist)?;
    let h0 = h0
        .trim()
        .parse::<i64>()
        .map_err(|_| Error::invalid(format!("bad section count in override {raw:?}")))?;
    Ok((twist, h0))
}

fn execute(command: &Command) -> Result<Outcome> {
    let mut warnings = Vec::new();
    let (inputs, result) = match command {
        Command::Chi {
            surface,
            rank,
            c1,
            c2,
        } => {
            let s = surface.resolve()?;
            let chern = ChernData::new(*rank, *c1, *c2);
            let chi = chi_sheaf(&s, &chern)?;
            (
                json!({"surface": surface_json(&s), "rank": rank, "c1": c1, "c2": c2}),
                json!(chi),
            )
        }
        Command::ModuliDim { surface, c1, c2 } => {
            let s = surface.resolve()?;
            let dim = moduli_dim(&s, &ChernData::rank2(*c1, *c2))?;
            (
                json!({"surface": surface_json(&s), "c1": c1, "c2": c2}),
                json!(dim),
            )
        }
        Command::Bn { surface, c1, c2, k } => {
            let s = surface.resolve()?;
            let rec = bn_number(&s, &ChernData::rank2(*c1, *c2), *k)?;
            (
                json!({"surface": surface_json(&s), "c1": c1, "c2": c2, "k": k}),
                to_value(&rec)?,
            )
        }
        Command::BnDefined {
            surface,
            h,
            rank,
            c1,
        } => {
            let s = surface.resolve()?;
            let check = bn_defined(&s, h, *rank, c1)?;
            if check.at_equality {
                warnings.push(
                    "c1.H equals r K.H: the H^2 vanishing argument uses the strict inequality"
                        .to_string(),
                );
            }
            (
                json!({"surface": surface_json(&s), "h": h, "rank": rank, "c1": c1}),
                to_value(&check)?,
            )
        }
        Command::GhBounds { rank, c1, c2 } => {
            let chern = ChernData::new(*rank, DivisorClass::plane(*c1), *c2);
            let interval = gh_codim_bounds(&chern)?;
            let chi = chi_sheaf(&Surface::ProjectivePlane, &chern)?;
            let case = match chi {
                x if x > 0 => "a",
                0 => "b",
                _ => "c",
            };
            if interval.lower.is_none() {
                warnings.push("only an upper bound is known when chi < 0".to_string());
            }
            (
                json!({"surface": "P2", "rank": rank, "c1": c1, "c2": c2}),
                json!({"chi": chi, "chi_plus": chi.max(0), "case": case,
                       "lower": interval.lower, "upper": interval.upper}),
            )
        }
        Command::Walls {
            surface,
            c1,
            c2,
            between,
            same_chamber: chamber,
            xi,
        } => {
            let s = surface.resolve()?;
            let mut inputs = json!({"surface": surface_json(&s), "c1": c1, "c2": c2});
            let result = if let Some(pols) = between {
                inputs["between"] = to_value(pols)?;
                to_value(&separating_walls(&s, c1, *c2, &pols[0], &pols[1])?)?
            } else if let Some(pols) = chamber {
                inputs["same_chamber"] = to_value(pols)?;
                to_value(&same_chamber(&s, c1, *c2, &pols[0], &pols[1])?)?
            } else if let Some(xi) = xi {
                inputs["xi"] = to_value(xi)?;
                match is_wall_class(&s, xi, c1, *c2)? {
                    WallVerdict::Wall(w) => {
                        json!({"certified": true, "xi": w.xi(), "xi_sq": w.xi_sq(), "length": w.length()})
                    }
                    WallVerdict::Rejected(why) => {
                        let mut v = json!({"certified": false, "xi": xi});
                        if let Value::Object(extra) = to_value(&why)? {
                            v.as_object_mut().expect("object").extend(extra);
                        }
                        v
                    }
                }
            } else {
                to_value(&enumerate_walls(&s, c1, *c2)?)?
            };
            (inputs, result)
        }
        Command::Cross {
            surface,
            c1,
            c2,
            from,
            to,
        } => {
            let s = surface.resolve()?;
            let report = crossing_report(&s, c1, *c2, from, to)?;
            for id in report.bn_identifications.iter().filter(|b| !b.matched) {
                warnings.push(format!(
                    "E_xi for xi = {} does not have the expected dimension rho^1 = {}",
                    id.xi, id.rho
                ));
            }
            (
                json!({"surface": surface_json(&s), "c1": c1, "c2": c2, "from": from, "to": to}),
                to_value(&report)?,
            )
        }
        Command::Hirzebruch { e, alpha, c2, n } => {
            let scenario = hirzebruch_scenario(*e, *alpha, *c2, *n)?;
            if !scenario.unique_separating_wall {
                warnings.push(format!(
                    "{} walls separate L_n and L_(n+1); they are not in adjacent chambers",
                    scenario.separating_walls.len()
                ));
            }
            (
                json!({"e": e, "alpha": alpha, "c2": c2, "n": n}),
                to_value(&scenario)?,
            )
        }
        Command::Quadric { n } => (
            json!({"n": n}),
            json!({"strata": to_value(&quadric_strata(*n)?)?}),
        ),
        Command::Instanton { n } => (json!({"n": n}), to_value(&instanton_report(*n)?)?),
        Command::Stability {
            surface,
            pol,
            d,
            c1,
            length,
            overrides,
        } => {
            let s = surface.resolve()?;
            let mut z = ZModel::generic(*length);
            for raw in overrides {
                let (twist, h0) = parse_override(&s, raw)?;
                z = z.with_override(twist, h0);
            }
            let ext = ExtensionData::new(*d, *c1, z);
            let found = destabilizers(&s, pol, &ext)?;
            let h0 = h0_bundle(&s, &ext)?;
            (
                json!({"surface": surface_json(&s), "pol": pol, "extension": to_value(&ext)?}),
                json!({"c2": ext.c2(&s), "stable": found.is_empty(),
                       "destabilizers": to_value(&found)?, "h0": to_value(&h0)?}),
            )
        }
        Command::ConeSvg {
            surface,
            c1,
            c2,
            pol,
            out,
        } => {
            let s = surface.resolve()?;
            let doc = cone_svg(&s, c1, *c2, pol)?;
            std::fs::write(out, &doc)
                .map_err(|e| Error::invalid(format!("cannot write {}: {e}", out.display())))?;
            let walls = enumerate_walls(&s, c1, *c2)?;
            (
                json!({"surface": surface_json(&s), "c1": c1, "c2": c2, "pol": pol, "out": out}),
                json!({"path": out, "walls": walls.len(), "polarizations": pol.len(), "bytes": doc.len()}),
            )
        }
    };
    check_json_safe(&result)?;
    Ok(Outcome {
        inputs,
        result,
        warnings,
    })
}

fn check_json_safe(v: &Value) -> Result<()> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) if i.abs() <= JSON_SAFE_INT => Ok(()),
            _ => Err(Error::consistency(format!(
                "{n} exceeds the exact JSON integer range"
            ))),
        },
        Value::Array(items) => items.iter().try_for_each(check_json_safe),
        Value::Object(map) => map.values().try_for_each(check_json_safe),
        _ => Ok(()),
    }
}

fn exit_code(err: &Error) -> i32 {
    if err.is_consistency() {
        EXIT_CONSISTENCY
    } else {
        EXIT_INVALID
    }
}

fn emit(out: &mut dyn Write, format: Format, env: &OutputEnvelope) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(env).expect("envelope serializes");
            writeln!(out, "{text}")
        }
        Format::Table => {
            let mut rows = vec![("command".to_string(), env.command.clone())];
            rows.extend(
                table::flatten(&env.inputs)
                    .into_iter()
                    .map(|(k, v)| (format!("inputs.{k}"), v)),
            );
            if let Some(result) = &env.result {
                rows.extend(table::flatten(result).into_iter().map(|(k, v)| {
                    if k == "result" {
                        (k, v)
                    } else {
                        (format!("result.{k}"), v)
                    }
                }));
            }
            if let Some(err) = &env.error {
                rows.push(("error".to_string(), err.clone()));
            }
            for w in &env.warnings {
                rows.push(("warning".to_string(), w.clone()));
            }
            rows.push(("version".to_string(), env.version.clone()));
            out.write_all(table::render(&rows).as_bytes())
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INVALID
                }
            };
        }
    };
    let mut env = OutputEnvelope {
        command: cli.command.name().to_string(),
        inputs: Value::Null,
        result: None,
        error: None,
        warnings: Vec::new(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let code = match execute(&cli.command) {
        Ok(outcome) => {
            env.inputs = outcome.inputs;
            env.result = Some(outcome.result);
            env.warnings = outcome.warnings;
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "bnwalls {}: {e}", env.command);
            env.error = Some(e.to_string());
            exit_code(&e)
        }
    };
    if emit(out, cli.format, &env).is_err() {
        return EXIT_INVALID;
    }
    code
}
