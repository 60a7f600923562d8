//! Argument parsing and command dispatch.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | usage error, unreadable or malformed spec |
//! | 3 | spec describes an invalid surface (not unimodular, Euler class not characteristic, ...) |
//! | 4 | odd Smale invariant: no compressible lift |
//! | 5 | `table --check` found a golden mismatch |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use num_bigint::BigInt;
use seifert_core::realize::{realize_compression, realize_hopf, realize_signature, solve_compression};
use seifert_core::{Error, SeifertSurfaceModel};
use serde_json::json;

use crate::report::{json_int, render_table, InvariantReport};
use crate::spec::SurfaceSpec;
use crate::table::{family_table, golden_mismatches, GOLDEN};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_SURFACE: i32 = 3;
pub const EXIT_ODD_SMALE: i32 = 4;
pub const EXIT_GOLDEN_MISMATCH: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "seifert",
    version,
    about = "Invariants of Seifert surfaces for Haefliger knots S^3 -> S^6"
)]
struct Cli {
    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// With `table`: compare against the embedded golden file.
    #[arg(long, global = true)]
    check: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the invariants of the surface described by a spec file.
    Compute {
        /// Path to a surface-spec JSON document.
        spec: PathBuf,
    },
    /// Attach P/Q blocks to reach a target Hopf invariant or signature.
    #[command(group(ArgGroup::new("target").required(true).args(["hopf", "sigma"])))]
    Realize {
        /// Haefliger invariant of the knot; the default base is s2xs2(omega, 1).
        #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
        omega: Option<BigInt>,
        /// Target Hopf invariant.
        #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
        hopf: Option<BigInt>,
        /// Target signature.
        #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
        sigma: Option<BigInt>,
        /// Spec file for the starting surface.
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Solve for (A, B) and build a surface whose compressed projection has the given Smale invariant.
    Compress {
        #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
        omega: BigInt,
        #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
        smale: BigInt,
    },
    /// Print the builder-family value table.
    Table,
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("{s:?} is not an integer"))
}

/// Result of one invocation: exit code plus what goes to stdout and stderr.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn surface_error(e: Error) -> Outcome {
    let code = match e {
        Error::OddSmaleInvariant => EXIT_ODD_SMALE,
        Error::PlanTooLarge => EXIT_USAGE,
        _ => EXIT_INVALID_SURFACE,
    };
    Outcome::fail(code, format!("error: {e}"))
}

fn load(path: &Path) -> Result<SeifertSurfaceModel, Outcome> {
    let spec = SurfaceSpec::read(path).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}")))?;
    spec.build().map_err(surface_error)
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    if cli.check && !matches!(cli.command, Command::Table) {
        return Outcome::fail(EXIT_USAGE, "error: --check only applies to `table`");
    }
    match cli.command {
        Command::Compute { spec } => match load(&spec) {
            Ok(s) => Outcome::ok(render_report(&InvariantReport::of(&s), cli.json)),
            Err(o) => o,
        },
        Command::Realize {
            omega,
            hopf,
            sigma,
            base,
        } => cmd_realize(omega, hopf, sigma, base, cli.json),
        Command::Compress { omega, smale } => cmd_compress(&omega, &smale, cli.json),
        Command::Table => cmd_table(cli.check, cli.json),
    }
}

fn render_report(r: &InvariantReport, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(r).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_table(std::slice::from_ref(r))
    }
}

fn cmd_realize(
    omega: Option<BigInt>,
    hopf: Option<BigInt>,
    sigma: Option<BigInt>,
    base: Option<PathBuf>,
    json: bool,
) -> Outcome {
    let base = match (base, omega) {
        (Some(path), omega) => {
            let s = match load(&path) {
                Ok(s) => s,
                Err(o) => return o,
            };
            if let Some(omega) = omega {
                let actual = s.haefliger_invariant();
                if actual != omega {
                    return Outcome::fail(
                        EXIT_USAGE,
                        format!(
                            "error: --omega {omega} disagrees with the base surface, which bounds Omega = {actual}"
                        ),
                    );
                }
            }
            s
        }
        (None, Some(omega)) => SeifertSurfaceModel::s2xs2(omega, 1),
        (None, None) => return Outcome::fail(EXIT_USAGE, "error: realize needs --omega or --base"),
    };
    let plan = match (hopf, sigma) {
        (Some(h), None) => realize_hopf(&base, &h),
        (None, Some(s)) => realize_signature(&base, &s),
        _ => unreachable!("clap enforces exactly one target"),
    };
    let plan = match plan {
        Ok(p) => p,
        Err(e) => return surface_error(e),
    };
    let base_report = InvariantReport::of(&plan.base);
    let result = InvariantReport::of(&plan.result);
    if json {
        let v = json!({
            "base": base_report,
            "p_count": plan.p_count,
            "q_count": plan.q_count,
            "result": result,
        });
        Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "p_count: {}", plan.p_count);
        let _ = writeln!(out, "q_count: {}", plan.q_count);
        out.push_str(&render_table(&[base_report, result]));
        Outcome::ok(out)
    }
}

fn cmd_compress(omega: &BigInt, smale: &BigInt, json: bool) -> Outcome {
    let data = match solve_compression(omega, smale) {
        Ok(d) => d,
        Err(Error::OddSmaleInvariant) => {
            return Outcome::fail(
                EXIT_ODD_SMALE,
                format!(
                    "error: Smale invariant {smale} is odd; an immersion S^3 -> R^5 is the projection of an embedding in R^6 only if its Smale invariant is even"
                ),
            )
        }
        Err(e) => return surface_error(e),
    };
    let surface = match realize_compression(omega, smale) {
        Ok(s) => s,
        Err(e) => return surface_error(e),
    };
    let report = InvariantReport::of(&surface);
    if json {
        let v = json!({
            "a": json_int::to_value(&data.a),
            "b": json_int::to_value(&data.b),
            "omega": json_int::to_value(omega),
            "smale": json_int::to_value(smale),
            "surface": report,
        });
        Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))
    } else {
        let mut out = format!("A: {}\nB: {}\n", data.a, data.b);
        out.push_str(&render_table(&[report]));
        Outcome::ok(out)
    }
}

fn cmd_table(check: bool, json: bool) -> Outcome {
    let rows = family_table();
    if check {
        let generated = render_table(&rows);
        let diffs = golden_mismatches(&generated, GOLDEN);
        if !diffs.is_empty() {
            let mut msg = format!("error: {} line(s) differ from the golden table\n", diffs.len());
            for (line, golden, got) in diffs {
                let _ = writeln!(msg, "line {line}:\n  golden:    {golden}\n  generated: {got}");
            }
            return Outcome::fail(EXIT_GOLDEN_MISMATCH, msg);
        }
        let out = if json {
            format!("{}\n", serde_json::to_string_pretty(&rows).unwrap())
        } else {
            generated
        };
        let mut o = Outcome::ok(out);
        o.stderr = format!("table matches golden ({} rows)\n", rows.len());
        return o;
    }
    if json {
        Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&rows).unwrap()))
    } else {
        Outcome::ok(render_table(&rows))
    }
}
