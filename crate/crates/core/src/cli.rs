//! The `superroots` command line, runnable in-process.
//!
//! Exit codes: 0 success, 1 violations or a failed check, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::affine::{build_affine_with, AffineRootSystem, AffineTypeId};
use crate::error::{Error, Result};
use crate::finite::{build_finite_with, check_supersystem_axioms, FiniteTypeId};
use crate::json;
use crate::scalar::LambdaMode;
use crate::shadow::check_closure_38;
use crate::subsystems::{decompose, scenario, zeta_pipeline, CasePreference, RootSubset, ZetaCase, SCENARIO_NAMES};
use crate::tables::golden_compare;

#[derive(Debug, Parser)]
#[command(
    name = "superroots",
    about = "Exact root combinatorics for untwisted affine Lie superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Type spec such as `B,1,1`, `D21`, `G3`, `s,2`.
    #[arg(long = "type")]
    type_spec: Option<String>,
    /// Rank parameters appended to `--type`, e.g. `--type B --ranks 1,1`.
    #[arg(long)]
    ranks: Option<String>,
    /// Window `|k| ≤ K` for every enumeration.
    #[arg(long, default_value_t = 5)]
    window: i64,
    /// `symbolic` or a rational `p/q` outside {0, -1}.
    #[arg(long, default_value = "symbolic")]
    lambda: String,
    /// Write the primary output here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an affine system and list its layers.
    Build(Common),
    /// Classify one root, or every root in the window.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        root: Option<String>,
    },
    /// Check the supersystem axioms of a finite type.
    Axioms(Common),
    /// Check a shadow JSON file against the closure laws.
    ShadowValidate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        input: PathBuf,
    },
    /// Decompose `R₀` of a type into its affine components.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        scenario: Option<String>,
    },
    /// Construct and verify `ζ` for a named scenario or a shadow file.
    Zeta {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        scenario: Option<String>,
        /// Shadow JSON; `S` is then `R₀` of its system.
        #[arg(long)]
        input: Option<PathBuf>,
        /// `auto`, `1`, `2`, `3` or `4`.
        #[arg(long)]
        case: Option<String>,
    },
    /// Classify the window and diff it against the printed tables.
    Tables(Common),
    /// Export the window (or the finite set) as JSON.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        finite: bool,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs one command; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::usage(text),
            };
        }
    };
    let (common, result) = match &cli.command {
        Command::Build(c) => (c, build(c)),
        Command::Classify { common, root } => (common, classify(common, root.as_deref())),
        Command::Axioms(c) => (c, axioms(c)),
        Command::ShadowValidate { common, input } => (common, shadow_validate(common, input)),
        Command::Decompose { common, scenario } => (common, decompose_cmd(common, scenario.as_deref())),
        Command::Zeta {
            common,
            scenario,
            input,
            case,
        } => (
            common,
            zeta(common, scenario.as_deref(), input.as_ref(), case.as_deref()),
        ),
        Command::Tables(c) => (c, tables(c)),
        Command::Export { common, finite } => (common, export(common, *finite)),
    };
    match result {
        Ok((code, body)) => match &common.output {
            Some(path) => match fs::write(path, &body) {
                Ok(()) => Outcome {
                    code,
                    stdout: format!("wrote {}\n", path.display()),
                    stderr: String::new(),
                },
                Err(e) => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("cannot write {}: {e}\n", path.display()),
                },
            },
            None => Outcome {
                code,
                stdout: body,
                stderr: String::new(),
            },
        },
        Err(e) => {
            let code = match e {
                Error::UnknownType(_) | Error::Parse(_) | Error::Rank(_) => 2,
                _ => 1,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

type Run = Result<(i32, String)>;

fn type_text(c: &Common) -> Result<String> {
    let t = c
        .type_spec
        .clone()
        .ok_or_else(|| Error::Parse("--type is required".into()))?;
    Ok(match &c.ranks {
        Some(r) => format!("{t},{r}"),
        None => t,
    })
}

fn lambda(c: &Common) -> Result<LambdaMode> {
    LambdaMode::parse(&c.lambda)
}

fn window(c: &Common) -> Result<i64> {
    if c.window < 0 {
        return Err(Error::Parse(format!("--window must be nonnegative, got {}", c.window)));
    }
    Ok(c.window)
}

fn affine(c: &Common) -> Result<AffineRootSystem> {
    let ty = AffineTypeId::parse(&type_text(c)?)?;
    let mode = lambda(c)?;
    window(c)?;
    build_affine_with(ty, mode)
}

fn build(c: &Common) -> Run {
    let s = affine(c)?;
    let mut out = String::new();
    let amb = s.ambient();
    writeln!(
        out,
        "{}  ambient: {}  lambda: {}",
        s.type_id(),
        amb.symbols().join(" "),
        s.form().lambda_mode().label()
    )
    .ok();
    writeln!(out, "{:<28} {:<12} parity", "layer", "kind").ok();
    for l in s.layers() {
        writeln!(
            out,
            "{:<28} {:<12} {}",
            l.to_string(),
            s.classify(l)?.label(),
            s.parity(l)?.label()
        )
        .ok();
    }
    writeln!(
        out,
        "{} layers, {} roots with |k| <= {}",
        s.layers().count(),
        s.window(c.window).len(),
        c.window
    )
    .ok();
    Ok((0, out))
}

fn classify(c: &Common, root: Option<&str>) -> Run {
    let s = affine(c)?;
    let roots = match root {
        Some(text) => {
            let r = s.parse_root(text)?;
            if !s.contains(&r) {
                return Ok((1, format!("{r}: not a root of {}\n", s.type_id())));
            }
            vec![r]
        }
        None => s.window(c.window),
    };
    let mut out = String::new();
    for r in roots {
        writeln!(
            out,
            "{:<28} {:<12} {}",
            r.to_string(),
            s.classify(&r)?.label(),
            s.parity(&r)?.label()
        )
        .ok();
    }
    Ok((0, out))
}

fn axioms(c: &Common) -> Run {
    let ty = FiniteTypeId::parse(&type_text(c)?)?;
    let set = build_finite_with(ty, lambda(c)?)?;
    let report = check_supersystem_axioms(&set);
    Ok((if report.all_passed() { 0 } else { 1 }, report.to_string()))
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn shadow_validate(c: &Common, input: &PathBuf) -> Run {
    let w = window(c)?;
    let shadow = json::shadow_from_json(&read_json(input)?)?;
    let violations = check_closure_38(&shadow, w);
    let report = json!({
        "system": json::system_header(shadow.system()),
        "window": w,
        "violations": json::violations_to_json(&violations),
    });
    Ok((if violations.is_empty() { 0 } else { 1 }, json::render(&report)))
}

fn decompose_cmd(c: &Common, name: Option<&str>) -> Run {
    let w = window(c)?;
    let subset = match name {
        Some(n) => scenario(n)?.subset,
        None => RootSubset::even(&affine(c)?),
    };
    let comps = decompose(&subset, w)?;
    let report = json!({
        "system": json::system_header(subset.system()),
        "subset": "R0",
        "window": w,
        "components": json::components_to_json(&comps),
    });
    Ok((0, json::render(&report)))
}

fn parse_case(text: Option<&str>) -> Result<Option<CasePreference>> {
    Ok(match text {
        None => None,
        Some("auto") => Some(CasePreference::Auto),
        Some(t) => {
            let n: usize = t
                .trim_start_matches("case")
                .parse()
                .map_err(|_| Error::Parse(format!("--case must be auto or 1..4, got {t}")))?;
            let case = ZetaCase::ALL
                .get(n.wrapping_sub(1))
                .ok_or_else(|| Error::Parse(format!("--case must be auto or 1..4, got {t}")))?;
            Some(CasePreference::Force(*case))
        }
    })
}

fn zeta(c: &Common, name: Option<&str>, input: Option<&PathBuf>, case: Option<&str>) -> Run {
    let w = window(c)?;
    let case = parse_case(case)?;
    let (label, comps, shadow, preference) = match (name, input) {
        (Some(n), None) => {
            let sc = scenario(n)?;
            let comps = sc.components(w)?;
            let shadow = sc.shadow(&comps)?;
            (n.to_string(), comps, shadow, case.unwrap_or(sc.preference))
        }
        (None, Some(path)) => {
            let shadow = json::shadow_from_json(&read_json(path)?)?;
            let comps = decompose(&RootSubset::even(shadow.system()), w)?;
            (path.display().to_string(), comps, shadow, case.unwrap_or_default())
        }
        _ => {
            return Err(Error::Parse(format!(
                "zeta needs exactly one of --scenario ({}) or --input",
                SCENARIO_NAMES.join(", ")
            )))
        }
    };
    let out = zeta_pipeline(&comps, &shadow, preference, w)?;
    let report = json!({
        "scenario": label,
        "system": json::system_header(shadow.system()),
        "zeta": json::zeta_to_json(&out.construction)?,
        "bases": out.bases.iter().map(json::compatible_base_to_json).collect::<Vec<_>>(),
        "parabolic": out.parts.iter().map(json::parabolic_to_json).collect::<Vec<_>>(),
        "report": json::functional_report_to_json(&out.report),
    });
    Ok((if out.report.is_clean() { 0 } else { 1 }, json::render(&report)))
}

fn tables(c: &Common) -> Run {
    let s = affine(c)?;
    let report = golden_compare(&s, c.window)?;
    let mut out = String::new();
    writeln!(out, "{}  |k| <= {}", s.type_id(), c.window).ok();
    writeln!(out, "{:<28} {:<12} parity", "root", "kind").ok();
    for (r, kind, parity) in &report.rows {
        writeln!(out, "{:<28} {:<12} {}", r.to_string(), kind.label(), parity.label()).ok();
    }
    writeln!(
        out,
        "checked {} roots against the printed rows: {} mismatches",
        report.roots_checked,
        report.mismatches.len()
    )
    .ok();
    for m in &report.mismatches {
        writeln!(out, "- {m}").ok();
    }
    for r in &report.printed_non_roots {
        writeln!(out, "note: printed layer {r} is not a root of the system").ok();
    }
    for n in &report.notes {
        writeln!(out, "note: {n}").ok();
    }
    Ok((if report.is_clean() { 0 } else { 1 }, out))
}

fn export(c: &Common, finite: bool) -> Run {
    let value = if finite {
        let ty = FiniteTypeId::parse(&type_text(c)?)?;
        json::finite_set_to_json(&build_finite_with(ty, lambda(c)?)?)?
    } else {
        json::affine_window_to_json(&affine(c)?, c.window)?
    };
    Ok((0, json::render(&value)))
}
