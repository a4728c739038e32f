//! Command-line front end for the `angulated` calculator.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! what would be written to stdout and stderr, so the binary is a thin shell
//! and tests can drive every command in-process.

pub mod config;
pub mod doc;
pub mod dot;
pub mod syntax;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use angulated::artheory::{ar_angle, ar_angle_in, cover};
use angulated::wide::{enumerate_wide, is_l_periodic, is_semisimple_wide, is_wide, wide_oracle_witness};
use angulated::{
    d_cokernel, d_exact_seq, d_kernel, hom_dim, min_angle, validate_params, Angle, ChainKind, FLevelChain,
    FamilyParams, IndecObject, Morphism, SubcatSpec,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::parse_config;
use crate::doc::*;
use crate::syntax::{parse_object, parse_subcat, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "angulated", version, about = "Angles, AR theory and wide subcategories for the kA_m/rad^l family")]
struct Cli {
    #[arg(long, global = true, allow_negative_numbers = true)]
    d: Option<i64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    l: Option<i64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    m: Option<i64>,
    /// key=value file with keys d, l, m, format, sub; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Subcategory as a comma-separated index list, e.g. 1,2,5,6,9,10.
    #[arg(long, global = true)]
    sub: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the validated parameters.
    Params,
    /// Dimension and basis of Hom(x, y).
    Hom { x: String, y: String },
    /// Composite of the basis morphisms x -> y -> z.
    Compose { x: String, y: String, z: String },
    /// Minimal angle on the basis morphism x -> y.
    Angle { x: String, y: String },
    /// d-kernel of f_i -> f_j.
    Dkernel { i: String, j: String },
    /// d-cokernel of f_i -> f_j.
    Dcokernel { i: String, j: String },
    /// d-exact sequence through f_i -> f_j.
    Dexact { i: String, j: String },
    /// Auslander-Reiten angle ending at x, inside --sub when given.
    Ar { x: String },
    /// Cover of x by the subcategory --sub.
    Cover { x: String },
    /// Wide subcategories.
    Wide {
        #[command(subcommand)]
        action: WideCommand,
    },
    /// Run an oracle suite: golden, hom, angles, chains, ar, cover-ar, wide or all.
    Verify { target: String },
    /// The quiver on a window of positions.
    Quiver {
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum WideCommand {
    /// Every wide index set.
    List,
    /// Classify one index set.
    Check { spec: String },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Usage(String, String),
    Domain(angulated::Error),
    Verification(String, String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage("ParseError".into(), e.to_string())
    }
}

impl From<angulated::Error> for Failure {
    fn from(e: angulated::Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage("UsageError".into(), message.into())
}

fn error_json(kind: &str, message: String) -> String {
    let mut s = serde_json::to_string(&ErrorDoc { error: kind, message }).expect("serializes");
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let mut stdout = String::new();
    match execute(cli, &mut stdout) {
        Ok(()) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(Failure::Usage(kind, msg)) => Outcome { code: EXIT_USAGE, stdout, stderr: error_json(&kind, msg) },
        Err(Failure::Domain(e)) => Outcome { code: EXIT_DOMAIN, stdout, stderr: error_json(e.kind(), e.to_string()) },
        Err(Failure::Verification(kind, msg)) => Outcome { code: EXIT_DOMAIN, stdout, stderr: error_json(&kind, msg) },
    }
}

/// Parameters, output format and subcategory after merging the config file
/// with the flags.
struct Resolved {
    params: FamilyParams,
    format: Format,
    sub: Option<SubcatSpec>,
}

fn resolve(cli: &Cli) -> Result<Resolved, Failure> {
    let cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage("ConfigError".into(), format!("{}: {e}", path.display())))?;
            parse_config(&text).map_err(|e| Failure::Usage("ConfigError".into(), e.to_string()))?
        }
        None => Default::default(),
    };
    let pick = |flag: Option<i64>, file: Option<i64>, name: &str| {
        flag.or(file).ok_or_else(|| usage(format!("missing parameter --{name} (flag or config key)")))
    };
    let d = pick(cli.d, cfg.d, "d")?;
    let l = pick(cli.l, cfg.l, "l")?;
    let m = pick(cli.m, cfg.m, "m")?;
    let params = validate_params(d, l, m).map_err(|e| Failure::Usage(e.kind().into(), e.to_string()))?;
    let format = match (cli.format, cfg.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some(text)) => Format::from_str(text, true)
            .map_err(|_| Failure::Usage("ConfigError".into(), format!("unknown format `{text}` (text, json, dot)")))?,
        (None, None) => Format::Json,
    };
    let sub = match cli.sub.as_deref().or(cfg.sub.as_deref()) {
        Some(text) => Some(parse_subcat(&params, text)?),
        None => None,
    };
    Ok(Resolved { params, format, sub })
}

fn emit_json<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string_pretty(value).expect("documents serialize"));
    out.push('\n');
}

fn no_dot(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(usage(format!("dot output is not available for `{what}` (use it with angle, ar or quiver)")))
    } else {
        Ok(())
    }
}

fn morphism_text(p: &FamilyParams, f: &Morphism) -> String {
    let rows: Vec<String> =
        f.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
    format!("{} -> {} [{}]", f.source().label(p), f.target().label(p), rows.join("; "))
}

fn angle_text(a: &Angle) -> String {
    let p = a.params();
    let mut s: Vec<String> = a.objects().iter().map(|x| x.label(p)).collect();
    s.push(a.object(0).shifted(p, 1).label(p));
    let mut out = s[..s.len() - 1].join(" -> ");
    write!(out, " ~> {}", s[s.len() - 1]).unwrap();
    out.push('\n');
    out
}

fn emit_angle(out: &mut String, format: Format, a: &Angle) {
    match format {
        Format::Json => {
            out.push_str(&AngleDoc::new(a).to_json());
            out.push('\n');
        }
        Format::Text => out.push_str(&angle_text(a)),
        Format::Dot => out.push_str(&dot::angle_dot(a)),
    }
}

fn require_sub(sub: &Option<SubcatSpec>, what: &str) -> Result<SubcatSpec, Failure> {
    sub.clone().ok_or_else(|| usage(format!("`{what}` needs --sub")))
}

/// `f<i>` / `s<k>:f<i>` / `p<n>`, or a bare integer read as a raw position.
fn parse_position(p: &FamilyParams, text: &str) -> Result<i64, Failure> {
    match text.trim().parse::<i64>() {
        Ok(v) if v.abs() <= 1 << 40 => Ok(v),
        _ => Ok(parse_object(p, text)?.pos),
    }
}

fn chain_doc(p: &FamilyParams, c: &FLevelChain) -> ChainDoc {
    ChainDoc {
        params: ParamsDoc::new(p),
        kind: match c.kind {
            ChainKind::Kernel => "kernel",
            ChainKind::Cokernel => "cokernel",
            ChainKind::Exact => "exact",
        },
        morphism: MorphismDoc::new(&c.morphism),
        objects: c.objects.iter().map(|x| sum_doc(p, x)).collect(),
        maps: c.maps.iter().map(MapDoc::new).collect(),
    }
}

fn execute(cli: Cli, out: &mut String) -> Result<(), Failure> {
    let Resolved { params: p, format, sub } = resolve(&cli)?;
    let obj = |s: &str| parse_object(&p, s);
    match &cli.command {
        Command::Params => {
            no_dot(format, "params")?;
            match format {
                Format::Text => writeln!(out, "d={} l={} m={} period={}", p.d(), p.l(), p.m(), p.period()).unwrap(),
                _ => emit_json(out, &ParamsDoc::new(&p)),
            }
        }
        Command::Hom { x, y } => {
            no_dot(format, "hom")?;
            let (x, y) = (obj(x)?, obj(y)?);
            let dim = hom_dim(&p, x, y);
            let basis = Morphism::basis(&p, x, y).ok();
            match format {
                Format::Text => writeln!(out, "dim Hom({}, {}) = {dim}", x.label(&p), y.label(&p)).unwrap(),
                _ => emit_json(
                    out,
                    &HomDoc {
                        params: ParamsDoc::new(&p),
                        source: ObjectDoc::new(&p, x),
                        target: ObjectDoc::new(&p, y),
                        dim,
                        basis: basis.as_ref().map(MorphismDoc::new),
                    },
                ),
            }
        }
        Command::Compose { x, y, z } => {
            no_dot(format, "compose")?;
            let (x, y, z) = (obj(x)?, obj(y)?, obj(z)?);
            let f = Morphism::basis(&p, x, y)?;
            let g = Morphism::basis(&p, y, z)?;
            let gf = angulated::compose(&g, &f)?;
            match format {
                Format::Text => writeln!(out, "{}", morphism_text(&p, &gf)).unwrap(),
                _ => emit_json(
                    out,
                    &ComposeDoc { params: ParamsDoc::new(&p), is_zero: gf.is_zero(), morphism: MorphismDoc::new(&gf) },
                ),
            }
        }
        Command::Angle { x, y } => {
            let mu = Morphism::basis(&p, obj(x)?, obj(y)?)?;
            emit_angle(out, format, &min_angle(&mu)?);
        }
        Command::Dkernel { i, j } | Command::Dcokernel { i, j } | Command::Dexact { i, j } => {
            no_dot(format, "chains")?;
            let mu = Morphism::basis(&p, obj(i)?, obj(j)?)?;
            let chain = match &cli.command {
                Command::Dkernel { .. } => d_kernel(&mu)?,
                Command::Dcokernel { .. } => d_cokernel(&mu)?,
                _ => d_exact_seq(&mu)?,
            };
            match format {
                Format::Text => {
                    let labels: Vec<String> = chain.objects.iter().map(|x| x.label(&p)).collect();
                    writeln!(out, "{}", labels.join(" -> ")).unwrap();
                }
                _ => emit_json(out, &chain_doc(&p, &chain)),
            }
        }
        Command::Ar { x } => {
            let x = obj(x)?;
            let a = match &sub {
                Some(s) => ar_angle_in(&p, s, x)?,
                None => ar_angle(&p, x),
            };
            emit_angle(out, format, &a);
        }
        Command::Cover { x } => {
            no_dot(format, "cover")?;
            let s = require_sub(&sub, "cover")?;
            angulated::wide::require_wide(&p, &s)?;
            let x = obj(x)?;
            let c = cover(&p, &s, x);
            match format {
                Format::Text => writeln!(out, "{}", morphism_text(&p, &c.mor)).unwrap(),
                _ => emit_json(
                    out,
                    &CoverDoc {
                        params: ParamsDoc::new(&p),
                        sub: s.indices().collect(),
                        target: ObjectDoc::new(&p, x),
                        source: sum_doc(&p, &c.source),
                        morphism: MorphismDoc::new(&c.mor),
                    },
                ),
            }
        }
        Command::Wide { action: WideCommand::List } => {
            no_dot(format, "wide list")?;
            let specs = enumerate_wide(&p)?;
            match format {
                Format::Text => {
                    for s in &specs {
                        writeln!(out, "{s}").unwrap();
                    }
                }
                _ => emit_json(
                    out,
                    &WideListDoc {
                        params: ParamsDoc::new(&p),
                        count: specs.len(),
                        specs: specs.iter().map(|s| s.indices().collect()).collect(),
                    },
                ),
            }
        }
        Command::Wide { action: WideCommand::Check { spec } } => {
            no_dot(format, "wide check")?;
            let s = parse_subcat(&p, spec)?;
            let witness = wide_oracle_witness(&p, &s);
            let pos_doc = |q: i64| ObjectDoc::new(&p, IndecObject::at(q));
            let report = WideCheckDoc {
                params: ParamsDoc::new(&p),
                sub: s.indices().collect(),
                semisimple: is_semisimple_wide(&p, &s),
                l_periodic: is_l_periodic(&p, &s),
                wide: is_wide(&p, &s),
                oracle: witness.is_none(),
                witness: witness.map(|w| WitnessDoc {
                    source: pos_doc(w.source),
                    target: pos_doc(w.target),
                    escaping: pos_doc(w.escaping),
                }),
            };
            match format {
                Format::Text => writeln!(
                    out,
                    "{s} semisimple={} l_periodic={} wide={} oracle={}",
                    report.semisimple, report.l_periodic, report.wide, report.oracle
                )
                .unwrap(),
                _ => emit_json(out, &report),
            }
        }
        Command::Verify { target } => {
            no_dot(format, "verify")?;
            let target: verify::Target = target.parse().map_err(usage)?;
            let checks = verify::run(&p, target);
            let passed = checks.iter().all(verify::Check::passed);
            match format {
                Format::Text => {
                    for c in &checks {
                        match &c.failure {
                            None => writeln!(out, "PASS {} ({} cases)", c.name, c.cases).unwrap(),
                            Some(f) => writeln!(out, "FAIL {} ({} cases): {f}", c.name, c.cases).unwrap(),
                        }
                    }
                }
                _ => emit_json(
                    out,
                    &VerifyDoc {
                        params: ParamsDoc::new(&p),
                        target: target.to_string(),
                        passed,
                        checks: checks
                            .iter()
                            .map(|c| CheckDoc {
                                name: c.name.clone(),
                                passed: c.passed(),
                                cases: c.cases,
                                detail: c.failure.clone(),
                            })
                            .collect(),
                    },
                ),
            }
            if !passed {
                let failed = checks.iter().filter(|c| !c.passed()).count();
                return Err(Failure::Verification("VerificationFailed".into(), format!("{failed} check(s) failed")));
            }
        }
        Command::Quiver { from, to } => {
            let lo = from.as_deref().map(|t| parse_position(&p, t)).transpose()?.unwrap_or(1);
            let hi = to.as_deref().map(|t| parse_position(&p, t)).transpose()?.unwrap_or(p.period());
            if lo > hi {
                return Err(usage(format!("empty window [{lo}, {hi}]")));
            }
            if hi - lo > 100_000 {
                return Err(usage("window wider than 100000 positions"));
            }
            let member = |x: IndecObject| sub.as_ref().is_some_and(|s| s.contains(x));
            match format {
                Format::Dot => out.push_str(&dot::quiver_dot(&p, lo, hi, sub.as_ref())),
                Format::Text => {
                    let names: Vec<String> = (lo..=hi)
                        .map(|q| {
                            let x = IndecObject::at(q);
                            let star = if member(x) { "*" } else { "" };
                            format!("{}{star}", dot::node_name(&p, x))
                        })
                        .collect();
                    writeln!(out, "{}", names.join(" -> ")).unwrap();
                }
                Format::Json => emit_json(
                    out,
                    &QuiverDoc {
                        params: ParamsDoc::new(&p),
                        nodes: (lo..=hi)
                            .map(|q| {
                                let (shift, index) = p.split(q);
                                NodeDoc { pos: q, shift, index, member: member(IndecObject::at(q)) }
                            })
                            .collect(),
                        edges: (lo..hi).map(|q| [q, q + 1]).collect(),
                    },
                ),
            }
        }
    }
    Ok(())
}
