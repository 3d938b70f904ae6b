//! Command dispatch and report assembly for the `quatcoh` binary.

pub mod checks;
pub mod report;

use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context as _, Result};
use quatcoh::massey::{random_presentations, LambdaMatrix};
use quatcoh::secondary::Kind;
use quatcoh::{FieldKind, GroupConfig, Variant};
use serde::Deserialize;
use serde_json::json;

use checks::Context;
pub use report::{Check, Report, Status};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    VerifyGroup,
    VerifyResolution,
    VerifyHomotopies,
    VerifyF2,
    DumpM,
    CheckGamma,
    CheckModule,
    EnumerateMassey,
    ReproducePaper,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::VerifyGroup,
        Command::VerifyResolution,
        Command::VerifyHomotopies,
        Command::VerifyF2,
        Command::DumpM,
        Command::CheckGamma,
        Command::CheckModule,
        Command::EnumerateMassey,
        Command::ReproducePaper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyGroup => "verify-group",
            Command::VerifyResolution => "verify-resolution",
            Command::VerifyHomotopies => "verify-homotopies",
            Command::VerifyF2 => "verify-f2",
            Command::DumpM => "dump-m",
            Command::CheckGamma => "check-gamma",
            Command::CheckModule => "check-module",
            Command::EnumerateMassey => "enumerate-massey",
            Command::ReproducePaper => "reproduce-paper",
        }
    }
}

impl FromStr for Command {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| anyhow!("unknown command {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => bail!("unknown format {s:?}, expected json or text"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub t: u32,
    pub field: FieldKind,
    /// Per-command window: max degree for check-gamma and enumerate-massey,
    /// cocycle s-window for reproduce-paper.
    pub window: Option<i32>,
    pub seed: u64,
    pub kind: Kind,
    pub max_t: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub matrix: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            t: 2,
            field: FieldKind::Gf2,
            window: None,
            seed: DEFAULT_SEED,
            kind: Kind::M,
            max_t: 16,
            format: Format::Json,
            out: None,
            matrix: None,
        }
    }

    fn window_or(&self, default: i32) -> i32 {
        self.window.unwrap_or(default)
    }
}

/// Matrix input: `{"rows": [..], "cols": [..], "entries": [[..], ..]}`.
#[derive(Debug, Deserialize)]
pub struct MatrixInput {
    pub rows: Vec<i32>,
    pub cols: Vec<i32>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixInput {
    pub fn to_matrix(&self, variant: Variant) -> Result<LambdaMatrix> {
        let rows: Vec<Vec<&str>> = self.entries.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
        Ok(LambdaMatrix::parse(variant, self.rows.clone(), self.cols.clone(), &refs)?)
    }
}

pub fn read_matrix(path: &Path, variant: Variant) -> Result<LambdaMatrix> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let input: MatrixInput = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    input.to_matrix(variant)
}

/// Runs one command. Errors are configuration or input problems; check
/// failures are reported inside the returned report.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    GroupConfig::with_bound(cfg.t, cfg.field, cfg.max_t)?;
    let mut ctx = Context::default();
    let t = cfg.t;
    let variant = Variant::for_t(t);
    let mut config = json!({
        "command": cfg.command.name(),
        "t": t,
        "field": cfg.field.name(),
        "seed": cfg.seed,
    });
    let checks = match cfg.command {
        Command::VerifyGroup => vec![checks::group_identities(&[t])?],
        Command::VerifyResolution => vec![checks::resolution(&[t])?, checks::product_classes(&[t])?],
        Command::VerifyHomotopies => {
            let mut out = vec![checks::homotopies(&[t])?];
            if t == 2 {
                out.push(checks::periodicity()?);
            }
            out
        }
        Command::VerifyF2 => vec![checks::f2_tables(&mut ctx, &[t])?],
        Command::DumpM => vec![checks::dump_m(&mut ctx, t)?],
        Command::CheckGamma => {
            let w = cfg.window_or(5);
            config["window"] = json!(w);
            vec![checks::check_gamma(&mut ctx, t, w)?]
        }
        Command::CheckModule => {
            let a = match &cfg.matrix {
                Some(path) => {
                    config["matrix"] = json!(path.display().to_string());
                    read_matrix(path, variant)?
                }
                None => random_presentations(variant, cfg.field, cfg.seed, 1).remove(0),
            };
            config["kind"] = json!(cfg.kind.name());
            vec![checks::check_module(&mut ctx, t, cfg.kind, &a)?]
        }
        Command::EnumerateMassey => {
            let w = cfg.window_or(7);
            config["window"] = json!(w);
            vec![checks::enumerate_massey(&mut ctx, t, cfg.field, w)?]
        }
        Command::ReproducePaper => {
            let w = cfg.window_or(2);
            config["window"] = json!(w);
            reproduce(&mut ctx, cfg.seed, w)?
        }
    };
    Ok(Report { schema: report::SCHEMA, config, checks })
}

/// One entry per acceptance criterion, in order.
pub fn reproduce(ctx: &mut Context, seed: u64, window: i32) -> Result<Vec<Check>> {
    let all_t = [2, 4, 8, 16];
    Ok(vec![
        checks::group_identities(&all_t)?,
        checks::resolution(&all_t)?,
        checks::product_classes(&all_t)?,
        checks::homotopies(&[2, 4, 8])?,
        checks::periodicity()?,
        checks::f2_tables(ctx, &[2, 4, 8])?,
        checks::m_tables(ctx, &[2, 4, 8])?,
        checks::cocycle(ctx, &[2, 4], window)?,
        checks::gamma(ctx, &[2, 4, 8], 5)?,
        checks::non_realizable_module(ctx)?,
        checks::scalar_massey(ctx, 7)?,
        checks::sampled_modules(ctx, seed, 24)?,
        checks::determinism(ctx, seed, 7)?,
    ])
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}
