use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::Parser;
use quatcoh::FieldKind;
use quatcoh_cli::{render, run, Command, Format, RunConfig, DEFAULT_SEED};

/// Verification and realizability reports for Tate cohomology of
/// generalized quaternion groups in characteristic 2.
#[derive(Parser, Debug)]
#[command(name = "quatcoh", version)]
struct Args {
    /// One of: verify-group, verify-resolution, verify-homotopies, verify-f2,
    /// dump-m, check-gamma, check-module, enumerate-massey, reproduce-paper.
    command: String,
    /// Group parameter t (a power of 2).
    #[arg(long, default_value_t = 2)]
    t: u32,
    /// Coefficient field: gf2 or gf4.
    #[arg(long, default_value = "gf2")]
    field: String,
    /// Max degree for check-gamma and enumerate-massey; cocycle s-window for
    /// reproduce-paper.
    #[arg(long)]
    window: Option<i32>,
    /// Seed for sampled presentations.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Secondary product used by check-module: m, m', m'' or m~.
    #[arg(long, default_value = "m")]
    kind: String,
    /// Largest accepted t.
    #[arg(long, default_value_t = 16)]
    max_t: u32,
    /// Output format: json or text.
    #[arg(long, default_value = "json")]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Presentation matrix for check-module, as JSON
    /// {"rows": [..], "cols": [..], "entries": [[..]]}.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<FieldKind> {
    match s.to_ascii_lowercase().as_str() {
        "gf2" => Ok(FieldKind::Gf2),
        "gf4" => Ok(FieldKind::Gf4),
        _ => bail!("unknown field {s:?}, expected gf2 or gf4"),
    }
}

fn config(args: Args) -> Result<RunConfig> {
    let mut cfg = RunConfig::new(args.command.parse::<Command>()?);
    cfg.t = args.t;
    cfg.field = parse_field(&args.field)?;
    cfg.window = args.window;
    cfg.seed = args.seed;
    cfg.kind = args.kind.parse().map_err(anyhow::Error::from)?;
    cfg.max_t = args.max_t;
    cfg.format = args.format.parse::<Format>()?;
    cfg.out = args.out;
    cfg.matrix = args.matrix;
    Ok(cfg)
}

fn main() -> ExitCode {
    let result = config(Args::parse()).and_then(|cfg| {
        let report = run(&cfg)?;
        let text = render(&report, cfg.format);
        match &cfg.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(report.passed())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
