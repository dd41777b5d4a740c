use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fiberlab::{parse_scalar, CommandKind, OutputFormat, RunConfig};

/// Exact analysis of presented Hopf algebras over a central Hopf
/// subalgebra: fiber algebras, trace forms, discriminant ideals, and
/// Grothendieck-ring invariants.
#[derive(Parser)]
#[command(name = "fiberlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input presentation (.hopf); with --corpus, the corpus directory.
    input: Option<PathBuf>,
    /// Run over every .hopf file in the corpus directory (default: corpus).
    #[arg(long)]
    corpus: bool,
    /// Seed for all numeric paths; integer outputs are seed-independent.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override the evaluation points for primitive central symbols:
    /// comma-separated scalar literals such as 0,1,-1,2,1/2,zeta(4,1).
    #[arg(long)]
    samples: Option<String>,
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "csv", "markdown"])]
    format: String,
    /// Tolerance override for the Perron fallback.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation, check the Hopf axioms and local confluence.
    Validate(Common),
    /// Square-dimension profile, block structure and one-dimensional module
    /// counts per sampled character.
    Analyze(Common),
    /// Discriminant ideals, zero loci, sandwich certificates, lowest level.
    Disc {
        #[command(flatten)]
        common: Common,
        /// Smallest k to report.
        #[arg(long)]
        k_min: Option<usize>,
        /// Largest k to report.
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// The consolidated consistency checks.
    Theorems {
        #[command(flatten)]
        common: Common,
        /// Seeded random elements per Cayley-Hamilton verification.
        #[arg(long, default_value_t = 100)]
        ch_samples: usize,
    },
    /// Reproduce the bundled zero-locus tables.
    Tables(Common),
}

fn to_config(kind: CommandKind, common: &Common) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::new(kind);
    cfg.seed = common.seed;
    cfg.format = match common.format.as_str() {
        "json" => OutputFormat::Json,
        "csv" => OutputFormat::Csv,
        "markdown" => OutputFormat::Markdown,
        other => return Err(format!("unknown format {other}")),
    };
    if common.corpus {
        cfg.corpus = Some(
            common
                .input
                .clone()
                .unwrap_or_else(|| PathBuf::from("corpus")),
        );
    } else {
        cfg.input = common.input.clone();
    }
    if let Some(samples) = &common.samples {
        let parsed: Result<Vec<_>, _> = split_outside_parens(samples)
            .iter()
            .map(|s| parse_scalar(s))
            .collect();
        cfg.samples = Some(parsed?);
    }
    cfg.perron_tol = common.tol;
    Ok(cfg)
}

/// Split on commas that are not inside parentheses, so zeta(N,k) literals
/// survive.
fn split_outside_parens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match &cli.command {
        Command::Validate(c) => to_config(CommandKind::Validate, c),
        Command::Analyze(c) => to_config(CommandKind::Analyze, c),
        Command::Disc { common, k_min, k_max } => to_config(CommandKind::Disc, common).map(|mut cfg| {
            cfg.k_min = *k_min;
            cfg.k_max = *k_max;
            cfg
        }),
        Command::Theorems { common, ch_samples } => {
            to_config(CommandKind::Theorems, common).map(|mut cfg| {
                cfg.ch_samples = *ch_samples;
                cfg
            })
        }
        Command::Tables(c) => to_config(CommandKind::Tables, c),
    };
    let cfg = match cfg {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match fiberlab::run(&cfg) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
