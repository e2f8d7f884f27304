use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use harsanyi_attrib::{
    cmd_attribute, cmd_coalition, cmd_interactions, cmd_synth, cmd_verify, render_json,
    verify_passed, Error, GameKind, GameSpec, OptimizerConfig, Result, RunConfig, SplitMode,
    TableFormat, DEFAULT_N_CAP,
};

/// Harsanyi AND/OR interaction spectra and attribution reports for
/// cooperative games given as explicit value tables.
#[derive(Parser)]
#[command(name = "harsanyi", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute both interaction spectra of a table under a split mode.
    Interactions {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        split: SplitArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute per-variable Shapley and Banzhaf attributions.
    Attribute {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        split: SplitArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decompose coalition attributions: conflict residual and efficiency.
    Coalition {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        split: SplitArgs,
        /// Coalition as comma-separated variable indices (repeatable).
        #[arg(long = "coalition", required = true)]
        coalitions: Vec<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the full identity suite on a table (exit 1 on any failure).
    Verify {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        split: SplitArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generate a synthetic value table as canonical JSON.
    Synth {
        /// Game family: linear, planted-and, planted-or, planted-mixed, or
        /// random.
        #[arg(long)]
        kind: String,
        /// Variable count.
        #[arg(long)]
        n: usize,
        /// Seed for the random family.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-variable weights for the linear family, e.g. `1,2,3`.
        #[arg(long)]
        weights: Option<String>,
        /// Planted `mask:coefficient` pair for the single-sided planted
        /// families (repeatable), e.g. `--plant 3:1.0`.
        #[arg(long = "plant")]
        plants: Vec<String>,
        /// AND-side plant for the mixed family (repeatable).
        #[arg(long = "and-plant")]
        and_plants: Vec<String>,
        /// OR-side plant for the mixed family (repeatable).
        #[arg(long = "or-plant")]
        or_plants: Vec<String>,
        /// Write the table here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Path to the value table.
    #[arg(long)]
    input: PathBuf,
    /// Input format: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
    /// Variable count override (otherwise inferred; CSV only).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct SplitArgs {
    /// Split mode: and-only, or-only, balanced, or learned.
    #[arg(long, default_value = "balanced")]
    mode: String,
    /// Seed for the random draws of `verify` (echoed everywhere).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Optimizer iteration budget (learned mode).
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
    /// Initial optimizer step size (default: 0.05·max(1, max|v|)).
    #[arg(long)]
    step0: Option<f64>,
    /// Optimizer step-decay exponent.
    #[arg(long, default_value_t = 0.5)]
    decay: f64,
    /// Optimizer relative-improvement stopping threshold.
    #[arg(long, default_value_t = 1e-7)]
    tol: f64,
}

#[derive(Args)]
struct OutputArgs {
    /// Drop interaction entries with |value| below this threshold.
    #[arg(long, default_value_t = 0.0)]
    prune: f64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Add a plot-ready "bars" array to the report.
    #[arg(long)]
    emit_plot_data: bool,
}

fn cap_from_env() -> Result<usize> {
    match std::env::var("HARSANYI_N_CAP") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::InvalidConfig(format!("HARSANYI_N_CAP must be a positive integer, got `{text}`"))
        }),
        Err(_) => Ok(DEFAULT_N_CAP),
    }
}

fn build_config(table: TableArgs, split: SplitArgs, out: OutputArgs) -> Result<RunConfig> {
    let format: TableFormat = table.format.parse()?;
    let mode: SplitMode = split.mode.parse()?;
    Ok(RunConfig {
        input: Some(table.input),
        format,
        n_override: table.n,
        mode,
        coalitions: Vec::new(),
        optimizer: OptimizerConfig {
            max_iters: split.max_iters,
            step0: split.step0,
            decay: split.decay,
            tol: split.tol,
            seed: split.seed,
        },
        prune: out.prune,
        output: out.output,
        emit_plot_data: out.emit_plot_data,
        cap: cap_from_env()?,
    })
}

fn parse_plants(texts: &[String]) -> Result<Vec<(u64, f64)>> {
    texts
        .iter()
        .map(|text| {
            let (mask, coeff) = text.split_once(':').ok_or_else(|| {
                Error::Parse(format!("plant `{text}` must look like `mask:coefficient`"))
            })?;
            let mask: u64 = mask
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad plant mask `{mask}`")))?;
            let coeff: f64 = coeff
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad plant coefficient `{coeff}`")))?;
            Ok((mask, coeff))
        })
        .collect()
}

fn build_game_spec(
    kind: &str,
    n: usize,
    seed: u64,
    weights: Option<&str>,
    plants: &[String],
    and_plants: &[String],
    or_plants: &[String],
) -> Result<GameSpec> {
    let kind = match kind {
        "linear" => {
            let weights = weights.ok_or_else(|| {
                Error::InvalidConfig("the linear family needs --weights".into())
            })?;
            let weights: Vec<f64> = weights
                .split(',')
                .map(|w| {
                    w.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad weight `{w}`")))
                })
                .collect::<Result<_>>()?;
            GameKind::Linear { weights }
        }
        "planted-and" => GameKind::PlantedAnd {
            plants: parse_plants(plants)?,
        },
        "planted-or" => GameKind::PlantedOr {
            plants: parse_plants(plants)?,
        },
        "planted-mixed" => GameKind::PlantedMixed {
            and_plants: parse_plants(and_plants)?,
            or_plants: parse_plants(or_plants)?,
        },
        "random" => GameKind::Random,
        other => {
            return Err(Error::Parse(format!(
                "unknown game kind `{other}` (expected linear, planted-and, planted-or, \
                 planted-mixed, or random)"
            )))
        }
    };
    Ok(GameSpec { n, seed, kind })
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Interactions { table, split, out } => {
            let cfg = build_config(table, split, out)?;
            let report = cmd_interactions(&cfg)?;
            emit(&render_json(&report, true), cfg.output.as_ref())?;
            Ok(0)
        }
        Command::Attribute { table, split, out } => {
            let cfg = build_config(table, split, out)?;
            let report = cmd_attribute(&cfg)?;
            emit(&render_json(&report, true), cfg.output.as_ref())?;
            Ok(0)
        }
        Command::Coalition {
            table,
            split,
            coalitions,
            out,
        } => {
            let mut cfg = build_config(table, split, out)?;
            cfg.coalitions = coalitions;
            let report = cmd_coalition(&cfg)?;
            emit(&render_json(&report, true), cfg.output.as_ref())?;
            Ok(0)
        }
        Command::Verify { table, split, out } => {
            let cfg = build_config(table, split, out)?;
            let report = cmd_verify(&cfg)?;
            let passed = verify_passed(&report);
            emit(&render_json(&report, true), cfg.output.as_ref())?;
            if passed {
                Ok(0)
            } else {
                eprintln!("verify: at least one identity exceeded its tolerance");
                Ok(1)
            }
        }
        Command::Synth {
            kind,
            n,
            seed,
            weights,
            plants,
            and_plants,
            or_plants,
            output,
        } => {
            let spec = build_game_spec(
                &kind,
                n,
                seed,
                weights.as_deref(),
                &plants,
                &and_plants,
                &or_plants,
            )?;
            let table = cmd_synth(&spec, cap_from_env()?)?;
            emit(&table.to_json_string(), output.as_ref())?;
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
