use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use loopalg::error::CliError;
use loopalg::json::{golden_to_json, loop_element_to_json, model_to_string};
use loopalg::parse::parse_loop;
use loopalg::suite::{verify, SuiteConfig};
use loopalg::load_model;
use loopalg_core::catalog::describe;
use loopalg_core::{LoopModel, PartialSource, PresentedAlgebra};
use serde::Serialize;

const DEFAULT_MAX_DEGREE: i64 = 64;

#[derive(Parser)]
#[command(name = "loopalg", version, about = "Loop homology BV algebras of compact Lie groups")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation, Hopf data, suspension and primitives.
    Show { model: String },
    /// Evaluate the BV operator on an expression.
    Delta {
        model: String,
        expr: String,
        #[arg(long, value_enum, default_value_t = DeltaPath::Eq1)]
        path: DeltaPath,
    },
    /// Loop product of two expressions.
    Mul { model: String, left: String, right: String },
    /// Run the invariant suite and print a JSON report.
    Verify {
        model: String,
        #[arg(long, default_value = "-24:24", allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 3)]
        word_length: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per randomized check.
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
    /// Dimensions of homogeneous pieces.
    Hilbert {
        model: String,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Also compute the row-reduction oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Write the model as JSON.
    Export {
        model: String,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Print the closed-form delta table of a catalog model as JSON.
    Golden {
        model: String,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DeltaPath {
    Eq1,
    Deriv,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Omega,
    Base,
    Loop,
}

fn max_degree() -> anyhow::Result<i64> {
    match std::env::var("LOOPALG_MAX_DEGREE") {
        Ok(v) => v.trim().parse().with_context(|| format!("LOOPALG_MAX_DEGREE=`{}` is not an integer", v)),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn parse_window(text: &str) -> anyhow::Result<(i64, i64)> {
    let bad = || CliError::BadWindow(text.to_string());
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad().into());
    }
    let limit = max_degree()?;
    if lo.abs() > limit || hi.abs() > limit {
        return Err(CliError::WindowTooLarge { lo, hi, limit }.into());
    }
    Ok((lo, hi))
}

#[derive(Serialize)]
struct HilbertRow {
    degree: i64,
    dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<usize>,
}

fn loop_oracle(model: &LoopModel, d: i64) -> anyhow::Result<usize> {
    let mut total = 0;
    for k in -(model.dim() as i64)..=0 {
        let b = model.base().oracle_dimension(k)?;
        if b > 0 {
            total += b * model.omega().oracle_dimension(d - k)?;
        }
    }
    Ok(total)
}

fn hilbert_rows(model: &LoopModel, side: Side, window: (i64, i64), oracle: bool) -> anyhow::Result<Vec<HilbertRow>> {
    let side_alg = |s: Side| -> Option<&PresentedAlgebra> {
        match s {
            Side::Omega => Some(model.omega()),
            Side::Base => Some(model.base()),
            Side::Loop => None,
        }
    };
    let mut rows = Vec::new();
    for d in window.0..=window.1 {
        let (dimension, o) = match side_alg(side) {
            Some(alg) => (alg.hilbert_dimension(d)?, if oracle { Some(alg.oracle_dimension(d)?) } else { None }),
            None => (model.loop_hilbert_dimension(d)?, if oracle { Some(loop_oracle(model, d)?) } else { None }),
        };
        rows.push(HilbertRow { degree: d, dimension, oracle: o });
    }
    Ok(rows)
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Show { model } => {
            let (model, _) = load_model(&model)?;
            if cli.json {
                println!("{}", model_to_string(&model));
            } else {
                print!("{}", describe(&model));
            }
        }
        Command::Delta { model, expr, path } => {
            let (model, _) = load_model(&model)?;
            let e = parse_loop(&expr, &model)?;
            let result = match path {
                DeltaPath::Eq1 => model.bv_delta(&e)?,
                DeltaPath::Deriv => model.bv_delta_derivation_form(&e, PartialSource::Definition)?,
                DeltaPath::Both => {
                    let eq1 = model.bv_delta(&e)?;
                    let deriv = model.bv_delta_derivation_form(&e, PartialSource::Definition)?;
                    if eq1 != deriv {
                        return Err(CliError::PathsDisagree {
                            input: model.format(&e),
                            eq1: model.format(&eq1),
                            deriv: model.format(&deriv),
                        }
                        .into());
                    }
                    eq1
                }
            };
            if cli.json {
                print_json(&loop_element_to_json(&model, &result))?;
            } else {
                println!("{}", model.format(&result));
            }
        }
        Command::Mul { model, left, right } => {
            let (model, _) = load_model(&model)?;
            let product = model.loop_product(&parse_loop(&left, &model)?, &parse_loop(&right, &model)?)?;
            if cli.json {
                print_json(&loop_element_to_json(&model, &product))?;
            } else {
                println!("{}", model.format(&product));
            }
        }
        Command::Verify { model, window, word_length, seed, cases } => {
            let window = parse_window(&window)?;
            let (model, _) = load_model(&model)?;
            let cfg = SuiteConfig { window, word_length, seed, cases };
            let report = verify(&model, &cfg)?;
            print_json(&report)?;
            if report.iter().any(|o| !o.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Hilbert { model, side, window, oracle } => {
            let window = parse_window(&window)?;
            let (model, _) = load_model(&model)?;
            let rows = hilbert_rows(&model, side, window, oracle)?;
            if cli.json {
                print_json(&rows)?;
            } else {
                for r in &rows {
                    match r.oracle {
                        Some(o) => println!("{}\t{}\t{}", r.degree, r.dimension, o),
                        None => println!("{}\t{}", r.degree, r.dimension),
                    }
                }
            }
            if rows.iter().any(|r| r.oracle.is_some_and(|o| o != r.dimension)) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export { model, out } => {
            let (model, _) = load_model(&model)?;
            std::fs::write(&out, model_to_string(&model) + "\n").with_context(|| format!("writing {}", out.display()))?;
        }
        Command::Golden { model: name, out } => {
            let (model, id) = load_model(&name)?;
            let Some(id) = id else { bail!("golden tables exist only for catalog models") };
            let text = serde_json::to_string_pretty(&golden_to_json(id, &model)?)?;
            match out {
                Some(path) => std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?,
                None => println!("{}", text),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
