use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use g31_core::checks::{self, CheckError};
use g31_core::g31::verify::RunConfig;
use g31_core::g31::G31Context;
use g31_core::linalg::Mat;
use g31_core::outer_s6::tau_table;

#[derive(Parser)]
#[command(
    name = "g31",
    version,
    about = "Builds G31 from signed permutations on the exterior square and verifies its properties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks and print or write a report.
    Verify {
        /// Check id to run; repeat for several. Runs all checks when absent.
        #[arg(long = "check", value_name = "ID")]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, env = "G31_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "G31_TRIALS", default_value_t = 1000)]
        trials: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the id and statement of every check.
    ListChecks,
    /// Write generators, reflections, the whole group or the τ table as JSON.
    Emit {
        #[arg(long, value_enum)]
        what: Artifact,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Artifact {
    Generators,
    Reflections,
    Group,
    Tau,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            checks,
            format,
            seed,
            trials,
            out,
        } => verify(&checks, format, RunConfig { seed, trials }, out.as_deref()),
        Command::ListChecks => {
            for (id, statement) in checks::list() {
                println!("{id:<28} {statement}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Emit { what, out } => {
            emit(what, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify(ids: &[String], format: Format, config: RunConfig, out: Option<&Path>) -> Result<ExitCode> {
    let ctx = G31Context::new();
    let report = match checks::run_checks(ids, &config, &ctx) {
        Ok(r) => r,
        Err(e @ CheckError::UnknownCheck(_)) => {
            eprintln!("error: {e}; run `g31 list-checks` for valid ids");
            return Ok(ExitCode::from(2));
        }
    };
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    match out {
        Some(path) => std::fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(rendered.as_bytes())?,
    }
    Ok(if report.failures() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn write_matrices<'a>(out: &mut impl Write, mats: impl IntoIterator<Item = &'a Mat>) -> Result<()> {
    // One element per line so the full group streams without building one big value.
    writeln!(out, "[")?;
    let mut first = true;
    for m in mats {
        if !first {
            writeln!(out, ",")?;
        }
        first = false;
        serde_json::to_writer(&mut *out, &m.to_json())?;
    }
    writeln!(out, "\n]")?;
    Ok(())
}

fn emit(what: Artifact, path: &Path) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut out = BufWriter::new(file);
    let ctx = G31Context::new();
    match what {
        Artifact::Generators => write_matrices(&mut out, &ctx.five_generators()?.lifts)?,
        Artifact::Reflections => write_matrices(&mut out, ctx.reflections()?)?,
        Artifact::Group => {
            // Sorted by canonical key so the output does not depend on closure order.
            let g = ctx.g31()?;
            let mut order: Vec<(String, usize)> = g
                .elements()
                .iter()
                .enumerate()
                .map(|(i, m)| (m.canonical_key(), i))
                .collect();
            order.sort();
            write_matrices(&mut out, order.iter().map(|&(_, i)| g.element(i)))?
        }
        Artifact::Tau => {
            serde_json::to_writer_pretty(&mut out, &tau_table().table())?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}
