use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use kissing_core::certify;
use kissing_core::configurations::{build_named, KissingConfiguration, REGISTRY};
use kissing_core::vectorfile;
use kissing_core::verifier::{cross_section_test, spectrum, validate};

#[derive(Parser)]
#[command(name = "kissing", version, about = "Build and verify exact kissing configurations")]
struct Cli {
    /// Upper bound on worker threads.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named configuration and write it as a vector file.
    Build {
        name: String,
        /// Output path; standard output when omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Also write decimal coordinates next to the output file.
        #[arg(long, requires = "out")]
        float_sidecar: bool,
    },
    /// Check norms and inner products of a vector file.
    Verify {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
    },
    /// Print the exact inner product spectrum and the cross-section verdict.
    Spectrum {
        #[arg(required_unless_present = "input", conflicts_with = "input")]
        name: Option<String>,
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Run a certificate suite.
    Certify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(certify::TARGETS))]
        target: String,
    },
    /// List the registered configurations.
    List,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Failed,
}

fn read_config(path: &Path) -> Result<KissingConfiguration> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let label = path.display().to_string();
    vectorfile::import(&text, &label).with_context(|| format!("parsing {}", path.display()))
}

fn named(name: &str) -> Result<KissingConfiguration> {
    if !REGISTRY.contains(&name) {
        bail!("unknown configuration {name:?}; try `kissing list`");
    }
    Ok(build_named(name)?)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".float");
    PathBuf::from(s)
}

fn build(name: &str, out: Option<&Path>, float_sidecar: bool) -> Result<Outcome> {
    let start = Instant::now();
    let config = named(name)?;
    let elapsed = start.elapsed();
    let text = vectorfile::export(&config);
    match out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            if float_sidecar {
                let side = sidecar_path(path);
                fs::write(&side, vectorfile::float_sidecar(&config))
                    .with_context(|| format!("writing {}", side.display()))?;
            }
        }
        None => print!("{text}"),
    }
    eprintln!(
        "{name}: {} vectors in dimension {}, built in {:.3}s",
        config.len(),
        config.dimension,
        elapsed.as_secs_f64()
    );
    Ok(Outcome::Ok)
}

fn verify(path: &Path) -> Result<Outcome> {
    let config = read_config(path)?;
    let report = validate(&config)?;
    print!("{report}");
    Ok(if report.is_valid() { Outcome::Ok } else { Outcome::Failed })
}

fn show_spectrum(name: Option<&str>, input: Option<&Path>) -> Result<Outcome> {
    let config = match (name, input) {
        (_, Some(path)) => read_config(path)?,
        (Some(name), None) => named(name)?,
        (None, None) => bail!("give a configuration name or --in PATH"),
    };
    let s = match spectrum(&config) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return Ok(Outcome::Failed);
        }
    };
    print!("{s}");
    println!("{} values", s.len());
    let verdict = if cross_section_test(&s) {
        "not a cross section"
    } else {
        "cross-section compatible"
    };
    println!("verdict: {verdict}");
    Ok(Outcome::Ok)
}

fn run_certify(target: &str) -> Result<Outcome> {
    let start = Instant::now();
    let checks = certify::run(target).with_context(|| format!("unknown target {target:?}"))?;
    for c in &checks {
        println!("{c}");
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    println!("{target}: {} checks in {:.2}s", checks.len(), start.elapsed().as_secs_f64());
    if failed.is_empty() {
        Ok(Outcome::Ok)
    } else {
        println!("failed: {}", failed.join("; "));
        Ok(Outcome::Failed)
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Build { name, out, float_sidecar } => build(&name, out.as_deref(), float_sidecar),
        Command::Verify { input } => verify(&input),
        Command::Spectrum { name, input } => show_spectrum(name.as_deref(), input.as_deref()),
        Command::Certify { target } => run_certify(&target),
        Command::List => {
            for name in REGISTRY {
                println!("{name}");
            }
            Ok(Outcome::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
