use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use enriques_core::cli::{emit_report, run_suite, CliError, Context, Format};
use enriques_core::config;
use enriques_core::lattice::{named_lattice, root_type};

#[derive(Parser)]
#[command(
    name = "enriques-verify",
    version,
    about = "Exact verification suites for Mathieu actions on Enriques surfaces"
)]
struct Cli {
    /// Directory holding groups.txt and surfaces.txt (default: bundled fixtures).
    #[arg(long, global = true, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// classify, characters, lefschetz, lattices, gonality, appendix-a,
        /// s5-config, hesse-config, steiner, exact-surfaces, char-p or all.
        suite: String,
        /// Keep only checks whose id starts with this prefix.
        #[arg(long, value_name = "PREFIX")]
        filter: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write the report here instead of standard output.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Catalog groups.
    Groups {
        #[command(subcommand)]
        command: GroupsCommand,
    },
    /// Named lattices.
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
    /// Curve configurations and Steiner systems as JSON.
    Config {
        #[command(subcommand)]
        command: ConfigCommand,
    },
}

#[derive(Subcommand)]
enum GroupsCommand {
    /// List catalog groups with order and degree.
    List,
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Print Gram matrix, determinant and signature, e.g. `A4+A5`, `T237`, `rescale(dual(D12),2)`.
    Show { name: String },
}

#[derive(Subcommand)]
enum ConfigCommand {
    /// One of s5, hesse, odd-involutions, steiner.
    Show { name: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Writes to standard output; a closed pipe is not an error.
fn emit(text: &str) -> std::io::Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mut out = String::new();
    let code = dispatch(cli, &mut out)?;
    emit(&out)?;
    Ok(code)
}

fn dispatch(cli: Cli, stdout: &mut String) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let ctx = match &cli.fixtures {
        Some(dir) => Context::from_dir(dir)?,
        None => Context::bundled(),
    };
    match cli.command {
        Command::Verify { suite, filter, format, out: path } => {
            let report = match run_suite(&suite, filter.as_deref(), &ctx, &mut |s| eprintln!("{s}")) {
                Ok(r) => r,
                Err(e @ CliError::UnknownSuite(_)) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
                Err(e) => return Err(e.into()),
            };
            if report.checks.is_empty() {
                eprintln!("warning: no checks match the filter");
            }
            let text = emit_report(&report, format.into());
            match path {
                Some(path) => std::fs::write(path, text)?,
                None => stdout.push_str(&text),
            }
            Ok(if report.verdict.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Groups { command: GroupsCommand::List } => {
            for e in ctx.catalog.entries() {
                let aliases =
                    if e.aliases.is_empty() { String::new() } else { format!("  ({})", e.aliases.join(", ")) };
                writeln!(stdout, "{:<10} order {:>6}  degree {:>2}{aliases}", e.name, e.order, e.degree)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { command: LatticeCommand::Show { name } } => {
            let l = named_lattice(&name)?;
            writeln!(stdout, "{name}: rank {}", l.rank())?;
            write!(stdout, "{l}")?;
            writeln!(stdout, "determinant {}", l.determinant())?;
            let (p, n, z) = l.signature();
            writeln!(stdout, "signature ({p}, {n}) with {z} null")?;
            writeln!(stdout, "even {}, unimodular {}", l.is_even(), l.is_unimodular())?;
            if !l.is_degenerate() && l.is_integral() {
                writeln!(stdout, "discriminant invariants {:?}", l.discriminant_group()?.invariant_factors())?;
            }
            if l.is_negative_definite() && l.rank() <= 24 {
                let r = root_type(&l)?;
                writeln!(
                    stdout,
                    "root type {} with {} roots",
                    if r.is_empty() { "empty".into() } else { r.label() },
                    r.roots
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Config { command: ConfigCommand::Show { name } } => {
            let value = match name.as_str() {
                "s5" => serde_json::to_value(config::s5_configuration().to_json())?,
                "odd-involutions" => serde_json::to_value(config::odd_involution_configuration().to_json())?,
                "hesse" => {
                    let real = config::hesse_pencil_lattice()?;
                    json!({
                        "gram": real.lattice.to_json(),
                        "classes": real.class_map.iter().map(|(k, v)| (k.clone(), v.iter().map(|x| x.to_string()).collect::<Vec<_>>())).collect::<std::collections::BTreeMap<_, _>>(),
                    })
                }
                "steiner" => serde_json::to_value(config::build_steiner_systems()?)?,
                other => {
                    eprintln!(
                        "error: unknown configuration `{other}`; expected one of: s5, hesse, odd-involutions, steiner"
                    );
                    return Ok(ExitCode::from(2));
                }
            };
            writeln!(stdout, "{}", serde_json::to_string_pretty(&value)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
