//! `weylrack`: batch front end for the hyperoctahedral rack toolkit.

mod commands;
mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use weyl_racks::verify::WitnessId;
use weyl_racks::{Error, Family};

use config::Config;
use output::Format;

/// Usage errors and unknown verbs.
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "weylrack", version, about = "Racks, type D certificates and Nichols probes for W(Bn) and W(Dn)")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Report format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads; reports do not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// TOML file with defaults for budgets and caps; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest <r, s> subgroup materialized by the type D search.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Include wall-clock timings (reports are then not reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// B or D.
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub degree: usize,
}

#[derive(Args, Debug, Clone)]
pub struct ElementArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Element as `bits:cycles`, e.g. `10010:(1 2)(3 4)`.
    #[arg(long)]
    pub element: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List conjugacy classes, one JSON object per line.
    Classes(GroupArgs),
    /// Describe the class of one element.
    ClassInfo {
        #[command(flatten)]
        element: ElementArgs,
        /// Include every element of the class.
        #[arg(long)]
        list: bool,
    },
    /// Search for a type D certificate in the class of an element.
    Typed(ElementArgs),
    /// Audit a witness construction for every admissible sign vector.
    Audit {
        /// double-transposition-5, double-transposition-6,
        /// triple-transposition, quadruple-transposition or three-cycle.
        #[arg(long)]
        witness: WitnessId,
        #[arg(long, default_value = "B")]
        family: Family,
        /// Defaults to the construction's own degree (6 for three-cycle).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Type D search over every class, compared with the exceptional shapes.
    Sweep(GroupArgs),
    /// Graded Nichols dimensions for a class with a ±1 cocycle.
    Nichols(commands::NicholsArgs),
    /// Exhaustive invariant suites at degree <= 4.
    Selftest,
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::InvariantViolated(_)) => 3,
        Some(Error::BudgetExceeded(_) | Error::CapExceeded(_)) => 2,
        _ => EXIT_USAGE,
    }
}

fn run(cli: Cli) -> anyhow::Result<(String, u8)> {
    let config = match &cli.global.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let format = match (cli.global.format, &config.format) {
        (Some(f), _) => f,
        (None, Some(s)) => s.parse()?,
        (None, None) => Format::Json,
    };
    let settings = commands::Settings {
        cap: cli.global.cap.or(config.cap),
        timings: cli.global.timings || config.timings.unwrap_or(false),
        config: config.clone(),
    };
    let jobs = cli.global.jobs.or(config.jobs);
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = jobs {
            anyhow::ensure!(n >= 1, "--jobs must be at least 1");
            b = b.num_threads(n);
        }
        b.build()?
    };
    let out = pool.install(|| match cli.command {
        Command::Classes(g) => commands::classes(&g),
        Command::ClassInfo { element, list } => commands::class_info(&element, list),
        Command::Typed(e) => commands::typed(&e, &settings),
        Command::Audit { witness, family, degree } => commands::audit(witness, family, degree, &settings),
        Command::Sweep(g) => commands::sweep(&g, &settings),
        Command::Nichols(args) => commands::nichols(&args, &settings),
        Command::Selftest => commands::selftest(),
    })?;
    Ok((out.render(format)?, out.status.code() as u8))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
