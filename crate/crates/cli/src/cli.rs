use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::commands::{self, Report, Status};
use crate::config::{Format, RunConfig, DEFAULT_GENUS_MAX, DEFAULT_GENUS_MIN};

#[derive(Debug, Parser)]
#[command(
    name = "motivic",
    version,
    about = "Exact motives of symmetric powers of a curve and of the rank-2 moduli space M_L"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GenusArgs {
    /// Single genus (same as --genus-min N --genus-max N)
    #[arg(long, value_name = "N", conflicts_with_all = ["genus_min", "genus_max"])]
    genus: Option<u32>,
    #[arg(long, value_name = "N")]
    genus_min: Option<u32>,
    #[arg(long, value_name = "N")]
    genus_max: Option<u32>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Shorthand for --format json
    #[arg(long, conflicts_with = "format")]
    json: bool,
    /// Write the result to PATH instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for per-parameter checks (1 = sequential)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression to its canonical motive
    Eval {
        expr: String,
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare two expressions at every genus in the range
    Equal {
        left: String,
        right: String,
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the decomposition of h(M_L), its coefficient-wise proof and both oracles
    VerifyTheorem {
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Add N to the far twist 3g-3-2k (a deliberately wrong formula)
        #[arg(long, hide = true, default_value_t = 0)]
        far_twist_shift: u32,
    },
    /// Check the generating-function identity over a range of m
    Identity {
        #[arg(long, value_name = "N")]
        m_min: Option<u32>,
        #[arg(long, value_name = "N")]
        m_max: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Poincaré polynomial of an expression
    Poincare {
        expr: String,
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hodge polynomial of an expression
    Hodge {
        expr: String,
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Lay the Hodge numbers out as a diamond
        #[arg(long)]
        diamond: bool,
    },
    /// Hodge diamond of M_L split into its symmetric-power blocks
    Decompose {
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Everything a finished run produces, before it touches the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: Status,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            status: Status::Usage,
        }
    }
}

fn config(genus: Option<&GenusArgs>, output: &OutputArgs, default_format: Format) -> RunConfig {
    let mut cfg = RunConfig::default();
    if let Some(g) = genus {
        if let Some(n) = g.genus {
            cfg.genus_min = n;
            cfg.genus_max = n;
        } else {
            cfg.genus_min = g.genus_min.unwrap_or(DEFAULT_GENUS_MIN);
            cfg.genus_max = g.genus_max.unwrap_or(DEFAULT_GENUS_MAX);
        }
    }
    cfg.format = match (output.json, output.format) {
        (true, _) => Format::Json,
        (false, Some(f)) => f,
        (false, None) => default_format,
    };
    cfg.out = output.out.clone();
    cfg.jobs = output.jobs;
    cfg
}

type Job = Box<dyn FnOnce(&RunConfig) -> Result<Report, commands::CommandError>>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    status: Status::Success,
                },
                _ => Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    status: Status::Usage,
                },
            };
        }
    };

    let (mut cfg, job): (RunConfig, Job) = match cli.command {
        Command::Eval {
            expr,
            genus,
            output,
        } => (
            config(Some(&genus), &output, Format::Json),
            Box::new(move |c| commands::eval(&expr, c)),
        ),
        Command::Equal {
            left,
            right,
            genus,
            output,
        } => (
            config(Some(&genus), &output, Format::Text),
            Box::new(move |c| commands::equal(&left, &right, c)),
        ),
        Command::VerifyTheorem {
            genus,
            output,
            far_twist_shift,
        } => (
            config(Some(&genus), &output, Format::Text),
            Box::new(move |c| Ok(commands::verify_theorem(c, far_twist_shift))),
        ),
        Command::Identity {
            m_min,
            m_max,
            output,
        } => {
            let mut cfg = config(None, &output, Format::Text);
            cfg.m_min = m_min.unwrap_or(cfg.m_min);
            cfg.m_max = m_max.unwrap_or(cfg.m_max);
            (cfg, Box::new(|c| Ok(commands::identity(c))))
        }
        Command::Poincare {
            expr,
            genus,
            output,
        } => (
            config(Some(&genus), &output, Format::Text),
            Box::new(move |c| commands::poincare(&expr, c)),
        ),
        Command::Hodge {
            expr,
            genus,
            output,
            diamond,
        } => {
            let mut cfg = config(Some(&genus), &output, Format::Text);
            cfg.diamond = diamond;
            (cfg, Box::new(move |c| commands::hodge(&expr, c)))
        }
        Command::Decompose { genus, output } => (
            config(Some(&genus), &output, Format::Text),
            Box::new(|c| Ok(commands::decompose(c))),
        ),
    };

    cfg = match cfg.validate() {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };

    let report = match job(&cfg) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                status: e.status(),
            }
        }
    };

    let mut stderr: String = report
        .diagnostics
        .iter()
        .map(|d| format!("{d}\n"))
        .collect();
    let stdout = match &cfg.out {
        None => report.body,
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report.body) {
                stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                return Outcome {
                    stdout: String::new(),
                    stderr,
                    status: Status::Usage,
                };
            }
            String::new()
        }
    };
    Outcome {
        stdout,
        stderr,
        status: report.status,
    }
}
