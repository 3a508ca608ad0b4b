use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cli::commands::{self, Format, Sequence, Which};
use cli::CliError;
use midlevels::Budget;

/// Germs, tree codes, the middle-levels graph, its lexical 1-factorization
/// and Hamilton cycles.
#[derive(Debug, Parser)]
#[command(name = "midlevels", version)]
struct RunConfig {
    /// Worker threads for data-parallel steps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Limits {
    /// Lift the default bound on k.
    #[arg(long)]
    unsafe_large: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the k-germs in natural order.
    Germs {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        /// Print only the number of germs.
        #[arg(long)]
        count_only: bool,
        /// Print germs with leading zeros stripped.
        #[arg(long)]
        rgs: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
    /// Tree code, theta and aleph of a germ.
    Encode {
        germ: String,
        /// Read GERM as an RGS padded to this k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Same as --format dot: the ordered tree.
        #[arg(long)]
        dot: bool,
    },
    /// Germ of a tree code.
    Decode {
        code: String,
        /// Print every uncastling step.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build M_k, M_k/pi or R_k with lexical colors.
    Graph {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        #[arg(long, value_enum, default_value = "mk")]
        which: Which,
        /// Same as --format dot.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
    /// Colored adjacency table of the k-germs.
    Cat {
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        k: u16,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include tree codes and coded neighbor words (text only).
        #[arg(long)]
        codes: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Sequences read off the adjacency tables.
    Seq {
        #[arg(long, conflicts_with = "s1", required_unless_present = "s1")]
        s0: bool,
        #[arg(long)]
        s1: bool,
        #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
        /// Separate the blocks taken from successive tables.
        #[arg(long)]
        blocks: bool,
    },
    /// Construct, write and re-verify a Hamilton cycle of M_k.
    Hamilton {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        /// Certificate file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print only the verification verdict.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run the invariant suites for every k up to --k.
    Verify {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        /// Re-derive the printed tables and diff them against the golden files.
        #[arg(long)]
        tables: bool,
        /// Also check a Hamilton certificate file.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
}

fn budget(max_k: usize, limits: &Limits) -> Result<Budget, CliError> {
    Ok(Budget::from_env()?
        .with_max_k(max_k)
        .unsafe_large(limits.unsafe_large))
}

fn run(config: RunConfig) -> Result<bool, CliError> {
    if let Some(n) = config.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let text = match config.command {
        Command::Germs {
            k,
            count_only,
            rgs,
            format,
            limits,
        } => commands::germs(k.into(), count_only, rgs, format, limits.unsafe_large)?,
        Command::Encode { germ, k, format, dot } => {
            let g = commands::parse_germ(&germ, k)?;
            commands::encode(&g, if dot { Format::Dot } else { format })?
        }
        Command::Decode { code, trace, format } => commands::decode(&code, trace, format)?,
        Command::Graph {
            k,
            which,
            dot,
            format,
            limits,
        } => {
            let b = budget(commands::MK_MAX_K, &limits)?;
            commands::graph(k.into(), which, if dot { Format::Dot } else { format }, &b)?
        }
        Command::Cat {
            k,
            format,
            codes,
            limits,
        } => commands::cat(k.into(), format, codes, limits.unsafe_large)?,
        Command::Seq {
            s0, count, blocks, ..
        } => {
            let which = if s0 { Sequence::S0 } else { Sequence::S1 };
            commands::seq(which, count as usize, blocks)?
        }
        Command::Hamilton {
            k,
            out,
            verify,
            limits,
        } => {
            let b = budget(commands::HAMILTON_MAX_K, &limits)?;
            let result = commands::hamilton(k.into(), out.as_deref(), verify, &b)?;
            if !verify {
                eprintln!("{}", result.status);
            }
            result.stdout
        }
        Command::Verify {
            k,
            tables,
            certificate,
            limits,
        } => {
            let b = budget(commands::VERIFY_MAX_K, &limits)?;
            let (report, ok) = commands::verify(k.into(), tables, certificate.as_deref(), &b)?;
            print!("{report}");
            return Ok(ok);
        }
    };
    print!("{text}");
    Ok(true)
}

fn main() -> ExitCode {
    match run(RunConfig::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
