//! The `asmlat` command line.
//!
//! [`run`] parses arguments, dispatches and returns the process exit code:
//! 0 success, 1 usage error, 2 invalid input, 3 enumeration guard exceeded,
//! 4 verification failure.

mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use asmlat_core::enumerate::{check_asm_guard, genfun_stat_over};
use asmlat_core::format::{parse_matrix_input, parse_permutation};
use asmlat_core::poset::{covers_down, covers_up};
use asmlat_core::stats::stat_record;
use asmlat_core::{
    bivariate_genfun, build_hasse, count_formula, enumerate_asms, Asm, Bivariate, Error, Stat,
    Universe, DEFAULT_GUARD,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use verify::{verify, Report, SuiteLine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "asmlat",
    version,
    about = "Alternating sign matrices and their lattice"
)]
struct Cli {
    /// Largest number of matrices any enumeration may produce.
    #[arg(long, global = true, env = "ASMLAT_GUARD")]
    guard: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every ASM of a given size.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size: u64,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
    },
    /// Number of ASMs of a given size.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size: u64,
        #[arg(long, value_enum, default_value_t = CountMethod::Formula)]
        method: CountMethod,
    },
    /// Inversion statistics of one matrix.
    Stats {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Covers above (default) or below one matrix.
    Covers {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, conflicts_with = "down")]
        up: bool,
        #[arg(long)]
        down: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// The full cover graph.
    Hasse {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        output: GraphFormat,
        /// Fill join-irreducible nodes in DOT output.
        #[arg(long)]
        highlight_ji: bool,
    },
    /// Generating polynomial of a statistic by full enumeration.
    Genfun {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size: u64,
        #[arg(long, value_enum, required_unless_present = "bivariate")]
        stat: Option<StatArg>,
        #[arg(long, value_enum)]
        bivariate: Option<PairArg>,
        #[arg(long, value_enum, default_value_t = OverArg::Asm)]
        over: OverArg,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Run every property suite for all sizes up to --max.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MatrixInput {
    /// Matrix file (text or JSON); `-` reads stdin.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Permutation, e.g. `3412` or `perm:3,4,1,2`.
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountMethod {
    Formula,
    Enumerate,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StatArg {
    #[value(name = "I")]
    I,
    #[value(name = "H")]
    H,
    #[value(name = "beta")]
    Beta,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PairArg {
    #[value(name = "I:beta")]
    IBeta,
    #[value(name = "H:beta")]
    HBeta,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OverArg {
    Asm,
    Perm,
}

enum Failure {
    Core(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TooLarge { .. } => EXIT_GUARD,
                _ => EXIT_DOMAIN,
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Verify) => EXIT_VERIFY,
    }
}

fn read_input(input: &MatrixInput) -> Result<Asm, Failure> {
    if let Some(p) = &input.perm {
        return Ok(Asm::from_permutation(&parse_permutation(p)?));
    }
    let path = input.matrix.as_ref().expect("clap requires one input");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    Ok(parse_matrix_input(&text)?)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let guard = cli.guard.unwrap_or(DEFAULT_GUARD);
    match cli.command {
        Command::Enumerate { size, format } => {
            let all = enumerate_asms(size as usize, guard)?;
            match format {
                ListFormat::Lines => {
                    for a in &all {
                        writeln!(out, "{}", a.flat_string())?;
                    }
                }
                ListFormat::Json => {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&all).expect("serializable")
                    )?;
                }
            }
        }
        Command::Count { size, method } => {
            let n = size as usize;
            match method {
                CountMethod::Formula => writeln!(out, "{}", count_formula(n))?,
                CountMethod::Enumerate => writeln!(out, "{}", enumerate_asms(n, guard)?.len())?,
            }
        }
        Command::Stats { input, format } => {
            let a = read_input(&input)?;
            let r = stat_record(&a);
            match format {
                OutFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?
                }
                OutFormat::Text => {
                    writeln!(out, "I = {}", r.inv)?;
                    writeln!(out, "I* = {}", r.dual_inv)?;
                    writeln!(out, "N = {}", r.minus)?;
                    writeln!(out, "H = {}", r.weak())?;
                    writeln!(out, "beta = {}", r.beta)?;
                }
            }
        }
        Command::Covers {
            input,
            up: _,
            down,
            format,
        } => {
            let a = read_input(&input)?;
            let edges = if down { covers_down(&a) } else { covers_up(&a) };
            let other = |e: &asmlat_core::CoverEdge| {
                if down {
                    e.lower.clone()
                } else {
                    e.upper.clone()
                }
            };
            match format {
                OutFormat::Text => {
                    for e in &edges {
                        let d = e.deltas();
                        writeln!(
                            out,
                            "{} t{} at ({},{}) dI={} dN={} dH={}",
                            other(e).label(),
                            e.cover_type.number(),
                            e.r,
                            e.s,
                            d.d_inv,
                            d.d_minus,
                            asmlat_core::HalfInt(d.d_weak2)
                        )?;
                    }
                }
                OutFormat::Json => {
                    let list: Vec<_> = edges
                        .iter()
                        .map(|e| {
                            let mut v = serde_json::to_value(e).expect("serializable");
                            v["matrix"] = json!(other(e));
                            v
                        })
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&list).expect("serializable")
                    )?;
                }
            }
        }
        Command::Hasse {
            size,
            output,
            highlight_ji,
        } => {
            let g = build_hasse(size as usize, guard)?;
            match output {
                GraphFormat::Dot => write!(out, "{}", g.to_dot(highlight_ji))?,
                GraphFormat::Json => writeln!(out, "{}", g.to_json())?,
            }
        }
        Command::Genfun {
            size,
            stat,
            bivariate,
            over,
            format,
        } => {
            let n = size as usize;
            let universe = match over {
                OverArg::Asm => Universe::Asm,
                OverArg::Perm => Universe::Perm,
            };
            if let Some(pair) = bivariate {
                // On permutation matrices N = 0, so H and I coincide.
                let kind = match (pair, universe) {
                    (_, Universe::Perm) => Bivariate::PermInversionsBeta,
                    (PairArg::IBeta, Universe::Asm) => Bivariate::AsmInversionsBeta,
                    (PairArg::HBeta, Universe::Asm) => Bivariate::AsmWeakBeta,
                };
                let p = bivariate_genfun(n, kind, guard)?;
                match format {
                    OutFormat::Text => writeln!(out, "{}", p.to_text())?,
                    OutFormat::Json => writeln!(out, "{}", p.to_json())?,
                }
            } else {
                let stat = match stat.expect("clap requires --stat") {
                    StatArg::I => Stat::Inversions,
                    StatArg::H => Stat::Weak,
                    StatArg::Beta => Stat::Beta,
                };
                let p = genfun_stat_over(n, stat, universe, guard)?;
                match format {
                    OutFormat::Text => writeln!(out, "{}", p.to_text("λ"))?,
                    OutFormat::Json => writeln!(out, "{}", p.to_json("lambda"))?,
                }
            }
        }
        Command::Verify { max } => {
            let n_max = max as usize;
            check_asm_guard(n_max, guard)?;
            let report = verify(n_max);
            write!(out, "{report}")?;
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}
