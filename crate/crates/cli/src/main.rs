//! `superqa`: command-line front end for the engine.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "superqa",
    version,
    about = "Exact computations for small quantum supergroups of type Super A"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    /// Laurent polynomials in a formal `q`.
    Symbolic,
    /// Exact arithmetic in the cyclotomic field of order `N`.
    RootOfUnity,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OrderArg {
    /// Order `N` of the root of unity `q`.
    #[arg(long = "N", alias = "order", env = "SUPERQA_N", default_value_t = 8)]
    pub n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Super A datum, determinant, unimodularity and ribbon structures.
    Classify {
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Odd vertices, 1-based and comma separated.
        #[arg(long = "J", default_value = "1,2")]
        odd: String,
        #[command(flatten)]
        order: OrderArg,
        /// Scan every candidate pair instead of solving the congruences.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Dimension, quantum dimension, character and composition factors of a module.
    Module {
        #[command(flatten)]
        module: ModuleSpec,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Composition factors of a tensor product of two modules, e.g. `L(1,0) M(2,3)`.
    Tensor {
        left: String,
        right: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Graded character of a module.
    Character {
        #[command(flatten)]
        module: ModuleSpec,
        #[command(flatten)]
        order: OrderArg,
        /// Use the closed formula for simple modules instead of the module.
        #[arg(long)]
        closed_form: bool,
    },
    /// Product of two elements of the graded Grothendieck ring, e.g. `l10 l30`.
    Grothendieck {
        left: String,
        right: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Braiding matrix of a pair of modules.
    Rmatrix {
        /// First factor: `fundamental`, `fundamental-dual`, `w` or `L(i,j)`.
        #[arg(long, default_value = "fundamental")]
        first: String,
        /// Second factor; defaults to the first.
        #[arg(long)]
        second: Option<String>,
        #[arg(long, value_enum, default_value_t = Backend::RootOfUnity)]
        backend: Backend,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Minimal polynomial, spectrum and idempotent of the braiding on `W (x) W`,
    /// and the two-strand torus links.
    Skein {
        /// Largest torus parameter `b` to tabulate.
        #[arg(long, default_value_t = 15)]
        max_b: i64,
        /// Also evaluate the torus closures directly up to this parameter.
        #[arg(long, default_value_t = 6)]
        direct_b: i64,
    },
    /// Link invariant of a named knot, a braid closure or a Morse tangle.
    Invariant {
        /// Name from the built-in knot table.
        #[arg(long, conflicts_with_all = ["braid", "tangle"])]
        knot: Option<String>,
        /// Braid word such as `1,1,-2`.
        #[arg(long, allow_hyphen_values = true, requires = "strands")]
        braid: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        /// Strand (0-based) left open.
        #[arg(long, default_value_t = 0)]
        cut: usize,
        /// JSON file with a Morse (1,1)-tangle.
        #[arg(long)]
        tangle: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Backend::Symbolic)]
        backend: Backend,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Evaluate every table entry and compare with its reference value.
    KnotTable {
        /// Alternative golden file in the built-in table format.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Backend::Symbolic)]
        backend: Backend,
        #[command(flatten)]
        order: OrderArg,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct ModuleSpec {
    /// Simple module `L(i,j)`, given as `i,j`.
    #[arg(long)]
    simple: Option<String>,
    /// Standard module `M(i,j)`, given as `i,j`.
    #[arg(long)]
    standard: Option<String>,
}

fn run(cli: Cli) -> Result<commands::Output, Failure> {
    use commands as c;
    match cli.command {
        Command::Classify {
            r,
            odd,
            order,
            exhaustive,
        } => c::classify(r, &odd, order.n, exhaustive),
        Command::Module { module, order } => c::module(&module, order.n),
        Command::Tensor { left, right, order } => c::tensor(&left, &right, order.n),
        Command::Character {
            module,
            order,
            closed_form,
        } => c::character(&module, order.n, closed_form),
        Command::Grothendieck { left, right, order } => c::grothendieck(&left, &right, order.n),
        Command::Rmatrix {
            first,
            second,
            backend,
            order,
        } => c::rmatrix(
            &first,
            second.as_deref().unwrap_or(&first),
            backend,
            order.n,
        ),
        Command::Skein { max_b, direct_b } => c::skein(max_b, direct_b),
        Command::Invariant {
            knot,
            braid,
            strands,
            cut,
            tangle,
            backend,
            order,
        } => {
            let source = match (knot, braid, tangle) {
                (Some(k), None, None) => c::LinkSource::Knot(k),
                (None, Some(w), None) => c::LinkSource::Braid {
                    word: w,
                    strands: strands.unwrap_or(0),
                    cut,
                },
                (None, None, Some(p)) => c::LinkSource::Tangle(p),
                _ => {
                    return Err(Failure::Validation(
                        "give exactly one of --knot, --braid, --tangle".into(),
                    ))
                }
            };
            c::invariant(source, backend, order.n)
        }
        Command::KnotTable {
            golden,
            backend,
            order,
        } => c::knot_table(golden.as_deref(), backend, order.n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", render::render(&out, format)) {
                Ok(()) => ExitCode::from(out.code),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(out.code),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(3)
                }
            }
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
