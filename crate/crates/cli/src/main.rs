//! `rbgs`: command-line front end for the Rota-Baxter Gröbner-Shirshov engine.

mod commands;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rbgs",
    version,
    about = "Gröbner-Shirshov bases in free Rota-Baxter algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form of an expression.
    Normalize {
        /// Weight of the Rota-Baxter operator.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
        /// Generator names in increasing order, followed by the expression.
        #[arg(long, num_args = 1.., required = true, value_name = "NAME")]
        gens: Vec<String>,
        expr: Option<String>,
    },
    /// Compare two words: prints LT, EQ or GT.
    Compare {
        /// Generator names in increasing order, followed by the two words.
        #[arg(long, num_args = 1.., required = true, value_name = "NAME")]
        gens: Vec<String>,
        words: Vec<String>,
    },
    /// Reduce an expression to normal form modulo a rules file.
    Reduce {
        #[arg(long)]
        rules: PathBuf,
        expr: String,
        /// Print every rewrite step before the normal form.
        #[arg(long)]
        trace: bool,
    },
    /// List all compositions within the bounds with their status.
    Compositions {
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Check whether a rules file is a Gröbner-Shirshov basis up to the bounds.
    CheckGsb {
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Bounded completion; prints the completed rules file.
    Complete {
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        max_rounds: usize,
    },
    /// List the irreducible words up to a degree.
    Irr {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Dimension of the ideal's span and the rank-nullity table.
    OracleDim {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit a rules file for a preset presentation.
    Preset {
        #[command(subcommand)]
        preset: Preset,
    },
}

/// Rules file, degree bounds and composition kinds.
#[derive(Debug, Args)]
struct BoundArgs {
    #[arg(long)]
    rules: PathBuf,
    /// Bound on the total degree of ambiguity words.
    #[arg(long)]
    max_deg: usize,
    /// Bound on the multiplier `u` in `P(u)`; required for multiplication kinds.
    #[arg(long)]
    mult_deg: Option<usize>,
    /// `all`, `ambiguities`, or a comma list of intersection, inclusion,
    /// right_mult, left_mult. Defaults to `all` when `--mult-deg` is given
    /// and to `ambiguities` otherwise.
    #[arg(long)]
    kinds: Option<String>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    bounds: BoundArgs,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Preset {
    /// `x_i x_j = x_j x_i` and `P(u) x_i = x_i P(u)`.
    Commutative {
        #[arg(long, num_args = 1.., required = true, value_name = "NAME")]
        gens: Vec<String>,
        /// Ambiguity degree the presentation is meant to be checked at.
        #[arg(long)]
        max_deg: usize,
        /// Largest `u` instantiated in `P(u) x_i`; defaults to max-deg minus 2.
        #[arg(long)]
        inst_deg: Option<usize>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Enveloping algebra of a dendriform dialgebra.
    Dialgebra {
        #[command(flatten)]
        data: DataArgs,
        /// Relation families to emit.
        #[arg(long, value_delimiter = ',', default_values_t = [Family::F1, Family::F2, Family::F3])]
        families: Vec<Family>,
    },
    /// Enveloping algebra of a dendriform trialgebra.
    Trialgebra {
        #[command(flatten)]
        data: DataArgs,
    },
}

#[derive(Debug, Args)]
struct DataArgs {
    /// Structure constants file.
    #[arg(long)]
    data: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    F1,
    F2,
    F3,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::F1 => "f1",
            Family::F2 => "f2",
            Family::F3 => "f3",
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if !out.stderr.is_empty() {
                eprint!("{}", out.stderr);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
