//! The `critbase` command line.

pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

pub use output::{Format, Table};

/// Critical bases for the alphabets {0,1,m}, admissible sequences and unique
/// expansions in non-integer bases.
#[derive(Debug, Parser)]
#[command(name = "critbase", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GlobalOpts {
    /// Width of reported enclosures (rational or decimal, e.g. 1e-12).
    #[arg(long, global = true, default_value = "1e-12")]
    pub tol: String,
    /// Number of h-parameters determined before a search gives up.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_depth: usize,
    /// Output format: csv or json.
    #[arg(long, global = true, default_value_t = Format::Csv)]
    pub format: Format,
    /// Fractional digits of rendered numbers.
    #[arg(long, global = true, default_value_t = 12)]
    pub digits: u32,
    /// Accept (1+sqrt(5))/2 <= m < 2.
    #[arg(long, global = true)]
    pub allow_small_m: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// p_m, P_m and the admissible sequence attached to m.
    Critical { m: String },
    /// One row per integer m in [lo, hi].
    Table { lo: u64, hi: u64 },
    /// Uniqueness of the expansion pre (per)^inf in the given base.
    Unique {
        base: String,
        alphabet: String,
        /// Comma-separated digits, `-` when empty.
        pre: String,
        per: String,
    },
    /// Critical base of the sequence pre (per)^inf.
    Qc { alphabet: String, pre: String, per: String },
    /// Component interval [m_d, M_d) and mu_d of d = S(N,1)^inf.
    Interval {
        /// Comma-separated h-parameters; empty or `-` for d = 0^inf.
        h: String,
    },
    /// p_m and P_m sampled on lo, lo+step, ..., hi.
    Curve { lo: String, hi: String, step: String },
    /// Prefixes of all expansions of x.
    Expansions {
        x: String,
        q: String,
        alphabet: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Membership of m in the Cantor set C.
    Cantor { m: String },
    /// Generalized golden ratio of a three-letter alphabet.
    G { alphabet: String },
}

/// Exit status of a command that ran.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Resolved,
    DepthLimited,
}

/// Runs the command line and returns the process exit code: 0 when resolved,
/// 2 when depth-limited, 1 on bad input.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = commands::execute(&cli).and_then(|(table, outcome)| Ok((table.render(cli.global.format)?, outcome)));
    match result {
        Ok((text, outcome)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            match outcome {
                Outcome::Resolved => 0,
                Outcome::DepthLimited => 2,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
