//! Argument parsing and dispatch for the `heightlab` binary.
//!
//! [`run_from`] runs a whole invocation in-process and returns what the
//! binary would print, so tests do not need to spawn processes.

pub mod commands;
pub mod corpus;

use clap::{Args, Parser, Subcommand};
use heightlab::{Error, Limits};

#[derive(Parser, Debug)]
#[command(name = "heightlab", version, about = "Heights on plane curves and Runge-type integral points")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Absolute tolerance for logarithmic quantities.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Skip the irreducibility checks on input.
    #[arg(long, global = true)]
    pub assume_irreducible: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weil height of `p/q` or `root(<poly>, <index>)`.
    Height { number: String },
    /// Projective height of a polynomial.
    Hp { poly: String },
    /// The constant c(P).
    Cp { poly: String },
    /// Height threshold above which h(y) ≤ 2(p/q)h(x).
    Threshold { poly: String },
    /// Checks the quasi-equivalence inequality at sampled points.
    VerifyQuasi(VerifyQuasiArgs),
    /// Builds A, B with A·Y^m − B divisible by P.
    ConstructAux(ConstructAuxArgs),
    /// Vanishing order of A at a regular zero of P.
    VanishOrder(VanishOrderArgs),
    /// Heights of the singular y-values against their bound.
    Singular { poly: String },
    /// X^p P(1/X + ξ, Y).
    Transform {
        poly: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        xi: String,
    },
    /// Runge condition, bound and integral point search.
    #[command(subcommand)]
    Runge(RungeCommand),
    /// Factorization of a univariate polynomial over ℚ.
    Factor { poly: String },
}

#[derive(Args, Debug)]
pub struct VerifyQuasiArgs {
    pub poly: String,
    /// Number of abscissae drawn from the default pool.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Explicit abscissae, comma separated; overrides sampling.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x_values: Option<Vec<String>>,
    /// Pool fractions ±a/b have 1 ≤ a, b ≤ this.
    #[arg(long, default_value_t = 6)]
    pub pool_height: u32,
    /// Pool powers ±2^k have k ≤ this.
    #[arg(long, default_value_t = 100)]
    pub max_k: u32,
}

#[derive(Args, Debug)]
pub struct ConstructAuxArgs {
    pub poly: String,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Choose m, n from k.
    #[arg(long, requires = "k", conflicts_with_all = ["m", "n"])]
    pub auto: bool,
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long, default_value_t = 2.25)]
    pub kappa: f64,
    #[arg(long, default_value_t = 4.98)]
    pub lambda: f64,
}

#[derive(Args, Debug)]
pub struct VanishOrderArgs {
    pub poly: String,
    /// The polynomial A.
    #[arg(long)]
    pub aux: String,
    /// The zero as `x,y`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    /// Construction degrees, for the multiplicity bound.
    #[arg(long, requires = "n")]
    pub m: Option<u32>,
    #[arg(long, requires = "m")]
    pub n: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum RungeCommand {
    /// Whether the Runge condition holds.
    Check { poly: String },
    /// The explicit bound on log max{1, |x|, |y|}.
    Bound { poly: String },
    /// Integral points with |x| ≤ limit or |y| ≤ limit.
    Solve {
        poly: String,
        #[arg(long, default_value_t = 1000)]
        limit: u64,
    },
    /// Full report with slope checks and certificate.
    Certify {
        poly: String,
        #[arg(long, default_value_t = 1000)]
        limit: u64,
    },
}

/// Everything an invocation prints, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Resource(_) => EXIT_RESOURCE,
        _ => EXIT_HYPOTHESIS,
    }
}

/// Coefficient budget, from `HEIGHTLAB_BITS_CAP` when set.
pub fn limits_from_env() -> Limits {
    let mut l = Limits::default();
    if let Some(v) = std::env::var("HEIGHTLAB_BITS_CAP").ok().and_then(|s| s.trim().parse().ok()) {
        l.bits_cap = v;
    }
    l
}

pub fn run(cli: &Cli) -> Outcome {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: EXIT_RESOURCE,
            }
        }
    };
    match pool.install(|| commands::dispatch(cli)) {
        Ok(r) => Outcome {
            stdout: if cli.global.json { r.json + "\n" } else { r.text },
            stderr: r.notes,
            code: r.code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code: EXIT_PARSE }
            }
        }
    }
}
