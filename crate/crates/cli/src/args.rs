use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "shiftcf",
    version,
    about = "Exact second-order difference equations and continued fractions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the factor sequences c_n, d_n of y_n - b_n y_{n-1} - a_n y_{n-2}.
    Factor(FactorArgs),
    /// Solve y_n - b_n y_{n-1} - a_n y_{n-2} = f_n for given y_{-1}, y_0.
    Solve(SolveArgs),
    /// Convergents A_n / B_n of b_0 + a_1/(b_1 + a_2/(b_2 + ...)).
    Cf(CfArgs),
    /// Verify the continued fractions for 8/pi^2 and 18/pi^2.
    #[command(name = "verify-pi2")]
    VerifyPi2(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long = "out")]
    pub out_path: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    /// Sequence a_n, e.g. "-2*n^4 + n^3".
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Sequence b_n, e.g. "3*n^2 + 3*n + 1".
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    /// Seed d_1 (nonzero). Defaults to y_0 / y_{-1}, or 1.
    #[arg(long, allow_hyphen_values = true)]
    pub d1: Option<String>,
    #[arg(long = "ym1", default_value = "1", allow_hyphen_values = true)]
    pub y_minus1: String,
    #[arg(long = "y0", default_value = "1", allow_hyphen_values = true)]
    pub y_0: String,
    #[arg(long = "N", alias = "n")]
    pub horizon: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    /// Forward iteration of the recurrence.
    Direct,
    /// Closed form with forcing term.
    Closed,
    /// Closed form for f = 0.
    Homogeneous,
    /// y_{-1} times a product of d_j (f = 0, nonzero initial values).
    Product,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub f: String,
    /// Initial value y_{-1}.
    #[arg(long = "ym1", allow_hyphen_values = true)]
    pub y_minus1: String,
    /// Initial value y_0.
    #[arg(long = "y0", allow_hyphen_values = true)]
    pub y_0: String,
    #[arg(long, allow_hyphen_values = true)]
    pub d1: Option<String>,
    #[arg(long, value_enum, default_value_t = SolveMethod::Closed)]
    pub method: SolveMethod,
    #[arg(long = "N", alias = "n")]
    pub horizon: usize,
    /// Also emit each y_n as a decimal with this many significant digits.
    #[arg(long)]
    pub digits: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CfArgs {
    /// Partial denominators b_n (read from n = 0).
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    /// Partial numerators a_n (read from n = 1).
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long = "N", alias = "n")]
    pub horizon: usize,
    #[arg(long, default_value_t = 20)]
    pub digits: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    All,
    Factorization,
    Numerator,
    Denominator,
    Agreement,
    Limit,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// 8 for 8/pi^2, 18 for 18/pi^2.
    #[arg(long)]
    pub case: u32,
    #[arg(long = "N", alias = "n")]
    pub horizon: usize,
    #[arg(long, default_value = "1e-12")]
    pub tol: String,
    #[arg(long, value_enum, default_value_t = CheckArg::All)]
    pub check: CheckArg,
    #[command(flatten)]
    pub output: OutputArgs,
}
