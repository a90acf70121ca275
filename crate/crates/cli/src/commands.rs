use std::fmt;

use serde::Serialize;
use shiftcf_core::pi2::{self, Report};
use shiftcf_core::{
    closed_form_homogeneous, closed_form_nonhomogeneous, compute_cd, convergents, default_d1,
    iterate_direct, parse_polyseq, product_solution, to_decimal, BigDecimal, CfSpec, Error,
    Pi2Case, PolySeq, Rational, Recurrence, SolutionTrace, DEFAULT_PRECISION, MAX_REFERENCE_DIGITS,
};

use crate::args::{CfArgs, CheckArg, Cli, Command, FactorArgs, SolveArgs, SolveMethod, VerifyArgs};
use crate::output::{emit, CfRow, Emit, FactorRow, ReportRow, SolveRow};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Math(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_math() {
            CliError::Math(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

pub enum Outcome {
    Pass,
    Fail,
}

impl From<bool> for Outcome {
    fn from(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Factor(args) => factor(args),
        Command::Solve(args) => solve(args),
        Command::Cf(args) => cf(args),
        Command::VerifyPi2(args) => verify_pi2(args),
    }
}

fn seq(flag: &str, text: &str) -> Result<PolySeq, CliError> {
    parse_polyseq(text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn rational(flag: &str, text: &str) -> Result<Rational, CliError> {
    text.parse()
        .map_err(|e: Error| CliError::Usage(format!("--{flag}: {e}")))
}

fn check_horizon(horizon: usize) -> Result<(), CliError> {
    if horizon == 0 {
        return Err(CliError::Usage("--N must be at least 1".into()));
    }
    Ok(())
}

fn check_digits(digits: u32) -> Result<(), CliError> {
    if !(1..=MAX_REFERENCE_DIGITS).contains(&digits) {
        return Err(CliError::Usage(format!(
            "--digits must be in 1..={MAX_REFERENCE_DIGITS}, got {digits}"
        )));
    }
    Ok(())
}

fn seed(flag_value: Option<&str>, rec: &Recurrence) -> Result<Rational, CliError> {
    let d1 = match flag_value {
        Some(text) => rational("d1", text)?,
        None => default_d1(rec),
    };
    if d1.is_zero() {
        return Err(CliError::Usage("--d1 must be nonzero".into()));
    }
    Ok(d1)
}

#[derive(Serialize)]
struct FactorReport {
    command: &'static str,
    #[serde(rename = "N")]
    horizon: usize,
    d1: Rational,
    d: Vec<Rational>,
    c: Vec<Rational>,
    identities_hold: bool,
}

fn factor(args: &FactorArgs) -> Result<Outcome, CliError> {
    check_horizon(args.horizon)?;
    let rec = Recurrence::homogeneous(
        seq("a", &args.a)?,
        seq("b", &args.b)?,
        rational("ym1", &args.y_minus1)?,
        rational("y0", &args.y_0)?,
    );
    let d1 = seed(args.d1.as_deref(), &rec)?;
    let fac = compute_cd(&rec, &d1, args.horizon)?;
    let identities_hold = fac.first_violation(&rec)?.is_none();
    let report = FactorReport {
        command: "factor",
        horizon: args.horizon,
        d1,
        d: fac.d_values().to_vec(),
        c: fac.c_values().to_vec(),
        identities_hold,
    };
    let rows = (1..=args.horizon + 1).map(|n| FactorRow {
        n,
        d_n: fac.d(n).cloned(),
        c_n: fac.c(n).cloned(),
    });
    emit(&args.output, Emit::new(&report, rows))?;
    Ok(identities_hold.into())
}

#[derive(Serialize)]
struct SolveReport {
    command: &'static str,
    method: shiftcf_core::Method,
    #[serde(rename = "N")]
    horizon: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    d1: Option<Rational>,
    y: Vec<SolveRow>,
    agrees_with_direct: bool,
}

fn solve(args: &SolveArgs) -> Result<Outcome, CliError> {
    check_horizon(args.horizon)?;
    if let Some(d) = args.digits {
        check_digits(d)?;
    }
    let rec = Recurrence::new(
        seq("a", &args.a)?,
        seq("b", &args.b)?,
        seq("f", &args.f)?,
        rational("ym1", &args.y_minus1)?,
        rational("y0", &args.y_0)?,
    );
    let direct = iterate_direct(&rec, args.horizon)?;
    let trace: SolutionTrace = match args.method {
        SolveMethod::Direct => direct.clone(),
        SolveMethod::Closed | SolveMethod::Homogeneous => {
            let d1 = seed(args.d1.as_deref(), &rec)?;
            let fac = compute_cd(&rec, &d1, args.horizon)?;
            if args.method == SolveMethod::Closed {
                closed_form_nonhomogeneous(&rec, &fac, args.horizon)?
            } else {
                closed_form_homogeneous(&rec, &fac, args.horizon)?
            }
        }
        SolveMethod::Product => {
            if args.d1.is_some() {
                return Err(CliError::Usage(
                    "--d1 is fixed to y0/ym1 by --method product".into(),
                ));
            }
            product_solution(&rec, args.horizon)?
        }
    };
    let rows: Vec<SolveRow> = trace
        .values()
        .iter()
        .enumerate()
        .map(|(i, y)| SolveRow {
            n: i as i64 - 1,
            y_n: y.clone(),
            y_decimal: args.digits.map(|d| to_decimal(y, d).to_string()),
        })
        .collect();
    let agrees_with_direct = trace.values() == direct.values();
    let report = SolveReport {
        command: "solve",
        method: trace.method(),
        horizon: args.horizon,
        d1: trace.factorization().map(|f| f.d1().clone()),
        y: rows.clone(),
        agrees_with_direct,
    };
    emit(&args.output, Emit::new(&report, rows))?;
    Ok(agrees_with_direct.into())
}

#[derive(Serialize)]
struct CfReport {
    command: &'static str,
    #[serde(rename = "N")]
    horizon: usize,
    rows: Vec<CfRow>,
    value_decimal: Option<String>,
}

fn cf(args: &CfArgs) -> Result<Outcome, CliError> {
    check_horizon(args.horizon)?;
    check_digits(args.digits)?;
    let spec = CfSpec::new(seq("b", &args.b)?, seq("a", &args.a)?);
    let pair = convergents(&spec, args.horizon)?;
    let rows: Vec<CfRow> = pair
        .numerators()
        .iter()
        .zip(pair.denominators())
        .enumerate()
        .map(|(i, (a, b))| CfRow {
            n: i as i64 - 1,
            a_n: a.clone(),
            b_n: b.clone(),
            ratio_decimal: a
                .checked_div(b)
                .ok()
                .map(|r| to_decimal(&r, args.digits).to_string()),
        })
        .collect();
    let value = rows.last().and_then(|r| r.ratio_decimal.clone());
    if value.is_none() {
        return Err(Error::IndeterminateConvergent {
            index: args.horizon,
        }
        .into());
    }
    let report = CfReport {
        command: "cf",
        horizon: args.horizon,
        rows: rows.clone(),
        value_decimal: value,
    };
    emit(&args.output, Emit::new(&report, rows))?;
    Ok(Outcome::Pass)
}

fn verify_pi2(args: &VerifyArgs) -> Result<Outcome, CliError> {
    check_horizon(args.horizon)?;
    let case = Pi2Case::from_target(args.case)
        .ok_or_else(|| CliError::Usage(format!("--case must be 8 or 18, got {}", args.case)))?;
    let tol = BigDecimal::parse(&args.tol, DEFAULT_PRECISION)
        .map_err(|e| CliError::Usage(format!("--tol: {e}")))?;
    let n = args.horizon;
    let reports: Vec<Report> = match args.check {
        CheckArg::All => pi2::verify_all(case, n, &tol)?,
        CheckArg::Factorization => vec![pi2::check_factorization_closed_form(case, n)?],
        CheckArg::Numerator => vec![pi2::check_a_closed_form(case, n)?],
        CheckArg::Denominator => vec![pi2::check_b_series(case, n)?],
        CheckArg::Agreement => vec![pi2::check_solver_agreement(case, n)?],
        CheckArg::Limit => vec![pi2::check_limit(case, n, &tol)?],
    };
    let pass = reports.iter().all(|r| r.pass);
    emit(
        &args.output,
        Emit::new(&reports, reports.iter().map(ReportRow::from)),
    )?;
    Ok(pass.into())
}
