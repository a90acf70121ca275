use std::fs::File;
use std::io::{self, Write};

use serde::Serialize;
use shiftcf_core::pi2::{Check, Report};
use shiftcf_core::Rational;

use crate::args::{OutputArgs, OutputFormat};

#[derive(Clone, Serialize)]
pub struct FactorRow {
    pub n: usize,
    pub d_n: Option<Rational>,
    pub c_n: Option<Rational>,
}

#[derive(Clone, Serialize)]
pub struct SolveRow {
    pub n: i64,
    #[serde(rename = "y_n")]
    pub y_n: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_decimal: Option<String>,
}

#[derive(Clone, Serialize)]
pub struct CfRow {
    pub n: i64,
    #[serde(rename = "A_n")]
    pub a_n: Rational,
    #[serde(rename = "B_n")]
    pub b_n: Rational,
    pub ratio_decimal: Option<String>,
}

/// [`Report`] with every column present, as CSV requires.
#[derive(Clone, Serialize)]
pub struct ReportRow {
    pub case: String,
    pub check: Check,
    #[serde(rename = "N")]
    pub horizon: usize,
    pub pass: bool,
    pub first_mismatch_index: Option<i64>,
    pub residual_decimal: Option<String>,
    pub rate_estimate: Option<String>,
}

impl From<&Report> for ReportRow {
    fn from(r: &Report) -> Self {
        ReportRow {
            case: r.case.clone(),
            check: r.check,
            horizon: r.horizon,
            pass: r.pass,
            first_mismatch_index: r.first_mismatch_index,
            residual_decimal: r.residual_decimal.clone(),
            rate_estimate: r.rate_estimate.clone(),
        }
    }
}

/// A report with a JSON document form and a flat row form for CSV.
pub struct Emit<'a, J, I> {
    json: &'a J,
    rows: I,
}

impl<'a, J, I> Emit<'a, J, I> {
    pub fn new(json: &'a J, rows: I) -> Self {
        Emit { json, rows }
    }
}

pub fn emit<J, I, R>(args: &OutputArgs, report: Emit<'_, J, I>) -> io::Result<()>
where
    J: Serialize,
    I: IntoIterator<Item = R>,
    R: Serialize,
{
    let mut sink: Box<dyn Write> = match &args.out_path {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    match args.output {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut sink, report.json)?;
            writeln!(sink)?;
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(sink);
            for row in report.rows {
                writer.serialize(row).map_err(io::Error::other)?;
            }
            writer.flush()?;
            return Ok(());
        }
    }
    sink.flush()
}
