//! Output records and their CSV / JSON / plain renderings.
//!
//! Floats are written by the `csv` and `serde_json` serializers, both of
//! which emit the shortest representation that parses back to the same bits.

use std::io::Write;

use hurwitz_core::{Complex64, IdentityReport, ZetaResult};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const EVAL_HEADER: &str = "s_re,s_im,u,method,value_re,value_im,est_error,n_evals,elapsed_ms";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub s_re: f64,
    pub s_im: f64,
    pub u: f64,
    pub method: String,
    pub value_re: f64,
    pub value_im: f64,
    pub est_error: f64,
    pub n_evals: u64,
    pub elapsed_ms: f64,
}

impl EvalRecord {
    pub fn new(s: Complex64, u: f64, result: &ZetaResult, elapsed_ms: f64) -> Self {
        EvalRecord {
            s_re: s.re,
            s_im: s.im,
            u,
            method: result.method.name().to_string(),
            value_re: result.value.re,
            value_im: result.value.im,
            est_error: result.err_estimate,
            n_evals: result.n_evals,
            elapsed_ms,
        }
    }

    pub fn plain(&self) -> String {
        format!(
            "zeta({}, {}) = {:?} {} {:?}i\nmethod {}, est_error {:e}, n_evals {}, elapsed {} ms\n",
            complex_text(self.s_re, self.s_im),
            self.u,
            self.value_re,
            if self.value_im.is_sign_negative() { '-' } else { '+' },
            self.value_im.abs(),
            self.method,
            self.est_error,
            self.n_evals,
            self.elapsed_ms,
        )
    }
}

fn complex_text(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re}")
    } else {
        format!("{re}{im:+}i")
    }
}

/// One row of `verify` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub identity: String,
    pub s_re: f64,
    pub s_im: f64,
    pub u: f64,
    pub x: f64,
    pub t: f64,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub threshold: f64,
    pub converged: bool,
    pub n_evals: u64,
    pub passed: bool,
}

impl From<&IdentityReport> for VerifyRecord {
    fn from(r: &IdentityReport) -> Self {
        VerifyRecord {
            identity: r.identity.clone(),
            s_re: r.args.s.re,
            s_im: r.args.s.im,
            u: r.args.u,
            x: r.args.x,
            t: r.args.t,
            lhs_re: r.lhs.re,
            lhs_im: r.lhs.im,
            rhs_re: r.rhs.re,
            rhs_im: r.rhs.im,
            abs_residual: r.abs_residual,
            rel_residual: r.rel_residual,
            threshold: r.threshold,
            converged: r.converged,
            n_evals: r.n_evals,
            passed: r.passed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

/// CSV with a header row and LF line endings.
pub fn write_csv<W: Write, R: Serialize>(out: W, records: &[R]) -> Result<(), CliError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for record in records {
        writer.serialize(record).map_err(csv_error)?;
    }
    writer.flush()?;
    Ok(())
}

/// One JSON object per line.
pub fn write_json<W: Write, R: Serialize>(mut out: W, records: &[R]) -> Result<(), CliError> {
    for record in records {
        serde_json::to_writer(&mut out, record).map_err(|e| CliError::Io(e.into()))?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> CliError {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => CliError::Io(e),
        other => CliError::Io(std::io::Error::other(format!("{other:?}"))),
    }
}
