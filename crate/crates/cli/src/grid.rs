//! `start:stop:step` grids with inclusive endpoints.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::CliError;

/// Relative slack allowed when the last point overshoots `stop`.
const COUNT_SLACK: f64 = 1e-9;

/// More points than this in one axis is certainly a typo.
const MAX_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, CliError> {
        let bad = |why: &str| Err(CliError::Usage(format!("malformed grid {start}:{stop}:{step}: {why}")));
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return bad("values must be finite");
        }
        if step <= 0.0 {
            return bad("step must be positive");
        }
        if start > stop {
            return bad("start must not exceed stop");
        }
        let grid = GridSpec { start, stop, step };
        if grid.len() > MAX_POINTS {
            return bad("too many points");
        }
        Ok(grid)
    }

    /// A one-point grid.
    pub fn single(value: f64) -> Result<Self, CliError> {
        GridSpec::new(value, value, 1.0)
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1.0 + COUNT_SLACK).floor() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.start + k as f64 * self.step).collect()
    }
}

impl FromStr for GridSpec {
    type Err = CliError;

    /// Accepts `start:stop:step` or a single number.
    fn from_str(text: &str) -> Result<Self, CliError> {
        let fields: Vec<&str> = text.split(':').collect();
        let numbers = fields
            .iter()
            .map(|f| parse_real(f))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Usage(format!("malformed grid `{text}`, expected start:stop:step")))?;
        match numbers[..] {
            [value] => GridSpec::single(value),
            [start, stop, step] => GridSpec::new(start, stop, step),
            _ => Err(CliError::Usage(format!(
                "malformed grid `{text}`, expected start:stop:step"
            ))),
        }
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

pub fn parse_real(text: &str) -> Result<f64, CliError> {
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("not a number: `{text}`")))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(CliError::Usage(format!("not a finite number: `{text}`")))
    }
}

/// Parses `re` or `re,im`.
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    match text.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse_real(re)?, parse_real(im)?)),
        None => Ok(Complex64::new(parse_real(text)?, 0.0)),
    }
}
