//! Serialization of wing sets and validation reports: OBJ and ASCII STL
//! meshes, a CSV midpoint table, and a JSON report.
//!
//! Coordinates are exact up to this boundary and converted to the nearest
//! `f64` here. The optional axis-aligned frame is a float rotation; exact
//! values are only ever written for the unrotated model frame.

mod mesh;
mod midpoints;
mod report;

use std::fmt;
use std::io::{self, Write};

use geowind_core::{GoldenRational, ValidationReport, WingSet};
use thiserror::Error;

pub use mesh::export_mesh;
pub use midpoints::export_midpoints;
pub use report::export_report;

pub const TOOL_NAME: &str = "geowind";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    Obj,
    #[value(name = "stl")]
    StlAscii,
    #[value(name = "csv")]
    CsvMidpoints,
    #[value(name = "json")]
    JsonReport,
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Obj => "obj",
            ExportFormat::StlAscii => "stl",
            ExportFormat::CsvMidpoints => "csv",
            ExportFormat::JsonReport => "json",
        })
    }
}

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("UnsupportedFormat: {0} is not valid here")]
    UnsupportedFormat(ExportFormat),
    #[error("float_digits must be within 6..=17, got {0}")]
    InvalidFloatDigits(usize),
    #[error("IoFailure: {0}")]
    Io(#[from] io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExportOptions {
    pub format: ExportFormat,
    /// Rotate so `N − S` maps to `+z`.
    pub axis_aligned: bool,
    pub float_digits: usize,
}

impl ExportOptions {
    pub const DEFAULT_FLOAT_DIGITS: usize = 17;

    pub fn new(format: ExportFormat) -> Self {
        Self { format, axis_aligned: false, float_digits: Self::DEFAULT_FLOAT_DIGITS }
    }

    pub fn axis_aligned(mut self, on: bool) -> Self {
        self.axis_aligned = on;
        self
    }

    pub fn float_digits(mut self, digits: usize) -> Self {
        self.float_digits = digits;
        self
    }

    fn validate(&self) -> Result<(), ExportError> {
        if (6..=17).contains(&self.float_digits) {
            Ok(())
        } else {
            Err(ExportError::InvalidFloatDigits(self.float_digits))
        }
    }

    fn frame(&self) -> Frame {
        if self.axis_aligned {
            Frame::AxisAligned
        } else {
            Frame::Standard
        }
    }
}

/// Writes `ws` in the requested format; the JSON format needs the report.
pub fn export<W: Write + ?Sized>(
    ws: &WingSet<'_>,
    report: &ValidationReport,
    opts: &ExportOptions,
    out: &mut W,
) -> Result<(), ExportError> {
    match opts.format {
        ExportFormat::Obj | ExportFormat::StlAscii => export_mesh(ws, opts, out),
        ExportFormat::CsvMidpoints => export_midpoints(ws, opts, out),
        ExportFormat::JsonReport => export_report(report, ws, out),
    }
}

/// Coordinate frame of float output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Frame {
    Standard,
    AxisAligned,
}

impl Frame {
    pub(crate) fn apply(self, p: [f64; 3]) -> [f64; 3] {
        match self {
            Frame::Standard => p,
            Frame::AxisAligned => {
                // rotation about x taking the (0, 1, φ) direction to +z
                let phi = GoldenRational::phi().to_f64();
                let norm = (1.0 + phi * phi).sqrt();
                let (c, s) = (phi / norm, 1.0 / norm);
                [p[0], c * p[1] - s * p[2], s * p[1] + c * p[2]]
            }
        }
    }

    pub(crate) fn describe(self) -> &'static str {
        match self {
            Frame::Standard => "standard model frame (exact)",
            Frame::AxisAligned => "axis-aligned, N-S along +z (float rotation, not exact)",
        }
    }
}

/// `%g`-style rendering with `digits` significant digits and trailing
/// zeros removed, e.g. `1.6180339887498949`, `0`, `-0.5`, `1e-7`.
pub fn format_float(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_fraction(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Edge length as written in headers: a plain rational when possible.
pub(crate) fn edge_length_text(edge: &GoldenRational) -> String {
    if edge.is_rational() {
        edge.rational_part().to_string()
    } else {
        edge.to_string()
    }
}
