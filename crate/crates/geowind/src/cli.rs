//! `geowind` command line: generate, validate, export, report.
//!
//! Exit codes: 0 success, 1 validation failed, 2 bad arguments, 3 I/O failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use geowind_core::validators::ValidationReport;
use geowind_core::{build_icosahedron, generate_wing_set, run_all, GoldenRational, LabeledIcosahedron, ModelError, Rational, WingSet};

use crate::export::{self, format_float, ExportError, ExportFormat, ExportOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION_FAILED: i32 = 1;
pub const EXIT_BAD_ARGS: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Environment variable that disables ANSI colors in summaries.
pub const NO_COLOR_ENV: &str = "GEOWIND_NO_COLOR";

#[derive(Debug, Parser)]
#[command(name = "geowind", version, about = "Build and validate the ten-face pole-anchored wing set on a regular icosahedron")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Emit the wing-set mesh (obj or stl)
    Generate,
    /// Run every check and print a summary; exit 0 iff all pass
    Validate,
    /// Emit the chosen format (obj, stl, csv or json)
    Export,
    /// Emit the JSON validation report; exit 0 iff all checks pass
    Report,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Icosahedron edge length as an exact rational, e.g. 1 or 7/3
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    edge_length: String,
    #[arg(long, global = true, value_enum)]
    format: Option<ExportFormat>,
    /// Output path; stdout when omitted
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Rotate exported coordinates so N-S lies along +z
    #[arg(long, global = true)]
    axis_aligned: bool,
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: Command,
    pub edge_length: GoldenRational,
    pub format: Option<ExportFormat>,
    pub output: Option<PathBuf>,
    pub axis_aligned: bool,
    pub verbose: bool,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("invalid --edge-length {0:?}: expected an exact rational such as 1 or 7/3")]
    EdgeLength(String),
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("{0}")]
    BadArgs(String),
    #[error(transparent)]
    Export(#[from] ExportError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Export(ExportError::Io(_)) => EXIT_IO,
            _ => EXIT_BAD_ARGS,
        }
    }
}

fn parse_edge_length(text: &str) -> Result<GoldenRational, CliError> {
    let r = Rational::from_str(text.trim()).map_err(|_| CliError::EdgeLength(text.to_string()))?;
    Ok(GoldenRational::from_rational(r))
}

/// Entry point used by `main`: real stdio, color decided from the terminal
/// and [`NO_COLOR_ENV`].
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let color = std::env::var_os(NO_COLOR_ENV).is_none() && io::stdout().is_terminal();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock(), color)
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_ARGS } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let config = match config_from(cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    match execute(&config, stdout, color) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn config_from(cli: Cli) -> Result<CliConfig, CliError> {
    let edge_length = parse_edge_length(&cli.common.edge_length)?;
    if !edge_length.is_positive() {
        return Err(ModelError::NonPositiveEdgeLength.into());
    }
    Ok(CliConfig {
        command: cli.command,
        edge_length,
        format: cli.common.format,
        output: cli.common.output,
        axis_aligned: cli.common.axis_aligned,
        verbose: cli.common.verbose,
    })
}

fn execute(config: &CliConfig, stdout: &mut dyn Write, color: bool) -> Result<i32, CliError> {
    let model = build_icosahedron(config.edge_length.clone())?;
    let ws = generate_wing_set(&model);

    match config.command {
        Command::Generate => {
            let format = config.format.unwrap_or(ExportFormat::Obj);
            if !matches!(format, ExportFormat::Obj | ExportFormat::StlAscii) {
                return Err(CliError::BadArgs(format!("generate writes meshes (obj or stl), not {format}")));
            }
            let opts = ExportOptions::new(format).axis_aligned(config.axis_aligned);
            with_output(config, stdout, |out| export::export_mesh(&ws, &opts, out))?;
            Ok(EXIT_OK)
        }
        Command::Export => {
            let format = config.format.unwrap_or(ExportFormat::Obj);
            let report = run_all(&model, &ws);
            let opts = ExportOptions::new(format).axis_aligned(config.axis_aligned);
            with_output(config, stdout, |out| export::export(&ws, &report, &opts, out))?;
            Ok(EXIT_OK)
        }
        Command::Report => {
            if let Some(f) = config.format.filter(|f| *f != ExportFormat::JsonReport) {
                return Err(CliError::BadArgs(format!("report is always json, not {f}")));
            }
            let report = run_all(&model, &ws);
            with_output(config, stdout, |out| export::export_report(&report, &ws, out))?;
            Ok(exit_for(&report))
        }
        Command::Validate => {
            let report = run_all(&model, &ws);
            let text = summary(&model, &ws, &report, config.verbose, color);
            with_output(config, stdout, |out| Ok(out.write_all(text.as_bytes())?))?;
            Ok(exit_for(&report))
        }
    }
}

fn exit_for(report: &ValidationReport) -> i32 {
    if report.overall {
        EXIT_OK
    } else {
        EXIT_VALIDATION_FAILED
    }
}

fn with_output(
    config: &CliConfig,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<(), ExportError>,
) -> Result<(), CliError> {
    match &config.output {
        Some(path) => {
            let file = File::create(path).map_err(ExportError::Io)?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush().map_err(ExportError::Io)?;
        }
        None => {
            body(stdout)?;
            stdout.flush().map_err(ExportError::Io)?;
        }
    }
    Ok(())
}

fn verdict(pass: bool, color: bool) -> &'static str {
    match (pass, color) {
        (true, true) => "\x1b[32mPASS\x1b[0m",
        (false, true) => "\x1b[31mFAIL\x1b[0m",
        (true, false) => "PASS",
        (false, false) => "FAIL",
    }
}

/// Human summary, one line per workflow step in order, then maximality.
pub fn summary(
    model: &LabeledIcosahedron,
    ws: &WingSet<'_>,
    report: &ValidationReport,
    verbose: bool,
    color: bool,
) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    let edge = export::edge_length_text(model.edge_length());
    let e = &report.edge_check;
    let sh = &report.shape_check;
    let d = &report.decagon_check;
    let m = &report.maximality_check;
    let x = &report.intersection_check;

    let _ = writeln!(
        s,
        "[1] labeled icosahedron: {} vertices, {} edges, edge length {edge}",
        model.vertices().count(),
        model.edges().len()
    );
    let _ = writeln!(s, "[2] wing faces generated: {}", ws.faces().len());
    let _ = writeln!(
        s,
        "[3] edge non-sharing: {} ({} distinct edges in {} slots)",
        verdict(e.pass, color),
        e.distinct_edges,
        e.edge_slots
    );
    if verbose {
        for dup in &e.duplicate_pairs {
            let _ = writeln!(s, "      duplicate {} in {} and {}", dup.edge, dup.first.name, dup.second.name);
        }
    }
    let _ = writeln!(
        s,
        "[4] face shapes: {} (sides l, l, phi*l; angles 36/36/108; 36 deg at pole)",
        verdict(sh.pass, color)
    );
    if verbose {
        for f in &sh.per_face {
            let angles: Vec<String> = f.angles_deg_float.iter().map(|a| format_float(*a, 12)).collect();
            let _ = writeln!(s, "      {} {} angles {}", f.face, verdict(f.pass, color), angles.join("/"));
        }
    }
    let exact_radius = if edge == "1" { "phi/2".to_string() } else { format!("{edge}*phi/2") };
    let _ = writeln!(
        s,
        "[5] equatorial decagon: {} (in plane {}, on circle {}, 36 deg spacing {}, interlaced {})",
        verdict(d.pass, color),
        d.in_plane,
        d.on_circle,
        d.regular_spacing,
        d.interlaced
    );
    let _ = writeln!(s, "    decagon radius = {} (exact {exact_radius})", format_float(d.radius_float, 9));
    if verbose {
        let order: Vec<String> = d.angular_order.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "      angular order {}", order.join(" "));
        let _ = writeln!(s, "      sq radius {} ; adjacent cos {}", d.sq_radius, d.adjacent_cos);
    }
    let _ = writeln!(
        s,
        "[6] non-intersection: {} ({} pairs, {} vertex-sharing, {} overlapping)",
        verdict(x.pass, color),
        x.pairs_tested,
        x.vertex_sharing_pairs,
        x.offending_pairs.len()
    );
    if verbose {
        for p in &x.offending_pairs {
            let _ = writeln!(s, "      {} overlaps {}", p.first.name, p.second.name);
        }
    }
    let _ = writeln!(
        s,
        "[+] maximality: {} (max {} south, {} north, {} total)",
        verdict(m.pass, color),
        m.max_per_south,
        m.max_per_north,
        m.max_total
    );
    if verbose {
        let _ = writeln!(
            s,
            "      candidates {} south, {} north; any pole-anchored triangle: max {} of {}",
            m.south_candidates, m.north_candidates, m.unconstrained_max_total, m.unconstrained_candidates
        );
    }
    let _ = writeln!(s, "overall: {}", verdict(report.overall, color));
    s
}
