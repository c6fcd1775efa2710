//! Export formats and the `geowind` command line on top of `geowind-core`.

pub mod cli;
pub mod export;

pub use cli::{run, run_cli};
pub use export::{export, export_mesh, export_midpoints, export_report, ExportError, ExportFormat, ExportOptions};
