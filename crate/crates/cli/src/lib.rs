//! Output formats and verification runs behind the `fibpart` binary.

pub mod render;
pub mod report;

pub use render::{parse_csv, render_rows, render_scalar, render_triangle, OutputFormat};
pub use report::{run_verify, CheckLine, RunReport, SuiteReport, VerifyOptions};

/// Largest row count any subcommand will build.
pub const MAX_ROWS: u32 = 1000;
