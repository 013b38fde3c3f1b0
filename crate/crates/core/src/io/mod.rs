//! File formats, SVG output, the benchmark harness and the command
//! implementations behind the `hexcover` binary.

pub mod bench;
mod commands;
mod files;
mod svg;

pub use commands::{cmd_bench, cmd_bounds, cmd_cover, cmd_verify, CoverArgs};
pub use files::{
    cell_outlines, lattice_frame, CliError, CliResult, CoveringFile, DiagnosticsFile, PolygonFile,
};
pub use svg::{render_svg, svg_document};
