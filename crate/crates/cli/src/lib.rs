//! Library side of the `irpnl` command-line tool.

pub mod commands;
pub mod config;
pub mod format;

pub use commands::{greeks, price, simulate, CliError, RenderOptions, SIMULATION_COLUMNS};
pub use config::{ConfigError, OutputFormat, RunConfig};
pub use format::{NumberFormat, Table};
