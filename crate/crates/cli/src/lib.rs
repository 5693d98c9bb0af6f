//! File formats, Graphviz output and the `effalg` command-line tool.

pub mod app;
pub mod dot;
pub mod format;

pub use app::{run, CliError};
pub use dot::emit_dot;
pub use format::{emit_algebra, parse_algebra, AlgebraFile, ParseError};
