//! Command-line front end: digraph file formats, JSON report documents and
//! the `diperfect` subcommands.

pub mod commands;
pub mod document;
pub mod formats;

pub use commands::{exit, run, run_args, Cli, Outcome};
pub use document::{render, Kind, SchemaError, SCHEMA_VERSION};
pub use formats::{detect, emit_digraph, emit_digraph6, parse_digraph, Format, ParseError};
