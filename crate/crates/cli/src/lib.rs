//! Library surface of the `rootcert` command-line tool: input parsing,
//! certificate documents, and the subcommand implementations, kept here so
//! the integration and acceptance suites can drive them in-process.

pub mod commands;
pub mod document;
pub mod parse;
