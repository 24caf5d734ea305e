//! IO companion to `gorder-core`: the JSON order-document format,
//! instance generators, DOT export of cover relations, and a parallel
//! matcher driver. The `gorder` binary wires these into subcommands.

pub mod doc;
pub mod dot;
pub mod gen;
pub mod parallel;
pub mod report;
