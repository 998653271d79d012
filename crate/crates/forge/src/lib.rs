//! Batch front end for `omega-forge-core`: command-line configuration, JSON
//! report formats, a seeded property suite and a fault-injecting process for
//! testing that suite.

pub mod commands;
pub mod config;
pub mod fault;
pub mod formats;
pub mod suite;

pub use commands::{run, CommandError, Report, Status};
pub use config::RunConfig;
