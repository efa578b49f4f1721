//! Library side of the `eub` command line tool: scenario configuration, the
//! trace/sweep engine, and CSV output.

pub mod config;
pub mod engine;
pub mod output;
