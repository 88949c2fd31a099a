//! Bundle files, exporters, the HTTP service and the `tod` command line,
//! built on `tod-core`.

pub mod bundle;
pub mod catalog;
pub mod cli;
pub mod export;
pub mod service;
