//! Catalog, ingestion, reports and the command-line front end built on
//! [`kodaira_core`].

pub mod catalog;
pub mod config;
pub mod describe;
pub mod exec;
pub mod expected;
pub mod ingest;
pub mod report;
pub mod run;
pub mod tuple;

pub use catalog::{Catalog, CatalogEntry};
pub use exec::Pool;
pub use expected::ExpectedMetrics;
pub use report::{EntryReport, Status};
pub use run::{run_catalog, run_entry, Filter, RunOptions};
