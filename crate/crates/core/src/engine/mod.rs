//! Table storage, plan execution and result rendering.

mod database;
mod execute;
mod format;
mod render;
mod table;

use std::path::PathBuf;

pub use database::{Database, QueryError, QueryOptions, QueryOutcome};
pub use execute::{execute, execute_parallel, OutputValue, QueryStats, ResultRow, ResultSet};
pub use format::{format_result, render_output, OutputFormat};
pub use render::{render_degree, render_number, render_value, Locale};
pub use table::{format_fuzzy_field, parse_fuzzy_field, Cell, CrispValue, Table};

use crate::catalog::{Catalog, CatalogError};

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error("{}: row {row}{}: {message}", path.display(), if column.is_empty() { String::new() } else { format!(", column {column}") })]
    Row {
        path: PathBuf,
        row: usize,
        column: String,
        message: String,
    },
    #[error("table {name} not found (no {})", path.display())]
    MissingTable { name: String, path: PathBuf },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("row {row}: {message}")]
    Evaluation { row: usize, message: String },
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Loads `path` as a table, decoding every fuzzy cell through `catalog`.
pub fn load_table(path: impl AsRef<std::path::Path>, catalog: &Catalog) -> Result<Table, EngineError> {
    Table::load(path, catalog)
}

pub fn save_table(table: &Table, path: impl AsRef<std::path::Path>, catalog: &Catalog) -> Result<(), EngineError> {
    table.save(path, catalog)
}
