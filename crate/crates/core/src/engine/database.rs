use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use super::execute::{execute_parallel, ResultSet};
use super::table::Table;
use super::EngineError;
use crate::catalog::Catalog;
use crate::fsql::{compile, explain, parse_query, CompiledPlan, FsqlError};
use crate::fuzzy::Degree;

/// Failure of a statement run through a [`Database`].
#[derive(Debug, thiserror::Error)]
pub enum QueryError {
    #[error(transparent)]
    Fsql(#[from] FsqlError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueryOptions {
    /// Threshold for conditions written without THOLD.
    pub default_thold: Degree,
    pub explain: bool,
    pub workers: usize,
}

impl Default for QueryOptions {
    fn default() -> Self {
        QueryOptions {
            default_thold: Degree::ONE,
            explain: false,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct QueryOutcome {
    pub plan: CompiledPlan,
    pub explain: Option<String>,
    pub result: ResultSet,
}

/// A catalog plus a directory of `<table>.csv` data files, loaded on demand.
#[derive(Debug)]
pub struct Database {
    catalog: Catalog,
    data_dir: PathBuf,
    tables: HashMap<String, Table>,
}

impl Database {
    pub fn new(catalog: Catalog, data_dir: impl Into<PathBuf>) -> Self {
        Database {
            catalog,
            data_dir: data_dir.into(),
            tables: HashMap::new(),
        }
    }

    /// Loads the catalog directory and binds the data directory.
    pub fn open(catalog_dir: impl AsRef<Path>, data_dir: impl Into<PathBuf>) -> Result<Self, EngineError> {
        let catalog = Catalog::load(catalog_dir)?;
        Ok(Database::new(catalog, data_dir))
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn data_dir(&self) -> &Path {
        &self.data_dir
    }

    /// Registers an in-memory table, replacing any file-backed one.
    pub fn insert_table(&mut self, table: Table) {
        self.tables.insert(table.schema.name.clone(), table);
    }

    fn table_path(&self, name: &str) -> PathBuf {
        let exact = self.data_dir.join(format!("{name}.csv"));
        if exact.exists() {
            return exact;
        }
        std::fs::read_dir(&self.data_dir)
            .ok()
            .and_then(|entries| {
                entries.flatten().map(|e| e.path()).find(|p| {
                    p.extension().is_some_and(|x| x.eq_ignore_ascii_case("csv"))
                        && p.file_stem().is_some_and(|s| s.eq_ignore_ascii_case(name))
                })
            })
            .unwrap_or(exact)
    }

    /// Returns table `name`, reading its data file on first use.
    pub fn table(&mut self, name: &str) -> Result<&Table, EngineError> {
        let key = name.trim().to_lowercase();
        if !self.tables.contains_key(&key) {
            let path = self.table_path(&key);
            if !path.is_file() {
                return Err(EngineError::MissingTable { name: key, path });
            }
            let mut table = Table::load(&path, &self.catalog)?;
            table.schema.name = key.clone();
            self.tables.insert(key.clone(), table);
        }
        Ok(&self.tables[&key])
    }

    /// Parses, compiles and executes one FSQL statement.
    pub fn query(&mut self, text: &str, opts: &QueryOptions) -> Result<QueryOutcome, QueryError> {
        let t0 = Instant::now();
        let query = parse_query(text)?;
        let parse = t0.elapsed();
        self.table(&query.from)?;
        let table = &self.tables[&query.from.trim().to_lowercase()];
        let t1 = Instant::now();
        let plan = compile(&query, &self.catalog, &table.schema, opts.default_thold)?;
        let compile_time = t1.elapsed();
        let mut result = execute_parallel(&plan, table, &self.catalog, opts.workers)?;
        result.stats.parse = parse;
        result.stats.compile = compile_time;
        let explain = opts.explain.then(|| explain(&plan));
        Ok(QueryOutcome { plan, explain, result })
    }
}
