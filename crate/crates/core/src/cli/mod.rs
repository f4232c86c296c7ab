//! Command-line front end: catalog management, batch queries and the REPL.

mod catalog_cmd;
mod repl;

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::engine::{format_result, Database, Locale, OutputFormat, QueryError, QueryOptions};
use crate::fsql::FsqlError;
use crate::fuzzy::Degree;

pub use catalog_cmd::CatalogCommand;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for FSQL parse or compile errors.
pub const EXIT_QUERY: i32 = 1;
/// Exit status for configuration, validation and I/O errors.
pub const EXIT_CONFIG: i32 = 2;

fn parse_degree(s: &str) -> Result<Degree, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("{s:?} is not a number"))?;
    Degree::new(x).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "fuzzyrel",
    version,
    about = "Fuzzy relational queries (FSQL) over CSV tables"
)]
pub struct Cli {
    /// Catalog directory [default: <data-dir>/catalog]
    #[arg(long, global = true, env = "FUZZYREL_CATALOG")]
    pub catalog: Option<PathBuf>,
    /// Directory holding <table>.csv data files
    #[arg(long, global = true, env = "FUZZYREL_DATA_DIR", default_value = ".")]
    pub data_dir: PathBuf,
    /// Output format: table, csv or json-lines
    #[arg(long, global = true, env = "FUZZYREL_FORMAT", default_value = "table")]
    pub format: OutputFormat,
    /// Decimal separator: dot or comma
    #[arg(long, global = true, env = "FUZZYREL_LOCALE", default_value = "dot")]
    pub locale: Locale,
    /// Threshold for conditions written without THOLD
    #[arg(long, global = true, env = "FUZZYREL_DEFAULT_THOLD", default_value = "1", value_parser = parse_degree)]
    pub default_thold: Degree,
    /// Print the query plan before the results
    #[arg(long, global = true, env = "FUZZYREL_EXPLAIN")]
    pub explain: bool,
    /// Print phase timings to standard error
    #[arg(long, global = true, env = "FUZZYREL_STATS")]
    pub stats: bool,
    /// Worker threads for row evaluation
    #[arg(long, global = true, env = "FUZZYREL_WORKERS", default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect or modify the fuzzy attribute catalog
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Run one FSQL statement
    Query {
        /// Statement text
        text: String,
    },
    /// Interactive shell; statements end with `;`
    Repl,
}

/// Settings shared by batch and interactive query execution.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub catalog: PathBuf,
    pub data_dir: PathBuf,
    pub format: OutputFormat,
    pub locale: Locale,
    pub default_thold: Degree,
    pub explain: bool,
    pub stats: bool,
    pub workers: usize,
}

impl Cli {
    pub fn config(&self) -> Config {
        Config {
            catalog: self.catalog.clone().unwrap_or_else(|| self.data_dir.join("catalog")),
            data_dir: self.data_dir.clone(),
            format: self.format,
            locale: self.locale,
            default_thold: self.default_thold,
            explain: self.explain,
            stats: self.stats,
            workers: self.workers.max(1),
        }
    }
}

/// Standard streams of one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    /// Whether to print REPL prompts (to standard error).
    pub prompt: bool,
}

/// Parses `args` (program name first) and runs the command; returns the exit status.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(io.stderr, "{text}");
                EXIT_CONFIG
            } else {
                let _ = write!(io.stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let config = cli.config();
    match cli.command {
        Command::Catalog(cmd) => catalog_cmd::run(cmd, &config, io),
        Command::Query { text } => match open_database(&config, io) {
            Some(mut db) => run_statement(&mut db, &text, &config, io),
            None => EXIT_CONFIG,
        },
        Command::Repl => match open_database(&config, io) {
            Some(db) => repl::run(db, config, io),
            None => EXIT_CONFIG,
        },
    }
}

fn open_database(config: &Config, io: &mut Io<'_>) -> Option<Database> {
    match Database::open(&config.catalog, &config.data_dir) {
        Ok(db) => Some(db),
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            None
        }
    }
}

/// Writes a diagnostic for `err` with a caret under its position.
fn report_fsql(text: &str, err: &FsqlError, stderr: &mut dyn Write) {
    let _ = writeln!(stderr, "error: {err}");
    let Some(pos) = err.position() else { return };
    if let Some(line) = text.lines().nth(pos.line.saturating_sub(1)) {
        let _ = writeln!(stderr, "  {line}");
        let _ = writeln!(stderr, "  {}^", " ".repeat(pos.column.saturating_sub(1)));
    }
}

/// Executes one statement and prints its results; shared by batch mode and the REPL.
pub fn run_statement(db: &mut Database, text: &str, config: &Config, io: &mut Io<'_>) -> i32 {
    let opts = QueryOptions {
        default_thold: config.default_thold,
        explain: config.explain,
        workers: config.workers,
    };
    match db.query(text, &opts) {
        Ok(out) => {
            if let Some(plan) = &out.explain {
                let _ = writeln!(io.stdout, "{plan}");
            }
            let _ = write!(
                io.stdout,
                "{}",
                format_result(&out.result, config.format, config.locale)
            );
            let _ = io.stdout.flush();
            if config.stats {
                let s = &out.result.stats;
                let ms = |d: std::time::Duration| d.as_secs_f64() * 1000.0;
                let _ = writeln!(
                    io.stderr,
                    "{} rows in {:.3} ms (parse {:.3} ms, compile {:.3} ms, execute {:.3} ms); {} rows scanned, {} FEQ evaluations",
                    out.result.len(),
                    ms(s.parse + s.compile + s.execute),
                    ms(s.parse),
                    ms(s.compile),
                    ms(s.execute),
                    s.rows_scanned,
                    s.evaluations
                );
            }
            EXIT_OK
        }
        Err(QueryError::Fsql(e)) => {
            report_fsql(text, &e, io.stderr);
            EXIT_QUERY
        }
        Err(QueryError::Engine(e @ crate::engine::EngineError::Evaluation { .. })) => {
            let _ = writeln!(io.stderr, "error: {e}");
            EXIT_QUERY
        }
        Err(QueryError::Engine(e)) => {
            let _ = writeln!(io.stderr, "error: {e}");
            EXIT_CONFIG
        }
    }
}
