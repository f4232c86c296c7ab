// The cardboard-sheet query: sheets whose face and back tones are both
// possibly white, with the degree of each match.
//
// ```bash
// cargo run --example case_study_query
// ```

use std::path::Path;

use fuzzyrel::engine::{format_result, Database, Locale, OutputFormat, QueryError, QueryOptions};

pub const QUERY: &str = "SELECT cartulina.% FROM cartulina \
                         WHERE tono_cara FEQ $blanco THOLD 0.5 AND tono_reverso FEQ $blanco THOLD 0.5";

pub fn run_example() -> Result<(), QueryError> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy");
    let mut db = Database::open(dir.join("catalog"), &dir)?;

    let out = db.query(QUERY, &QueryOptions::default())?;
    print!("{}", format_result(&out.result, OutputFormat::Table, Locale::Comma));
    println!();
    print!("{}", format_result(&out.result, OutputFormat::JsonLines, Locale::Dot));

    let stats = &out.result.stats;
    println!(
        "\n{} of {} rows, {} FEQ evaluations, {:?} total",
        out.result.len(),
        stats.rows_scanned,
        stats.evaluations,
        stats.parse + stats.compile + stats.execute
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
