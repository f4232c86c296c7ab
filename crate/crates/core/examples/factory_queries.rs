// Quality-control queries over stacks (pilas) and reels (rollos): labels on
// ordered measurements, similarity on defect states, OR filters and output
// in each format.
//
// ```bash
// cargo run --example factory_queries
// ```

use std::path::Path;

use fuzzyrel::engine::{format_result, Database, Locale, OutputFormat, QueryError, QueryOptions};
use fuzzyrel::fuzzy::Degree;

pub fn run_example() -> Result<(), QueryError> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy");
    let mut db = Database::open(dir.join("catalog"), &dir)?;
    let opts = QueryOptions {
        default_thold: Degree::new(0.5).expect("valid degree"),
        ..QueryOptions::default()
    };

    let queries = [
        (
            "stacks of optimal length, possibly dirty",
            "SELECT cod_pila, formato_largo, estado, CDEG(formato_largo), CDEG(estado) FROM pilas \
             WHERE formato_largo FEQ $optima AND estado FEQ $sucio",
            OutputFormat::Table,
        ),
        (
            "reels of normal width, or scratched",
            "SELECT cod_rollo, formato_ancho, estado, CDEG(formato_ancho), CDEG(estado) FROM rollos \
             WHERE formato_ancho FEQ $normal THOLD 0.6 OR estado FEQ $rayas THOLD 0.8",
            OutputFormat::Csv,
        ),
        (
            "reels around 3000 m long",
            "SELECT cod_rollo, formato_largo, CDEG(formato_largo) FROM rollos WHERE formato_largo FEQ #3000±150",
            OutputFormat::JsonLines,
        ),
    ];
    for (title, text, format) in queries {
        let out = db.query(text, &opts)?;
        println!("# {title}");
        print!("{}", format_result(&out.result, format, Locale::Dot));
        println!();
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
