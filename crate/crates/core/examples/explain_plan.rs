// Compiling FSQL against the catalog and printing the plan, including the
// crisp predicate over stored conversion columns that each condition
// corresponds to.
//
// ```bash
// cargo run --example explain_plan
// ```

use std::path::Path;

use fuzzyrel::catalog::{Catalog, TableSchema};
use fuzzyrel::engine::load_table;
use fuzzyrel::fsql::{compile, explain, parse_query};
use fuzzyrel::fuzzy::Degree;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy");
    let catalog = Catalog::load(dir.join("catalog"))?;
    let pilas: TableSchema = load_table(dir.join("pilas.csv"), &catalog)?.schema;

    let text = "select cod_pila, cdeg(formato_largo), cdeg(estado) from pilas \
                where (formato_largo feq $optima thold 0.5 or formato_largo feq #95±10 thold 0.8) \
                and estado feq {0.8/sucio, 0.4/mojado}";
    let query = parse_query(text)?;
    println!("canonical: {query}\n");

    let plan = compile(&query, &catalog, &pilas, Degree::new(0.3)?)?;
    print!("{}", explain(&plan));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
