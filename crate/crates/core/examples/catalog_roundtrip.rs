// Building a catalog in code, saving it as TSV files and loading it back.
//
// ```bash
// cargo run --example catalog_roundtrip
// ```

use fuzzyrel::catalog::{AttributeDescriptor, AttributeKey, Catalog};
use fuzzyrel::fuzzy::{Degree, FuzzyValue, Trapezoid};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut catalog = Catalog::new();
    catalog.register_attribute(AttributeDescriptor::ordered("personas", "edad", Some("years")))?;
    catalog.register_attribute(AttributeDescriptor::unordered(
        "personas",
        "pelo",
        ["Rubio", "Moreno", "Pelirrojo"],
    ))?;

    let edad = AttributeKey::new("personas", "edad");
    let pelo = AttributeKey::new("personas", "pelo");
    catalog.define_label(&edad, "joven", Trapezoid::new(15.0, 20.0, 25.0, 30.0)?)?;
    catalog.define_label(&edad, "maduro", Trapezoid::new(25.0, 30.0, 40.0, 45.0)?)?;
    catalog.set_similarity(&pelo, "Rubio", "Moreno", Degree::new(0.1)?)?;
    catalog.set_similarity(&pelo, "Rubio", "Pelirrojo", Degree::new(0.8)?)?;
    catalog.set_similarity(&pelo, "Moreno", "Pelirrojo", Degree::new(0.3)?)?;
    if let Err(e) = catalog.set_similarity(&pelo, "Rubio", "Rubio", Degree::new(0.5)?) {
        println!("rejected: {e}");
    }

    let dir = std::env::temp_dir().join(format!("fuzzyrel-catalog-{}", std::process::id()));
    catalog.save(&dir)?;
    for file in ["attributes.tsv", "labels.tsv", "similarity.tsv"] {
        println!("--- {file}");
        print!("{}", std::fs::read_to_string(dir.join(file))?);
    }

    let loaded = Catalog::load(&dir)?;
    std::fs::remove_dir_all(&dir)?;
    assert_eq!(loaded, catalog);
    let d = loaded.feq(&edad, &FuzzyValue::Crisp(26.0), &FuzzyValue::Label("joven".into()))?;
    println!("\nreloaded: 26 FEQ $joven = {d}");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
