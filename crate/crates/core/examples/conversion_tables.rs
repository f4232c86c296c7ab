// Encoding fuzzy values as conversion rows (FT code plus value slots) and back.
//
// ```bash
// cargo run --example conversion_tables
// ```

use fuzzyrel::catalog::{AttributeDescriptor, AttributeKey, Catalog, CatalogError};
use fuzzyrel::fuzzy::{Element, FuzzyValue, Trapezoid};

fn show(row: &[Option<f64>]) -> String {
    row.iter()
        .map(|v| v.map_or("null".to_string(), |x| x.to_string()))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn run_example() -> Result<(), CatalogError> {
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

    let ordered = [
        FuzzyValue::Unknown,
        FuzzyValue::Crisp(28.0),
        FuzzyValue::Label("joven".into()),
        FuzzyValue::interval(20.0, 30.0)?,
        FuzzyValue::approx(35.0, 5.0)?,
        FuzzyValue::trapezoid(25.0, 30.0, 40.0, 45.0)?,
    ];
    for v in &ordered {
        let row = catalog.encode(&edad, v)?;
        assert_eq!(&catalog.decode(&edad, &row)?, v);
        println!("edad {:<16} -> {}", v.to_string(), show(&row.fields()));
    }

    let unordered = [
        FuzzyValue::Null,
        FuzzyValue::simple(1.0, Element::scalar("Rubio"))?,
        FuzzyValue::poss_dist([(0.4, Element::scalar("Moreno")), (1.0, Element::scalar("Pelirrojo"))])?,
    ];
    for v in &unordered {
        let row = catalog.encode(&pelo, v)?;
        assert_eq!(&catalog.decode(&pelo, &row)?, v);
        println!("pelo {:<28} -> {}", v.to_string(), show(&row.fields()));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
