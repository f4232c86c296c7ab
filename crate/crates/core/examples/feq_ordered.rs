// FEQ on an ordered domain: every Type 2 value becomes a trapezoid and the
// possibility of equality is the height of the intersection.
//
// ```bash
// cargo run --example feq_ordered
// ```

use fuzzyrel::fuzzy::{feq, poss_eq_ordered, ComparisonDomain, FuzzyError, FuzzyValue, Trapezoid};

pub fn run_example() -> Result<(), FuzzyError> {
    let joven = Trapezoid::new(15.0, 20.0, 25.0, 30.0)?;
    let labels = move |name: &str| (name == "joven").then_some(joven);
    let domain = ComparisonDomain::Ordered(&labels);

    let operand = FuzzyValue::Label("joven".into());
    let stored = [
        FuzzyValue::Crisp(26.0),
        FuzzyValue::interval(28.0, 40.0)?,
        FuzzyValue::approx(33.0, 4.0)?,
        FuzzyValue::trapezoid(30.0, 35.0, 40.0, 45.0)?,
        FuzzyValue::Unknown,
        FuzzyValue::Undefined,
        FuzzyValue::Null,
    ];
    for v in &stored {
        println!("{:<14} FEQ $joven = {}", v.to_string(), feq(v, &operand, &domain)?);
    }

    let a = Trapezoid::new(0.0, 2.0, 4.0, 6.0)?;
    let b = Trapezoid::new(5.0, 7.0, 9.0, 11.0)?;
    println!("poss({a} = {b}) = {}", poss_eq_ordered(&a, &b));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
