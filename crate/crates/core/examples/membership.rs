// Trapezoidal labels: membership degrees and alpha-cuts.
//
// ```bash
// cargo run --example membership
// ```

use fuzzyrel::fuzzy::{Degree, FuzzyError, Trapezoid};

pub fn run_example() -> Result<(), FuzzyError> {
    let joven = Trapezoid::new(15.0, 20.0, 25.0, 30.0)?;
    let maduro = Trapezoid::new(25.0, 30.0, 40.0, 45.0)?;

    println!("joven  = {joven}");
    println!("maduro = {maduro}");
    for age in [14.0, 18.0, 22.0, 26.0, 28.0, 35.0] {
        println!(
            "age {age:>4}: joven {:<4} maduro {}",
            joven.membership(age).to_string(),
            maduro.membership(age)
        );
    }
    assert_eq!(joven.membership(26.0).value(), 0.8);

    for level in [0.0, 0.5, 1.0] {
        let (lo, hi) = joven.alpha_cut(Degree::new(level)?);
        println!("{level}-cut of joven: [{lo}, {hi}]");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
