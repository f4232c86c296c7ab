// Similarity relations over an unordered domain and the max-min FEQ they induce.
//
// ```bash
// cargo run --example similarity
// ```

use fuzzyrel::fuzzy::{
    feq, validate_similarity, ComparisonDomain, Degree, Element, FuzzyError, FuzzyValue, SimilarityRelation,
};

pub fn run_example() -> Result<(), FuzzyError> {
    let hair = SimilarityRelation::from_matrix(
        vec!["Rubio", "Moreno", "Pelirrojo"],
        vec![vec![1.0, 0.1, 0.8], vec![0.1, 1.0, 0.3], vec![0.8, 0.3, 1.0]],
    )?;
    println!("violations: {:?}", validate_similarity(&hair));

    let domain = ComparisonDomain::Unordered(&hair);
    let rubio = FuzzyValue::simple(1.0, Element::scalar("Rubio"))?;
    let unsure = FuzzyValue::poss_dist([(0.6, Element::scalar("Moreno")), (0.4, Element::scalar("Pelirrojo"))])?;
    println!("{rubio} FEQ {unsure} = {}", feq(&rubio, &unsure, &domain)?);
    println!("{rubio} FEQ UNKNOWN = {}", feq(&rubio, &FuzzyValue::Unknown, &domain)?);

    let mut broken = hair.clone();
    broken.set("Rubio", "Moreno", Degree::new(0.5)?)?;
    println!("after a symmetric update: {:?}", validate_similarity(&broken));

    let skewed = SimilarityRelation::from_matrix(
        vec!["Rubio", "Moreno", "Pelirrojo"],
        vec![vec![1.0, 0.1, 0.8], vec![0.2, 1.0, 0.3], vec![0.8, 0.3, 1.0]],
    )?;
    for v in validate_similarity(&skewed) {
        println!("rejected: {v}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
