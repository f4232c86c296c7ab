use super::{poss_eq_ordered, to_trapezoid, Degree, Element, FuzzyError, FuzzyValue, SimilarityRelation, Trapezoid};

/// How two values of one attribute are compared.
pub enum ComparisonDomain<'a> {
    /// Ordered referential (Type 1 numeric and Type 2). Labels resolve to trapezoids.
    Ordered(&'a dyn Fn(&str) -> Option<Trapezoid>),
    /// Unordered referential (Type 3) with its similarity relation.
    Unordered(&'a SimilarityRelation),
}

/// Max-min match of two distributions under a similarity relation:
/// `max_{i,j} min(p_i, q_j, s(d_i, e_j))`.
pub fn feq_type3(
    left: &[(Degree, &Element)],
    right: &[(Degree, &Element)],
    s: &SimilarityRelation,
) -> Result<Degree, FuzzyError> {
    let index = |e: &Element| {
        s.index_of_element(e)
            .ok_or_else(|| FuzzyError::ElementNotInDomain(e.to_string()))
    };
    let left = left
        .iter()
        .map(|(p, e)| index(e).map(|i| (*p, i)))
        .collect::<Result<Vec<_>, _>>()?;
    let right = right
        .iter()
        .map(|(q, e)| index(e).map(|j| (*q, j)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut best = Degree::ZERO;
    for &(p, i) in &left {
        for &(q, j) in &right {
            let sim = Degree::saturating(s.get(i, j));
            best = best.max(p.min(q).min(sim));
        }
    }
    Ok(best)
}

/// Fuzzy-equal possibility comparator.
pub fn feq(left: &FuzzyValue, right: &FuzzyValue, domain: &ComparisonDomain<'_>) -> Result<Degree, FuzzyError> {
    if matches!(left, FuzzyValue::Unknown) || matches!(right, FuzzyValue::Unknown) {
        return Ok(Degree::ONE);
    }
    if matches!(left, FuzzyValue::Undefined | FuzzyValue::Null)
        || matches!(right, FuzzyValue::Undefined | FuzzyValue::Null)
    {
        return Ok(Degree::ZERO);
    }
    match domain {
        ComparisonDomain::Ordered(resolve) => {
            let t1 = to_trapezoid(left, resolve)?;
            let t2 = to_trapezoid(right, resolve)?;
            Ok(poss_eq_ordered(&t1, &t2))
        }
        ComparisonDomain::Unordered(s) => {
            let a = unordered_pairs(left)?;
            let b = unordered_pairs(right)?;
            let a: Vec<_> = a.iter().map(|(p, e)| (*p, e)).collect();
            let b: Vec<_> = b.iter().map(|(p, e)| (*p, e)).collect();
            feq_type3(&a, &b, s)
        }
    }
}

fn unordered_pairs(v: &FuzzyValue) -> Result<Vec<(Degree, Element)>, FuzzyError> {
    match v {
        FuzzyValue::Label(name) => Ok(vec![(Degree::ONE, Element::Scalar(name.clone()))]),
        FuzzyValue::Simple { degree, element } => Ok(vec![(*degree, element.clone())]),
        FuzzyValue::PossDist(pairs) => Ok(pairs.clone()),
        other => Err(FuzzyError::NotUnordered(other.kind())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tones() -> SimilarityRelation {
        let mut s = SimilarityRelation::identity(["blanco", "amarillo", "cafe", "manila"]).unwrap();
        for other in ["amarillo", "cafe", "manila"] {
            s.set(other, "blanco", Degree::new(0.2).unwrap()).unwrap();
        }
        s
    }

    fn hair() -> SimilarityRelation {
        SimilarityRelation::from_matrix(
            vec!["Rubio", "Moreno", "Pelirrojo"],
            vec![vec![1.0, 0.1, 0.8], vec![0.1, 1.0, 0.3], vec![0.8, 0.3, 1.0]],
        )
        .unwrap()
    }

    fn d(x: f64) -> Degree {
        Degree::new(x).unwrap()
    }

    #[test]
    fn type3_examples() {
        let s = tones();
        let blanco = Element::scalar("BLANCO");
        assert_eq!(
            feq_type3(&[(d(0.5), &blanco)], &[(Degree::ONE, &blanco)], &s).unwrap(),
            d(0.5)
        );
        assert_eq!(
            feq_type3(&[(d(0.9), &blanco)], &[(Degree::ONE, &blanco)], &s).unwrap(),
            d(0.9)
        );
        let h = hair();
        let rubio = Element::scalar("Rubio");
        let moreno = Element::scalar("Moreno");
        assert_eq!(
            feq_type3(&[(Degree::ONE, &rubio)], &[(Degree::ONE, &moreno)], &h).unwrap(),
            d(0.1)
        );
    }

    #[test]
    fn type3_unknown_element() {
        let s = tones();
        let verde = Element::scalar("verde");
        let blanco = Element::scalar("blanco");
        assert!(matches!(
            feq_type3(&[(Degree::ONE, &verde)], &[(Degree::ONE, &blanco)], &s),
            Err(FuzzyError::ElementNotInDomain(_))
        ));
    }

    #[test]
    fn special_values() {
        let s = tones();
        let dom = ComparisonDomain::Unordered(&s);
        let blanco = FuzzyValue::Label("blanco".into());
        assert_eq!(feq(&FuzzyValue::Unknown, &blanco, &dom).unwrap(), Degree::ONE);
        assert_eq!(feq(&blanco, &FuzzyValue::Unknown, &dom).unwrap(), Degree::ONE);
        assert_eq!(feq(&FuzzyValue::Undefined, &blanco, &dom).unwrap(), Degree::ZERO);
        assert_eq!(feq(&FuzzyValue::Null, &blanco, &dom).unwrap(), Degree::ZERO);
        let white = FuzzyValue::simple(1.0, Element::scalar("BLANCO")).unwrap();
        assert_eq!(feq(&white, &blanco, &dom).unwrap(), Degree::ONE);
    }

    #[test]
    fn ordered_dispatch() {
        let young = Trapezoid::new(15.0, 20.0, 25.0, 30.0).unwrap();
        let resolve = move |n: &str| (n == "joven").then_some(young);
        let dom = ComparisonDomain::Ordered(&resolve);
        assert_eq!(
            feq(&FuzzyValue::Crisp(26.0), &FuzzyValue::Label("joven".into()), &dom).unwrap(),
            d(0.8)
        );
        assert_eq!(
            feq(&FuzzyValue::Crisp(3.0), &FuzzyValue::Crisp(3.0), &dom).unwrap(),
            Degree::ONE
        );
        assert_eq!(
            feq(&FuzzyValue::Crisp(3.0), &FuzzyValue::Crisp(3.5), &dom).unwrap(),
            Degree::ZERO
        );
        let dist = FuzzyValue::poss_dist([(1.0, Element::Number(3.0))]).unwrap();
        assert!(matches!(
            feq(&dist, &FuzzyValue::Crisp(3.0), &dom),
            Err(FuzzyError::NotOrdered(_))
        ));
    }

    #[test]
    fn crisp_on_unordered_is_incompatible() {
        let s = tones();
        let dom = ComparisonDomain::Unordered(&s);
        assert!(matches!(
            feq(&FuzzyValue::Crisp(1.0), &FuzzyValue::Label("blanco".into()), &dom),
            Err(FuzzyError::NotUnordered(_))
        ));
    }
}
