use std::fmt;

use super::{Degree, Element, FuzzyError};

/// Reflexive, symmetric `[0, 1]` relation over the labels of an unordered domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityRelation {
    domain: Vec<String>,
    matrix: Vec<Vec<f64>>,
}

/// A property of a similarity relation that does not hold at a given pair.
#[derive(Debug, Clone, PartialEq)]
pub enum SimilarityViolation {
    Reflexivity {
        element: String,
        value: f64,
    },
    Symmetry {
        first: String,
        second: String,
        forward: f64,
        backward: f64,
    },
    Range {
        first: String,
        second: String,
        value: f64,
    },
}

impl fmt::Display for SimilarityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimilarityViolation::Reflexivity { element, value } => {
                write!(f, "s({element},{element}) = {value}, expected 1")
            }
            SimilarityViolation::Symmetry {
                first,
                second,
                forward,
                backward,
            } => write!(
                f,
                "s({first},{second}) = {forward} but s({second},{first}) = {backward}"
            ),
            SimilarityViolation::Range { first, second, value } => {
                write!(f, "s({first},{second}) = {value} is outside [0,1]")
            }
        }
    }
}

impl SimilarityRelation {
    /// Identity relation: 1 on the diagonal, 0 elsewhere.
    pub fn identity<I, S>(domain: I) -> Result<Self, FuzzyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let domain: Vec<String> = domain.into_iter().map(Into::into).collect();
        let n = domain.len();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        check_domain(&domain)?;
        Ok(SimilarityRelation { domain, matrix })
    }

    /// Builds a relation from a full matrix without checking its properties;
    /// use [`validate_similarity`] to inspect it.
    pub fn from_matrix<S: Into<String>>(domain: Vec<S>, matrix: Vec<Vec<f64>>) -> Result<Self, FuzzyError> {
        let domain: Vec<String> = domain.into_iter().map(Into::into).collect();
        let n = domain.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(FuzzyError::DimensionMismatch {
                domain: n,
                rows: matrix.len(),
            });
        }
        check_domain(&domain)?;
        Ok(SimilarityRelation { domain, matrix })
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let key = name.to_lowercase();
        self.domain.iter().position(|d| d.to_lowercase() == key)
    }

    /// Domain position of an element. Numeric elements match domain names
    /// that parse to the same number.
    pub fn index_of_element(&self, e: &Element) -> Option<usize> {
        match e {
            Element::Scalar(s) => self.index_of(s),
            Element::Number(x) => self
                .domain
                .iter()
                .position(|d| d.trim().parse::<f64>().ok() == Some(*x)),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[i][j]
    }

    pub fn degree(&self, first: &str, second: &str) -> Option<f64> {
        Some(self.matrix[self.index_of(first)?][self.index_of(second)?])
    }

    /// Sets `s(first, second)` and `s(second, first)`. The diagonal is fixed at 1.
    pub fn set(&mut self, first: &str, second: &str, value: Degree) -> Result<(), FuzzyError> {
        let i = self
            .index_of(first)
            .ok_or_else(|| FuzzyError::ElementNotInDomain(first.to_string()))?;
        let j = self
            .index_of(second)
            .ok_or_else(|| FuzzyError::ElementNotInDomain(second.to_string()))?;
        if i == j {
            if value != Degree::ONE {
                return Err(FuzzyError::DiagonalPinned(first.to_string(), value.value()));
            }
            return Ok(());
        }
        self.matrix[i][j] = value.value();
        self.matrix[j][i] = value.value();
        Ok(())
    }

    pub fn push_element(&mut self, name: impl Into<String>) -> Result<usize, FuzzyError> {
        let name = name.into();
        if self.index_of(&name).is_some() {
            return Err(FuzzyError::DuplicateElement(name));
        }
        for row in &mut self.matrix {
            row.push(0.0);
        }
        self.domain.push(name);
        let n = self.domain.len();
        let mut row = vec![0.0; n];
        row[n - 1] = 1.0;
        self.matrix.push(row);
        Ok(n - 1)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&str, &[f64])> {
        self.domain
            .iter()
            .map(String::as_str)
            .zip(self.matrix.iter().map(Vec::as_slice))
    }
}

fn check_domain(domain: &[String]) -> Result<(), FuzzyError> {
    let mut seen = std::collections::HashSet::new();
    for d in domain {
        if d.trim().is_empty() {
            return Err(FuzzyError::EmptyLabel);
        }
        if !seen.insert(d.to_lowercase()) {
            return Err(FuzzyError::DuplicateElement(d.clone()));
        }
    }
    Ok(())
}

/// Reports every violated property of `s`; an empty list means valid.
pub fn validate_similarity(s: &SimilarityRelation) -> Vec<SimilarityViolation> {
    let mut out = Vec::new();
    let n = s.len();
    for i in 0..n {
        for j in 0..n {
            let v = s.get(i, j);
            if !(0.0..=1.0).contains(&v) {
                out.push(SimilarityViolation::Range {
                    first: s.domain[i].clone(),
                    second: s.domain[j].clone(),
                    value: v,
                });
            }
        }
    }
    for i in 0..n {
        if s.get(i, i) != 1.0 {
            out.push(SimilarityViolation::Reflexivity {
                element: s.domain[i].clone(),
                value: s.get(i, i),
            });
        }
        for j in (i + 1)..n {
            if s.get(i, j) != s.get(j, i) {
                out.push(SimilarityViolation::Symmetry {
                    first: s.domain[i].clone(),
                    second: s.domain[j].clone(),
                    forward: s.get(i, j),
                    backward: s.get(j, i),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hair() -> SimilarityRelation {
        SimilarityRelation::from_matrix(
            vec!["Rubio", "Moreno", "Pelirrojo"],
            vec![vec![1.0, 0.1, 0.8], vec![0.1, 1.0, 0.3], vec![0.8, 0.3, 1.0]],
        )
        .unwrap()
    }

    #[test]
    fn hair_colour_is_valid() {
        assert!(validate_similarity(&hair()).is_empty());
        assert_eq!(hair().degree("rubio", "MORENO"), Some(0.1));
    }

    #[test]
    fn asymmetric_entry_is_named() {
        let mut m = vec![vec![1.0, 0.2, 0.8], vec![0.1, 1.0, 0.3], vec![0.8, 0.3, 1.0]];
        let s = SimilarityRelation::from_matrix(vec!["Rubio", "Moreno", "Pelirrojo"], m.clone()).unwrap();
        let report = validate_similarity(&s);
        assert_eq!(report.len(), 1);
        assert!(matches!(
            &report[0],
            SimilarityViolation::Symmetry { first, second, .. } if first == "Rubio" && second == "Moreno"
        ));
        m[2][2] = 0.9;
        m[0][2] = 1.3;
        let s = SimilarityRelation::from_matrix(vec!["Rubio", "Moreno", "Pelirrojo"], m).unwrap();
        let report = validate_similarity(&s);
        assert!(report
            .iter()
            .any(|v| matches!(v, SimilarityViolation::Reflexivity { .. })));
        assert!(report.iter().any(|v| matches!(v, SimilarityViolation::Range { .. })));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            SimilarityRelation::from_matrix(vec!["a", "b"], vec![vec![1.0, 0.0]]),
            Err(FuzzyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn set_keeps_symmetry_and_pins_diagonal() {
        let mut s = SimilarityRelation::identity(["Sucio", "Rayas"]).unwrap();
        s.set("Sucio", "Rayas", Degree::new(0.8).unwrap()).unwrap();
        assert_eq!(s.degree("Rayas", "Sucio"), Some(0.8));
        assert!(matches!(
            s.set("Sucio", "Sucio", Degree::new(0.5).unwrap()),
            Err(FuzzyError::DiagonalPinned(..))
        ));
        assert!(s.set("Sucio", "Sucio", Degree::ONE).is_ok());
        assert!(s.set("Sucio", "Curvas", Degree::ONE).is_err());
        assert!(validate_similarity(&s).is_empty());
    }
}
