use std::collections::HashSet;
use std::fmt;

use super::{Degree, FuzzyError, Trapezoid};

/// Element of a Type 3 value: a number or a scalar label of an unordered domain.
#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Number(f64),
    Scalar(String),
}

impl Element {
    pub fn scalar(name: impl Into<String>) -> Self {
        Element::Scalar(name.into())
    }

    /// Key used for distinctness and domain lookups. Scalar names compare
    /// case-insensitively.
    pub fn key(&self) -> String {
        match self {
            Element::Number(x) => format!("{x}"),
            Element::Scalar(s) => s.to_lowercase(),
        }
    }

    pub fn same_as(&self, other: &Element) -> bool {
        match (self, other) {
            (Element::Number(a), Element::Number(b)) => a == b,
            (Element::Scalar(a), Element::Scalar(b)) => a.to_lowercase() == b.to_lowercase(),
            _ => false,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Number(x) => write!(f, "{x}"),
            Element::Scalar(s) => f.write_str(s),
        }
    }
}

/// The value held by a cell of a fuzzy attribute.
#[derive(Debug, Clone, PartialEq)]
pub enum FuzzyValue {
    /// Applicable but wholly unknown: every domain value is possible.
    Unknown,
    /// Not applicable: no domain value is possible.
    Undefined,
    /// Total ignorance, `{1/UNKNOWN, 1/UNDEFINED}`.
    Null,
    Crisp(f64),
    /// Linguistic label of a Type 2 attribute, resolved through the catalog.
    Label(String),
    Interval {
        low: f64,
        high: f64,
    },
    /// Triangle centred on `center` reaching zero at `center ± margin`.
    Approx {
        center: f64,
        margin: f64,
    },
    Trapezoid(Trapezoid),
    Simple {
        degree: Degree,
        element: Element,
    },
    PossDist(Vec<(Degree, Element)>),
}

/// Coarse kind of a [`FuzzyValue`], used in diagnostics and code tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Unknown,
    Undefined,
    Null,
    Crisp,
    Label,
    Interval,
    Approx,
    Trapezoid,
    Simple,
    PossDist,
}

/// Dot-locale display form, as rendered in query results.
impl fmt::Display for FuzzyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::engine::render_value(self, crate::engine::Locale::Dot))
    }
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ValueKind::Unknown => "UNKNOWN",
            ValueKind::Undefined => "UNDEFINED",
            ValueKind::Null => "NULL",
            ValueKind::Crisp => "CRISP",
            ValueKind::Label => "LABEL",
            ValueKind::Interval => "INTERVALO",
            ValueKind::Approx => "APROXIMADAMENTE",
            ValueKind::Trapezoid => "TRAPECIO",
            ValueKind::Simple => "SIMPLE",
            ValueKind::PossDist => "DISTRIBUCION POSIBILIDAD",
        };
        f.write_str(name)
    }
}

impl FuzzyValue {
    pub fn interval(low: f64, high: f64) -> Result<Self, FuzzyError> {
        let v = FuzzyValue::Interval { low, high };
        v.validate()?;
        Ok(v)
    }

    pub fn approx(center: f64, margin: f64) -> Result<Self, FuzzyError> {
        let v = FuzzyValue::Approx { center, margin };
        v.validate()?;
        Ok(v)
    }

    pub fn trapezoid(a: f64, b: f64, c: f64, d: f64) -> Result<Self, FuzzyError> {
        Ok(FuzzyValue::Trapezoid(Trapezoid::new(a, b, c, d)?))
    }

    pub fn simple(degree: f64, element: Element) -> Result<Self, FuzzyError> {
        Ok(FuzzyValue::Simple {
            degree: Degree::new(degree)?,
            element,
        })
    }

    pub fn poss_dist<I>(pairs: I) -> Result<Self, FuzzyError>
    where
        I: IntoIterator<Item = (f64, Element)>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(p, e)| Degree::new(p).map(|p| (p, e)))
            .collect::<Result<Vec<_>, _>>()?;
        let v = FuzzyValue::PossDist(pairs);
        v.validate()?;
        Ok(v)
    }

    pub fn kind(&self) -> ValueKind {
        match self {
            FuzzyValue::Unknown => ValueKind::Unknown,
            FuzzyValue::Undefined => ValueKind::Undefined,
            FuzzyValue::Null => ValueKind::Null,
            FuzzyValue::Crisp(_) => ValueKind::Crisp,
            FuzzyValue::Label(_) => ValueKind::Label,
            FuzzyValue::Interval { .. } => ValueKind::Interval,
            FuzzyValue::Approx { .. } => ValueKind::Approx,
            FuzzyValue::Trapezoid(_) => ValueKind::Trapezoid,
            FuzzyValue::Simple { .. } => ValueKind::Simple,
            FuzzyValue::PossDist(_) => ValueKind::PossDist,
        }
    }

    pub fn is_special(&self) -> bool {
        matches!(self, FuzzyValue::Unknown | FuzzyValue::Undefined | FuzzyValue::Null)
    }

    /// Checks the structural invariants of the variant.
    pub fn validate(&self) -> Result<(), FuzzyError> {
        match self {
            FuzzyValue::Crisp(x) if !x.is_finite() => Err(FuzzyError::NonFinite(*x)),
            FuzzyValue::Interval { low, high } => {
                if !low.is_finite() || !high.is_finite() || low >= high {
                    Err(FuzzyError::InvalidInterval(*low, *high))
                } else {
                    Ok(())
                }
            }
            FuzzyValue::Approx { center, margin } => {
                if !center.is_finite() || !margin.is_finite() || *margin <= 0.0 {
                    Err(FuzzyError::InvalidMargin(*margin))
                } else {
                    Ok(())
                }
            }
            FuzzyValue::Label(name) if name.trim().is_empty() => Err(FuzzyError::EmptyLabel),
            FuzzyValue::Simple { element, .. } => check_element(element),
            FuzzyValue::PossDist(pairs) => validate_pairs(pairs),
            _ => Ok(()),
        }
    }

    /// Distribution pairs of a Type 3 value; `Simple` is a one-pair distribution.
    pub fn pairs(&self) -> Option<Vec<(Degree, &Element)>> {
        match self {
            FuzzyValue::Simple { degree, element } => Some(vec![(*degree, element)]),
            FuzzyValue::PossDist(pairs) => Some(pairs.iter().map(|(p, e)| (*p, e)).collect()),
            _ => None,
        }
    }
}

fn check_element(e: &Element) -> Result<(), FuzzyError> {
    match e {
        Element::Number(x) if !x.is_finite() => Err(FuzzyError::NonFinite(*x)),
        Element::Scalar(s) if s.trim().is_empty() => Err(FuzzyError::EmptyLabel),
        _ => Ok(()),
    }
}

fn validate_pairs(pairs: &[(Degree, Element)]) -> Result<(), FuzzyError> {
    if pairs.is_empty() {
        return Err(FuzzyError::EmptyDistribution);
    }
    let numeric = matches!(pairs[0].1, Element::Number(_));
    let mut seen = HashSet::new();
    for (p, e) in pairs {
        check_element(e)?;
        if p.value() <= 0.0 {
            return Err(FuzzyError::ZeroPossibility(e.to_string()));
        }
        if matches!(e, Element::Number(_)) != numeric {
            return Err(FuzzyError::MixedElements);
        }
        if !seen.insert(e.key()) {
            return Err(FuzzyError::DuplicateElement(e.to_string()));
        }
    }
    Ok(())
}

/// Normalizes an ordered-domain value to its trapezoid.
///
/// `resolve` maps a label name to its catalog trapezoid.
pub fn to_trapezoid<F>(value: &FuzzyValue, resolve: F) -> Result<Trapezoid, FuzzyError>
where
    F: Fn(&str) -> Option<Trapezoid>,
{
    match value {
        FuzzyValue::Crisp(x) => Trapezoid::point(*x),
        FuzzyValue::Interval { low, high } => Trapezoid::new(*low, *low, *high, *high),
        FuzzyValue::Approx { center, margin } => Trapezoid::new(center - margin, *center, *center, center + margin),
        FuzzyValue::Trapezoid(t) => Ok(*t),
        FuzzyValue::Label(name) => resolve(name).ok_or_else(|| FuzzyError::UnresolvedLabel(name.clone())),
        other => Err(FuzzyError::NotOrdered(other.kind())),
    }
}
