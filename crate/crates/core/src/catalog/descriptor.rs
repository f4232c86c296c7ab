use std::fmt;

use super::CatalogError;
use crate::fuzzy::Trapezoid;

/// `(table, column)` identifying an attribute. Both parts are stored lower-case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttributeKey {
    table: String,
    column: String,
}

impl AttributeKey {
    pub fn new(table: &str, column: &str) -> Self {
        AttributeKey {
            table: table.trim().to_lowercase(),
            column: column.trim().to_lowercase(),
        }
    }

    pub fn table(&self) -> &str {
        &self.table
    }

    pub fn column(&self) -> &str {
        &self.column
    }
}

impl fmt::Display for AttributeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.table, self.column)
    }
}

/// GEFRED attribute type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuzzyType {
    /// Precise data; stored as a plain crisp column.
    Type1,
    /// Imprecise data over an ordered referential.
    Type2,
    /// Imprecise data over an unordered referential with a similarity relation.
    Type3,
}

impl FuzzyType {
    pub fn code(self) -> u8 {
        match self {
            FuzzyType::Type1 => 1,
            FuzzyType::Type2 => 2,
            FuzzyType::Type3 => 3,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            1 => Some(FuzzyType::Type1),
            2 => Some(FuzzyType::Type2),
            3 => Some(FuzzyType::Type3),
            _ => None,
        }
    }
}

impl fmt::Display for FuzzyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Type {}", self.code())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BaseDomain {
    /// Ordered numeric referential, optionally with units.
    Numeric { units: Option<String> },
    /// Unordered scalar referential. Type 3 attributes list their elements here.
    Scalar { elements: Vec<String> },
}

impl BaseDomain {
    pub fn is_numeric(&self) -> bool {
        matches!(self, BaseDomain::Numeric { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttributeDescriptor {
    pub key: AttributeKey,
    pub fuzzy_type: FuzzyType,
    pub domain: BaseDomain,
}

impl AttributeDescriptor {
    pub fn new(table: &str, column: &str, fuzzy_type: FuzzyType, domain: BaseDomain) -> Self {
        AttributeDescriptor {
            key: AttributeKey::new(table, column),
            fuzzy_type,
            domain,
        }
    }

    pub fn ordered(table: &str, column: &str, units: Option<&str>) -> Self {
        Self::new(
            table,
            column,
            FuzzyType::Type2,
            BaseDomain::Numeric {
                units: units.map(str::to_string),
            },
        )
    }

    pub fn unordered<I, S>(table: &str, column: &str, elements: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(
            table,
            column,
            FuzzyType::Type3,
            BaseDomain::Scalar {
                elements: elements.into_iter().map(Into::into).collect(),
            },
        )
    }

    pub fn precise(table: &str, column: &str, domain: BaseDomain) -> Self {
        Self::new(table, column, FuzzyType::Type1, domain)
    }

    /// Whether FEQ compares values of this attribute on an ordered referential.
    pub fn is_ordered(&self) -> bool {
        self.domain.is_numeric()
    }

    pub fn units(&self) -> Option<&str> {
        match &self.domain {
            BaseDomain::Numeric { units } => units.as_deref(),
            BaseDomain::Scalar { .. } => None,
        }
    }

    pub(crate) fn check(&self) -> Result<(), CatalogError> {
        check_name(self.key.table())?;
        check_name(self.key.column())?;
        match (self.fuzzy_type, &self.domain) {
            (FuzzyType::Type2, BaseDomain::Scalar { .. }) => Err(CatalogError::InvalidDescriptor(format!(
                "{}: Type 2 needs an ordered numeric domain",
                self.key
            ))),
            (FuzzyType::Type3, BaseDomain::Numeric { .. }) => {
                Err(CatalogError::MissingSimilarityDomain(self.key.clone()))
            }
            (FuzzyType::Type3, BaseDomain::Scalar { elements }) if elements.is_empty() => {
                Err(CatalogError::MissingSimilarityDomain(self.key.clone()))
            }
            (_, BaseDomain::Scalar { elements }) => elements.iter().try_for_each(|e| check_name(e)),
            (_, BaseDomain::Numeric { units: Some(u) }) => check_name(u),
            _ => Ok(()),
        }
    }
}

/// Names end up in tab-separated catalog files.
pub(crate) fn check_name(name: &str) -> Result<(), CatalogError> {
    if name.trim().is_empty() || name.contains(['\t', '\n', '\r']) {
        Err(CatalogError::InvalidName(name.to_string()))
    } else {
        Ok(())
    }
}

/// A linguistic label of a Type 2 attribute.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelDefinition {
    pub id: u32,
    pub name: String,
    pub trapezoid: Trapezoid,
}

/// A named element of a scalar domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarElement {
    pub id: u32,
    pub name: String,
}

/// What `$name` means for a given attribute.
#[derive(Debug, Clone, PartialEq)]
pub enum ResolvedLabel {
    Trapezoid(LabelDefinition),
    Element(ScalarElement),
}
