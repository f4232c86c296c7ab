//! Fuzzy metaknowledge base: the registry of fuzzy attributes, their
//! linguistic labels and similarity relations, and the conversion-table
//! encoding of fuzzy values.

mod conversion;
mod descriptor;
mod persist;
mod schema;

pub use conversion::{ConversionRow, ElementRef, Type2Code, Type3Code};
pub use descriptor::{
    AttributeDescriptor, AttributeKey, BaseDomain, FuzzyType, LabelDefinition, ResolvedLabel, ScalarElement,
};
pub use schema::{ColumnDef, ColumnKind, TableSchema};

use std::path::PathBuf;

use thiserror::Error;

use crate::fuzzy::{
    feq, validate_similarity, ComparisonDomain, Degree, FuzzyError, FuzzyValue, SimilarityRelation,
    SimilarityViolation, Trapezoid, ValueKind,
};
use descriptor::check_name;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("attribute {0} is already registered")]
    Duplicate(AttributeKey),
    #[error("{0}: Type 3 attributes need a scalar domain for their similarity relation")]
    MissingSimilarityDomain(AttributeKey),
    #[error("invalid attribute descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("unknown attribute {0}")]
    UnknownAttribute(String),
    #[error("column {column} is ambiguous; candidates: {candidates}")]
    AmbiguousColumn { column: String, candidates: String },
    #[error("{key} is {found}, expected {expected}")]
    WrongType {
        key: AttributeKey,
        found: FuzzyType,
        expected: FuzzyType,
    },
    #[error("label {name} already defined for {key}")]
    DuplicateLabel { key: AttributeKey, name: String },
    #[error("label {name} is not defined for {key}")]
    UndefinedLabel { key: AttributeKey, name: String },
    #[error("label id {id} is not defined for {key}")]
    UnknownLabelId { key: AttributeKey, id: u32 },
    #[error("{kind} value is not valid for {key} ({fuzzy_type})")]
    IncompatibleValue {
        key: AttributeKey,
        kind: ValueKind,
        fuzzy_type: FuzzyType,
    },
    #[error("{0} is a Type 1 attribute and is stored as a plain crisp column")]
    NoConversionTable(AttributeKey),
    #[error("unknown FT code {code} for {fuzzy_type} attributes")]
    UnknownCode { code: u8, fuzzy_type: FuzzyType },
    #[error("FT code {code}: {detail}")]
    NullPattern { code: u8, detail: String },
    #[error("similarity relation of {key} is invalid: {}", join_violations(.violations))]
    InvalidSimilarity {
        key: AttributeKey,
        violations: Vec<SimilarityViolation>,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Malformed { path: PathBuf, line: u64, message: String },
    #[error("{path}: unsupported catalog layout (version mismatch): expected header {expected:?}, found {found:?}")]
    Layout {
        path: PathBuf,
        expected: String,
        found: String,
    },
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

fn join_violations(v: &[SimilarityViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq)]
struct AttributeEntry {
    descriptor: AttributeDescriptor,
    labels: Vec<LabelDefinition>,
    elements: Vec<ScalarElement>,
    similarity: Option<SimilarityRelation>,
}

impl AttributeEntry {
    fn next_label_id(&self) -> u32 {
        self.labels.iter().map(|l| l.id).max().unwrap_or(0) + 1
    }

    fn next_element_id(&self) -> u32 {
        self.elements.iter().map(|e| e.id).max().unwrap_or(0) + 1
    }
}

/// Registry of fuzzy attributes.
///
/// Single writer while being populated; share it immutably afterwards.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Catalog {
    entries: Vec<AttributeEntry>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn register_attribute(&mut self, desc: AttributeDescriptor) -> Result<(), CatalogError> {
        desc.check()?;
        if self.entry(&desc.key).is_some() {
            return Err(CatalogError::Duplicate(desc.key));
        }
        let mut entry = AttributeEntry {
            descriptor: desc.clone(),
            labels: Vec::new(),
            elements: Vec::new(),
            similarity: None,
        };
        if let BaseDomain::Scalar { elements } = &desc.domain {
            for (i, name) in elements.iter().enumerate() {
                if entry
                    .elements
                    .iter()
                    .any(|e| e.name.to_lowercase() == name.to_lowercase())
                {
                    return Err(FuzzyError::DuplicateElement(name.clone()).into());
                }
                entry.elements.push(ScalarElement {
                    id: i as u32 + 1,
                    name: name.clone(),
                });
            }
            if desc.fuzzy_type == FuzzyType::Type3 {
                entry.similarity = Some(SimilarityRelation::identity(elements.iter().cloned())?);
            }
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn attributes(&self) -> impl Iterator<Item = &AttributeDescriptor> {
        self.entries.iter().map(|e| &e.descriptor)
    }

    pub fn attribute(&self, key: &AttributeKey) -> Option<&AttributeDescriptor> {
        self.entry(key).map(|e| &e.descriptor)
    }

    pub fn attributes_of<'a>(&'a self, table: &str) -> impl Iterator<Item = &'a AttributeDescriptor> + 'a {
        let table = table.to_lowercase();
        self.attributes().filter(move |d| d.key.table() == table)
    }

    /// Looks up `table.column`, or a bare `column` when it names exactly one attribute.
    pub fn find(&self, reference: &str) -> Result<&AttributeDescriptor, CatalogError> {
        if let Some((table, column)) = reference.split_once('.') {
            return self
                .attribute(&AttributeKey::new(table, column))
                .ok_or_else(|| CatalogError::UnknownAttribute(reference.to_string()));
        }
        let column = reference.trim().to_lowercase();
        let hits: Vec<_> = self.attributes().filter(|d| d.key.column() == column).collect();
        match hits.as_slice() {
            [] => Err(CatalogError::UnknownAttribute(reference.to_string())),
            [one] => Ok(one),
            many => Err(CatalogError::AmbiguousColumn {
                column,
                candidates: many.iter().map(|d| d.key.to_string()).collect::<Vec<_>>().join(", "),
            }),
        }
    }

    pub fn define_label(&mut self, key: &AttributeKey, name: &str, trapezoid: Trapezoid) -> Result<u32, CatalogError> {
        check_name(name)?;
        let entry = self.entry_mut(key)?;
        expect_type(&entry.descriptor, FuzzyType::Type2)?;
        if entry
            .labels
            .iter()
            .any(|l| l.name.to_lowercase() == name.to_lowercase())
        {
            return Err(CatalogError::DuplicateLabel {
                key: key.clone(),
                name: name.to_string(),
            });
        }
        let id = entry.next_label_id();
        entry.labels.push(LabelDefinition {
            id,
            name: name.to_string(),
            trapezoid,
        });
        Ok(id)
    }

    /// Adds an element to a Type 3 scalar domain; it starts dissimilar to every other element.
    pub fn add_element(&mut self, key: &AttributeKey, name: &str) -> Result<u32, CatalogError> {
        check_name(name)?;
        let entry = self.entry_mut(key)?;
        expect_type(&entry.descriptor, FuzzyType::Type3)?;
        let id = entry.next_element_id();
        let sim = entry
            .similarity
            .as_mut()
            .expect("Type 3 entry has a similarity relation");
        sim.push_element(name)?;
        entry.elements.push(ScalarElement {
            id,
            name: name.to_string(),
        });
        if let BaseDomain::Scalar { elements } = &mut entry.descriptor.domain {
            elements.push(name.to_string());
        }
        Ok(id)
    }

    pub fn set_similarity(
        &mut self,
        key: &AttributeKey,
        first: &str,
        second: &str,
        degree: Degree,
    ) -> Result<(), CatalogError> {
        let entry = self.entry_mut(key)?;
        expect_type(&entry.descriptor, FuzzyType::Type3)?;
        let sim = entry
            .similarity
            .as_mut()
            .expect("Type 3 entry has a similarity relation");
        sim.set(first, second, degree)?;
        Ok(())
    }

    pub fn similarity(&self, key: &AttributeKey) -> Option<&SimilarityRelation> {
        self.entry(key)?.similarity.as_ref()
    }

    pub fn labels(&self, key: &AttributeKey) -> &[LabelDefinition] {
        self.entry(key).map(|e| e.labels.as_slice()).unwrap_or(&[])
    }

    pub fn elements(&self, key: &AttributeKey) -> &[ScalarElement] {
        self.entry(key).map(|e| e.elements.as_slice()).unwrap_or(&[])
    }

    pub fn resolve_label(&self, key: &AttributeKey, name: &str) -> Result<ResolvedLabel, CatalogError> {
        let entry = self
            .entry(key)
            .ok_or_else(|| CatalogError::UnknownAttribute(key.to_string()))?;
        let wanted = name.to_lowercase();
        let undefined = || CatalogError::UndefinedLabel {
            key: key.clone(),
            name: name.to_string(),
        };
        match entry.descriptor.fuzzy_type {
            FuzzyType::Type2 => entry
                .labels
                .iter()
                .find(|l| l.name.to_lowercase() == wanted)
                .cloned()
                .map(ResolvedLabel::Trapezoid)
                .ok_or_else(undefined),
            FuzzyType::Type3 => entry
                .elements
                .iter()
                .find(|e| e.name.to_lowercase() == wanted)
                .cloned()
                .map(ResolvedLabel::Element)
                .ok_or_else(undefined),
            FuzzyType::Type1 => Err(undefined()),
        }
    }

    pub fn label_trapezoid(&self, key: &AttributeKey, name: &str) -> Option<Trapezoid> {
        match self.resolve_label(key, name).ok()? {
            ResolvedLabel::Trapezoid(l) => Some(l.trapezoid),
            ResolvedLabel::Element(_) => None,
        }
    }

    /// Possibility that two values of attribute `key` are equal.
    ///
    /// Type 1 and Type 2 compare on the ordered referential (labels become
    /// their trapezoids), Type 3 under the attribute's similarity relation.
    pub fn feq(&self, key: &AttributeKey, left: &FuzzyValue, right: &FuzzyValue) -> Result<Degree, CatalogError> {
        let entry = self
            .entry(key)
            .ok_or_else(|| CatalogError::UnknownAttribute(key.to_string()))?;
        let degree = match (&entry.similarity, entry.descriptor.is_ordered()) {
            (Some(sim), _) => feq(left, right, &ComparisonDomain::Unordered(sim))?,
            (None, true) => {
                let resolve = |name: &str| self.label_trapezoid(key, name);
                feq(left, right, &ComparisonDomain::Ordered(&resolve))?
            }
            (None, false) => {
                return Err(CatalogError::IncompatibleValue {
                    key: key.clone(),
                    kind: left.kind(),
                    fuzzy_type: entry.descriptor.fuzzy_type,
                })
            }
        };
        Ok(degree)
    }

    /// Checks the cross-registry invariants of a populated catalog.
    pub fn validate(&self) -> Result<(), CatalogError> {
        for entry in &self.entries {
            entry.descriptor.check()?;
            if let Some(sim) = &entry.similarity {
                let violations = validate_similarity(sim);
                if !violations.is_empty() {
                    return Err(CatalogError::InvalidSimilarity {
                        key: entry.descriptor.key.clone(),
                        violations,
                    });
                }
                for e in &entry.elements {
                    if sim.index_of(&e.name).is_none() {
                        return Err(FuzzyError::ElementNotInDomain(e.name.clone()).into());
                    }
                }
            }
        }
        Ok(())
    }

    fn entry(&self, key: &AttributeKey) -> Option<&AttributeEntry> {
        self.entries.iter().find(|e| &e.descriptor.key == key)
    }

    fn entry_mut(&mut self, key: &AttributeKey) -> Result<&mut AttributeEntry, CatalogError> {
        self.entries
            .iter_mut()
            .find(|e| &e.descriptor.key == key)
            .ok_or_else(|| CatalogError::UnknownAttribute(key.to_string()))
    }
}

fn expect_type(desc: &AttributeDescriptor, expected: FuzzyType) -> Result<(), CatalogError> {
    if desc.fuzzy_type == expected {
        Ok(())
    } else {
        Err(CatalogError::WrongType {
            key: desc.key.clone(),
            found: desc.fuzzy_type,
            expected,
        })
    }
}
