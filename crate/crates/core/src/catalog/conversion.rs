//! Conversion-table encoding of fuzzy values.
//!
//! Type 2 rows are `(FT, V1, V2, V3, V4)`:
//!
//! | kind            | FT | V1       | V2      | V3      | V4     |
//! |-----------------|----|----------|---------|---------|--------|
//! | UNKNOWN         | 0  | null     | null    | null    | null   |
//! | UNDEFINED       | 1  | null     | null    | null    | null   |
//! | NULL            | 2  | null     | null    | null    | null   |
//! | CRISP           | 3  | d        | null    | null    | null   |
//! | LABEL           | 4  | FUZZY_ID | null    | null    | null   |
//! | INTERVALO       | 5  | n        | null    | null    | m      |
//! | APROXIMADAMENTE | 6  | d        | d-marg  | d+marg  | marg   |
//! | TRAPECIO        | 7  | α        | β-α     | γ-δ     | δ      |
//!
//! Type 3 rows are `(FT, FP1, F1, ..., FPn, Fn)` with FT 0/1/2 for the
//! special values, 3 for SIMPLE (one pair) and 4 for a possibility
//! distribution (n >= 1 pairs). Type 1 attributes have no conversion table.

use super::{AttributeKey, BaseDomain, Catalog, CatalogError, FuzzyType};
use crate::fuzzy::{Element, FuzzyError, FuzzyValue, Trapezoid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Type2Code {
    Unknown = 0,
    Undefined = 1,
    Null = 2,
    Crisp = 3,
    Label = 4,
    Interval = 5,
    Approx = 6,
    Trapezoid = 7,
}

impl TryFrom<u8> for Type2Code {
    type Error = CatalogError;

    fn try_from(code: u8) -> Result<Self, Self::Error> {
        use Type2Code::*;
        Ok(match code {
            0 => Unknown,
            1 => Undefined,
            2 => Null,
            3 => Crisp,
            4 => Label,
            5 => Interval,
            6 => Approx,
            7 => Trapezoid,
            _ => {
                return Err(CatalogError::UnknownCode {
                    code,
                    fuzzy_type: FuzzyType::Type2,
                })
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Type3Code {
    Unknown = 0,
    Undefined = 1,
    Null = 2,
    Simple = 3,
    Distribution = 4,
}

impl TryFrom<u8> for Type3Code {
    type Error = CatalogError;

    fn try_from(code: u8) -> Result<Self, Self::Error> {
        use Type3Code::*;
        Ok(match code {
            0 => Unknown,
            1 => Undefined,
            2 => Null,
            3 => Simple,
            4 => Distribution,
            _ => {
                return Err(CatalogError::UnknownCode {
                    code,
                    fuzzy_type: FuzzyType::Type3,
                })
            }
        })
    }
}

/// The F field of a Type 3 pair: a scalar element id or a numeric element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ElementRef {
    Id(u32),
    Number(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConversionRow {
    Ordered { code: u8, slots: [Option<f64>; 4] },
    Unordered { code: u8, pairs: Vec<(f64, ElementRef)> },
}

impl ConversionRow {
    pub fn code(&self) -> u8 {
        match self {
            ConversionRow::Ordered { code, .. } | ConversionRow::Unordered { code, .. } => *code,
        }
    }

    /// Flat field list `FT, V1..V4` or `FT, FP1, F1, ...`; `None` is the relational null.
    pub fn fields(&self) -> Vec<Option<f64>> {
        match self {
            ConversionRow::Ordered { code, slots } => std::iter::once(Some(f64::from(*code)))
                .chain(slots.iter().copied())
                .collect(),
            ConversionRow::Unordered { code, pairs } => {
                let mut out = vec![Some(f64::from(*code))];
                for (p, e) in pairs {
                    out.push(Some(*p));
                    out.push(Some(match e {
                        ElementRef::Id(id) => f64::from(*id),
                        ElementRef::Number(x) => *x,
                    }));
                }
                out
            }
        }
    }
}

fn ordered(code: Type2Code, slots: [Option<f64>; 4]) -> ConversionRow {
    ConversionRow::Ordered {
        code: code as u8,
        slots,
    }
}

fn pattern_error(code: u8, detail: impl Into<String>) -> CatalogError {
    CatalogError::NullPattern {
        code,
        detail: detail.into(),
    }
}

// d-margin and d+margin are redundant with (d, margin); accept rounding noise
// from hand-written rows.
fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

impl Catalog {
    /// Encodes `value` as a conversion row of attribute `key`.
    pub fn encode(&self, key: &AttributeKey, value: &FuzzyValue) -> Result<ConversionRow, CatalogError> {
        let desc = self
            .attribute(key)
            .ok_or_else(|| CatalogError::UnknownAttribute(key.to_string()))?;
        value.validate()?;
        let incompatible = || CatalogError::IncompatibleValue {
            key: key.clone(),
            kind: value.kind(),
            fuzzy_type: desc.fuzzy_type,
        };
        match desc.fuzzy_type {
            FuzzyType::Type1 => Err(CatalogError::NoConversionTable(key.clone())),
            FuzzyType::Type2 => Ok(match value {
                FuzzyValue::Unknown => ordered(Type2Code::Unknown, [None; 4]),
                FuzzyValue::Undefined => ordered(Type2Code::Undefined, [None; 4]),
                FuzzyValue::Null => ordered(Type2Code::Null, [None; 4]),
                FuzzyValue::Crisp(d) => ordered(Type2Code::Crisp, [Some(*d), None, None, None]),
                FuzzyValue::Label(name) => {
                    let id = self
                        .labels(key)
                        .iter()
                        .find(|l| l.name.to_lowercase() == name.to_lowercase())
                        .map(|l| l.id)
                        .ok_or_else(|| CatalogError::UndefinedLabel {
                            key: key.clone(),
                            name: name.clone(),
                        })?;
                    ordered(Type2Code::Label, [Some(f64::from(id)), None, None, None])
                }
                FuzzyValue::Interval { low, high } => {
                    ordered(Type2Code::Interval, [Some(*low), None, None, Some(*high)])
                }
                FuzzyValue::Approx { center, margin } => ordered(
                    Type2Code::Approx,
                    [
                        Some(*center),
                        Some(center - margin),
                        Some(center + margin),
                        Some(*margin),
                    ],
                ),
                FuzzyValue::Trapezoid(t) => ordered(
                    Type2Code::Trapezoid,
                    [Some(t.a()), Some(t.b() - t.a()), Some(t.c() - t.d()), Some(t.d())],
                ),
                FuzzyValue::Simple { .. } | FuzzyValue::PossDist(_) => return Err(incompatible()),
            }),
            FuzzyType::Type3 => {
                let code = match value {
                    FuzzyValue::Unknown => Type3Code::Unknown,
                    FuzzyValue::Undefined => Type3Code::Undefined,
                    FuzzyValue::Null => Type3Code::Null,
                    FuzzyValue::Simple { .. } => Type3Code::Simple,
                    FuzzyValue::PossDist(_) => Type3Code::Distribution,
                    _ => return Err(incompatible()),
                };
                let mut pairs = Vec::new();
                for (p, e) in value.pairs().unwrap_or_default() {
                    pairs.push((p.value(), self.element_ref(key, e)?));
                }
                Ok(ConversionRow::Unordered {
                    code: code as u8,
                    pairs,
                })
            }
        }
    }

    /// Inverse of [`Catalog::encode`]. Checks the code, its null pattern and
    /// the invariants of the reconstructed value.
    pub fn decode(&self, key: &AttributeKey, row: &ConversionRow) -> Result<FuzzyValue, CatalogError> {
        let desc = self
            .attribute(key)
            .ok_or_else(|| CatalogError::UnknownAttribute(key.to_string()))?;
        match (desc.fuzzy_type, row) {
            (FuzzyType::Type1, _) => Err(CatalogError::NoConversionTable(key.clone())),
            (FuzzyType::Type2, ConversionRow::Ordered { code, slots }) => self.decode_ordered(key, *code, slots),
            (FuzzyType::Type3, ConversionRow::Unordered { code, pairs }) => self.decode_unordered(key, *code, pairs),
            (fuzzy_type, row) => Err(CatalogError::UnknownCode {
                code: row.code(),
                fuzzy_type,
            }),
        }
    }

    fn decode_ordered(
        &self,
        key: &AttributeKey,
        code: u8,
        slots: &[Option<f64>; 4],
    ) -> Result<FuzzyValue, CatalogError> {
        let kind = Type2Code::try_from(code)?;
        let present = slots.map(|s| s.is_some());
        let expected = match kind {
            Type2Code::Unknown | Type2Code::Undefined | Type2Code::Null => [false; 4],
            Type2Code::Crisp | Type2Code::Label => [true, false, false, false],
            Type2Code::Interval => [true, false, false, true],
            Type2Code::Approx | Type2Code::Trapezoid => [true; 4],
        };
        if present != expected {
            let shape = |p: [bool; 4]| {
                p.iter()
                    .map(|b| if *b { "value" } else { "null" })
                    .collect::<Vec<_>>()
                    .join(",")
            };
            return Err(pattern_error(
                code,
                format!("expected V1..V4 = ({}), found ({})", shape(expected), shape(present)),
            ));
        }
        let v = |i: usize| slots[i].unwrap_or_default();
        if let Some(bad) = slots.iter().flatten().find(|x| !x.is_finite()) {
            return Err(FuzzyError::NonFinite(*bad).into());
        }
        let value = match kind {
            Type2Code::Unknown => FuzzyValue::Unknown,
            Type2Code::Undefined => FuzzyValue::Undefined,
            Type2Code::Null => FuzzyValue::Null,
            Type2Code::Crisp => FuzzyValue::Crisp(v(0)),
            Type2Code::Label => {
                let raw = v(0);
                if raw.fract() != 0.0 || raw < 0.0 || raw > f64::from(u32::MAX) {
                    return Err(pattern_error(code, format!("FUZZY_ID {raw} is not an integer id")));
                }
                let id = raw as u32;
                let label = self
                    .labels(key)
                    .iter()
                    .find(|l| l.id == id)
                    .ok_or_else(|| CatalogError::UnknownLabelId { key: key.clone(), id })?;
                FuzzyValue::Label(label.name.clone())
            }
            Type2Code::Interval => FuzzyValue::interval(v(0), v(3))?,
            Type2Code::Approx => {
                let (center, margin) = (v(0), v(3));
                if !close(v(1), center - margin) || !close(v(2), center + margin) {
                    return Err(pattern_error(
                        code,
                        format!("bounds ({}, {}) disagree with d={center}, margin={margin}", v(1), v(2)),
                    ));
                }
                FuzzyValue::approx(center, margin)?
            }
            Type2Code::Trapezoid => {
                let (a, d) = (v(0), v(3));
                FuzzyValue::Trapezoid(Trapezoid::new(a, a + v(1), d + v(2), d)?)
            }
        };
        Ok(value)
    }

    fn decode_unordered(
        &self,
        key: &AttributeKey,
        code: u8,
        pairs: &[(f64, ElementRef)],
    ) -> Result<FuzzyValue, CatalogError> {
        let kind = Type3Code::try_from(code)?;
        let arity_ok = match kind {
            Type3Code::Unknown | Type3Code::Undefined | Type3Code::Null => pairs.is_empty(),
            Type3Code::Simple => pairs.len() == 1,
            Type3Code::Distribution => !pairs.is_empty(),
        };
        if !arity_ok {
            return Err(pattern_error(code, format!("{} (FP, F) pairs present", pairs.len())));
        }
        let mut decoded = Vec::with_capacity(pairs.len());
        for (p, e) in pairs {
            decoded.push((*p, self.element(key, *e)?));
        }
        Ok(match kind {
            Type3Code::Unknown => FuzzyValue::Unknown,
            Type3Code::Undefined => FuzzyValue::Undefined,
            Type3Code::Null => FuzzyValue::Null,
            Type3Code::Simple => {
                let (p, e) = decoded.pop().expect("one pair");
                FuzzyValue::simple(p, e)?
            }
            Type3Code::Distribution => FuzzyValue::poss_dist(decoded)?,
        })
    }

    /// Maps a Type 3 element to its F field.
    pub fn element_ref(&self, key: &AttributeKey, e: &Element) -> Result<ElementRef, CatalogError> {
        match e {
            Element::Number(x) => Ok(ElementRef::Number(*x)),
            Element::Scalar(name) => self
                .elements(key)
                .iter()
                .find(|el| el.name.to_lowercase() == name.to_lowercase())
                .map(|el| ElementRef::Id(el.id))
                .ok_or_else(|| CatalogError::UndefinedLabel {
                    key: key.clone(),
                    name: name.clone(),
                }),
        }
    }

    pub fn element(&self, key: &AttributeKey, r: ElementRef) -> Result<Element, CatalogError> {
        match r {
            ElementRef::Number(x) => Ok(Element::Number(x)),
            ElementRef::Id(id) => self
                .elements(key)
                .iter()
                .find(|el| el.id == id)
                .map(|el| Element::Scalar(el.name.clone()))
                .ok_or_else(|| CatalogError::UnknownLabelId { key: key.clone(), id }),
        }
    }

    /// Element id by name, for scalar domains.
    pub fn element_id(&self, key: &AttributeKey, name: &str) -> Option<u32> {
        match self.attribute(key)?.domain {
            BaseDomain::Scalar { .. } => self
                .elements(key)
                .iter()
                .find(|el| el.name.to_lowercase() == name.to_lowercase())
                .map(|el| el.id),
            BaseDomain::Numeric { .. } => None,
        }
    }
}
