use super::{AttributeDescriptor, AttributeKey, Catalog, FuzzyType};

#[derive(Debug, Clone, PartialEq)]
pub enum ColumnKind {
    /// Plain column. `attribute` is set for registered Type 1 attributes;
    /// `numeric` is true when every stored value is a number.
    Crisp {
        numeric: bool,
        attribute: Option<AttributeDescriptor>,
    },
    /// Type 2 or Type 3 column stored in conversion-row form.
    Fuzzy(AttributeDescriptor),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnDef {
    /// Display spelling, as written in the data file header.
    pub name: String,
    pub kind: ColumnKind,
}

impl ColumnDef {
    pub fn attribute(&self) -> Option<&AttributeDescriptor> {
        match &self.kind {
            ColumnKind::Crisp { attribute, .. } => attribute.as_ref(),
            ColumnKind::Fuzzy(d) => Some(d),
        }
    }
}

/// Physical layout of a table: its columns and how each is typed.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSchema {
    pub name: String,
    pub columns: Vec<ColumnDef>,
}

impl TableSchema {
    /// Types each header column from the catalog. Unregistered and Type 1
    /// columns are crisp and start out numeric.
    pub fn from_header<S: AsRef<str>>(table: &str, header: &[S], catalog: &Catalog) -> Self {
        let columns = header
            .iter()
            .map(|h| {
                let name = h.as_ref().trim().to_string();
                let key = AttributeKey::new(table, &name);
                let kind = match catalog.attribute(&key) {
                    Some(d) if d.fuzzy_type != FuzzyType::Type1 => ColumnKind::Fuzzy(d.clone()),
                    other => ColumnKind::Crisp {
                        numeric: other.is_none_or(|d| d.is_ordered()),
                        attribute: other.cloned(),
                    },
                };
                ColumnDef { name, kind }
            })
            .collect();
        TableSchema {
            name: table.trim().to_lowercase(),
            columns,
        }
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// Case-insensitive lookup; accepts `column` or `table.column`.
    pub fn index_of(&self, reference: &str) -> Option<usize> {
        let column = match reference.split_once('.') {
            Some((t, c)) if t.eq_ignore_ascii_case(&self.name) => c,
            Some(_) => return None,
            None => reference,
        };
        let column = column.trim().to_lowercase();
        self.columns.iter().position(|c| c.name.to_lowercase() == column)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn types_columns_from_catalog() {
        let mut c = Catalog::new();
        c.register_attribute(AttributeDescriptor::unordered(
            "cartulina",
            "tono_cara",
            ["blanco", "cafe"],
        ))
        .unwrap();
        let s = TableSchema::from_header("cartulina", &["COD_CARTI", "TONO_CARA"], &c);
        assert!(matches!(
            s.columns[0].kind,
            ColumnKind::Crisp {
                numeric: true,
                attribute: None
            }
        ));
        assert!(matches!(s.columns[1].kind, ColumnKind::Fuzzy(_)));
        assert_eq!(s.index_of("tono_cara"), Some(1));
        assert_eq!(s.index_of("cartulina.cod_carti"), Some(0));
        assert_eq!(s.index_of("pilas.cod_carti"), None);
    }
}
