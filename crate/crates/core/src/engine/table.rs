use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use super::EngineError;
use crate::catalog::{Catalog, ColumnKind, ConversionRow, ElementRef, FuzzyType, TableSchema};
use crate::fuzzy::{Element, FuzzyValue};

/// Value of a plain (non-fuzzy) column.
#[derive(Debug, Clone, PartialEq)]
pub enum CrispValue {
    Null,
    Number(f64),
    Text(String),
}

impl fmt::Display for CrispValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrispValue::Null => Ok(()),
            CrispValue::Number(x) => write!(f, "{x}"),
            CrispValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Crisp(CrispValue),
    /// Decoded and validated from its conversion row.
    Fuzzy(FuzzyValue),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub schema: TableSchema,
    pub rows: Vec<Vec<Cell>>,
}

fn row_error(path: &Path, row: usize, column: &str, message: impl Into<String>) -> EngineError {
    EngineError::Row {
        path: path.to_path_buf(),
        row,
        column: column.to_string(),
        message: message.into(),
    }
}

fn parse_slot(s: &str) -> Result<Option<f64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(None);
    }
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .map(Some)
        .ok_or_else(|| format!("{s:?} is not a number"))
}

/// Parses one fuzzy CSV field into its conversion row.
///
/// Type 2: `FT;V1;V2;V3;V4` with empty slots for nulls (trailing empty slots
/// may be omitted). Type 3: `FT;p1;d1;...;pn;dn` with element names or numbers.
pub fn parse_fuzzy_field(
    field: &str,
    fuzzy_type: FuzzyType,
    catalog: &Catalog,
    key: &crate::catalog::AttributeKey,
) -> Result<ConversionRow, String> {
    let parts: Vec<&str> = field.split(';').map(str::trim).collect();
    let code = parts[0]
        .parse::<u8>()
        .map_err(|_| format!("FT code {:?} is not an integer", parts[0]))?;
    match fuzzy_type {
        FuzzyType::Type2 => {
            if parts.len() > 5 {
                return Err(format!("{} fields; a Type 2 cell has FT and V1..V4", parts.len()));
            }
            let mut slots = [None; 4];
            for (i, p) in parts[1..].iter().enumerate() {
                slots[i] = parse_slot(p)?;
            }
            Ok(ConversionRow::Ordered { code, slots })
        }
        FuzzyType::Type3 => {
            let rest = &parts[1..];
            if rest.len() == 1 && rest[0].is_empty() {
                return Ok(ConversionRow::Unordered {
                    code,
                    pairs: Vec::new(),
                });
            }
            if !rest.len().is_multiple_of(2) {
                return Err("possibility pairs must come as p;d".to_string());
            }
            let mut pairs = Vec::new();
            for chunk in rest.chunks(2) {
                let p = parse_slot(chunk[0])?.ok_or("empty possibility degree")?;
                let name = chunk[1];
                let e = match catalog.element_id(key, name) {
                    Some(id) => ElementRef::Id(id),
                    None => match parse_slot(name) {
                        Ok(Some(x)) => ElementRef::Number(x),
                        _ => return Err(format!("label {name:?} is not defined for {key}")),
                    },
                };
                pairs.push((p, e));
            }
            Ok(ConversionRow::Unordered { code, pairs })
        }
        FuzzyType::Type1 => Err(format!("{key} is Type 1 and stored crisp")),
    }
}

/// Formats a conversion row as a CSV field, inverse of [`parse_fuzzy_field`].
pub fn format_fuzzy_field(
    row: &ConversionRow,
    catalog: &Catalog,
    key: &crate::catalog::AttributeKey,
) -> Result<String, EngineError> {
    let slot = |s: &Option<f64>| s.map(|x| x.to_string()).unwrap_or_default();
    Ok(match row {
        ConversionRow::Ordered { code, slots } => {
            let mut out = code.to_string();
            for s in slots {
                out.push(';');
                out.push_str(&slot(s));
            }
            out
        }
        ConversionRow::Unordered { code, pairs } => {
            let mut out = code.to_string();
            for (p, e) in pairs {
                let name = match catalog.element(key, *e)? {
                    Element::Scalar(s) => s,
                    Element::Number(x) => x.to_string(),
                };
                out.push_str(&format!(";{p};{name}"));
            }
            out
        }
    })
}

impl Table {
    /// Loads `path`; the table name is the file stem.
    pub fn load(path: impl AsRef<Path>, catalog: &Catalog) -> Result<Table, EngineError> {
        let path = path.as_ref();
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| EngineError::Io {
                path: path.to_path_buf(),
                source: std::io::Error::other("data file has no usable name"),
            })?
            .to_string();
        let bytes = fs::read(path).map_err(|source| EngineError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Table::from_csv(&name, &bytes, catalog, path)
    }

    /// Parses CSV data for table `name`; `origin` is used in diagnostics.
    pub fn from_csv(name: &str, data: &[u8], catalog: &Catalog, origin: &Path) -> Result<Table, EngineError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .flexible(true)
            .from_reader(data);
        let header: Vec<String> = reader
            .headers()
            .map_err(|e| row_error(origin, 0, "", e.to_string()))?
            .iter()
            .map(|h| h.trim().to_string())
            .collect();
        if header.iter().all(String::is_empty) {
            return Err(row_error(origin, 0, "", "missing header line"));
        }
        let mut schema = TableSchema::from_header(name, &header, catalog);
        let mut rows = Vec::new();
        for (i, rec) in reader.records().enumerate() {
            let row_no = i + 1;
            let rec = rec.map_err(|e| row_error(origin, row_no, "", e.to_string()))?;
            if rec.len() == 1 && rec[0].trim().is_empty() {
                continue;
            }
            if rec.len() != schema.width() {
                return Err(row_error(
                    origin,
                    row_no,
                    "",
                    format!("{} fields, header has {}", rec.len(), schema.width()),
                ));
            }
            let mut cells = Vec::with_capacity(rec.len());
            for (field, col) in rec.iter().zip(&schema.columns) {
                let cell = match &col.kind {
                    ColumnKind::Fuzzy(desc) => {
                        if field.trim().is_empty() {
                            return Err(row_error(origin, row_no, &col.name, "empty fuzzy cell"));
                        }
                        let conv = parse_fuzzy_field(field, desc.fuzzy_type, catalog, &desc.key)
                            .map_err(|m| row_error(origin, row_no, &col.name, m))?;
                        let v = catalog
                            .decode(&desc.key, &conv)
                            .map_err(|e| row_error(origin, row_no, &col.name, e.to_string()))?;
                        Cell::Fuzzy(v)
                    }
                    ColumnKind::Crisp { attribute, .. } => {
                        let f = field.trim();
                        if f.is_empty() {
                            Cell::Crisp(CrispValue::Null)
                        } else if let Ok(x) = f.parse::<f64>() {
                            Cell::Crisp(CrispValue::Number(x))
                        } else if attribute.as_ref().is_some_and(|d| d.is_ordered()) {
                            return Err(row_error(origin, row_no, &col.name, format!("{f:?} is not a number")));
                        } else {
                            Cell::Crisp(CrispValue::Text(f.to_string()))
                        }
                    }
                };
                cells.push(cell);
            }
            rows.push(cells);
        }
        for (i, col) in schema.columns.iter_mut().enumerate() {
            if let ColumnKind::Crisp { numeric, attribute } = &mut col.kind {
                if attribute.is_none() {
                    *numeric = rows.iter().all(|r| !matches!(r[i], Cell::Crisp(CrispValue::Text(_))));
                }
            }
        }
        Ok(Table { schema, rows })
    }

    /// Writes the table back in its CSV conversion-row form.
    pub fn save(&self, path: impl AsRef<Path>, catalog: &Catalog) -> Result<(), EngineError> {
        let path = path.as_ref();
        let bytes = self.to_csv(catalog)?;
        fs::write(path, bytes).map_err(|source| EngineError::Io {
            path: PathBuf::from(path),
            source,
        })
    }

    pub fn to_csv(&self, catalog: &Catalog) -> Result<Vec<u8>, EngineError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| EngineError::Io {
            path: PathBuf::new(),
            source: std::io::Error::other(e.to_string()),
        };
        w.write_record(self.schema.columns.iter().map(|c| c.name.as_str()))
            .map_err(csv_err)?;
        for row in &self.rows {
            let mut fields = Vec::with_capacity(row.len());
            for (cell, col) in row.iter().zip(&self.schema.columns) {
                fields.push(match (cell, &col.kind) {
                    (Cell::Crisp(v), _) => v.to_string(),
                    (Cell::Fuzzy(v), ColumnKind::Fuzzy(desc)) => {
                        let conv = catalog.encode(&desc.key, v)?;
                        format_fuzzy_field(&conv, catalog, &desc.key)?
                    }
                    (Cell::Fuzzy(_), ColumnKind::Crisp { .. }) => {
                        return Err(EngineError::Schema(format!("fuzzy value in crisp column {}", col.name)))
                    }
                });
            }
            w.write_record(&fields).map_err(csv_err)?;
        }
        w.into_inner().map_err(|e| EngineError::Io {
            path: PathBuf::new(),
            source: std::io::Error::other(e.to_string()),
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Catalog {
        Catalog::load(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy/catalog")).unwrap()
    }

    fn parse(name: &str, text: &str) -> Result<Table, EngineError> {
        Table::from_csv(name, text.as_bytes(), &catalog(), Path::new("mem.csv"))
    }

    #[test]
    fn loads_fixtures() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy");
        let c = catalog();
        let t = Table::load(dir.join("cartulina.csv"), &c).unwrap();
        assert_eq!(t.len(), 14);
        assert_eq!(t.schema.name, "cartulina");
        assert!(matches!(t.rows[2][3], Cell::Fuzzy(FuzzyValue::Unknown)));
        assert_eq!(Table::load(dir.join("pilas.csv"), &c).unwrap().len(), 7);
        assert_eq!(Table::load(dir.join("rollos.csv"), &c).unwrap().len(), 6);
    }

    #[test]
    fn bad_code_names_row() {
        let err = parse(
            "pilas",
            "COD_PILA,FORMATO_LARGO,FORMATO_ANCHO,ESTADO\n1,3;100;;;,4;2;;;,3;1;sucio\n2,9;1;;;,4;2;;;,3;1;sucio\n",
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("row 2"), "{err}");
        assert!(err.contains("FORMATO_LARGO"), "{err}");
    }

    #[test]
    fn row_errors() {
        let header = "COD_PILA,FORMATO_LARGO,FORMATO_ANCHO,ESTADO\n";
        for (body, needle) in [
            ("1,4;99;;;,4;2;;;,3;1;sucio\n", "row 1"),
            ("1,3;100;;;,4;2;;;\n", "header has 4"),
            ("1,3;100;;;,4;2;;;,3;1;limpio\n", "limpio"),
            ("1,3;x;;;,4;2;;;,3;1;sucio\n", "not a number"),
            ("1,3;1;;;;;,4;2;;;,3;1;sucio\n", "fields"),
        ] {
            let err = parse("pilas", &format!("{header}{body}")).unwrap_err().to_string();
            assert!(err.contains(needle), "{body}: {err}");
        }
    }

    #[test]
    fn empty_file_with_header() {
        let t = parse("cartulina", "COD_CARTI,COD_CAPA,IMPRESION,TONO_CARA,TONO_REVERSO\n").unwrap();
        assert!(t.is_empty());
        assert_eq!(t.schema.width(), 5);
    }

    #[test]
    fn crisp_column_typing() {
        let t = parse("cartulina", "COD_CARTI,IMPRESION,EXTRA\n1,Offset,\n2,Offset,3.5\n").unwrap();
        let numeric: Vec<bool> = t
            .schema
            .columns
            .iter()
            .map(|c| matches!(c.kind, ColumnKind::Crisp { numeric: true, .. }))
            .collect();
        assert_eq!(numeric, [true, false, true]);
        assert_eq!(t.rows[0][2], Cell::Crisp(CrispValue::Null));
    }

    #[test]
    fn save_load_roundtrip() {
        let c = catalog();
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy");
        for name in ["cartulina", "pilas", "rollos"] {
            let t = Table::load(dir.join(format!("{name}.csv")), &c).unwrap();
            let bytes = t.to_csv(&c).unwrap();
            let back = Table::from_csv(name, &bytes, &c, Path::new("mem.csv")).unwrap();
            assert_eq!(back, t, "{name}");
        }
    }
}
