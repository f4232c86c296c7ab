//! Plain-text catalog directory: `attributes.tsv`, `labels.tsv`, `similarity.tsv`.
//!
//! Each file is tab-separated UTF-8 with one header line. The header doubles
//! as the layout version: a file whose header differs is rejected.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;

use super::descriptor::check_name;
use super::{
    AttributeDescriptor, AttributeKey, BaseDomain, Catalog, CatalogError, FuzzyType, LabelDefinition, ScalarElement,
};
use crate::fuzzy::{Degree, Trapezoid};

pub const ATTRIBUTES_FILE: &str = "attributes.tsv";
pub const LABELS_FILE: &str = "labels.tsv";
pub const SIMILARITY_FILE: &str = "similarity.tsv";

const ATTRIBUTES_HEADER: [&str; 5] = ["table", "column", "type", "domain", "units"];
const LABELS_HEADER: [&str; 8] = ["table", "column", "fuzzy_id", "name", "a", "b", "c", "d"];
const SIMILARITY_HEADER: [&str; 5] = ["table", "column", "name1", "name2", "degree"];

struct Record {
    line: u64,
    fields: Vec<String>,
}

fn io_err(path: &Path, source: std::io::Error) -> CatalogError {
    CatalogError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn malformed(path: &Path, line: u64, message: impl Into<String>) -> CatalogError {
    CatalogError::Malformed {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

/// Reads a TSV file; a missing or zero-length file yields no records.
fn read_tsv(path: &Path, header: &[&str]) -> Result<Vec<Record>, CatalogError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(io_err(path, e)),
    };
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .quoting(false)
        .flexible(true)
        .has_headers(true)
        .from_reader(text.as_bytes());
    let found = reader
        .headers()
        .map_err(|e| malformed(path, 1, e.to_string()))?
        .iter()
        .map(str::trim)
        .collect::<Vec<_>>();
    if found != header {
        return Err(CatalogError::Layout {
            path: path.to_path_buf(),
            expected: header.join("\t"),
            found: found.join("\t"),
        });
    }
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| malformed(path, 0, e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.iter().all(|f| f.trim().is_empty()) {
            continue;
        }
        if rec.len() != header.len() {
            return Err(malformed(
                path,
                line,
                format!("expected {} fields, found {}", header.len(), rec.len()),
            ));
        }
        out.push(Record {
            line,
            fields: rec.iter().map(|f| f.trim().to_string()).collect(),
        });
    }
    Ok(out)
}

fn write_tsv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<(), CatalogError> {
    let mut w = csv::WriterBuilder::new()
        .delimiter(b'\t')
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(Vec::new());
    let to_err = |e: csv::Error| io_err(path, std::io::Error::other(e.to_string()));
    w.write_record(header).map_err(to_err)?;
    for r in rows {
        w.write_record(r).map_err(to_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| io_err(path, std::io::Error::other(e.to_string())))?;
    fs::write(path, bytes).map_err(|e| io_err(path, e))
}

fn parse_num(path: &Path, line: u64, what: &str, s: &str) -> Result<f64, CatalogError> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| malformed(path, line, format!("{what}: {s:?} is not a number")))
}

/// A labels.tsv record: (line, id, name, trapezoid if any).
type LabelLine = (u64, u32, String, Option<Trapezoid>);

impl Catalog {
    /// Writes the catalog as three TSV files under `dir`, creating it if needed.
    pub fn save(&self, dir: impl AsRef<Path>) -> Result<(), CatalogError> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
        let mut attrs = Vec::new();
        let mut labels = Vec::new();
        let mut sims = Vec::new();
        for entry in &self.entries {
            let d = &entry.descriptor;
            let (domain, units) = match &d.domain {
                BaseDomain::Numeric { units } => ("numeric", units.clone().unwrap_or_default()),
                BaseDomain::Scalar { .. } => ("scalar", String::new()),
            };
            attrs.push(vec![
                d.key.table().to_string(),
                d.key.column().to_string(),
                d.fuzzy_type.code().to_string(),
                domain.to_string(),
                units,
            ]);
            for l in &entry.labels {
                let mut row = vec![
                    d.key.table().to_string(),
                    d.key.column().to_string(),
                    l.id.to_string(),
                    l.name.clone(),
                ];
                row.extend(l.trapezoid.params().iter().map(|x| x.to_string()));
                labels.push(row);
            }
            for el in &entry.elements {
                let mut row = vec![
                    d.key.table().to_string(),
                    d.key.column().to_string(),
                    el.id.to_string(),
                    el.name.clone(),
                ];
                row.extend(std::iter::repeat_n(String::new(), 4));
                labels.push(row);
            }
            if let Some(sim) = &entry.similarity {
                let names = sim.domain();
                for i in 0..names.len() {
                    for j in (i + 1)..names.len() {
                        let v = sim.get(i, j);
                        if v != 0.0 {
                            sims.push(vec![
                                d.key.table().to_string(),
                                d.key.column().to_string(),
                                names[i].clone(),
                                names[j].clone(),
                                v.to_string(),
                            ]);
                        }
                    }
                }
            }
        }
        write_tsv(&dir.join(ATTRIBUTES_FILE), &ATTRIBUTES_HEADER, &attrs)?;
        write_tsv(&dir.join(LABELS_FILE), &LABELS_HEADER, &labels)?;
        write_tsv(&dir.join(SIMILARITY_FILE), &SIMILARITY_HEADER, &sims)
    }

    /// Loads a catalog directory written by [`Catalog::save`] (or by hand).
    ///
    /// Similarity entries may be given in either or both directions; both
    /// directions must agree. The loaded catalog is validated before return.
    pub fn load(dir: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        let dir = dir.as_ref();
        if !dir.is_dir() {
            return Err(io_err(
                dir,
                std::io::Error::new(std::io::ErrorKind::NotFound, "catalog directory not found"),
            ));
        }
        let attr_path = dir.join(ATTRIBUTES_FILE);
        let label_path = dir.join(LABELS_FILE);
        let sim_path = dir.join(SIMILARITY_FILE);

        let mut descriptors = Vec::new();
        for rec in read_tsv(&attr_path, &ATTRIBUTES_HEADER)? {
            let f = &rec.fields;
            let fuzzy_type = f[2]
                .parse::<u8>()
                .ok()
                .and_then(FuzzyType::from_code)
                .ok_or_else(|| malformed(&attr_path, rec.line, format!("bad type {:?}", f[2])))?;
            let domain = match f[3].to_lowercase().as_str() {
                "numeric" => BaseDomain::Numeric {
                    units: (!f[4].is_empty()).then(|| f[4].clone()),
                },
                "scalar" => BaseDomain::Scalar { elements: Vec::new() },
                other => return Err(malformed(&attr_path, rec.line, format!("bad domain kind {other:?}"))),
            };
            descriptors.push((rec.line, AttributeDescriptor::new(&f[0], &f[1], fuzzy_type, domain)));
        }

        let mut labels: HashMap<AttributeKey, Vec<LabelLine>> = HashMap::new();
        for rec in read_tsv(&label_path, &LABELS_HEADER)? {
            let f = &rec.fields;
            let key = AttributeKey::new(&f[0], &f[1]);
            let id = f[2]
                .parse::<u32>()
                .map_err(|_| malformed(&label_path, rec.line, format!("bad fuzzy_id {:?}", f[2])))?;
            let params = &f[4..8];
            let trapezoid = if params[1..].iter().all(String::is_empty) {
                None
            } else {
                let mut p = [0.0; 4];
                for (i, s) in params.iter().enumerate() {
                    p[i] = parse_num(&label_path, rec.line, "trapezoid", s)?;
                }
                Some(
                    Trapezoid::new(p[0], p[1], p[2], p[3])
                        .map_err(|e| malformed(&label_path, rec.line, e.to_string()))?,
                )
            };
            labels
                .entry(key)
                .or_default()
                .push((rec.line, id, f[3].clone(), trapezoid));
        }

        let mut catalog = Catalog::new();
        for (line, mut desc) in descriptors {
            let defs = labels.remove(&desc.key).unwrap_or_default();
            let scalars: Vec<_> = defs.iter().filter(|d| d.3.is_none()).collect();
            if let BaseDomain::Scalar { elements } = &mut desc.domain {
                *elements = scalars.iter().map(|d| d.2.clone()).collect();
            }
            let key = desc.key.clone();
            let fuzzy_type = desc.fuzzy_type;
            catalog
                .register_attribute(desc)
                .map_err(|e| malformed(&attr_path, line, e.to_string()))?;
            let entry = catalog.entry_mut(&key)?;
            if let Some(first) = scalars.first() {
                if entry.descriptor.is_ordered() {
                    return Err(malformed(
                        &label_path,
                        first.0,
                        format!("{key} has a numeric domain; label needs a trapezoid"),
                    ));
                }
            }
            // keep persisted ids
            entry.elements = scalars
                .iter()
                .map(|d| ScalarElement {
                    id: d.1,
                    name: d.2.clone(),
                })
                .collect();
            let mut seen_ids = HashSet::new();
            for d in &scalars {
                if !seen_ids.insert(d.1) {
                    return Err(malformed(
                        &label_path,
                        d.0,
                        format!("{key}: duplicate fuzzy_id {}", d.1),
                    ));
                }
            }
            for (line, id, name, trap) in defs.iter().filter(|d| d.3.is_some()) {
                if fuzzy_type != FuzzyType::Type2 {
                    return Err(malformed(
                        &label_path,
                        *line,
                        format!("{key} is {fuzzy_type}; trapezoid labels need Type 2"),
                    ));
                }
                check_name(name).map_err(|e| malformed(&label_path, *line, e.to_string()))?;
                let clash = entry
                    .labels
                    .iter()
                    .any(|l| l.id == *id || l.name.to_lowercase() == name.to_lowercase());
                if clash {
                    return Err(malformed(
                        &label_path,
                        *line,
                        format!("{key}: duplicate label {name} / fuzzy_id {id}"),
                    ));
                }
                entry.labels.push(LabelDefinition {
                    id: *id,
                    name: name.clone(),
                    trapezoid: trap.expect("filtered on trapezoid"),
                });
            }
        }
        if let Some((key, defs)) = labels.into_iter().next() {
            return Err(malformed(
                &label_path,
                defs[0].0,
                format!("label for unregistered attribute {key}"),
            ));
        }

        // (key, lower(name1), lower(name2)) -> (degree, line)
        let mut given: HashMap<(AttributeKey, String, String), (f64, u64)> = HashMap::new();
        for rec in read_tsv(&sim_path, &SIMILARITY_HEADER)? {
            let f = &rec.fields;
            let key = AttributeKey::new(&f[0], &f[1]);
            let value = parse_num(&sim_path, rec.line, "degree", &f[4])?;
            let degree = Degree::new(value).map_err(|e| malformed(&sim_path, rec.line, e.to_string()))?;
            let (n1, n2) = (f[2].to_lowercase(), f[3].to_lowercase());
            if let Some((other, other_line)) = given.get(&(key.clone(), n2.clone(), n1.clone())) {
                if *other != value {
                    return Err(malformed(
                        &sim_path,
                        rec.line,
                        format!(
                            "asymmetric similarity for {key}: s({},{}) = {value} but line {other_line} gives {other}",
                            f[2], f[3]
                        ),
                    ));
                }
            }
            given.insert((key.clone(), n1, n2), (value, rec.line));
            catalog
                .set_similarity(&key, &f[2], &f[3], degree)
                .map_err(|e| malformed(&sim_path, rec.line, e.to_string()))?;
        }
        catalog.validate()?;
        Ok(catalog)
    }
}
