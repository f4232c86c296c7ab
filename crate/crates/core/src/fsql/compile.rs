use super::ast::{ColumnRef, Condition, DistElement, Operand, Predicate, Query, SelectItem};
use super::FsqlError;
use crate::catalog::{AttributeKey, Catalog, ColumnKind, FuzzyType, ResolvedLabel, TableSchema};
use crate::fuzzy::{Degree, Element, FuzzyValue, Trapezoid};

/// How a condition's column is compared.
#[derive(Debug, Clone, PartialEq)]
pub enum ConditionDomain {
    /// Catalog attribute (Type 1 numeric, Type 2 or Type 3).
    Attribute { key: AttributeKey, fuzzy_type: FuzzyType },
    /// Unregistered numeric crisp column, compared on the real line.
    PlainNumeric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompiledCondition {
    pub column_index: usize,
    pub column_name: String,
    pub domain: ConditionDomain,
    /// Operand after label resolution and validation.
    pub operand: FuzzyValue,
    /// Operand as written, e.g. `$blanco`.
    pub operand_text: String,
    pub threshold: Degree,
    pub threshold_defaulted: bool,
    /// Predicate over the stored conversion columns equivalent to
    /// `degree >= threshold`.
    pub crisp_form: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Combiner {
    Condition(usize),
    And(Box<Combiner>, Box<Combiner>),
    Or(Box<Combiner>, Box<Combiner>),
}

impl Combiner {
    /// Evaluates the tree over per-condition pass/fail outcomes.
    pub fn holds(&self, passed: &[bool]) -> bool {
        match self {
            Combiner::Condition(i) => passed[*i],
            Combiner::And(l, r) => l.holds(passed) && r.holds(passed),
            Combiner::Or(l, r) => l.holds(passed) || r.holds(passed),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputSource {
    Column(usize),
    Degree(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputColumn {
    pub header: String,
    pub source: OutputSource,
}

/// A catalog-validated, executable query.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledPlan {
    pub table: String,
    pub outputs: Vec<OutputColumn>,
    pub conditions: Vec<CompiledCondition>,
    pub filter: Option<Combiner>,
    /// Canonical FSQL text of the compiled query.
    pub text: String,
}

/// Resolves `query` against `catalog` and the physical `schema` of its table.
pub fn compile(
    query: &Query,
    catalog: &Catalog,
    schema: &TableSchema,
    default_thold: Degree,
) -> Result<CompiledPlan, FsqlError> {
    if !query.from.eq_ignore_ascii_case(&schema.name) {
        return Err(FsqlError::compile(format!(
            "unknown table {} (schema is for {})",
            query.from, schema.name
        )));
    }
    let mut conditions = Vec::new();
    let filter = match &query.filter {
        Some(p) => Some(lower(p, catalog, schema, default_thold, &mut conditions)?),
        None => None,
    };

    let mut outputs = Vec::new();
    for item in &query.items {
        match item {
            SelectItem::Wildcard { table } => {
                if let Some(t) = table {
                    check_table(t, schema)?;
                }
                for (i, c) in schema.columns.iter().enumerate() {
                    outputs.push(OutputColumn {
                        header: c.name.clone(),
                        source: OutputSource::Column(i),
                    });
                }
                for (i, c) in conditions.iter().enumerate() {
                    outputs.push(OutputColumn {
                        header: format!("CDEG({})", c.column_name),
                        source: OutputSource::Degree(i),
                    });
                }
            }
            SelectItem::Column(col) => {
                let idx = column_index(col, schema)?;
                outputs.push(OutputColumn {
                    header: schema.columns[idx].name.clone(),
                    source: OutputSource::Column(idx),
                });
            }
            SelectItem::Cdeg(col) => {
                let idx = column_index(col, schema)?;
                let cond = conditions.iter().position(|c| c.column_index == idx).ok_or_else(|| {
                    FsqlError::compile(format!("CDEG({col}) names a column that no WHERE condition compares"))
                })?;
                outputs.push(OutputColumn {
                    header: format!("CDEG({})", schema.columns[idx].name),
                    source: OutputSource::Degree(cond),
                });
            }
        }
    }

    Ok(CompiledPlan {
        table: schema.name.clone(),
        outputs,
        conditions,
        filter,
        text: query.to_string(),
    })
}

fn check_table(t: &str, schema: &TableSchema) -> Result<(), FsqlError> {
    if t.eq_ignore_ascii_case(&schema.name) {
        Ok(())
    } else {
        Err(FsqlError::compile(format!(
            "table {t} is not in FROM (only {} is)",
            schema.name
        )))
    }
}

fn column_index(col: &ColumnRef, schema: &TableSchema) -> Result<usize, FsqlError> {
    if let Some(t) = &col.table {
        check_table(t, schema)?;
    }
    schema
        .index_of(&col.column)
        .ok_or_else(|| FsqlError::compile(format!("unknown column {col} in table {}", schema.name)))
}

fn lower(
    p: &Predicate,
    catalog: &Catalog,
    schema: &TableSchema,
    default_thold: Degree,
    out: &mut Vec<CompiledCondition>,
) -> Result<Combiner, FsqlError> {
    Ok(match p {
        Predicate::Condition(c) => {
            let compiled = compile_condition(c, catalog, schema, default_thold)?;
            out.push(compiled);
            Combiner::Condition(out.len() - 1)
        }
        Predicate::And(l, r) => Combiner::And(
            Box::new(lower(l, catalog, schema, default_thold, out)?),
            Box::new(lower(r, catalog, schema, default_thold, out)?),
        ),
        Predicate::Or(l, r) => Combiner::Or(
            Box::new(lower(l, catalog, schema, default_thold, out)?),
            Box::new(lower(r, catalog, schema, default_thold, out)?),
        ),
    })
}

fn special(op: &Operand) -> Option<FuzzyValue> {
    match op {
        Operand::Unknown => Some(FuzzyValue::Unknown),
        Operand::Undefined => Some(FuzzyValue::Undefined),
        Operand::Null => Some(FuzzyValue::Null),
        _ => None,
    }
}

fn compile_condition(
    c: &Condition,
    catalog: &Catalog,
    schema: &TableSchema,
    default_thold: Degree,
) -> Result<CompiledCondition, FsqlError> {
    let idx = column_index(&c.column, schema)?;
    let column = &schema.columns[idx];
    let name = column.name.clone();
    let bad = |msg: String| FsqlError::compile(format!("{name}: {msg}"));
    let (domain, operand) = match &column.kind {
        ColumnKind::Fuzzy(desc) if desc.fuzzy_type == FuzzyType::Type3 => {
            let key = desc.key.clone();
            let sim = catalog
                .similarity(&key)
                .ok_or_else(|| bad("Type 3 attribute without a similarity relation".into()))?;
            let in_domain = |e: &Element| sim.index_of_element(e).is_some();
            let operand = match &c.operand {
                Operand::Label(l) => match catalog.resolve_label(&key, l) {
                    Ok(ResolvedLabel::Element(e)) => FuzzyValue::Simple {
                        degree: Degree::ONE,
                        element: Element::Scalar(e.name),
                    },
                    _ => return Err(bad(format!("label ${l} is not in the domain of {key}"))),
                },
                Operand::Number(x) if in_domain(&Element::Number(*x)) => FuzzyValue::Simple {
                    degree: Degree::ONE,
                    element: Element::Number(*x),
                },
                Operand::Distribution(pairs) => {
                    let mut elems = Vec::new();
                    for (p, e) in pairs {
                        let e = match e {
                            DistElement::Name(n) => Element::Scalar(n.clone()),
                            DistElement::Number(x) => Element::Number(*x),
                        };
                        if !in_domain(&e) {
                            return Err(bad(format!("element {e} is not in the domain of {key}")));
                        }
                        elems.push((*p, e));
                    }
                    FuzzyValue::poss_dist(elems).map_err(|e| bad(e.to_string()))?
                }
                op => special(op)
                    .ok_or_else(|| bad(format!("operand {op} is not a value of the unordered domain of {key}")))?,
            };
            (
                ConditionDomain::Attribute {
                    key,
                    fuzzy_type: FuzzyType::Type3,
                },
                operand,
            )
        }
        ColumnKind::Fuzzy(desc) => {
            let operand = ordered_operand(&c.operand, |l| match catalog.resolve_label(&desc.key, l) {
                Ok(ResolvedLabel::Trapezoid(def)) => Ok(def.trapezoid),
                _ => Err(format!("label ${l} is undefined for {}", desc.key)),
            })
            .map_err(bad)?;
            (
                ConditionDomain::Attribute {
                    key: desc.key.clone(),
                    fuzzy_type: desc.fuzzy_type,
                },
                operand,
            )
        }
        ColumnKind::Crisp { numeric, attribute } => {
            let ordered = attribute.as_ref().map_or(*numeric, |d| d.is_ordered());
            if !ordered {
                if let Operand::Label(l) = &c.operand {
                    return Err(bad(format!("label ${l} is undefined for crisp column {name}")));
                }
                return Err(bad(
                    "FEQ needs an ordered domain or a similarity relation; this is a crisp scalar column".into(),
                ));
            }
            let operand = ordered_operand(&c.operand, |l| {
                Err(format!("label ${l} is undefined for crisp column {name}"))
            })
            .map_err(bad)?;
            let domain = match attribute {
                Some(d) => ConditionDomain::Attribute {
                    key: d.key.clone(),
                    fuzzy_type: d.fuzzy_type,
                },
                None => ConditionDomain::PlainNumeric,
            };
            (domain, operand)
        }
    };
    let (threshold, threshold_defaulted) = match c.threshold {
        Some(t) => (Degree::new(t).map_err(|e| bad(e.to_string()))?, false),
        None => (default_thold, true),
    };
    let crisp_form = super::explain::crisp_form(&name, &domain, &operand, threshold, catalog);
    Ok(CompiledCondition {
        column_index: idx,
        column_name: name,
        domain,
        operand,
        operand_text: c.operand.to_string(),
        threshold,
        threshold_defaulted,
        crisp_form,
    })
}

fn ordered_operand<F>(op: &Operand, label: F) -> Result<FuzzyValue, String>
where
    F: Fn(&str) -> Result<Trapezoid, String>,
{
    let v = match op {
        Operand::Label(l) => FuzzyValue::Trapezoid(label(l)?),
        Operand::Number(x) => FuzzyValue::Crisp(*x),
        Operand::Interval(n, m) => FuzzyValue::interval(*n, *m).map_err(|e| e.to_string())?,
        Operand::Approx(d, m) => FuzzyValue::approx(*d, *m).map_err(|e| e.to_string())?,
        Operand::Trapezoid([a, b, c, d]) => FuzzyValue::trapezoid(*a, *b, *c, *d).map_err(|e| e.to_string())?,
        Operand::Distribution(_) => {
            return Err(format!(
                "operand {op} is a distribution; this column has an ordered domain"
            ))
        }
        op => special(op).expect("remaining operands are special values"),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsql::{explain, parse_query};
    use crate::fuzzy::{Element, Trapezoid};

    fn catalog() -> Catalog {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy/catalog");
        Catalog::load(dir).unwrap()
    }

    fn schema(c: &Catalog, table: &str) -> TableSchema {
        let header: &[&str] = match table {
            "cartulina" => &["COD_CARTI", "COD_CAPA", "IMPRESION", "TONO_CARA", "TONO_REVERSO"],
            "pilas" => &["COD_PILA", "FORMATO_LARGO", "FORMATO_ANCHO", "ESTADO"],
            _ => &["COD_PERSONA", "EDAD", "PELO"],
        };
        let mut s = TableSchema::from_header(table, header, c);
        if table == "cartulina" {
            s.columns[2].kind = ColumnKind::Crisp {
                numeric: false,
                attribute: None,
            };
        }
        s
    }

    fn plan(text: &str, table: &str, default: f64) -> Result<CompiledPlan, FsqlError> {
        let c = catalog();
        compile(
            &parse_query(text).unwrap(),
            &c,
            &schema(&c, table),
            Degree::new(default).unwrap(),
        )
    }

    const FIG4: &str = "SELECT cartulina.% FROM cartulina WHERE tono_cara FEQ $blanco THOLD 0.5 \
                        AND tono_reverso FEQ $blanco THOLD 0.5";

    #[test]
    fn wildcard_expansion() {
        let p = plan(FIG4, "cartulina", 1.0).unwrap();
        let headers: Vec<&str> = p.outputs.iter().map(|o| o.header.as_str()).collect();
        assert_eq!(
            headers,
            [
                "COD_CARTI",
                "COD_CAPA",
                "IMPRESION",
                "TONO_CARA",
                "TONO_REVERSO",
                "CDEG(TONO_CARA)",
                "CDEG(TONO_REVERSO)"
            ]
        );
        assert_eq!(p.outputs[6].source, OutputSource::Degree(1));
        assert_eq!(p.conditions[0].threshold.value(), 0.5);
        assert_eq!(
            p.conditions[0].operand,
            FuzzyValue::simple(1.0, Element::Scalar("blanco".into())).unwrap()
        );
    }

    #[test]
    fn labels_resolve_per_type() {
        let p = plan("SELECT % FROM personas WHERE edad FEQ $joven", "personas", 1.0).unwrap();
        assert_eq!(
            p.conditions[0].operand,
            FuzzyValue::Trapezoid(Trapezoid::new(15.0, 20.0, 25.0, 30.0).unwrap())
        );
        assert!(p.conditions[0].threshold_defaulted);
        assert_eq!(p.conditions[0].threshold, Degree::ONE);
        let p = plan("SELECT % FROM personas WHERE edad FEQ 28", "personas", 0.25).unwrap();
        assert_eq!(p.conditions[0].threshold.value(), 0.25);
    }

    #[test]
    fn compile_errors() {
        for (text, table, needle) in [
            ("SELECT % FROM personas WHERE edad FEQ $viejo", "personas", "viejo"),
            (
                "SELECT % FROM personas WHERE altura FEQ 3",
                "personas",
                "unknown column",
            ),
            ("SELECT CDEG(edad) FROM personas", "personas", "no WHERE condition"),
            (
                "SELECT % FROM cartulina WHERE impresion FEQ 3",
                "cartulina",
                "IMPRESION",
            ),
            (
                "SELECT % FROM cartulina WHERE cod_carti FEQ $blanco",
                "cartulina",
                "undefined",
            ),
            (
                "SELECT % FROM pilas WHERE tono_cara FEQ $blanco",
                "cartulina",
                "unknown table",
            ),
            ("SELECT % FROM personas WHERE pelo FEQ $[1,2,3,4]", "personas", "PELO"),
        ] {
            let err = plan(text, table, 1.0).unwrap_err();
            assert_eq!(err.kind, crate::fsql::FsqlErrorKind::Compile, "{text}");
            assert!(err.to_string().contains(needle), "{text}: {err}");
        }
    }

    #[test]
    fn explain_mentions_operands_and_thresholds() {
        let text = explain(&plan(FIG4, "cartulina", 1.0).unwrap());
        let conditions: Vec<&str> = text.lines().filter(|l| l.starts_with("condition #")).collect();
        assert_eq!(conditions.len(), 2);
        for line in conditions {
            assert!(line.contains("$blanco = 1/BLANCO THOLD 0.5"), "{line}");
        }
        assert!(text.contains("filter: #1 AND #2"));
        assert_eq!(text, explain(&plan(FIG4, "cartulina", 1.0).unwrap()));
        assert_eq!(
            plan(FIG4, "cartulina", 1.0).unwrap(),
            plan(FIG4, "cartulina", 1.0).unwrap()
        );
        let bare = explain(&plan("SELECT % FROM cartulina", "cartulina", 1.0).unwrap());
        assert!(bare.contains("filter: none"));
    }

    #[test]
    fn combiner_tree() {
        let p = plan(
            "SELECT % FROM personas WHERE edad FEQ 1 OR edad FEQ 2 AND pelo FEQ $rubio",
            "personas",
            1.0,
        )
        .unwrap();
        let f = p.filter.unwrap();
        assert!(f.holds(&[true, false, false]));
        assert!(!f.holds(&[false, true, false]));
        assert!(f.holds(&[false, true, true]));
    }
}
