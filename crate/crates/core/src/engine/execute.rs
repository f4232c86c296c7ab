use std::time::{Duration, Instant};

use super::table::{Cell, CrispValue, Table};
use super::EngineError;
use crate::catalog::Catalog;
use crate::fsql::{CompiledCondition, CompiledPlan, ConditionDomain, OutputSource};
use crate::fuzzy::{feq, ComparisonDomain, Degree, FuzzyValue};

#[derive(Debug, Clone, PartialEq)]
pub enum OutputValue {
    Crisp(CrispValue),
    Fuzzy(FuzzyValue),
    Degree(Degree),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    /// Zero-based position of the row in the scanned table.
    pub source_row: usize,
    pub values: Vec<OutputValue>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct QueryStats {
    pub parse: Duration,
    pub compile: Duration,
    pub execute: Duration,
    pub rows_scanned: usize,
    /// Number of FEQ evaluations performed.
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultSet {
    pub headers: Vec<String>,
    pub rows: Vec<ResultRow>,
    pub stats: QueryStats,
}

impl ResultSet {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Degree values of the given output column, in row order.
    pub fn degrees(&self, column: usize) -> Vec<Option<f64>> {
        self.rows
            .iter()
            .map(|r| match &r.values[column] {
                OutputValue::Degree(d) => Some(d.value()),
                _ => None,
            })
            .collect()
    }
}

fn condition_degree(
    cond: &CompiledCondition,
    row: &[Cell],
    row_no: usize,
    catalog: &Catalog,
) -> Result<Degree, EngineError> {
    let stored = match &row[cond.column_index] {
        Cell::Fuzzy(v) => v.clone(),
        Cell::Crisp(CrispValue::Number(x)) => FuzzyValue::Crisp(*x),
        Cell::Crisp(CrispValue::Null) => FuzzyValue::Null,
        Cell::Crisp(CrispValue::Text(t)) => {
            return Err(EngineError::Evaluation {
                row: row_no,
                message: format!("{}: {t:?} is not a number", cond.column_name),
            })
        }
    };
    let result = match &cond.domain {
        ConditionDomain::Attribute { key, .. } => catalog.feq(key, &stored, &cond.operand).map_err(|e| e.to_string()),
        ConditionDomain::PlainNumeric => {
            let resolve = |_: &str| None;
            feq(&stored, &cond.operand, &ComparisonDomain::Ordered(&resolve)).map_err(|e| e.to_string())
        }
    };
    result.map_err(|message| EngineError::Evaluation {
        row: row_no,
        message: format!("{}: {message}", cond.column_name),
    })
}

fn scan(
    plan: &CompiledPlan,
    rows: &[Vec<Cell>],
    offset: usize,
    catalog: &Catalog,
) -> Result<(Vec<ResultRow>, usize), EngineError> {
    let mut out = Vec::new();
    let mut evaluations = 0;
    let mut degrees = Vec::with_capacity(plan.conditions.len());
    let mut passed = Vec::with_capacity(plan.conditions.len());
    for (i, row) in rows.iter().enumerate() {
        let row_no = offset + i;
        degrees.clear();
        passed.clear();
        for cond in &plan.conditions {
            let d = condition_degree(cond, row, row_no + 1, catalog)?;
            evaluations += 1;
            passed.push(d >= cond.threshold);
            degrees.push(d);
        }
        if plan.filter.as_ref().is_some_and(|f| !f.holds(&passed)) {
            continue;
        }
        let values = plan
            .outputs
            .iter()
            .map(|o| match o.source {
                OutputSource::Column(c) => match &row[c] {
                    Cell::Crisp(v) => OutputValue::Crisp(v.clone()),
                    Cell::Fuzzy(v) => OutputValue::Fuzzy(v.clone()),
                },
                OutputSource::Degree(k) => OutputValue::Degree(degrees[k]),
            })
            .collect();
        out.push(ResultRow {
            source_row: row_no,
            values,
        });
    }
    Ok((out, evaluations))
}

/// Runs a compiled plan as a full scan, preserving input order.
pub fn execute(plan: &CompiledPlan, table: &Table, catalog: &Catalog) -> Result<ResultSet, EngineError> {
    execute_parallel(plan, table, catalog, 1)
}

/// Like [`execute`], splitting the scan over `workers` threads.
pub fn execute_parallel(
    plan: &CompiledPlan,
    table: &Table,
    catalog: &Catalog,
    workers: usize,
) -> Result<ResultSet, EngineError> {
    let start = Instant::now();
    if table.schema.name != plan.table {
        return Err(EngineError::Schema(format!(
            "plan targets {} but table is {}",
            plan.table, table.schema.name
        )));
    }
    let workers = workers.clamp(1, table.rows.len().max(1));
    let (rows, evaluations) = if workers == 1 {
        scan(plan, &table.rows, 0, catalog)?
    } else {
        let chunk = table.rows.len().div_ceil(workers);
        let parts: Vec<_> = std::thread::scope(|s| {
            let handles: Vec<_> = table
                .rows
                .chunks(chunk)
                .enumerate()
                .map(|(i, rows)| s.spawn(move || scan(plan, rows, i * chunk, catalog)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        });
        let mut rows = Vec::new();
        let mut evaluations = 0;
        for part in parts {
            let (r, e) = part?;
            rows.extend(r);
            evaluations += e;
        }
        (rows, evaluations)
    };
    Ok(ResultSet {
        headers: plan.outputs.iter().map(|o| o.header.clone()).collect(),
        rows,
        stats: QueryStats {
            execute: start.elapsed(),
            rows_scanned: table.rows.len(),
            evaluations,
            ..QueryStats::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{Database, QueryOptions};

    const FIG4: &str = "SELECT cartulina.% FROM cartulina WHERE tono_cara FEQ $blanco THOLD 0.5 \
                        AND tono_reverso FEQ $blanco THOLD 0.5";

    fn db() -> Database {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy");
        Database::open(dir.join("catalog"), &dir).unwrap()
    }

    fn codes(rs: &ResultSet) -> Vec<String> {
        rs.rows
            .iter()
            .map(|r| match &r.values[0] {
                OutputValue::Crisp(CrispValue::Number(x)) => x.to_string(),
                other => format!("{other:?}"),
            })
            .collect()
    }

    #[test]
    fn fig4_rows_and_degrees() {
        let out = db().query(FIG4, &QueryOptions::default()).unwrap();
        let rs = out.result;
        assert_eq!(rs.headers.len(), 7);
        assert_eq!(rs.headers[5], "CDEG(TONO_CARA)");
        assert_eq!(codes(&rs), ["444", "226", "228"]);
        let pairs: Vec<_> = rs.degrees(5).into_iter().zip(rs.degrees(6)).collect();
        assert_eq!(
            pairs,
            [(Some(0.5), Some(1.0)), (Some(0.5), Some(0.9)), (Some(1.0), Some(1.0))]
        );
        assert_eq!(rs.stats.rows_scanned, 14);
        assert_eq!(rs.stats.evaluations, 28);
    }

    #[test]
    fn higher_threshold_keeps_228() {
        let q = FIG4.replace("0.5", "0.95");
        let rs = db().query(&q, &QueryOptions::default()).unwrap().result;
        assert_eq!(codes(&rs), ["228"]);
    }

    #[test]
    fn no_where_returns_everything() {
        let rs = db()
            .query("SELECT cartulina.% FROM cartulina", &QueryOptions::default())
            .unwrap()
            .result;
        assert_eq!(rs.len(), 14);
        assert_eq!(rs.headers.len(), 5);
        assert_eq!(rs.stats.evaluations, 0);
    }

    #[test]
    fn parallel_matches_sequential() {
        let mut db = db();
        let seq = db.query(FIG4, &QueryOptions::default()).unwrap().result;
        for workers in [2, 3, 8, 64] {
            let opts = QueryOptions {
                workers,
                ..QueryOptions::default()
            };
            let par = db.query(FIG4, &opts).unwrap().result;
            assert_eq!(par.rows, seq.rows);
            assert_eq!(par.stats.evaluations, seq.stats.evaluations);
        }
    }

    #[test]
    fn or_filter() {
        let q =
            "SELECT cod_carti FROM cartulina WHERE tono_cara FEQ $blanco THOLD 1 OR tono_reverso FEQ $blanco THOLD 1";
        let rs = db().query(q, &QueryOptions::default()).unwrap().result;
        let single = |c: &str| {
            let q = format!("SELECT cod_carti FROM cartulina WHERE {c} FEQ $blanco THOLD 1");
            codes(&db().query(&q, &QueryOptions::default()).unwrap().result)
        };
        let (a, b) = (single("tono_cara"), single("tono_reverso"));
        for c in codes(&rs) {
            assert!(a.contains(&c) || b.contains(&c));
        }
        assert!(rs.len() >= a.len().max(b.len()));
    }
}
