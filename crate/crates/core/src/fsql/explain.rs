use std::fmt::Write;

use super::compile::{Combiner, CompiledPlan, ConditionDomain};
use crate::catalog::{Catalog, FuzzyType};
use crate::engine::{render_value, Locale};
use crate::fuzzy::{to_trapezoid, Degree, FuzzyValue};

/// Shortest form after rounding to 12 significant digits.
fn num(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    format!("{rounded}")
}

/// Crisp predicate over the conversion columns that holds exactly when the
/// condition's degree reaches `threshold`.
///
/// Ordered values use alpha-cuts: the possibility of equality of two
/// trapezoids is at least `t > 0` iff their `t`-cuts intersect.
pub(crate) fn crisp_form(
    column: &str,
    domain: &ConditionDomain,
    operand: &FuzzyValue,
    threshold: Degree,
    catalog: &Catalog,
) -> String {
    let t = threshold.value();
    let c = column;
    let fuzzy = matches!(
        domain,
        ConditionDomain::Attribute {
            fuzzy_type: FuzzyType::Type2 | FuzzyType::Type3,
            ..
        }
    );
    if t == 0.0 || matches!(operand, FuzzyValue::Unknown) {
        return "TRUE".to_string();
    }
    if matches!(operand, FuzzyValue::Undefined | FuzzyValue::Null) {
        return if fuzzy {
            format!("{c}.FT = 0")
        } else {
            "FALSE".to_string()
        };
    }
    match domain {
        ConditionDomain::Attribute {
            key,
            fuzzy_type: FuzzyType::Type3,
        } => {
            let Some(sim) = catalog.similarity(key) else {
                return "FALSE".to_string();
            };
            let pairs = operand.pairs().unwrap_or_default();
            let mut hits = Vec::new();
            for (i, name) in sim.domain().iter().enumerate() {
                let best = pairs
                    .iter()
                    .filter_map(|(q, e)| sim.index_of_element(e).map(|j| q.value().min(sim.get(i, j))))
                    .fold(0.0, f64::max);
                if best >= t {
                    let id = catalog
                        .element_id(key, name)
                        .map(|id| format!("{id}:"))
                        .unwrap_or_default();
                    hits.push(format!("{id}{name}"));
                }
            }
            let mut out = format!("{c}.FT = 0");
            if !hits.is_empty() {
                write!(
                    out,
                    " OR ({c}.FT IN (3, 4) AND EXISTS i: {c}.FP_i >= {} AND {c}.F_i IN ({}))",
                    num(t),
                    hits.join(", ")
                )
                .unwrap();
            }
            out
        }
        _ => {
            let Ok(tr) = to_trapezoid(operand, |_| None) else {
                return "FALSE".to_string();
            };
            let (lo, hi) = tr.alpha_cut(threshold);
            let (lo_s, hi_s) = (num(lo), num(hi));
            if !fuzzy {
                return format!("{c} BETWEEN {lo_s} AND {hi_s}");
            }
            let mut clauses = vec![
                format!("{c}.FT = 0"),
                format!("({c}.FT = 3 AND {c}.V1 BETWEEN {lo_s} AND {hi_s})"),
            ];
            if let ConditionDomain::Attribute { key, .. } = domain {
                let ids: Vec<String> = catalog
                    .labels(key)
                    .iter()
                    .filter(|l| {
                        let (a, b) = l.trapezoid.alpha_cut(threshold);
                        a <= hi && b >= lo
                    })
                    .map(|l| format!("{}:{}", l.id, l.name))
                    .collect();
                if !ids.is_empty() {
                    clauses.push(format!("({c}.FT = 4 AND {c}.V1 IN ({}))", ids.join(", ")));
                }
            }
            let slack = num(1.0 - t);
            let tt = num(t);
            clauses.push(format!("({c}.FT = 5 AND {c}.V1 <= {hi_s} AND {c}.V4 >= {lo_s})"));
            clauses.push(format!(
                "({c}.FT = 6 AND {c}.V1 - {slack}*{c}.V4 <= {hi_s} AND {c}.V1 + {slack}*{c}.V4 >= {lo_s})"
            ));
            clauses.push(format!(
                "({c}.FT = 7 AND {c}.V1 + {tt}*{c}.V2 <= {hi_s} AND {c}.V4 + {tt}*{c}.V3 >= {lo_s})"
            ));
            clauses.join(" OR ")
        }
    }
}

fn render_tree(c: &Combiner, parent_and: bool) -> String {
    match c {
        Combiner::Condition(i) => format!("#{}", i + 1),
        Combiner::And(l, r) => format!("{} AND {}", render_tree(l, true), render_tree(r, true)),
        Combiner::Or(l, r) => {
            let s = format!("{} OR {}", render_tree(l, false), render_tree(r, false));
            if parent_and {
                format!("({s})")
            } else {
                s
            }
        }
    }
}

fn render_aggregate(c: &Combiner) -> String {
    match c {
        Combiner::Condition(i) => format!("#{}", i + 1),
        Combiner::And(l, r) => format!("min({}, {})", render_aggregate(l), render_aggregate(r)),
        Combiner::Or(l, r) => format!("max({}, {})", render_aggregate(l), render_aggregate(r)),
    }
}

/// Deterministic, human-readable rendering of a compiled plan.
pub fn explain(plan: &CompiledPlan) -> String {
    let mut out = String::new();
    writeln!(out, "query: {}", plan.text).unwrap();
    writeln!(out, "table: {} (full scan, input order preserved)", plan.table).unwrap();
    let headers: Vec<&str> = plan.outputs.iter().map(|o| o.header.as_str()).collect();
    writeln!(out, "output: {}", headers.join(", ")).unwrap();
    for (i, c) in plan.conditions.iter().enumerate() {
        let typing = match &c.domain {
            ConditionDomain::Attribute { key, fuzzy_type } => format!("{fuzzy_type}, {key}"),
            ConditionDomain::PlainNumeric => "crisp numeric".to_string(),
        };
        let resolved = render_value(&c.operand, Locale::Dot);
        let operand = if resolved == c.operand_text {
            resolved
        } else {
            format!("{} = {}", c.operand_text, resolved)
        };
        let default = if c.threshold_defaulted { " (default)" } else { "" };
        writeln!(
            out,
            "condition #{}: {} [{}] FEQ {} THOLD {}{}",
            i + 1,
            c.column_name,
            typing,
            operand,
            c.threshold,
            default
        )
        .unwrap();
        writeln!(out, "  crisp form: {}", c.crisp_form).unwrap();
    }
    match &plan.filter {
        Some(f) => {
            writeln!(out, "filter: {}", render_tree(f, false)).unwrap();
            writeln!(out, "row degree (explain only): {}", render_aggregate(f)).unwrap();
        }
        None => writeln!(out, "filter: none, full scan returns every row").unwrap(),
    }
    out
}
