//! Reference implementations used as test oracles, written independently of
//! the library's closed forms.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use fuzzyrel::catalog::Catalog;

pub fn casestudy_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/casestudy")
}

pub fn casestudy_catalog() -> Catalog {
    Catalog::load(casestudy_dir().join("catalog")).expect("fixture catalog loads")
}

/// Trapezoid membership as the minimum of a rising and a falling edge;
/// vertical edges count as included.
pub fn membership(p: [f64; 4], x: f64) -> f64 {
    let [a, b, c, d] = p;
    let rise = if x < a {
        0.0
    } else if x >= b {
        1.0
    } else {
        (x - a) / (b - a)
    };
    let fall = if x > d {
        0.0
    } else if x <= c {
        1.0
    } else {
        (d - x) / (d - c)
    };
    rise.min(fall)
}

fn best_on(p: [f64; 4], q: [f64; 4], lo: f64, hi: f64, n: usize, extra: &[f64]) -> (f64, f64) {
    let mut best = (0.0, lo);
    let step = (hi - lo) / n as f64;
    let points = (0..=n).map(|i| lo + step * i as f64).chain(extra.iter().copied());
    for x in points {
        let v = membership(p, x).min(membership(q, x));
        if v > best.0 {
            best = (v, x);
        }
    }
    best
}

/// `sup_x min(mu_p(x), mu_q(x))` by dense sampling: a uniform grid plus the
/// eight breakpoints, then repeated refinement around the best sample.
pub fn sup_min(p: [f64; 4], q: [f64; 4]) -> f64 {
    let lo = p[0].min(q[0]);
    let hi = p[3].max(q[3]);
    if hi <= lo {
        return membership(p, lo).min(membership(q, lo));
    }
    let breaks: Vec<f64> = p.iter().chain(q.iter()).copied().collect();
    let n = 2000;
    let (mut value, mut x) = best_on(p, q, lo, hi, n, &breaks);
    let mut half = (hi - lo) / n as f64;
    for _ in 0..4 {
        let (v, bx) = best_on(p, q, x - half, x + half, n, &[]);
        if v > value {
            value = v;
            x = bx;
        }
        half /= n as f64 / 4.0;
    }
    value
}

/// Whether the closed t-cuts of two trapezoids intersect, from the edge equations.
pub fn cuts_intersect(p: [f64; 4], q: [f64; 4], t: f64) -> bool {
    let cut = |s: [f64; 4]| (s[0] + t * (s[1] - s[0]), s[3] - t * (s[3] - s[2]));
    let (l1, h1) = cut(p);
    let (l2, h2) = cut(q);
    l1.max(l2) <= h1.min(h2)
}

/// A randomized FEQ query over one fixture table.
#[derive(Debug, Clone)]
pub struct FixtureQuery {
    pub table: &'static str,
    /// (column, operand text, threshold)
    pub conditions: Vec<(&'static str, &'static str, f64)>,
    /// Connective after each condition but the last; `true` is AND.
    pub and: Vec<bool>,
    /// Parenthesize the first two conditions.
    pub group: bool,
}

type ColumnPool = (&'static str, &'static [&'static str]);

pub const POOLS: [(&str, &[ColumnPool]); 3] = [
    (
        "cartulina",
        &[
            (
                "tono_cara",
                &[
                    "$blanco",
                    "$amarillo",
                    "$cafe",
                    "$manila",
                    "{0.5/blanco, 1/manila}",
                    "UNKNOWN",
                ],
            ),
            (
                "tono_reverso",
                &["$blanco", "$amarillo", "$cafe", "$manila", "{1/cafe, 0.3/amarillo}"],
            ),
            ("cod_capa", &["10", "30", "[10,30]", "#30±10", "$[20,30,40,50]"]),
        ],
    ),
    (
        "pilas",
        &[
            (
                "formato_largo",
                &[
                    "$corta",
                    "$optima",
                    "$larga",
                    "$muy_larga",
                    "95",
                    "[80,120]",
                    "#100±20",
                    "$[90,100,110,130]",
                ],
            ),
            ("formato_ancho", &["$angosto", "$ancho", "$muy_ancho", "75", "#60±15"]),
            (
                "estado",
                &[
                    "$sucio",
                    "$mojado",
                    "$golpeado",
                    "{0.8/sucio, 0.4/rayas_en_la_superficie}",
                    "UNDEFINED",
                ],
            ),
        ],
    ),
    (
        "rollos",
        &[
            (
                "formato_largo",
                &["$rango_minimo", "$normal", "$rango_maximo", "3000", "#3100±200"],
            ),
            ("formato_ancho", &["$normal", "402", "#400±10", "[395,405]"]),
            ("altura", &["$baja", "$mediana", "$alta", "90"]),
            ("peso", &["$bajo", "$optimo", "$sobre", "[1000,1100]"]),
            (
                "estado",
                &["$sucio", "$rayas", "$curvas", "$englobado", "{1/humedo, 0.5/disperejo}"],
            ),
        ],
    ),
];

impl FixtureQuery {
    pub fn text(&self) -> String {
        let cols: Vec<String> = self
            .conditions
            .iter()
            .map(|(c, _, _)| format!("CDEG({c})"))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut text = format!("SELECT {}.%, {} FROM {}", self.table, cols.join(", "), self.table);
        if self.conditions.is_empty() {
            return text;
        }
        text.push_str(" WHERE ");
        for (i, (col, op, t)) in self.conditions.iter().enumerate() {
            if i > 0 {
                text.push_str(if self.and[i - 1] { " AND " } else { " OR " });
            }
            if self.group && i == 0 && self.conditions.len() > 2 {
                text.push('(');
            }
            text.push_str(&format!("{col} FEQ {op} THOLD {t}"));
            if self.group && i == 1 && self.conditions.len() > 2 {
                text.push(')');
            }
        }
        text
    }
}

pub fn fixture_query() -> impl proptest::strategy::Strategy<Value = FixtureQuery> {
    use proptest::prelude::*;
    (0usize..3, 1usize..=3).prop_flat_map(|(t, n)| {
        let (table, pool) = POOLS[t];
        let cond = (0..pool.len(), any::<prop::sample::Index>(), 0u32..=20).prop_map(move |(c, op, th)| {
            let (col, ops) = pool[c];
            (col, ops[op.index(ops.len())], th as f64 / 20.0)
        });
        (
            prop::collection::vec(cond, n),
            prop::collection::vec(any::<bool>(), n - 1),
            any::<bool>(),
        )
            .prop_map(move |(conditions, and, group)| FixtureQuery {
                table,
                conditions,
                and,
                group,
            })
    })
}
