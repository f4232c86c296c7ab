use std::fmt;
use std::str::FromStr;

use crate::fuzzy::{Degree, Element, FuzzyValue};

/// Decimal separator used when rendering numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Locale {
    #[default]
    Dot,
    Comma,
}

impl FromStr for Locale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(Locale::Dot),
            "comma" => Ok(Locale::Comma),
            other => Err(format!("unknown locale {other:?} (expected dot or comma)")),
        }
    }
}

impl fmt::Display for Locale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Locale::Dot => "dot",
            Locale::Comma => "comma",
        })
    }
}

impl Locale {
    /// Separator between numbers inside brackets; `,` would be ambiguous
    /// with a comma decimal separator.
    fn list_separator(self) -> &'static str {
        match self {
            Locale::Dot => ",",
            Locale::Comma => ";",
        }
    }
}

/// Shortest round-trip form, no trailing zeros (`0.5`, `28`).
pub fn render_number(x: f64, locale: Locale) -> String {
    let s = format!("{x}");
    match locale {
        Locale::Dot => s,
        Locale::Comma => s.replace('.', ","),
    }
}

pub fn render_degree(d: Degree, locale: Locale) -> String {
    render_number(d.value(), locale)
}

fn render_element(e: &Element, locale: Locale) -> String {
    match e {
        Element::Number(x) => render_number(*x, locale),
        Element::Scalar(s) => s.to_uppercase(),
    }
}

/// Display form of a fuzzy value, e.g. `0,5/BLANCO`, `UNKNOWN`, `$[25,30,40,45]`.
pub fn render_value(v: &FuzzyValue, locale: Locale) -> String {
    let n = |x: f64| render_number(x, locale);
    let sep = locale.list_separator();
    match v {
        FuzzyValue::Unknown => "UNKNOWN".to_string(),
        FuzzyValue::Undefined => "UNDEFINED".to_string(),
        FuzzyValue::Null => "NULL".to_string(),
        FuzzyValue::Crisp(x) => n(*x),
        FuzzyValue::Label(name) => format!("${name}"),
        FuzzyValue::Interval { low, high } => format!("[{}{sep}{}]", n(*low), n(*high)),
        FuzzyValue::Approx { center, margin } => format!("#{}±{}", n(*center), n(*margin)),
        FuzzyValue::Trapezoid(t) => {
            let p: Vec<_> = t.params().iter().map(|x| n(*x)).collect();
            format!("$[{}]", p.join(sep))
        }
        FuzzyValue::Simple { degree, element } => {
            format!("{}/{}", render_degree(*degree, locale), render_element(element, locale))
        }
        FuzzyValue::PossDist(pairs) => pairs
            .iter()
            .map(|(p, e)| format!("{}/{}", render_degree(*p, locale), render_element(e, locale)))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_conventions() {
        let blanco = FuzzyValue::poss_dist([(0.5, Element::scalar("BLANCO"))]).unwrap();
        assert_eq!(render_value(&blanco, Locale::Comma), "0,5/BLANCO");
        assert_eq!(render_value(&FuzzyValue::Unknown, Locale::Dot), "UNKNOWN");
        assert_eq!(render_value(&FuzzyValue::Crisp(28.0), Locale::Dot), "28");
        let simple = FuzzyValue::simple(1.0, Element::scalar("blanco")).unwrap();
        assert_eq!(render_value(&simple, Locale::Comma), "1/BLANCO");
        let dist = FuzzyValue::poss_dist([
            (0.4, Element::Number(27.0)),
            (1.0, Element::Number(28.0)),
            (0.8, Element::Number(29.5)),
        ])
        .unwrap();
        assert_eq!(render_value(&dist, Locale::Comma), "0,4/27, 1/28, 0,8/29,5");
        assert_eq!(
            render_value(&FuzzyValue::trapezoid(25.0, 30.0, 40.0, 45.0).unwrap(), Locale::Dot),
            "$[25,30,40,45]"
        );
        assert_eq!(
            render_value(&FuzzyValue::trapezoid(2.5, 3.0, 4.0, 4.5).unwrap(), Locale::Comma),
            "$[2,5;3;4;4,5]"
        );
        assert_eq!(
            render_value(&FuzzyValue::interval(25.0, 30.0).unwrap(), Locale::Dot),
            "[25,30]"
        );
        assert_eq!(
            render_value(&FuzzyValue::approx(400.0, 10.0).unwrap(), Locale::Dot),
            "#400±10"
        );
        assert_eq!(render_value(&FuzzyValue::Undefined, Locale::Comma), "UNDEFINED");
        assert_eq!(render_value(&FuzzyValue::Null, Locale::Comma), "NULL");
    }
}
