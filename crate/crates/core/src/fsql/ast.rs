use std::fmt;

use super::Comparator;

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnRef {
    pub table: Option<String>,
    pub column: String,
}

impl fmt::Display for ColumnRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.table {
            Some(t) => write!(f, "{t}.{}", self.column),
            None => f.write_str(&self.column),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SelectItem {
    /// `%` or `table.%`
    Wildcard {
        table: Option<String>,
    },
    Column(ColumnRef),
    Cdeg(ColumnRef),
}

/// Right-hand side of a fuzzy comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum Operand {
    /// `$name`
    Label(String),
    /// `28`
    Number(f64),
    /// `[n,m]`
    Interval(f64, f64),
    /// `#d±margin`
    Approx(f64, f64),
    /// `$[a,b,c,d]`
    Trapezoid([f64; 4]),
    /// `{0.5/blanco, 1/cafe}`
    Distribution(Vec<(f64, DistElement)>),
    Unknown,
    Undefined,
    Null,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DistElement {
    Name(String),
    Number(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Condition {
    pub column: ColumnRef,
    pub comparator: Comparator,
    pub operand: Operand,
    pub threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Predicate {
    Condition(Condition),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

impl Predicate {
    /// Conditions in left-to-right textual order.
    pub fn conditions(&self) -> Vec<&Condition> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a Condition>) {
        match self {
            Predicate::Condition(c) => out.push(c),
            Predicate::And(l, r) | Predicate::Or(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub items: Vec<SelectItem>,
    pub from: String,
    pub filter: Option<Predicate>,
}

impl fmt::Display for SelectItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectItem::Wildcard { table: Some(t) } => write!(f, "{t}.%"),
            SelectItem::Wildcard { table: None } => f.write_str("%"),
            SelectItem::Column(c) => write!(f, "{c}"),
            SelectItem::Cdeg(c) => write!(f, "CDEG({c})"),
        }
    }
}

impl fmt::Display for DistElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistElement::Name(n) => f.write_str(n),
            DistElement::Number(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Label(n) => write!(f, "${n}"),
            Operand::Number(x) => write!(f, "{x}"),
            Operand::Interval(n, m) => write!(f, "[{n},{m}]"),
            Operand::Approx(d, m) => write!(f, "#{d}±{m}"),
            Operand::Trapezoid([a, b, c, d]) => write!(f, "$[{a},{b},{c},{d}]"),
            Operand::Distribution(pairs) => {
                f.write_str("{")?;
                for (i, (p, e)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}/{e}")?;
                }
                f.write_str("}")
            }
            Operand::Unknown => f.write_str("UNKNOWN"),
            Operand::Undefined => f.write_str("UNDEFINED"),
            Operand::Null => f.write_str("NULL"),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.column, self.comparator, self.operand)?;
        if let Some(t) = self.threshold {
            write!(f, " THOLD {t}")?;
        }
        Ok(())
    }
}

impl Predicate {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent_and: bool, right_child: bool) -> fmt::Result {
        match self {
            Predicate::Condition(c) => write!(f, "{c}"),
            Predicate::And(l, r) => {
                let parens = right_child && parent_and;
                if parens {
                    f.write_str("(")?;
                }
                l.fmt_prec(f, true, false)?;
                f.write_str(" AND ")?;
                r.fmt_prec(f, true, true)?;
                if parens {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Predicate::Or(l, r) => {
                // OR binds looser than AND; OR under AND, or a right-nested OR, needs parens
                let parens = parent_and || right_child;
                if parens {
                    f.write_str("(")?;
                }
                l.fmt_prec(f, false, false)?;
                f.write_str(" OR ")?;
                r.fmt_prec(f, false, true)?;
                if parens {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, false, false)
    }
}

/// Renders canonical FSQL text that parses back to the same AST.
impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SELECT ")?;
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{item}")?;
        }
        write!(f, " FROM {}", self.from)?;
        if let Some(p) = &self.filter {
            write!(f, " WHERE {p}")?;
        }
        Ok(())
    }
}
