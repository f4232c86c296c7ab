use std::path::Path;

use clap::Subcommand;

use super::{parse_degree, Config, Io, EXIT_CONFIG, EXIT_OK};
use crate::catalog::{AttributeDescriptor, BaseDomain, Catalog, CatalogError, FuzzyType};
use crate::engine::{render_number, Locale};
use crate::fuzzy::{Degree, Trapezoid};

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Register a column as a fuzzy attribute
    AddAttr {
        table: String,
        column: String,
        /// 1, 2 or 3
        #[arg(value_parser = parse_type)]
        fuzzy_type: FuzzyType,
        /// Units of a numeric domain
        #[arg(long)]
        units: Option<String>,
        /// Comma-separated scalar domain (required for Type 3)
        #[arg(long, value_delimiter = ',')]
        elements: Vec<String>,
    },
    /// Define a label: a trapezoid (Type 2) or a scalar element (Type 3)
    AddLabel {
        /// `table.column` or an unambiguous column name
        attribute: String,
        name: String,
        /// Trapezoid parameters a b c d (Type 2 only)
        #[arg(allow_negative_numbers = true)]
        params: Vec<f64>,
    },
    /// Set the similarity of two scalar elements (symmetric)
    SetSim {
        attribute: String,
        first: String,
        second: String,
        #[arg(value_parser = parse_degree)]
        degree: Degree,
    },
    /// Print attributes, labels and similarity matrices
    Show {
        /// Restrict the listing to one attribute
        attribute: Option<String>,
    },
}

fn parse_type(s: &str) -> Result<FuzzyType, String> {
    let digits = s.trim().trim_start_matches(|c: char| c.is_alphabetic() || c == ' ');
    digits
        .parse::<u8>()
        .ok()
        .and_then(FuzzyType::from_code)
        .ok_or_else(|| format!("{s:?} is not a fuzzy type (expected 1, 2 or 3)"))
}

fn load_or_empty(dir: &Path) -> Result<Catalog, CatalogError> {
    if dir.exists() {
        Catalog::load(dir)
    } else {
        Ok(Catalog::new())
    }
}

pub(super) fn run(cmd: CatalogCommand, config: &Config, io: &mut Io<'_>) -> i32 {
    let result = match cmd {
        CatalogCommand::Show { attribute } => Catalog::load(&config.catalog).and_then(|c| {
            let _ = write!(io.stdout, "{}", show(&c, attribute.as_deref(), config.locale)?);
            Ok(())
        }),
        cmd => load_or_empty(&config.catalog).and_then(|mut c| {
            mutate(&mut c, cmd)?;
            c.validate()?;
            c.save(&config.catalog)
        }),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            EXIT_CONFIG
        }
    }
}

fn mutate(c: &mut Catalog, cmd: CatalogCommand) -> Result<(), CatalogError> {
    match cmd {
        CatalogCommand::AddAttr {
            table,
            column,
            fuzzy_type,
            units,
            elements,
        } => {
            let domain = if elements.is_empty() {
                BaseDomain::Numeric { units }
            } else {
                BaseDomain::Scalar {
                    elements: elements.into_iter().map(|e| e.trim().to_string()).collect(),
                }
            };
            c.register_attribute(AttributeDescriptor::new(&table, &column, fuzzy_type, domain))
        }
        CatalogCommand::AddLabel {
            attribute,
            name,
            params,
        } => {
            let desc = c.find(&attribute)?.clone();
            match (desc.fuzzy_type, params.as_slice()) {
                (FuzzyType::Type2, &[a, b, cc, d]) => {
                    c.define_label(&desc.key, &name, Trapezoid::new(a, b, cc, d)?)?;
                }
                (FuzzyType::Type3, []) => {
                    c.add_element(&desc.key, &name)?;
                }
                _ => {
                    return Err(CatalogError::InvalidDescriptor(format!(
                        "{}: a Type 2 label takes four trapezoid parameters, a Type 3 label none ({} given)",
                        desc.key,
                        params.len()
                    )))
                }
            }
            Ok(())
        }
        CatalogCommand::SetSim {
            attribute,
            first,
            second,
            degree,
        } => {
            let key = c.find(&attribute)?.key.clone();
            c.set_similarity(&key, &first, &second, degree)
        }
        CatalogCommand::Show { .. } => Ok(()),
    }
}

/// Human-readable catalog listing.
pub fn show(c: &Catalog, only: Option<&str>, locale: Locale) -> Result<String, CatalogError> {
    let selected: Vec<&AttributeDescriptor> = match only {
        Some(r) => vec![c.find(r)?],
        None => c.attributes().collect(),
    };
    let num = |x: f64| render_number(x, locale);
    let mut out = String::new();
    for d in selected {
        let domain = match &d.domain {
            BaseDomain::Numeric { units: Some(u) } => format!("numeric ({u})"),
            BaseDomain::Numeric { units: None } => "numeric".to_string(),
            BaseDomain::Scalar { elements } => format!("scalar, {} elements", elements.len()),
        };
        out += &format!("{}  {}  {}\n", d.key, d.fuzzy_type, domain);
        for l in c.labels(&d.key) {
            let t = l.trapezoid;
            out += &format!(
                "  label {} ${} = [{}, {}, {}, {}]\n",
                l.id,
                l.name,
                num(t.a()),
                num(t.b()),
                num(t.c()),
                num(t.d())
            );
        }
        if let Some(sim) = c.similarity(&d.key) {
            let names = sim.domain();
            let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(0);
            let cells: Vec<Vec<String>> = sim.rows().map(|(_, r)| r.iter().map(|x| num(*x)).collect()).collect();
            let col_width = names
                .iter()
                .map(|n| n.chars().count())
                .chain(cells.iter().flatten().map(|s| s.chars().count()))
                .max()
                .unwrap_or(1);
            out += &format!("  {:width$}", "");
            for n in names {
                out += &format!("  {n:>col_width$}");
            }
            out += "\n";
            for (n, row) in names.iter().zip(&cells) {
                out += &format!("  {n:width$}");
                for x in row {
                    out += &format!("  {x:>col_width$}");
                }
                out += "\n";
            }
        }
    }
    Ok(out)
}
