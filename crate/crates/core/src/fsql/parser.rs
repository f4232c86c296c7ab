use super::ast::{ColumnRef, Condition, DistElement, Operand, Predicate, Query, SelectItem};
use super::token::{Keyword, Token, TokenKind};
use super::{tokenize, FsqlError, Position};

/// Recursive-descent parser over a token slice.
///
/// ```text
/// query     := SELECT item {, item} FROM ident [WHERE or_expr] [;]
/// item      := % | ident . % | column | CDEG ( column )
/// or_expr   := and_expr {OR and_expr}
/// and_expr  := primary {AND primary}
/// primary   := ( or_expr ) | column FEQ operand [THOLD number]
/// ```
pub struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: Position,
}

pub fn parse(tokens: &[Token]) -> Result<Query, FsqlError> {
    Parser::new(tokens).query()
}

/// Tokenizes and parses one statement.
pub fn parse_query(text: &str) -> Result<Query, FsqlError> {
    let tokens = tokenize(text)?;
    let mut p = Parser::new(&tokens);
    if let Some(last) = text.lines().enumerate().last() {
        p.end = Position {
            line: last.0 + 1,
            column: last.1.chars().count() + 1,
        };
    }
    p.query()
}

impl<'a> Parser<'a> {
    pub fn new(tokens: &'a [Token]) -> Self {
        let end = tokens.last().map_or(Position { line: 1, column: 1 }, |t| Position {
            line: t.pos.line,
            column: t.pos.column + 1,
        });
        Parser { tokens, pos: 0, end }
    }

    fn peek(&self) -> Option<&'a TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn here(&self) -> Position {
        self.tokens.get(self.pos).map_or(self.end, |t| t.pos)
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> FsqlError {
        let found = match self.peek() {
            Some(k) => k.to_string(),
            None => "end of input".to_string(),
        };
        FsqlError::syntax(self.here(), format!("{expected} expected, found {found}"))
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<(), FsqlError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, FsqlError> {
        match self.peek() {
            Some(TokenKind::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(self.error(what)),
        }
    }

    fn number(&mut self, what: &str) -> Result<f64, FsqlError> {
        match self.peek() {
            Some(TokenKind::Number(x)) => {
                self.pos += 1;
                Ok(*x)
            }
            _ => Err(self.error(what)),
        }
    }

    pub fn query(&mut self) -> Result<Query, FsqlError> {
        self.expect(TokenKind::Keyword(Keyword::Select), "SELECT")?;
        let mut items = vec![self.item()?];
        while self.eat(&TokenKind::Comma) {
            items.push(self.item()?);
        }
        self.expect(TokenKind::Keyword(Keyword::From), "FROM")?;
        let from = self.ident("table name")?;
        let filter = if self.eat(&TokenKind::Keyword(Keyword::Where)) {
            Some(self.or_expr()?)
        } else {
            None
        };
        self.eat(&TokenKind::Semicolon);
        if self.peek().is_some() {
            return Err(self.error("end of statement"));
        }
        Ok(Query { items, from, filter })
    }

    fn item(&mut self) -> Result<SelectItem, FsqlError> {
        match self.peek() {
            Some(TokenKind::Percent) => {
                self.pos += 1;
                Ok(SelectItem::Wildcard { table: None })
            }
            Some(TokenKind::Keyword(Keyword::Cdeg)) => {
                self.pos += 1;
                self.expect(TokenKind::LParen, "`(`")?;
                let col = self.column_ref()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(SelectItem::Cdeg(col))
            }
            Some(TokenKind::Ident(_)) => {
                let first = self.ident("column")?;
                if self.eat(&TokenKind::Dot) {
                    if self.eat(&TokenKind::Percent) {
                        return Ok(SelectItem::Wildcard { table: Some(first) });
                    }
                    let column = self.ident("column name or `%`")?;
                    return Ok(SelectItem::Column(ColumnRef {
                        table: Some(first),
                        column,
                    }));
                }
                Ok(SelectItem::Column(ColumnRef {
                    table: None,
                    column: first,
                }))
            }
            _ => Err(self.error("select item")),
        }
    }

    fn column_ref(&mut self) -> Result<ColumnRef, FsqlError> {
        let first = self.ident("column")?;
        if self.eat(&TokenKind::Dot) {
            let column = self.ident("column name")?;
            Ok(ColumnRef {
                table: Some(first),
                column,
            })
        } else {
            Ok(ColumnRef {
                table: None,
                column: first,
            })
        }
    }

    fn or_expr(&mut self) -> Result<Predicate, FsqlError> {
        let mut left = self.and_expr()?;
        while self.eat(&TokenKind::Keyword(Keyword::Or)) {
            let right = self.and_expr()?;
            left = Predicate::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and_expr(&mut self) -> Result<Predicate, FsqlError> {
        let mut left = self.primary()?;
        while self.eat(&TokenKind::Keyword(Keyword::And)) {
            let right = self.primary()?;
            left = Predicate::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn primary(&mut self) -> Result<Predicate, FsqlError> {
        if self.eat(&TokenKind::LParen) {
            let inner = self.or_expr()?;
            self.expect(TokenKind::RParen, "`)`")?;
            return Ok(inner);
        }
        if !matches!(self.peek(), Some(TokenKind::Ident(_))) {
            return Err(self.error("condition"));
        }
        let column = self.column_ref()?;
        let comparator = match self.peek() {
            Some(TokenKind::Comparator(c)) => {
                self.pos += 1;
                *c
            }
            _ => return Err(self.error("comparator")),
        };
        let operand = self.operand()?;
        let threshold = if self.eat(&TokenKind::Keyword(Keyword::Thold)) {
            let at = self.here();
            let t = self.number("threshold")?;
            if !(0.0..=1.0).contains(&t) {
                return Err(FsqlError::syntax(at, format!("threshold {t} is outside [0,1]")));
            }
            Some(t)
        } else {
            None
        };
        Ok(Predicate::Condition(Condition {
            column,
            comparator,
            operand,
            threshold,
        }))
    }

    fn operand(&mut self) -> Result<Operand, FsqlError> {
        let Some(tok) = self.tokens.get(self.pos) else {
            return Err(self.error("operand"));
        };
        match &tok.kind {
            TokenKind::Label(name) => {
                self.advance();
                Ok(Operand::Label(name.clone()))
            }
            TokenKind::Number(x) => {
                self.advance();
                Ok(Operand::Number(*x))
            }
            TokenKind::Ident(word) => {
                let op = match word.to_ascii_uppercase().as_str() {
                    "UNKNOWN" => Operand::Unknown,
                    "UNDEFINED" => Operand::Undefined,
                    "NULL" => Operand::Null,
                    _ => return Err(self.error("operand")),
                };
                self.advance();
                Ok(op)
            }
            TokenKind::LBracket => {
                self.advance();
                let n = self.number("interval lower bound")?;
                self.expect(TokenKind::Comma, "`,`")?;
                let m = self.number("interval upper bound")?;
                self.expect(TokenKind::RBracket, "`]`")?;
                Ok(Operand::Interval(n, m))
            }
            TokenKind::Hash => {
                self.advance();
                let d = self.number("approximate value")?;
                self.expect(TokenKind::PlusMinus, "`±`")?;
                let margin = self.number("margin")?;
                Ok(Operand::Approx(d, margin))
            }
            TokenKind::Dollar => {
                self.advance();
                self.expect(TokenKind::LBracket, "`[`")?;
                let mut p = [0.0; 4];
                for (i, slot) in p.iter_mut().enumerate() {
                    if i > 0 {
                        self.expect(TokenKind::Comma, "`,`")?;
                    }
                    *slot = self.number("trapezoid parameter")?;
                }
                self.expect(TokenKind::RBracket, "`]`")?;
                Ok(Operand::Trapezoid(p))
            }
            TokenKind::LBrace => {
                self.advance();
                let mut pairs = Vec::new();
                loop {
                    let p = self.number("possibility degree")?;
                    self.expect(TokenKind::Slash, "`/`")?;
                    let e = match self.peek() {
                        Some(TokenKind::Ident(s)) => DistElement::Name(s.clone()),
                        Some(TokenKind::Number(x)) => DistElement::Number(*x),
                        _ => return Err(self.error("distribution element")),
                    };
                    self.pos += 1;
                    pairs.push((p, e));
                    if !self.eat(&TokenKind::Comma) {
                        break;
                    }
                }
                self.expect(TokenKind::RBrace, "`}`")?;
                Ok(Operand::Distribution(pairs))
            }
            _ => Err(self.error("operand")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsql::Comparator;

    const CASE_STUDY: &str = "SELECT cartulina.% FROM cartulina WHERE tono_cara FEQ $blanco THOLD 0.5 and\ntono_reverso FEQ $blanco THOLD 0.5;";

    #[test]
    fn case_study_query() {
        let q = parse_query(CASE_STUDY).unwrap();
        assert_eq!(
            q.items,
            vec![SelectItem::Wildcard {
                table: Some("cartulina".into())
            }]
        );
        assert_eq!(q.from, "cartulina");
        let Some(Predicate::And(l, r)) = &q.filter else {
            panic!("expected AND, got {:?}", q.filter)
        };
        for (side, col) in [(l, "tono_cara"), (r, "tono_reverso")] {
            let Predicate::Condition(c) = side.as_ref() else {
                panic!()
            };
            assert_eq!(c.column.column, col);
            assert_eq!(c.comparator, Comparator::Feq);
            assert_eq!(c.operand, Operand::Label("blanco".into()));
            assert_eq!(c.threshold, Some(0.5));
        }
    }

    #[test]
    fn no_where() {
        let q = parse_query("SELECT a FROM t").unwrap();
        assert!(q.filter.is_none());
        assert_eq!(q.items.len(), 1);
    }

    #[test]
    fn missing_operand() {
        let err = parse_query("SELECT a FROM t WHERE x FEQ").unwrap_err();
        assert!(err.to_string().contains("operand expected"), "{err}");
        assert_eq!(err.position(), Some(Position { line: 1, column: 28 }));
    }

    #[test]
    fn and_binds_tighter_than_or() {
        let q = parse_query("SELECT % FROM t WHERE a FEQ 1 OR b FEQ 2 AND c FEQ 3").unwrap();
        let Some(Predicate::Or(_, r)) = q.filter else { panic!() };
        assert!(matches!(*r, Predicate::And(..)));
        let q = parse_query("SELECT % FROM t WHERE (a FEQ 1 OR b FEQ 2) AND c FEQ 3").unwrap();
        assert!(matches!(q.filter, Some(Predicate::And(..))));
    }

    #[test]
    fn operand_literals() {
        let q = parse_query(
            "SELECT CDEG(x) FROM t WHERE x FEQ $[1,2,3,4] OR x FEQ [1,2] OR x FEQ #400±10 OR y FEQ {0.5/blanco, 1/cafe} OR y FEQ unknown",
        )
        .unwrap();
        let ops: Vec<_> = q
            .filter
            .as_ref()
            .unwrap()
            .conditions()
            .iter()
            .map(|c| c.operand.clone())
            .collect();
        assert_eq!(
            ops,
            vec![
                Operand::Trapezoid([1.0, 2.0, 3.0, 4.0]),
                Operand::Interval(1.0, 2.0),
                Operand::Approx(400.0, 10.0),
                Operand::Distribution(vec![
                    (0.5, DistElement::Name("blanco".into())),
                    (1.0, DistElement::Name("cafe".into()))
                ]),
                Operand::Unknown,
            ]
        );
    }

    #[test]
    fn threshold_range_and_trailing_tokens() {
        assert!(parse_query("SELECT a FROM t WHERE x FEQ $l THOLD 1.5").is_err());
        assert!(parse_query("SELECT a FROM t; SELECT").is_err());
        assert!(parse_query("SELECT a FROM t WHERE (x FEQ 1").is_err());
        assert!(parse_query("SELECT FROM t").is_err());
    }

    #[test]
    fn printer_round_trip() {
        for text in [
            CASE_STUDY,
            "SELECT a, t.b, CDEG(c) FROM t WHERE c FEQ #1±0.5 OR (d FEQ 2 OR e FEQ $x) AND f FEQ [1,3] THOLD 0",
            "SELECT % FROM t WHERE a FEQ 1 AND (b FEQ 2 AND c FEQ {0.3/x})",
        ] {
            let q = parse_query(text).unwrap();
            let printed = q.to_string();
            assert_eq!(parse_query(&printed).unwrap(), q, "{printed}");
        }
    }
}
