use std::fmt;

use super::{FsqlError, Position};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keyword {
    Select,
    From,
    Where,
    And,
    Or,
    Thold,
    Cdeg,
}

/// Fuzzy comparators. Only FEQ is defined; the class leaves room for more.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparator {
    Feq,
}

impl fmt::Display for Comparator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparator::Feq => f.write_str("FEQ"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Keyword(Keyword),
    Comparator(Comparator),
    Ident(String),
    /// `$name`
    Label(String),
    Number(f64),
    Dot,
    Comma,
    Percent,
    LParen,
    RParen,
    Semicolon,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Slash,
    Hash,
    PlusMinus,
    /// `$` directly followed by `[`
    Dollar,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Keyword(k) => write!(f, "{}", format!("{k:?}").to_uppercase()),
            TokenKind::Comparator(c) => write!(f, "{c}"),
            TokenKind::Ident(s) => write!(f, "identifier `{s}`"),
            TokenKind::Label(s) => write!(f, "label `${s}`"),
            TokenKind::Number(x) => write!(f, "number {x}"),
            TokenKind::Dot => f.write_str("`.`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Percent => f.write_str("`%`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::Semicolon => f.write_str("`;`"),
            TokenKind::LBracket => f.write_str("`[`"),
            TokenKind::RBracket => f.write_str("`]`"),
            TokenKind::LBrace => f.write_str("`{`"),
            TokenKind::RBrace => f.write_str("`}`"),
            TokenKind::Slash => f.write_str("`/`"),
            TokenKind::Hash => f.write_str("`#`"),
            TokenKind::PlusMinus => f.write_str("`±`"),
            TokenKind::Dollar => f.write_str("`$`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Position,
}

fn keyword(word: &str) -> Option<TokenKind> {
    Some(match word.to_ascii_uppercase().as_str() {
        "SELECT" => TokenKind::Keyword(Keyword::Select),
        "FROM" => TokenKind::Keyword(Keyword::From),
        "WHERE" => TokenKind::Keyword(Keyword::Where),
        "AND" => TokenKind::Keyword(Keyword::And),
        "OR" => TokenKind::Keyword(Keyword::Or),
        "THOLD" => TokenKind::Keyword(Keyword::Thold),
        "CDEG" => TokenKind::Keyword(Keyword::Cdeg),
        "FEQ" => TokenKind::Comparator(Comparator::Feq),
        _ => return None,
    })
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits FSQL text into tokens. Keywords are case-insensitive; positions
/// are 1-based line/column in characters.
pub fn tokenize(text: &str) -> Result<Vec<Token>, FsqlError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Position { line, column: col };
        let start = i;
        let single = match c {
            '.' if !chars.get(i + 1).is_some_and(char::is_ascii_digit) => Some(TokenKind::Dot),
            ',' => Some(TokenKind::Comma),
            '%' => Some(TokenKind::Percent),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ';' => Some(TokenKind::Semicolon),
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            '{' => Some(TokenKind::LBrace),
            '}' => Some(TokenKind::RBrace),
            '/' => Some(TokenKind::Slash),
            '#' => Some(TokenKind::Hash),
            '±' => Some(TokenKind::PlusMinus),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token { kind, pos });
            i += 1;
        } else if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        } else if c.is_whitespace() {
            i += 1;
        } else if c == '-' && chars.get(i + 1) == Some(&'-') {
            // line comment
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c.is_ascii_digit()
            || (c == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit))
            || (c == '-' && chars.get(i + 1).is_some_and(|n| n.is_ascii_digit() || *n == '.'))
        {
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let lexeme: String = chars[start..i].iter().collect();
            let value = lexeme
                .parse::<f64>()
                .map_err(|_| FsqlError::lex(pos, format!("malformed number `{lexeme}`")))?;
            tokens.push(Token {
                kind: TokenKind::Number(value),
                pos,
            });
        } else if is_ident_start(c) {
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let kind = keyword(&word).unwrap_or(TokenKind::Ident(word));
            tokens.push(Token { kind, pos });
        } else if c == '$' {
            if chars.get(i + 1) == Some(&'[') {
                tokens.push(Token {
                    kind: TokenKind::Dollar,
                    pos,
                });
                i += 1;
            } else if chars.get(i + 1).copied().is_some_and(is_ident_start) {
                i += 1;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let name: String = chars[start + 1..i].iter().collect();
                tokens.push(Token {
                    kind: TokenKind::Label(name),
                    pos,
                });
            } else {
                return Err(FsqlError::lex(pos, "`$` must be followed by a label name or `[`"));
            }
        } else {
            return Err(FsqlError::lex(pos, format!("illegal character `{c}`")));
        }
        col += i - start;
    }
    Ok(tokens)
}
