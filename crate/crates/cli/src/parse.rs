//! Hand-written recursive descent parser for the expression language.
//!
//! ```text
//! sum  := prod (("+" | "-") prod)*
//! prod := atom ("*" atom)* | atom ("<" | ">") atom
//! atom := name | integer | "-" atom | "(" sum ")"
//!       | "e(" sum ")" | "e'(" sum ")" | "L(" sum ")"
//!       | "brace(" sum ("," sum)* ";" sum ")" | "prelie(" sum "," sum ")"
//! ```
//!
//! `≺` and `≻` are accepted as spellings of `<` and `>`.

use std::fmt;

use dendexp_core::Coeff;

use crate::expr::Expr;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub note: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if let Some(note) = &self.note {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(String),
    EPrime,
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Lt,
    Gt,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("`{n}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::EPrime => "`e'`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Gt => "`>`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0 };
    let e = p.sum()?;
    match p.peek() {
        Tok::Eof => Ok(e),
        t => Err(p.error_here(format!("unexpected {}", t.describe()))),
    }
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
    (line, column)
}

fn error_at(src: &str, offset: usize, message: String, note: Option<String>) -> ParseError {
    let (line, column) = position(src, offset);
    ParseError {
        line,
        column,
        message,
        note,
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let name = &src[i..end];
            if name == "e" && matches!(chars.peek(), Some(&(_, '\''))) {
                chars.next();
                out.push((Tok::EPrime, i, end + 1));
            } else {
                out.push((Tok::Name(name.to_string()), i, end));
            }
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    end = j + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            if let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphabetic() {
                    return Err(error_at(
                        src,
                        j,
                        format!("unexpected `{d}` after integer literal"),
                        Some("generator names start with a letter".into()),
                    ));
                }
            }
            out.push((Tok::Int(src[i..end].to_string()), i, end));
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '<' | '≺' => Tok::Lt,
            '>' | '≻' => Tok::Gt,
            _ => {
                return Err(error_at(
                    src,
                    i,
                    format!("unexpected character `{c}`"),
                    None,
                ));
            }
        };
        chars.next();
        out.push((tok, i, i + c.len_utf8()));
    }
    out.push((Tok::Eof, src.len(), src.len()));
    Ok(out)
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn prev_end(&self) -> usize {
        self.toks[self.pos - 1].2
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: String) -> ParseError {
        error_at(self.src, self.offset(), message, None)
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let start = self.offset();
        let mut acc = self.atom()?;
        let mut last: Option<Tok> = None;
        let mut mid_start = start;
        loop {
            let op = self.peek().clone();
            if !matches!(op, Tok::Star | Tok::Lt | Tok::Gt) {
                return Ok(acc);
            }
            if let Some(prev) = &last {
                if matches!(op, Tok::Lt | Tok::Gt) || matches!(prev, Tok::Lt | Tok::Gt) {
                    let offending = if matches!(prev, Tok::Lt | Tok::Gt) {
                        prev
                    } else {
                        &op
                    };
                    return Err(self.chain_error(offending == &Tok::Lt, start, mid_start));
                }
            }
            self.bump();
            let right_start = self.offset();
            let rhs = self.atom()?;
            acc = match op {
                Tok::Star => Expr::Mul(Box::new(acc), Box::new(rhs)),
                Tok::Lt => Expr::Prec(Box::new(acc), Box::new(rhs)),
                _ => Expr::Succ(Box::new(acc), Box::new(rhs)),
            };
            last = Some(op);
            mid_start = right_start;
        }
    }

    /// Error at the operator under the cursor, which continues the product
    /// `src[start..]` whose last operand begins at `mid_start`.
    fn chain_error(&mut self, prec: bool, start: usize, mid_start: usize) -> ParseError {
        let symbol = if prec { "≺" } else { "≻" };
        let op_offset = self.offset();
        self.bump();
        let right_start = self.offset();
        // The right operand is parsed only to quote it in the suggestion.
        let note = match self.atom() {
            Ok(_) => {
                let src = self.src;
                let left = src[start..op_offset].trim_end();
                let head = &src[start..mid_start];
                let mid = src[mid_start..op_offset].trim_end();
                let op = src[op_offset..right_start].trim();
                let right = &src[right_start..self.prev_end()];
                format!("write `({left}){op}{right}` or `{head}({mid}{op}{right})`")
            }
            Err(_) => "add parentheses around one of the products".to_string(),
        };
        error_at(
            self.src,
            op_offset,
            format!("{symbol} is non-associative; parenthesize"),
            Some(note),
        )
    }

    fn call_args(&mut self) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let e = self.sum()?;
        self.expect(Tok::RParen)?;
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let call = matches!(
            self.toks[(self.pos + 1).min(self.toks.len() - 1)].0,
            Tok::LParen
        );
        match self.bump() {
            Tok::Minus => Ok(Expr::Neg(Box::new(self.atom()?))),
            Tok::Int(text) => Ok(Expr::Int(text.parse::<Coeff>().expect("digits parse"))),
            Tok::EPrime => Ok(Expr::ExpR(Box::new(self.call_args()?))),
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Name(name) if call => match name.as_str() {
                "e" => Ok(Expr::ExpL(Box::new(self.call_args()?))),
                "L" => Ok(Expr::Log(Box::new(self.call_args()?))),
                "brace" => {
                    self.expect(Tok::LParen)?;
                    let mut xs = vec![self.sum()?];
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        xs.push(self.sum()?);
                    }
                    self.expect(Tok::Semi)?;
                    let y = self.sum()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Brace(xs, Box::new(y)))
                }
                "prelie" => {
                    self.expect(Tok::LParen)?;
                    let a = self.sum()?;
                    self.expect(Tok::Comma)?;
                    let b = self.sum()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::PreLie(Box::new(a), Box::new(b)))
                }
                _ => {
                    self.pos -= 1;
                    Err(ParseError {
                        note: Some("the functions are e, e', L, brace and prelie".into()),
                        ..self.error_here(format!("unknown function `{name}`"))
                    })
                }
            },
            Tok::Name(name) => Ok(Expr::Gen(name)),
            t => {
                if t != Tok::Eof {
                    self.pos -= 1;
                }
                Err(self.error_here(format!("expected an operand, found {}", t.describe())))
            }
        }
    }
}
