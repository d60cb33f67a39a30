//! Recursive-descent parser for the ASCII surface syntax, with Unicode
//! aliases accepted on input.
//!
//! Grammar:
//! ```text
//! formula := imp
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := neg ("&" neg)*
//! neg     := "~" neg | atom
//! atom    := ident | "bot" | "top" | "(" formula ")"
//! ```
//! An identifier starts with a lowercase letter, followed by letters, digits
//! or underscores. In schema mode a single uppercase letter is a
//! metavariable; formula mode rejects uppercase letters.

use std::fmt;

use thiserror::Error;

use crate::formula::{and, atom, imp, mv, neg, or, Formula, Schema};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    /// Uppercase single letters rejected.
    Formula,
    /// Uppercase single letters are metavariables.
    Schema,
}

impl fmt::Display for ParseMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseMode::Formula => write!(f, "formula"),
            ParseMode::Schema => write!(f, "schema"),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parse(text, ParseMode::Formula)
}

pub fn parse_schema(text: &str) -> Result<Schema, ParseError> {
    parse(text, ParseMode::Schema)
}

pub fn parse(text: &str, mode: ParseMode) -> Result<Formula, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        mode,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(ParseError {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let f = p.imp()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    mode: ParseMode,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn byte_offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.chars.last().map(|&(i, c)| i + c.len_utf8()).unwrap_or(0))
    }

    fn error(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.byte_offset(),
            msg: msg.to_string(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    /// Consume an arrow token: "->" or "→".
    fn eat_arrow(&mut self) -> bool {
        match self.peek() {
            Some('→') => {
                self.pos += 1;
                true
            }
            Some('-') => {
                if self.chars.get(self.pos + 1).map(|&(_, c)| c) == Some('>') {
                    self.pos += 2;
                    true
                } else {
                    false
                }
            }
            _ => false,
        }
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let left = self.or()?;
        self.skip_ws();
        if self.eat_arrow() {
            self.skip_ws();
            let right = self.imp()?; // right-associative
            Ok(imp(left, right))
        } else {
            Ok(left)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.and()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('|') | Some('∨') => {
                    self.pos += 1;
                    self.skip_ws();
                    let right = self.and()?;
                    left = or(left, right); // left-associative
                }
                _ => return Ok(left),
            }
        }
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.negation()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('&') | Some('∧') => {
                    self.pos += 1;
                    self.skip_ws();
                    let right = self.negation()?;
                    left = and(left, right);
                }
                _ => return Ok(left),
            }
        }
    }

    fn negation(&mut self) -> Result<Formula, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('~') | Some('¬') => {
                self.pos += 1;
                Ok(neg(self.negation()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("unexpected end of input, expected a formula")),
            Some('(') => {
                self.pos += 1;
                let f = self.imp()?;
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.pos += 1;
                    Ok(f)
                } else {
                    Err(self.error("expected ')'"))
                }
            }
            Some('⊥') => {
                self.pos += 1;
                Ok(Formula::Bottom)
            }
            Some('⊤') => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let name = self.ident();
                match name.as_str() {
                    "bot" => Ok(Formula::Bottom),
                    "top" => Ok(Formula::Top),
                    _ => Ok(atom(&name)),
                }
            }
            Some(c) if c.is_ascii_uppercase() => {
                let start = self.byte_offset();
                let name = self.ident();
                match self.mode {
                    ParseMode::Schema => {
                        if name.len() == 1 {
                            Ok(mv(&name))
                        } else {
                            Err(ParseError {
                                pos: start,
                                msg: format!(
                                    "metavariables are single uppercase letters, got '{name}'"
                                ),
                            })
                        }
                    }
                    ParseMode::Formula => Err(ParseError {
                        pos: start,
                        msg: format!(
                            "uppercase identifier '{name}' is only allowed in schema mode"
                        ),
                    }),
                }
            }
            Some(c) => Err(self.error(&format!("unknown symbol '{c}'"))),
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        s
    }
}
