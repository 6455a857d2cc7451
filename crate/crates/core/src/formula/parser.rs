//! Recursive-descent parser for the formula grammar.
//!
//! ```text
//! formula := iff
//! iff     := impl ("<->" impl)*
//! impl    := or ("->" impl | "<-" or)?
//! or      := xor ("|" xor)*
//! xor     := and ("^" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | atom
//! atom    := IDENT | "0" | "1" | "(" formula ")"
//! ```
//!
//! `->` is right-associative. Mixing `->` and `<-` in one chain without
//! parentheses is rejected. Unicode aliases `¬ ∧ ∨ ⊕ → ← ↔` are accepted.

use super::ast::{BinOp, Formula};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Const(bool),
    LParen,
    RParen,
    Not,
    Op(BinOp),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Const(true) => "`1`".into(),
            Tok::Const(false) => "`0`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Not => "`!`".into(),
            Tok::Op(op) => format!("`{}`", op.symbol()),
            Tok::End => "end of input".into(),
        }
    }
}

const ATOM_START: &[&str] = &["identifier", "`0`", "`1`", "`(`", "`!`"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().expect("non-empty remainder");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let (tok, len) = match c {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '!' => (Tok::Not, 1),
            '&' => (Tok::Op(BinOp::And), 1),
            '|' => (Tok::Op(BinOp::Or), 1),
            '^' => (Tok::Op(BinOp::Xor), 1),
            '0' => (Tok::Const(false), 1),
            '1' => (Tok::Const(true), 1),
            '¬' => (Tok::Not, c.len_utf8()),
            '∧' => (Tok::Op(BinOp::And), c.len_utf8()),
            '∨' => (Tok::Op(BinOp::Or), c.len_utf8()),
            '⊕' => (Tok::Op(BinOp::Xor), c.len_utf8()),
            '→' => (Tok::Op(BinOp::Implies), c.len_utf8()),
            '←' => (Tok::Op(BinOp::Converse), c.len_utf8()),
            '↔' => (Tok::Op(BinOp::Iff), c.len_utf8()),
            '-' if rest.starts_with("->") => (Tok::Op(BinOp::Implies), 2),
            '<' if rest.starts_with("<->") => (Tok::Op(BinOp::Iff), 3),
            '<' if rest.starts_with("<-") => (Tok::Op(BinOp::Converse), 2),
            c if c.is_ascii_alphabetic() => {
                let len = bytes[i..]
                    .iter()
                    .position(|b| !(b.is_ascii_alphanumeric() || *b == b'_'))
                    .unwrap_or(bytes.len() - i);
                (Tok::Ident(text[i..i + len].to_string()), len)
            }
            other => {
                return Err(Error::Syntax {
                    offset: i,
                    expected: vec!["identifier", "operator", "`(`", "`)`"],
                    found: format!("character `{other}`"),
                })
            }
        };
        out.push((i, tok));
        i += len;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    /// Offsets of currently open parentheses.
    open: Vec<usize>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].1.clone();
        if tok != Tok::End {
            self.pos += 1;
        }
        tok
    }

    fn unexpected(&self, expected: &[&'static str]) -> Error {
        match self.peek() {
            Tok::End if !self.open.is_empty() => Error::UnbalancedParen {
                offset: *self.open.last().expect("open paren"),
            },
            Tok::RParen if self.open.is_empty() => Error::UnbalancedParen {
                offset: self.offset(),
            },
            tok => Error::Syntax {
                offset: self.offset(),
                expected: expected.to_vec(),
                found: tok.describe(),
            },
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::Op(BinOp::Iff) {
            self.bump();
            let rhs = self.implication()?;
            lhs = Formula::binary(BinOp::Iff, lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        match self.peek() {
            Tok::Op(BinOp::Implies) => {
                self.bump();
                let rhs = self.implication_chain()?;
                Ok(Formula::binary(BinOp::Implies, lhs, rhs))
            }
            Tok::Op(BinOp::Converse) => {
                self.bump();
                let rhs = self.or()?;
                if let Tok::Op(BinOp::Implies | BinOp::Converse) = self.peek() {
                    return Err(Error::AmbiguousImplication {
                        offset: self.offset(),
                    });
                }
                Ok(Formula::binary(BinOp::Converse, lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    // Right operand of `->`: further `->` nest to the right, `<-` is ambiguous.
    fn implication_chain(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        match self.peek() {
            Tok::Op(BinOp::Implies) => {
                self.bump();
                let rhs = self.implication_chain()?;
                Ok(Formula::binary(BinOp::Implies, lhs, rhs))
            }
            Tok::Op(BinOp::Converse) => Err(Error::AmbiguousImplication {
                offset: self.offset(),
            }),
            _ => Ok(lhs),
        }
    }

    fn left_assoc(&mut self, op: BinOp, next: fn(&mut Self) -> Result<Formula>) -> Result<Formula> {
        let mut lhs = next(self)?;
        while *self.peek() == Tok::Op(op) {
            self.bump();
            let rhs = next(self)?;
            lhs = Formula::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        self.left_assoc(BinOp::Or, Self::xor)
    }

    fn xor(&mut self) -> Result<Formula> {
        self.left_assoc(BinOp::Xor, Self::and)
    }

    fn and(&mut self) -> Result<Formula> {
        self.left_assoc(BinOp::And, Self::unary)
    }

    fn unary(&mut self) -> Result<Formula> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Tok::Const(value) => {
                self.bump();
                Ok(if value { Formula::True } else { Formula::False })
            }
            Tok::LParen => {
                self.open.push(self.offset());
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(
                        self.unexpected(&["`&`", "`|`", "`^`", "`->`", "`<-`", "`<->`", "`)`"])
                    );
                }
                self.bump();
                self.open.pop();
                Ok(inner)
            }
            _ => Err(self.unexpected(ATOM_START)),
        }
    }
}

/// Parses a formula from text.
pub fn parse(text: &str) -> Result<Formula> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        open: Vec::new(),
    };
    let formula = parser.iff()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected(&[
            "`&`",
            "`|`",
            "`^`",
            "`->`",
            "`<-`",
            "`<->`",
            "end of input",
        ]));
    }
    Ok(formula)
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
