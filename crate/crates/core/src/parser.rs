//! Text syntax for game expressions.
//!
//! ```text
//! expr  := sum
//! sum   := osum ( "+" osum )*
//! osum  := atom ( ( ":" | ":" "[" expr "]" ) atom )*
//! atom  := "*" nat | "0" | "(" expr ")"
//! ```
//!
//! Both operator levels associate to the left and `:` binds tighter than
//! `+`, so `*1 + *2 : *3` is `*1 + (*2 : *3)` and `*1 : *2 : *3` is
//! `(*1 : *2) : *3`. `G :[S] H` is the ordinal sum of `G` and `H` with
//! substitution `S`. Whitespace is ignored. This is format version 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::Expr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub byte_offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.byte_offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(
            "unexpected trailing input",
            &["\"+\"", "\":\"", "end of input"],
        ));
    }
    Ok(e)
}

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: &str, expected: &[&str]) -> ParseError {
        ParseError {
            byte_offset: self.pos,
            message: message.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.osum()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            let right = self.osum()?;
            left = Expr::sum(left, right);
        }
        Ok(left)
    }

    fn osum(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.atom()?;
        while self.peek() == Some(b':') {
            self.pos += 1;
            if self.peek() == Some(b'[') {
                self.pos += 1;
                let subst = self.expr()?;
                if self.peek() != Some(b']') {
                    return Err(self.error("unclosed substitution", &["\"]\""]));
                }
                self.pos += 1;
                let right = self.atom()?;
                left = Expr::subst(left, right, subst);
            } else {
                let right = self.atom()?;
                left = Expr::ordinal(left, right);
            }
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                self.skip_ws();
                Ok(Expr::Nimber(self.nat()?))
            }
            Some(b'0') => {
                let start = self.pos;
                let n = self.nat()?;
                if n != 0 || self.pos - start != 1 {
                    self.pos = start;
                    return Err(self.error("bare numbers other than 0 are not games", &["\"*\""]));
                }
                Ok(Expr::Nimber(0))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("unclosed parenthesis", &["\")\""]));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => Err(self.error("unexpected character", &["\"*\"", "\"0\"", "\"(\""])),
            None => Err(self.error("unexpected end of input", &["\"*\"", "\"0\"", "\"(\""])),
        }
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("missing number", &["digit"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| ParseError {
            byte_offset: start,
            message: "number does not fit in 64 bits".into(),
            expected: Vec::new(),
        })
    }
}

/// Renders `e` with the fewest parentheses that parse back to the same
/// tree. Explicit game leaves have no text form.
pub fn render(e: &Expr) -> Result<String> {
    if e.has_explicit() {
        return Err(Error::ExplicitLeaf);
    }
    Ok(render_lossy(e))
}

/// Like [`render`], but writes explicit leaves as `#id`.
pub(crate) fn render_lossy(e: &Expr) -> String {
    let mut out = String::new();
    write_sum(e, &mut out);
    out
}

fn write_sum(e: &Expr, out: &mut String) {
    match e {
        Expr::Sum(a, b) => {
            write_sum(a, out);
            out.push_str(" + ");
            write_osum(b, out);
        }
        _ => write_osum(e, out),
    }
}

fn write_osum(e: &Expr, out: &mut String) {
    match e {
        Expr::OrdinalSum(a, b) => {
            write_osum(a, out);
            out.push_str(" : ");
            write_atom(b, out);
        }
        Expr::OrdinalSumSub(a, b, s) => {
            write_osum(a, out);
            out.push_str(" :[");
            write_sum(s, out);
            out.push_str("] ");
            write_atom(b, out);
        }
        _ => write_atom(e, out),
    }
}

fn write_atom(e: &Expr, out: &mut String) {
    match e {
        Expr::Nimber(n) => {
            out.push('*');
            out.push_str(&n.to_string());
        }
        Expr::Explicit(g) => out.push_str(&g.to_string()),
        _ => {
            out.push('(');
            write_sum(e, out);
            out.push(')');
        }
    }
}
