//! Concrete syntax for Let programs.
//!
//! ```text
//! Program := "let" Decl ((";" | newline) Decl)* "in" Exp
//! Decl    := Name "=" (Program | Exp)
//! Exp     := Exp ("+" | "-") Unary | Unary
//! Unary   := "-" Unary | Int | Name | "(" Exp ")"
//! ```
//!
//! A minus sign directly applied to an integer literal is read as a negative
//! constant; `-(3)` is the negation of `3`.

use super::ast::{Decl, Exp, Let, List, Root};
use crate::syntax::{is_ident_char, is_ident_start, Cursor, Pos, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Let,
    In,
    Ident(String),
    Int(u64),
    Plus,
    Minus,
    LParen,
    RParen,
    Equals,
    Semi,
    Newline,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Let => "`let`".into(),
            Tok::In => "`in`".into(),
            Tok::Ident(s) => format!("name `{s}`"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        let pos = cur.pos();
        let Some(c) = cur.peek() else {
            out.push((Tok::Eof, pos));
            return Ok(out);
        };
        let tok = match c {
            ' ' | '\t' | '\r' => {
                cur.bump();
                continue;
            }
            '\n' => {
                cur.bump();
                Tok::Newline
            }
            '+' | '-' | '(' | ')' | '=' | ';' => {
                cur.bump();
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '=' => Tok::Equals,
                    _ => Tok::Semi,
                }
            }
            c if c.is_ascii_digit() => {
                let digits = cur.take_while(|c| c.is_ascii_digit());
                let n = digits
                    .parse::<u64>()
                    .map_err(|_| SyntaxError::new(pos, "integer literal out of range"))?;
                Tok::Int(n)
            }
            c if is_ident_start(c) => match cur.take_while(is_ident_char).as_str() {
                "let" => Tok::Let,
                "in" => Tok::In,
                other => Tok::Ident(other.to_string()),
            },
            other => return Err(SyntaxError::new(pos, format!("unexpected character `{other}`"))),
        };
        out.push((tok, pos));
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, SyntaxError> {
        Err(SyntaxError::new(
            self.pos(),
            format!("expected {expected}, found {}", self.peek().describe()),
        ))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(expected)
        }
    }

    fn skip_newlines(&mut self) {
        while *self.peek() == Tok::Newline {
            self.bump();
        }
    }

    fn program(&mut self) -> Result<Let, SyntaxError> {
        self.expect(Tok::Let, "`let`")?;
        self.skip_newlines();
        let mut decls = vec![self.decl()?];
        loop {
            match self.peek() {
                Tok::Semi => {
                    self.bump();
                    self.skip_newlines();
                    decls.push(self.decl()?);
                }
                Tok::Newline => {
                    self.skip_newlines();
                    if *self.peek() == Tok::In {
                        break;
                    }
                    decls.push(self.decl()?);
                }
                _ => break,
            }
        }
        self.expect(Tok::In, "`in` or another declaration")?;
        self.skip_newlines();
        let body = self.exp()?;
        Ok(Let::new(List::from_decls(decls), body))
    }

    fn decl(&mut self) -> Result<Decl, SyntaxError> {
        let name = match self.peek() {
            Tok::Ident(n) => n.clone(),
            _ => return self.error("a declaration"),
        };
        self.bump();
        self.expect(Tok::Equals, "`=`")?;
        self.skip_newlines();
        if *self.peek() == Tok::Let {
            Ok(Decl::Nested(name, self.program()?))
        } else {
            Ok(Decl::Assign(name, self.exp()?))
        }
    }

    fn exp(&mut self) -> Result<Exp, SyntaxError> {
        let mut acc = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => Exp::add,
                Tok::Minus => Exp::sub,
                _ => return Ok(acc),
            };
            self.bump();
            self.skip_newlines();
            acc = op(acc, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Exp, SyntaxError> {
        match self.peek().clone() {
            Tok::Minus => {
                let pos = self.pos();
                self.bump();
                if let Tok::Int(n) = *self.peek() {
                    self.bump();
                    let v = i64::try_from(-i128::from(n))
                        .map_err(|_| SyntaxError::new(pos, "integer literal out of range"))?;
                    return Ok(Exp::Const(v));
                }
                Ok(Exp::neg(self.unary()?))
            }
            Tok::Int(n) => {
                let pos = self.pos();
                self.bump();
                i64::try_from(n)
                    .map(Exp::Const)
                    .map_err(|_| SyntaxError::new(pos, "integer literal out of range"))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Exp::Var(name))
            }
            Tok::LParen => {
                self.bump();
                self.skip_newlines();
                let e = self.exp()?;
                self.skip_newlines();
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => self.error("an expression"),
        }
    }
}

pub fn parse(text: &str) -> Result<Root, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    p.skip_newlines();
    let l = p.program()?;
    p.skip_newlines();
    if *p.peek() != Tok::Eof {
        return p.error("end of input");
    }
    Ok(Root(l))
}

/// Parses a bare expression.
pub fn parse_exp(text: &str) -> Result<Exp, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let e = p.exp()?;
    p.skip_newlines();
    if *p.peek() != Tok::Eof {
        return p.error("end of input");
    }
    Ok(e)
}

/// Canonical layout: one declaration per line, continuation lines of a
/// block at nesting depth `d` indented `2d + 2` spaces and its `in` at `2d`.
pub fn pretty(root: &Root) -> String {
    let mut out = String::new();
    pretty_let(&root.0, 0, &mut out);
    out
}

fn pretty_let(l: &Let, depth: usize, out: &mut String) {
    out.push_str("let");
    for (i, d) in l.decls.decls().iter().enumerate() {
        if i == 0 {
            out.push(' ');
        } else {
            out.push('\n');
            out.push_str(&" ".repeat(2 * depth + 2));
        }
        out.push_str(d.name());
        out.push_str(" = ");
        match d {
            Decl::Assign(_, e) => pretty_exp_into(e, out),
            Decl::Nested(_, inner) => pretty_let(inner, depth + 1, out),
        }
    }
    out.push('\n');
    out.push_str(&" ".repeat(2 * depth));
    out.push_str("in ");
    pretty_exp_into(&l.body, out);
}

pub fn pretty_exp(e: &Exp) -> String {
    let mut out = String::new();
    pretty_exp_into(e, &mut out);
    out
}

fn pretty_exp_into(e: &Exp, out: &mut String) {
    match e {
        Exp::Add(a, b) | Exp::Sub(a, b) => {
            pretty_exp_into(a, out);
            out.push_str(if matches!(e, Exp::Add(..)) { " + " } else { " - " });
            if matches!(**b, Exp::Add(..) | Exp::Sub(..)) {
                out.push('(');
                pretty_exp_into(b, out);
                out.push(')');
            } else {
                pretty_exp_into(b, out);
            }
        }
        Exp::Neg(inner) => {
            out.push('-');
            match &**inner {
                Exp::Neg(_) | Exp::Var(_) => pretty_exp_into(inner, out),
                _ => {
                    out.push('(');
                    pretty_exp_into(inner, out);
                    out.push(')');
                }
            }
        }
        Exp::Var(n) => out.push_str(n),
        Exp::Const(n) => out.push_str(&n.to_string()),
    }
}
