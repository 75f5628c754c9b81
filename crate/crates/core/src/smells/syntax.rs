//! Concrete syntax for the expression language.
//!
//! ```text
//! Exp   := "if" Exp "then" Exp "else" Exp | Cmp
//! Cmp   := Chain ("==" Chain)?
//! Chain := App (("++" | ":") Chain)?
//! App   := Name Atom | Atom
//! Atom  := Name | Int | "True" | "False" | "[" (Exp ("," Exp)*)? "]" | "(" Exp ")"
//! ```

use super::ast::{MExp, Op};
use crate::syntax::{is_ident_char, is_ident_start, Cursor, Pos, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    If,
    Then,
    Else,
    True,
    False,
    Ident(String),
    Int(i64),
    Append,
    Eq,
    Colon,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::If => "`if`".into(),
            Tok::Then => "`then`".into(),
            Tok::Else => "`else`".into(),
            Tok::True => "`True`".into(),
            Tok::False => "`False`".into(),
            Tok::Ident(s) => format!("name `{s}`"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Append => "`++`".into(),
            Tok::Eq => "`==`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
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
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let tok = if c.is_ascii_digit() || c == '-' {
            let negative = c == '-';
            if negative {
                cur.bump();
            }
            let digits = cur.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(SyntaxError::new(pos, "expected digits after `-`"));
            }
            let literal = if negative { format!("-{digits}") } else { digits };
            Tok::Int(
                literal
                    .parse()
                    .map_err(|_| SyntaxError::new(pos, "integer literal out of range"))?,
            )
        } else if is_ident_start(c) {
            match cur.take_while(|c| is_ident_char(c) || c == '\'').as_str() {
                "if" => Tok::If,
                "then" => Tok::Then,
                "else" => Tok::Else,
                "True" => Tok::True,
                "False" => Tok::False,
                other => Tok::Ident(other.to_string()),
            }
        } else {
            cur.bump();
            match c {
                '+' if cur.peek() == Some('+') => {
                    cur.bump();
                    Tok::Append
                }
                '=' if cur.peek() == Some('=') => {
                    cur.bump();
                    Tok::Eq
                }
                ':' => Tok::Colon,
                ',' => Tok::Comma,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(SyntaxError::new(pos, format!("unexpected character `{other}`")))
                }
            }
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

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, SyntaxError> {
        let (tok, pos) = &self.toks[self.at];
        Err(SyntaxError::new(
            *pos,
            format!("expected {expected}, found {}", tok.describe()),
        ))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&tok.describe())
        }
    }

    fn exp(&mut self) -> Result<MExp, SyntaxError> {
        if *self.peek() != Tok::If {
            return self.cmp();
        }
        self.bump();
        let c = self.exp()?;
        self.expect(Tok::Then)?;
        let t = self.exp()?;
        self.expect(Tok::Else)?;
        let e = self.exp()?;
        Ok(MExp::if_(c, t, e))
    }

    fn cmp(&mut self) -> Result<MExp, SyntaxError> {
        let lhs = self.chain()?;
        if *self.peek() != Tok::Eq {
            return Ok(lhs);
        }
        self.bump();
        let rhs = self.chain()?;
        if *self.peek() == Tok::Eq {
            return self.error("parentheses around a comparison operand");
        }
        Ok(MExp::infix(Op::Eq, lhs, rhs))
    }

    fn chain(&mut self) -> Result<MExp, SyntaxError> {
        let lhs = self.app()?;
        let op = match self.peek() {
            Tok::Append => Op::Append,
            Tok::Colon => Op::Cons,
            _ => return Ok(lhs),
        };
        self.bump();
        Ok(MExp::infix(op, lhs, self.chain()?))
    }

    fn app(&mut self) -> Result<MExp, SyntaxError> {
        let head = self.atom()?;
        match head {
            MExp::Var(f) if self.starts_atom() => Ok(MExp::Call(f, Box::new(self.atom()?))),
            other => Ok(other),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Ident(_) | Tok::Int(_) | Tok::True | Tok::False | Tok::LBracket | Tok::LParen
        )
    }

    fn atom(&mut self) -> Result<MExp, SyntaxError> {
        let e = match self.peek().clone() {
            Tok::Ident(n) => MExp::Var(n),
            Tok::Int(n) => MExp::IntLit(n),
            Tok::True => MExp::BoolLit(true),
            Tok::False => MExp::BoolLit(false),
            Tok::LBracket => {
                self.bump();
                let mut items = Vec::new();
                if *self.peek() != Tok::RBracket {
                    items.push(self.exp()?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        items.push(self.exp()?);
                    }
                }
                self.expect(Tok::RBracket)?;
                return Ok(MExp::ListLit(items));
            }
            Tok::LParen => {
                self.bump();
                let e = self.exp()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            _ => return self.error("an expression"),
        };
        self.bump();
        Ok(e)
    }
}

pub fn parse_m(text: &str) -> Result<MExp, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let e = p.exp()?;
    if *p.peek() != Tok::Eof {
        return p.error("end of input");
    }
    Ok(e)
}

pub fn pretty_m(e: &MExp) -> String {
    let mut out = String::new();
    write_exp(e, &mut out);
    out
}

fn write_exp(e: &MExp, out: &mut String) {
    match e {
        MExp::Var(n) => out.push_str(n),
        MExp::IntLit(n) => out.push_str(&n.to_string()),
        MExp::BoolLit(b) => out.push_str(if *b { "True" } else { "False" }),
        MExp::ListLit(xs) => {
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_exp(x, out);
            }
            out.push(']');
        }
        MExp::Infix(op, a, b) => {
            let (left_ok, right_ok) = match op {
                Op::Eq => (!matches!(**a, MExp::If(..) | MExp::Infix(Op::Eq, ..)), !matches!(**b, MExp::If(..) | MExp::Infix(Op::Eq, ..))),
                Op::Append | Op::Cons => (
                    !matches!(**a, MExp::If(..) | MExp::Infix(..)),
                    !matches!(**b, MExp::If(..) | MExp::Infix(Op::Eq, ..)),
                ),
            };
            write_wrapped(a, !left_ok, out);
            out.push(' ');
            out.push_str(op.symbol());
            out.push(' ');
            write_wrapped(b, !right_ok, out);
        }
        MExp::Call(f, a) => {
            out.push_str(f);
            out.push(' ');
            let atomic = matches!(**a, MExp::Var(_) | MExp::IntLit(_) | MExp::BoolLit(_) | MExp::ListLit(_));
            write_wrapped(a, !atomic, out);
        }
        MExp::If(c, t, f) => {
            out.push_str("if ");
            write_exp(c, out);
            out.push_str(" then ");
            write_exp(t, out);
            out.push_str(" else ");
            write_exp(f, out);
        }
    }
}

fn write_wrapped(e: &MExp, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
    }
    write_exp(e, out);
    if parens {
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            parse_m("[x] ++ xs").unwrap(),
            MExp::infix(Op::Append, MExp::ListLit(vec![MExp::var("x")]), MExp::var("xs"))
        );
        assert_eq!(
            parse_m("if b then True else False").unwrap(),
            MExp::if_(MExp::var("b"), MExp::BoolLit(true), MExp::BoolLit(false))
        );
        assert_eq!(
            parse_m("length xs == 0").unwrap(),
            MExp::infix(Op::Eq, MExp::call("length", MExp::var("xs")), MExp::IntLit(0))
        );
    }

    #[test]
    fn operator_structure() {
        assert_eq!(
            parse_m("a : b ++ c").unwrap(),
            MExp::infix(Op::Cons, MExp::var("a"), MExp::infix(Op::Append, MExp::var("b"), MExp::var("c")))
        );
        assert_eq!(parse_m("a : (b : bs)").unwrap(), parse_m("a : b : bs").unwrap());
        assert!(parse_m("a == b == c").is_err());
        assert!(parse_m("f x y").is_err());
        assert_eq!(parse_m("f -3").unwrap(), MExp::call("f", MExp::IntLit(-3)));
        assert_eq!(parse_m("[]").unwrap(), MExp::ListLit(vec![]));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_m("[1,\n  ]").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, col: 3 });
        assert!(parse_m("x = y").is_err());
        assert!(parse_m("- 1").is_err());
        assert!(parse_m("if a then b").is_err());
    }

    #[test]
    fn pretty_inserts_needed_parentheses() {
        let cases = [
            MExp::infix(Op::Append, MExp::infix(Op::Append, MExp::var("a"), MExp::var("b")), MExp::var("c")),
            MExp::infix(Op::Eq, MExp::infix(Op::Eq, MExp::var("a"), MExp::var("b")), MExp::var("c")),
            MExp::infix(Op::Cons, MExp::if_(MExp::var("c"), MExp::var("a"), MExp::var("b")), MExp::var("d")),
            MExp::call("f", MExp::call("g", MExp::var("x"))),
            MExp::if_(
                MExp::if_(MExp::var("a"), MExp::var("b"), MExp::var("c")),
                MExp::infix(Op::Eq, MExp::var("a"), MExp::var("b")),
                MExp::infix(Op::Cons, MExp::var("a"), MExp::var("b")),
            ),
            MExp::ListLit(vec![MExp::if_(MExp::var("a"), MExp::var("b"), MExp::var("c")), MExp::IntLit(-2)]),
        ];
        for e in cases {
            assert_eq!(parse_m(&pretty_m(&e)).unwrap(), e, "{}", pretty_m(&e));
        }
        assert_eq!(pretty_m(&parse_m("a : (b : bs)").unwrap()), "a : b : bs");
    }
}
