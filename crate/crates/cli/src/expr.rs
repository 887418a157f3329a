//! Expression syntax shared by every subcommand.
//!
//! `x` is the variable of rational-coefficient input, `t` the time variable
//! of trigonometric input. Multiplication is always explicit and `^` takes an
//! integer literal, optionally negative and parenthesized: `x^(-2)`.

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Sqrt,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    I,
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Func, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                it.next();
            }
            out.push((pos, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                s.push(d);
                it.next();
            }
            out.push((pos, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            it.next();
        } else {
            return Err(ParseError {
                position: pos,
                expected: vec!["expression".into()],
                found: format!("'{c}'"),
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

const PRIMARY: [&str; 9] = ["number", "'i'", "'x'", "'t'", "'sin'", "'cos'", "'exp'", "'sqrt'", "'('"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            position: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.postfix()
        }
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.primary()?;
        while self.eat('^') {
            base = Expr::Pow(Box::new(base), self.exponent()?);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let Tok::Num(n) = self.peek().clone() else {
            return Err(self.error(if neg || paren { &["integer"] } else { &["integer", "'-'", "'('"] }));
        };
        let at = self.pos();
        self.at += 1;
        let n: i64 = n.try_into().map_err(|_| ParseError {
            position: at,
            expected: vec!["exponent fitting in 64 bits".into()],
            found: "larger integer".into(),
        })?;
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -n } else { n })
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.at += 1;
                Ok(Expr::Int(n))
            }
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(s) => {
                let f = match s.as_str() {
                    "i" => {
                        self.at += 1;
                        return Ok(Expr::I);
                    }
                    "x" | "t" => {
                        self.at += 1;
                        return Ok(Expr::Var(s.chars().next().unwrap()));
                    }
                    "sin" => Func::Sin,
                    "cos" => Func::Cos,
                    "exp" => Func::Exp,
                    "sqrt" => Func::Sqrt,
                    _ => return Err(self.error(&PRIMARY)),
                };
                self.at += 1;
                self.expect('(')?;
                let arg_pos = self.pos();
                let arg = self.expr()?;
                self.expect(')')?;
                let ok = match f {
                    Func::Sqrt => crate::convert::constant_rational(&arg).is_some(),
                    _ => crate::convert::linear_in_t(&arg).is_some(),
                };
                if !ok {
                    let expected = if f == Func::Sqrt { "rational constant" } else { "c*t with c a (Gaussian) rational" };
                    return Err(ParseError {
                        position: arg_pos,
                        expected: vec![expected.into()],
                        found: format!("'{}'", print(&arg)),
                    });
                }
                Ok(Expr::Call(f, Box::new(arg)))
            }
            _ => Err(self.error(&PRIMARY)),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"]));
    }
    Ok(e)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn write_at(e: &Expr, min: u8, out: &mut String) {
    let paren = prec(e) < min;
    if paren {
        out.push('(');
    }
    match e {
        Expr::Int(n) => out.push_str(&n.to_string()),
        Expr::I => out.push('i'),
        Expr::Var(v) => out.push(*v),
        Expr::Neg(a) => {
            out.push('-');
            write_at(a, 3, out);
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            write_at(a, 1, out);
            out.push(if matches!(e, Expr::Add(..)) { '+' } else { '-' });
            write_at(b, 2, out);
        }
        Expr::Mul(a, b) | Expr::Div(a, b) => {
            write_at(a, 2, out);
            out.push(if matches!(e, Expr::Mul(..)) { '*' } else { '/' });
            write_at(b, 3, out);
        }
        Expr::Pow(a, n) => {
            write_at(a, 5, out);
            if *n < 0 {
                out.push_str(&format!("^({n})"));
            } else {
                out.push_str(&format!("^{n}"));
            }
        }
        Expr::Call(f, a) => {
            out.push_str(f.name());
            out.push('(');
            write_at(a, 0, out);
            out.push(')');
        }
    }
    if paren {
        out.push(')');
    }
}

/// Canonical text with minimal parentheses; `parse(&print(e)) == e`.
pub fn print(e: &Expr) -> String {
    let mut s = String::new();
    write_at(e, 0, &mut s);
    s
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}
