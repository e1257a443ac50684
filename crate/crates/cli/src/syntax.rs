//! Tokens, syntax tree, recursive-descent parser and pretty-printer for
//! session scripts.

use std::fmt;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, CliError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            let n = s
                .parse()
                .map_err(|_| CliError::syntax(pos, format!("integer '{s}' out of range")))?;
            out.push((Tok::Int(n), pos));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else if "=()[],;+-*^".contains(c) {
            chars.next();
            col += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(CliError::syntax(pos, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

/// Expressions: polynomial arithmetic, names, calls and lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
    Call(Call),
    List(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arg {
    pub key: Option<String>,
    pub value: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Call {
    pub name: String,
    pub args: Vec<Arg>,
}

impl Call {
    pub fn positional(&self) -> impl Iterator<Item = &Expr> {
        self.args
            .iter()
            .filter(|a| a.key.is_none())
            .map(|a| &a.value)
    }

    pub fn keyword(&self, key: &str) -> Option<&Expr> {
        self.args
            .iter()
            .find(|a| a.key.as_deref() == Some(key))
            .map(|a| &a.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindingKind {
    Ring,
    Ideal,
    Module,
}

impl BindingKind {
    pub fn keyword(self) -> &'static str {
        match self {
            BindingKind::Ring => "ring",
            BindingKind::Ideal => "ideal",
            BindingKind::Module => "module",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Bind {
        kind: BindingKind,
        name: String,
        def: Call,
    },
    Show(Call),
    Check(Call),
}

/// Parsed statements with their source positions. Equality ignores
/// positions.
#[derive(Debug, Clone, Default)]
pub struct Program {
    pub statements: Vec<Statement>,
    pub positions: Vec<Pos>,
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

impl Eq for Program {}

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

    fn unexpected<T>(&self, wanted: &str) -> Result<T, CliError> {
        Err(CliError::syntax(
            self.pos(),
            format!("expected {wanted}, found {}", self.peek()),
        ))
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.unexpected(&format!("'{c}'"))
        }
    }

    fn ident(&mut self) -> Result<String, CliError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.unexpected("a name"),
        }
    }

    fn statement(&mut self) -> Result<Statement, CliError> {
        let word = self.ident()?;
        let kind = match word.as_str() {
            "ring" => Some(BindingKind::Ring),
            "ideal" => Some(BindingKind::Ideal),
            "module" => Some(BindingKind::Module),
            _ => None,
        };
        let stmt = match (kind, word.as_str()) {
            (Some(kind), _) => {
                let name = self.ident()?;
                self.expect('=')?;
                let def = self.call()?;
                Statement::Bind { kind, name, def }
            }
            (None, "show") => Statement::Show(self.call()?),
            (None, "check") => Statement::Check(self.call()?),
            _ => {
                self.at -= 1;
                return self.unexpected("'ring', 'ideal', 'module', 'show' or 'check'");
            }
        };
        self.expect(';')?;
        Ok(stmt)
    }

    fn call(&mut self) -> Result<Call, CliError> {
        let name = self.ident()?;
        self.call_args(name)
    }

    fn call_args(&mut self, name: String) -> Result<Call, CliError> {
        self.expect('(')?;
        let mut args = Vec::new();
        if !self.eat(')') {
            loop {
                let key = match (self.peek(), self.toks.get(self.at + 1).map(|t| &t.0)) {
                    (Tok::Ident(k), Some(Tok::Sym('='))) => {
                        let k = k.clone();
                        self.bump();
                        self.bump();
                        Some(k)
                    }
                    _ => None,
                };
                args.push(Arg {
                    key,
                    value: self.expr()?,
                });
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(Call { name, args })
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
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

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            return match self.bump() {
                Tok::Int(e) => Ok(Expr::Pow(Box::new(base), e)),
                _ => {
                    self.at -= 1;
                    self.unexpected("an integer exponent")
                }
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                self.bump();
                if *self.peek() == Tok::Sym('(') {
                    Ok(Expr::Call(self.call_args(s)?))
                } else {
                    Ok(Expr::Name(s))
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                self.bump();
                let mut items = Vec::new();
                if !self.eat(']') {
                    loop {
                        items.push(self.expr()?);
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(Expr::List(items))
            }
            _ => self.unexpected("an expression"),
        }
    }
}

/// Parses statements without semantic checks.
pub fn parse_program(text: &str) -> Result<Program, CliError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let mut program = Program::default();
    while *p.peek() != Tok::Eof {
        program.positions.push(p.pos());
        program.statements.push(p.statement()?);
    }
    Ok(program)
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

struct Wrapped<'a>(&'a Expr, u8);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if level(self.0) < self.1 {
            write!(f, "({})", self.0)
        } else {
            self.0.fmt(f)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Name(s) => f.write_str(s),
            Expr::Neg(e) => write!(f, "-{}", Wrapped(e, 3)),
            Expr::Add(a, b) => write!(f, "{} + {}", Wrapped(a, 1), Wrapped(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", Wrapped(a, 1), Wrapped(b, 2)),
            Expr::Mul(a, b) => write!(f, "{}*{}", Wrapped(a, 2), Wrapped(b, 3)),
            Expr::Pow(a, e) => write!(f, "{}^{e}", Wrapped(a, 5)),
            Expr::Call(c) => c.fmt(f),
            Expr::List(items) => {
                f.write_str("[")?;
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    it.fmt(f)?;
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if let Some(k) = &a.key {
                write!(f, "{k}=")?;
            }
            a.value.fmt(f)?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Bind { kind, name, def } => write!(f, "{} {name} = {def};", kind.keyword()),
            Statement::Show(c) => write!(f, "show {c};"),
            Statement::Check(c) => write!(f, "check {c};"),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
