//! Semantic checks that turn a parsed program into a [`SessionScript`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use frobgrann_core::field::{is_prime, MAX_CHARACTERISTIC};

use crate::error::CliError;
use crate::syntax::{parse_program, BindingKind, Call, Expr, Pos, Program, Statement};

/// A parsed script whose names, arities and literal parameters are valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SessionScript {
    program: Program,
}

impl SessionScript {
    pub fn statements(&self) -> &[Statement] {
        &self.program.statements
    }

    pub fn positions(&self) -> &[Pos] {
        &self.program.positions
    }

    pub fn len(&self) -> usize {
        self.program.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.program.statements.is_empty()
    }
}

impl fmt::Display for SessionScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.program.fmt(f)
    }
}

pub fn parse_session(text: &str) -> Result<SessionScript, CliError> {
    let program = parse_program(text)?;
    let mut env = Env::default();
    for (stmt, pos) in program.statements.iter().zip(&program.positions) {
        env.check(stmt)
            .map_err(|msg| CliError::semantic(*pos, msg))?;
    }
    Ok(SessionScript { program })
}

#[derive(Debug, Clone)]
enum Binding {
    Ring {
        vars: Vec<String>,
    },
    Ideal {
        ring: String,
    },
    /// `ring` is `None` for product-of-fields modules.
    Module {
        ring: Option<String>,
        k: Option<usize>,
    },
}

impl Binding {
    fn describe(&self) -> &'static str {
        match self {
            Binding::Ring { .. } => "a ring",
            Binding::Ideal { .. } => "an ideal",
            Binding::Module { .. } => "a module",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Module,
    Ideal,
    /// An ideal name for split modules, a matrix of vectors for product ones.
    Submodule,
    Indices,
    Ideals,
    Universe,
    Op,
    Int,
}

struct Signature {
    name: &'static str,
    positional: &'static [Kind],
    min_positional: usize,
    keywords: &'static [(&'static str, Kind, bool)],
}

const SHOW: &[Signature] = &[
    Signature {
        name: "groebner",
        positional: &[Kind::Ideal],
        min_positional: 1,
        keywords: &[],
    },
    Signature {
        name: "compare",
        positional: &[Kind::Ideal, Kind::Ideal],
        min_positional: 2,
        keywords: &[],
    },
    Signature {
        name: "combine",
        positional: &[Kind::Ideal, Kind::Ideal],
        min_positional: 2,
        keywords: &[("op", Kind::Op, true)],
    },
    Signature {
        name: "minimal_primes",
        positional: &[Kind::Ideal],
        min_positional: 1,
        keywords: &[],
    },
    Signature {
        name: "special_submodule",
        positional: &[Kind::Module, Kind::Ideal],
        min_positional: 2,
        keywords: &[],
    },
    Signature {
        name: "grann",
        positional: &[Kind::Module, Kind::Submodule],
        min_positional: 2,
        keywords: &[],
    },
    Signature {
        name: "special_primes",
        positional: &[Kind::Module, Kind::Universe],
        min_positional: 1,
        keywords: &[("primes", Kind::Ideals, false)],
    },
    Signature {
        name: "lattice",
        positional: &[Kind::Module, Kind::Universe],
        min_positional: 1,
        keywords: &[("primes", Kind::Ideals, false)],
    },
];

const CHECK: &[Signature] = &[
    Signature {
        name: "special",
        positional: &[Kind::Module],
        min_positional: 1,
        keywords: &[("b", Kind::Ideal, true)],
    },
    Signature {
        name: "thm_1_8",
        positional: &[Kind::Module],
        min_positional: 1,
        keywords: &[
            ("b", Kind::Ideal, true),
            ("U", Kind::Indices, true),
            ("bprime", Kind::Ideal, true),
            ("primes", Kind::Ideals, false),
        ],
    },
    Signature {
        name: "thm_1_11",
        positional: &[Kind::Module],
        min_positional: 1,
        keywords: &[("a", Kind::Ideal, true), ("primes", Kind::Ideals, false)],
    },
    Signature {
        name: "rmk_1_7_iii",
        positional: &[Kind::Module],
        min_positional: 1,
        keywords: &[("a", Kind::Ideal, true), ("b", Kind::Ideal, true)],
    },
    Signature {
        name: "counterexample",
        positional: &[],
        min_positional: 0,
        keywords: &[("p", Kind::Int, true), ("n", Kind::Int, true)],
    },
];

pub const COMBINE_OPS: [&str; 4] = ["sum", "product", "intersection", "colon"];

#[derive(Default)]
struct Env {
    names: HashMap<String, Binding>,
    current_ring: Option<String>,
}

type Check<T = ()> = Result<T, String>;

pub(crate) fn int_of(e: &Expr) -> Option<u64> {
    match e {
        Expr::Int(n) => Some(*n),
        _ => None,
    }
}

pub(crate) fn matrix_of(e: &Expr) -> Option<Vec<Vec<u32>>> {
    let Expr::List(rows) = e else { return None };
    rows.iter()
        .map(|r| match r {
            Expr::List(cells) => cells
                .iter()
                .map(|c| int_of(c).and_then(|n| u32::try_from(n).ok()))
                .collect(),
            _ => None,
        })
        .collect()
}

fn check_prime(p: u64) -> Check {
    if !is_prime(p) {
        return Err("p must be prime".into());
    }
    if p >= MAX_CHARACTERISTIC {
        return Err(format!("p must be below {MAX_CHARACTERISTIC}"));
    }
    Ok(())
}

fn no_extra_keywords(call: &Call, allowed: &[&str]) -> Check {
    for a in &call.args {
        if let Some(k) = &a.key {
            if !allowed.contains(&k.as_str()) {
                return Err(format!("unknown argument '{k}' for {}", call.name));
            }
        }
    }
    let mut seen = BTreeSet::new();
    for k in call.args.iter().filter_map(|a| a.key.as_deref()) {
        if !seen.insert(k) {
            return Err(format!("argument '{k}' given twice"));
        }
    }
    Ok(())
}

fn required_int(call: &Call, key: &str) -> Check<u64> {
    call.keyword(key)
        .ok_or_else(|| format!("missing argument '{key}' for {}", call.name))
        .and_then(|e| int_of(e).ok_or_else(|| format!("'{key}' must be an integer")))
}

fn positional_count(call: &Call, expected: usize) -> Check {
    let got = call.positional().count();
    if got != expected {
        return Err(format!(
            "{} expects {expected} positional arguments, got {got}",
            call.name
        ));
    }
    Ok(())
}

impl Env {
    fn check(&mut self, stmt: &Statement) -> Check {
        match stmt {
            Statement::Bind { kind, name, def } => {
                if self.names.contains_key(name) {
                    return Err(format!("name '{name}' is already bound"));
                }
                let binding = match kind {
                    BindingKind::Ring => self.ring(def)?,
                    BindingKind::Ideal => self.ideal(def)?,
                    BindingKind::Module => self.module(def)?,
                };
                if *kind == BindingKind::Ring {
                    self.current_ring = Some(name.clone());
                }
                self.names.insert(name.clone(), binding);
                Ok(())
            }
            Statement::Show(call) => self.command(call, SHOW, "show"),
            Statement::Check(call) => self.command(call, CHECK, "check"),
        }
    }

    fn ring(&self, def: &Call) -> Check<Binding> {
        if def.name != "poly" {
            return Err(format!("unknown ring constructor '{}'", def.name));
        }
        positional_count(def, 0)?;
        no_extra_keywords(def, &["p", "vars", "order"])?;
        check_prime(required_int(def, "p")?)?;
        let vars = match def.keyword("vars") {
            Some(Expr::List(items)) => items
                .iter()
                .map(|v| match v {
                    Expr::Name(s) => Ok(s.clone()),
                    other => Err(format!("variable names expected, found '{other}'")),
                })
                .collect::<Check<Vec<_>>>()?,
            Some(_) => return Err("'vars' must be a list of names".into()),
            None => return Err("missing argument 'vars' for poly".into()),
        };
        let distinct: BTreeSet<&String> = vars.iter().collect();
        if distinct.len() != vars.len() {
            return Err("variable names must be distinct".into());
        }
        match def.keyword("order") {
            None => {}
            Some(Expr::Name(o)) if o == "grevlex" || o == "lex" => {}
            Some(other) => return Err(format!("unknown monomial order '{other}'")),
        }
        Ok(Binding::Ring { vars })
    }

    fn ideal(&self, def: &Call) -> Check<Binding> {
        let ring = self.current_ring.clone().ok_or("unbound ring")?;
        if def.name != "ideal" {
            return Err(format!("unknown ideal constructor '{}'", def.name));
        }
        no_extra_keywords(def, &[])?;
        let Some(Binding::Ring { vars }) = self.names.get(&ring) else {
            return Err("unbound ring".into());
        };
        for g in def.positional() {
            check_polynomial(g, vars)?;
        }
        Ok(Binding::Ideal { ring })
    }

    fn module(&self, def: &Call) -> Check<Binding> {
        match def.name.as_str() {
            "frobenius_splitting" => {
                positional_count(def, 1)?;
                no_extra_keywords(def, &["carrier"])?;
                let ring = match def.positional().next() {
                    Some(Expr::Name(r)) => r.clone(),
                    _ => return Err("frobenius_splitting expects a ring name".into()),
                };
                match self.names.get(&ring) {
                    Some(Binding::Ring { .. }) => {}
                    Some(b) => {
                        return Err(format!("'{ring}' is {}, expected a ring", b.describe()))
                    }
                    None => return Err(format!("unbound ring '{ring}'")),
                }
                if let Some(c) = def.keyword("carrier") {
                    self.ideal_arg(c, Some(&ring))?;
                }
                Ok(Binding::Module {
                    ring: Some(ring),
                    k: None,
                })
            }
            "product_fields" => {
                positional_count(def, 0)?;
                no_extra_keywords(def, &["p", "k", "x", "carrier"])?;
                check_prime(required_int(def, "p")?)?;
                let k = required_int(def, "k")? as usize;
                if k == 0 || k > frobgrann_core::module::MAX_FACTORS {
                    return Err(format!(
                        "k must be between 1 and {}",
                        frobgrann_core::module::MAX_FACTORS
                    ));
                }
                match def.keyword("x") {
                    Some(Expr::Name(n)) if n == "identity" => {}
                    Some(e) => square_matrix(e, k)?,
                    None => return Err("missing argument 'x' for product_fields".into()),
                }
                if let Some(c) = def.keyword("carrier") {
                    vectors(c, k)?;
                }
                Ok(Binding::Module {
                    ring: None,
                    k: Some(k),
                })
            }
            other => Err(format!("unknown module constructor '{other}'")),
        }
    }

    fn module_arg(&self, e: &Expr) -> Check<(Option<String>, Option<usize>)> {
        match e {
            Expr::Name(n) => match self.names.get(n) {
                Some(Binding::Module { ring, k }) => Ok((ring.clone(), *k)),
                Some(b) => Err(format!("'{n}' is {}, expected a module", b.describe())),
                None => Err(format!("unbound name '{n}'")),
            },
            other => Err(format!("expected a module name, found '{other}'")),
        }
    }

    fn ideal_arg(&self, e: &Expr, ring: Option<&String>) -> Check {
        let Expr::Name(n) = e else {
            return Err(format!("expected an ideal name, found '{e}'"));
        };
        match (self.names.get(n), ring) {
            (Some(Binding::Ideal { ring: r }), Some(want)) if r != want => {
                Err(format!("ideal '{n}' lives over ring '{r}', not '{want}'"))
            }
            (Some(Binding::Ideal { .. }), _) => Ok(()),
            (Some(b), _) => Err(format!("'{n}' is {}, expected an ideal", b.describe())),
            (None, _) => Err(format!("unbound name '{n}'")),
        }
    }

    fn command(&self, call: &Call, table: &[Signature], verb: &str) -> Check {
        let sig = table
            .iter()
            .find(|s| s.name == call.name)
            .ok_or_else(|| format!("unknown {verb} command '{}'", call.name))?;
        let pos: Vec<&Expr> = call.positional().collect();
        if pos.len() < sig.min_positional || pos.len() > sig.positional.len() {
            let want = if sig.min_positional == sig.positional.len() {
                sig.min_positional.to_string()
            } else {
                format!("{}..{}", sig.min_positional, sig.positional.len())
            };
            return Err(format!(
                "{} expects {want} positional arguments, got {}",
                call.name,
                pos.len()
            ));
        }
        let allowed: Vec<&str> = sig.keywords.iter().map(|k| k.0).collect();
        no_extra_keywords(call, &allowed)?;
        for (key, _, required) in sig.keywords {
            if *required && call.keyword(key).is_none() {
                return Err(format!("missing argument '{key}' for {}", call.name));
            }
        }
        let mut module: Option<(Option<String>, Option<usize>)> = None;
        let args = pos.iter().zip(sig.positional).map(|(e, k)| (*e, *k)).chain(
            sig.keywords
                .iter()
                .filter_map(|(key, kind, _)| call.keyword(key).map(|e| (e, *kind))),
        );
        let mut first_ring: Option<String> = None;
        for (e, kind) in args {
            match kind {
                Kind::Module => module = Some(self.module_arg(e)?),
                Kind::Ideal | Kind::Submodule | Kind::Ideals => {
                    let ring = match &module {
                        Some((Some(r), _)) => Some(r.clone()),
                        Some((None, k)) if kind == Kind::Submodule => {
                            vectors(e, k.unwrap_or(0))?;
                            continue;
                        }
                        Some((None, _)) => {
                            return Err("ideal arguments need a polynomial-ring module".into());
                        }
                        None => first_ring.clone(),
                    };
                    let items: Vec<&Expr> = match (kind, e) {
                        (Kind::Ideals, Expr::List(items)) => items.iter().collect(),
                        (Kind::Ideals, _) => {
                            return Err("'primes' must be a list of ideal names".into())
                        }
                        _ => vec![e],
                    };
                    for item in items {
                        self.ideal_arg(item, ring.as_ref())?;
                        if first_ring.is_none() {
                            if let Expr::Name(n) = item {
                                if let Some(Binding::Ideal { ring }) = self.names.get(n) {
                                    first_ring = Some(ring.clone());
                                }
                            }
                        }
                    }
                }
                Kind::Indices => match e {
                    Expr::List(items)
                        if items.iter().all(|i| int_of(i).is_some_and(|n| n >= 1)) => {}
                    _ => return Err("'U' must be a list of positive indices".into()),
                },
                Kind::Universe => match e {
                    Expr::Call(c) if c.name == "monomial_primes" && c.args.is_empty() => {}
                    other => return Err(format!("expected monomial_primes(), found '{other}'")),
                },
                Kind::Op => match e {
                    Expr::Name(o) if COMBINE_OPS.contains(&o.as_str()) => {}
                    other => return Err(format!("unknown ideal operation '{other}'")),
                },
                Kind::Int => {
                    let n = int_of(e).ok_or("expected an integer")?;
                    if call.name == "counterexample" && call.keyword("p") == Some(e) {
                        check_prime(n)?;
                    }
                }
            }
        }
        if call.name == "counterexample" && required_int(call, "n")? == 0 {
            return Err("counterexample needs n >= 1".into());
        }
        Ok(())
    }
}

fn check_polynomial(e: &Expr, vars: &[String]) -> Check {
    match e {
        Expr::Int(_) => Ok(()),
        Expr::Name(n) if vars.contains(n) => Ok(()),
        Expr::Name(n) => Err(format!("unknown variable '{n}'")),
        Expr::Neg(a) | Expr::Pow(a, _) => check_polynomial(a, vars),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            check_polynomial(a, vars)?;
            check_polynomial(b, vars)
        }
        other => Err(format!("'{other}' is not a polynomial")),
    }
}

fn vectors(e: &Expr, k: usize) -> Check<Vec<Vec<u32>>> {
    let m =
        matrix_of(e).ok_or_else(|| format!("expected a list of integer vectors, found '{e}'"))?;
    if m.iter().any(|r| r.len() != k) {
        return Err(format!("vectors must have length {k}"));
    }
    Ok(m)
}

fn square_matrix(e: &Expr, k: usize) -> Check {
    let m = vectors(e, k)?;
    if m.len() != k {
        return Err(format!("x must be a {k}x{k} matrix"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> String {
        parse_session(text).unwrap_err().to_string()
    }

    #[test]
    fn spec_examples() {
        let s = parse_session(
            "ring A = poly(p=2, vars=[t1]); ideal I = ideal(t1); module M = frobenius_splitting(A); show grann(M, I);",
        )
        .unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(err("ideal I = ideal(t1);"), "1:1: unbound ring");
        assert_eq!(
            err("ring A = poly(p=4, vars=[t1]);"),
            "1:1: p must be prime"
        );
        assert!(parse_session("").unwrap().is_empty());
    }

    #[test]
    fn names_and_arity() {
        let base = "ring A = poly(p=2, vars=[t1,t2]); ideal I = ideal(t1); module M = frobenius_splitting(A);\n";
        assert!(err(&format!("{base}show grann(M);"))
            .contains("grann expects 2 positional arguments, got 1"));
        assert!(err(&format!("{base}show grann(Q, I);")).contains("unbound name 'Q'"));
        assert!(err(&format!("{base}show grann(I, I);")).contains("expected a module"));
        assert!(err(&format!("{base}ideal I = ideal(t2);")).contains("already bound"));
        assert!(err(&format!("{base}ideal J = ideal(t3);")).contains("unknown variable 't3'"));
        assert!(err(&format!("{base}check thm_1_8(M, b=I, U=[1]);"))
            .contains("missing argument 'bprime'"));
        assert!(
            err(&format!("{base}check thm_1_11(M, a=I, c=I);")).contains("unknown argument 'c'")
        );
        assert!(err(&format!("{base}show combine(I, I, op=quotient);"))
            .contains("unknown ideal operation"));
        assert!(err(&format!("{base}show frob(M);")).contains("unknown show command"));
        assert!(err(&format!("{base}check counterexample(p=6, n=2);")).contains("p must be prime"));
        let ok = format!(
            "{base}show special_primes(M, monomial_primes()); show lattice(M, primes=[I]); check thm_1_8(M, b=I, U=[1], bprime=I);"
        );
        parse_session(&ok).unwrap();
    }

    #[test]
    fn product_modules() {
        let base = "module N = product_fields(p=2, k=2, x=identity);\n";
        parse_session(&format!("{base}show grann(N, [[1,0]]); show lattice(N);")).unwrap();
        assert!(err(&format!("{base}show grann(N, [[1,0,0]]);")).contains("length 2"));
        assert!(err("module N = product_fields(p=2, k=2, x=[[1,0]]);").contains("2x2"));
        let mixed = format!(
            "ring A = poly(p=2, vars=[t1]); ideal I = ideal(t1);\n{base}check special(N, b=I);"
        );
        assert!(err(&mixed).contains("polynomial-ring module"));
    }

    #[test]
    fn ideals_follow_the_latest_ring() {
        let text = "ring A = poly(p=2, vars=[t1]); ideal I = ideal(t1); ring B = poly(p=3, vars=[s]);\nideal J = ideal(s);\nmodule M = frobenius_splitting(A); show compare(I, J);";
        assert!(err(text).contains("lives over ring 'B'"));
    }
}
