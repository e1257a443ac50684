//! Runs a [`SessionScript`] and assembles the report document.

use std::collections::HashMap;
use std::time::Instant;

use frobgrann_core::lab::{
    audited_graded_annihilator, build_counterexample, enumerate_special_primes,
    special_ideal_lattice, special_ideal_test, theorem_verifier, CheckParams, ProductLawParams,
    QuotientAnnihilatorParams, Rendered, SubmodulePrimesParams, VerificationReport,
};
use frobgrann_core::module::{
    FrobRightModule, FrobeniusModule, Primality, ProductModule, SplitModule,
};
use frobgrann_core::{
    Budget, Containment, Error, Ideal, IdealOp, MonomialOrder, Polynomial, Ring, RingSpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::session::{int_of, matrix_of, SessionScript};
use crate::syntax::{BindingKind, Call, Expr, Statement};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExecOptions {
    pub budget: Budget,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandRecord {
    pub cmd: String,
    pub inputs: Value,
    pub result: Value,
    pub verdict: Option<bool>,
    pub millis: u128,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub options: ExecOptions,
    pub bindings: Vec<String>,
    pub commands: Vec<CommandRecord>,
}

impl ReportDocument {
    pub fn has_error(&self) -> bool {
        self.commands.iter().any(|c| c.error.is_some())
    }

    pub fn has_failed_verdict(&self) -> bool {
        self.commands.iter().any(|c| c.verdict == Some(false))
    }

    pub fn ok(&self) -> bool {
        !self.has_error() && !self.has_failed_verdict()
    }

    /// 0 when everything passed, 1 on a failed verdict, 2 on any error.
    pub fn exit_code(&self) -> i32 {
        if self.has_error() {
            2
        } else if self.has_failed_verdict() {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let commands: Vec<Value> = self
            .commands
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("cmd".into(), json!(c.cmd));
                m.insert("inputs".into(), c.inputs.clone());
                m.insert("result".into(), c.result.clone());
                m.insert("millis".into(), json!(c.millis as u64));
                if let Some(v) = c.verdict {
                    m.insert("verdict".into(), json!(if v { "pass" } else { "fail" }));
                }
                if let Some(e) = &c.error {
                    m.insert("error".into(), json!(e));
                }
                Value::Object(m)
            })
            .collect();
        json!({
            "version": VERSION,
            "seed": self.options.seed,
            "budgets": {"steps": self.options.budget.steps, "rounds": self.options.budget.rounds},
            "bindings": self.bindings,
            "commands": commands,
            "ok": self.ok(),
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json") + "\n"
    }

    /// JSON with every `millis` field zeroed, for determinism checks.
    pub fn masked_json(&self) -> String {
        mask_timings(&self.to_json_string())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "frobgrann {VERSION} seed={} budget_steps={} budget_rounds={}\n",
            self.options.seed, self.options.budget.steps, self.options.budget.rounds
        );
        for c in &self.commands {
            out.push_str(&format!("{} ({} ms)\n", c.cmd, c.millis));
            if let Some(e) = &c.error {
                out.push_str(&format!("  error: {e}\n"));
            } else {
                out.push_str(&format!("  result: {}\n", c.result));
            }
            if let Some(v) = c.verdict {
                out.push_str(&format!("  verdict: {}\n", if v { "pass" } else { "fail" }));
            }
        }
        out.push_str(&format!("ok: {}\n", self.ok()));
        out
    }
}

/// Zeroes every `"millis"` value in a JSON document.
pub fn mask_timings(json_text: &str) -> String {
    fn walk(v: &mut Value) {
        match v {
            Value::Object(m) => {
                for (k, x) in m.iter_mut() {
                    if k == "millis" {
                        *x = json!(0);
                    } else {
                        walk(x);
                    }
                }
            }
            Value::Array(a) => a.iter_mut().for_each(walk),
            _ => {}
        }
    }
    match serde_json::from_str::<Value>(json_text) {
        Ok(mut v) => {
            walk(&mut v);
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Err(_) => json_text.to_string(),
    }
}

type Outcome = Result<(Value, Option<bool>), String>;

#[derive(Default)]
struct Runtime {
    rings: HashMap<String, Ring>,
    ideals: HashMap<String, Ideal>,
    modules: HashMap<String, FrobRightModule>,
    failed: HashMap<String, String>,
    current_ring: Option<String>,
}

pub fn execute(script: &SessionScript, options: &ExecOptions) -> ReportDocument {
    let mut rt = Runtime::default();
    let mut doc = ReportDocument {
        options: *options,
        bindings: Vec::new(),
        commands: Vec::new(),
    };
    for (index, stmt) in script.statements().iter().enumerate() {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(
            options.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
        );
        match stmt {
            Statement::Bind { kind, name, def } => {
                doc.bindings.push(stmt.to_string());
                if let Err(e) = rt.bind(*kind, name, def, options) {
                    rt.failed.insert(name.clone(), e.clone());
                    doc.commands.push(CommandRecord {
                        cmd: stmt.to_string(),
                        inputs: json!({}),
                        result: Value::Null,
                        verdict: None,
                        millis: start.elapsed().as_millis(),
                        error: Some(e),
                    });
                }
            }
            Statement::Show(call) | Statement::Check(call) => {
                let inputs = rt.inputs(call);
                let outcome = match stmt {
                    Statement::Show(_) => rt.show(call, &mut rng),
                    _ => rt.check(call, &mut rng),
                };
                let (result, verdict, error) = match outcome {
                    Ok((r, v)) => (r, v, None),
                    Err(e) => (Value::Null, None, Some(e)),
                };
                doc.commands.push(CommandRecord {
                    cmd: stmt.to_string(),
                    inputs,
                    result,
                    verdict,
                    millis: start.elapsed().as_millis(),
                    error,
                });
            }
        }
    }
    doc
}

fn err(e: Error) -> String {
    e.to_string()
}

fn name_of(e: &Expr) -> Result<&str, String> {
    match e {
        Expr::Name(n) => Ok(n),
        other => Err(format!("expected a name, found '{other}'")),
    }
}

fn eval_poly(ring: &Ring, e: &Expr) -> Result<Polynomial, String> {
    Ok(match e {
        Expr::Int(n) => Polynomial::constant(ring, (*n % ring.p() as u64) as i64),
        Expr::Name(v) => Polynomial::var(
            ring,
            ring.var_index(v)
                .ok_or_else(|| format!("unknown variable '{v}'"))?,
        ),
        Expr::Neg(a) => eval_poly(ring, a)?.neg(),
        Expr::Add(a, b) => eval_poly(ring, a)?.add(&eval_poly(ring, b)?),
        Expr::Sub(a, b) => eval_poly(ring, a)?.sub(&eval_poly(ring, b)?),
        Expr::Mul(a, b) => eval_poly(ring, a)?.mul(&eval_poly(ring, b)?),
        Expr::Pow(a, k) => eval_poly(ring, a)?.pow(*k),
        other => return Err(format!("'{other}' is not a polynomial")),
    })
}

fn ideal_json(i: &Ideal) -> Result<Value, String> {
    Ok(json!(i.describe().map_err(err)?))
}

fn rendered_json(r: &Rendered) -> Value {
    match r {
        Rendered::Ideal(k) | Rendered::Submodule(k) => json!(k),
        Rendered::Graded { chain, stable_from } => {
            json!({"chain": chain, "stable_from": stable_from})
        }
        Rendered::IdealSet(s) => json!(s),
    }
}

fn report_json(rep: &VerificationReport) -> Value {
    let parts: Vec<Value> = rep
        .parts
        .iter()
        .map(|p| {
            json!({
                "label": p.label,
                "expected": rendered_json(&p.expected),
                "computed": rendered_json(&p.computed),
                "pass": p.pass,
            })
        })
        .collect();
    let audits: Vec<Value> = rep
        .audits
        .iter()
        .map(|a| json!({"stable_from": a.stable_from, "radical": a.radical}))
        .collect();
    json!({"check": rep.kind.cli_name(), "instance": rep.instance, "parts": parts, "audits": audits})
}

fn primality(p: Primality) -> &'static str {
    match p {
        Primality::Certified => "certified",
        Primality::Trusted => "trusted",
    }
}

fn grann_json<M: FrobeniusModule>(
    m: &M,
    n: &M::Sub,
    rng: &mut ChaCha8Rng,
) -> Result<Value, String> {
    let mut audits = Vec::new();
    let g = audited_graded_annihilator(m, n, &mut audits, rng).map_err(err)?;
    let chain: Vec<Vec<String>> = g
        .chain()
        .iter()
        .map(|c| m.ideal_key(c))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    Ok(json!({"chain": chain, "stable_from": g.stable_from(), "radical": audits[0].radical}))
}

fn keys<M: FrobeniusModule>(m: &M, ideals: &[M::Ideal]) -> Result<Vec<Vec<String>>, String> {
    ideals.iter().map(|i| m.ideal_key(i).map_err(err)).collect()
}

fn primes_json<M: FrobeniusModule>(
    m: &M,
    universe: &[M::Ideal],
    source: &str,
) -> Result<Value, String> {
    let sp = enumerate_special_primes(m, universe).map_err(err)?;
    let primes: Vec<Value> = sp
        .primes
        .iter()
        .map(|(p, kind)| {
            Ok(json!({"ideal": m.ideal_key(p).map_err(err)?, "primality": primality(*kind)}))
        })
        .collect::<Result<_, String>>()?;
    Ok(json!({"primes": primes, "universe": keys(m, universe)?, "universe_source": source}))
}

fn lattice_json<M: FrobeniusModule>(
    m: &M,
    universe: &[M::Ideal],
    source: &str,
) -> Result<Value, String> {
    let l = special_ideal_lattice(m, universe).map_err(err)?;
    let members: Vec<Value> = l
        .special_ideals
        .iter()
        .map(|e| Ok(json!({"ideal": e.key, "submodule": m.sub_key(&e.submodule).map_err(err)?})))
        .collect::<Result<_, String>>()?;
    Ok(json!({
        "special_primes": keys(m, &l.special_primes.ideals())?,
        "special_ideals": members,
        "size": l.len(),
        "longest_chain": l.longest_submodule_chain(m).map_err(err)?,
        "universe": keys(m, universe)?,
        "universe_source": source,
    }))
}

impl Runtime {
    fn bind(
        &mut self,
        kind: BindingKind,
        name: &str,
        def: &Call,
        options: &ExecOptions,
    ) -> Result<(), String> {
        match kind {
            BindingKind::Ring => {
                let p = def.keyword("p").and_then(int_of).ok_or("missing p")?;
                let vars: Vec<String> = match def.keyword("vars") {
                    Some(Expr::List(items)) => items
                        .iter()
                        .map(|v| name_of(v).map(str::to_string))
                        .collect::<Result<_, _>>()?,
                    _ => return Err("missing vars".into()),
                };
                let order = match def.keyword("order") {
                    Some(Expr::Name(o)) if o == "lex" => MonomialOrder::Lex,
                    _ => MonomialOrder::Grevlex,
                };
                self.current_ring = Some(name.to_string());
                let ring = RingSpec::new(p, vars, order)
                    .map_err(err)?
                    .with_budget(options.budget);
                self.rings.insert(name.to_string(), ring);
            }
            BindingKind::Ideal => {
                let rname = self.current_ring.clone().ok_or("unbound ring")?;
                let ring = self
                    .rings
                    .get(&rname)
                    .ok_or_else(|| format!("ring '{rname}' failed to bind"))?
                    .clone();
                let gens = def
                    .positional()
                    .map(|g| eval_poly(&ring, g))
                    .collect::<Result<Vec<_>, _>>()?;
                self.ideals
                    .insert(name.to_string(), Ideal::new(&ring, gens).map_err(err)?);
            }
            BindingKind::Module => {
                let m: FrobRightModule = match def.name.as_str() {
                    "frobenius_splitting" => {
                        let rname = name_of(def.positional().next().ok_or("missing ring")?)?;
                        let ring = self
                            .rings
                            .get(rname)
                            .ok_or_else(|| format!("ring '{rname}' failed to bind"))?;
                        match def.keyword("carrier") {
                            None => SplitModule::whole(ring).into(),
                            Some(c) => SplitModule::new(self.ideal(c)?.clone())
                                .map_err(err)?
                                .into(),
                        }
                    }
                    "product_fields" => {
                        let p = def.keyword("p").and_then(int_of).ok_or("missing p")?;
                        let k = def.keyword("k").and_then(int_of).ok_or("missing k")? as usize;
                        let x = match def.keyword("x") {
                            Some(Expr::Name(n)) if n == "identity" => (0..k)
                                .map(|i| (0..k).map(|j| u32::from(i == j)).collect())
                                .collect(),
                            Some(e) => matrix_of(e).ok_or("x must be a matrix")?,
                            None => return Err("missing x".into()),
                        };
                        let m = match def.keyword("carrier") {
                            None => ProductModule::new(p, k, x),
                            Some(c) => ProductModule::with_carrier(
                                p,
                                k,
                                x,
                                matrix_of(c).ok_or("carrier must be vectors")?,
                            ),
                        };
                        m.map_err(err)?.with_budget(options.budget).into()
                    }
                    other => return Err(format!("unknown module constructor '{other}'")),
                };
                self.modules.insert(name.to_string(), m);
            }
        }
        Ok(())
    }

    fn lookup_failed(&self, n: &str) -> String {
        match self.failed.get(n) {
            Some(e) => format!("'{n}' failed to bind: {e}"),
            None => format!("unbound name '{n}'"),
        }
    }

    fn ideal(&self, e: &Expr) -> Result<&Ideal, String> {
        let n = name_of(e)?;
        self.ideals.get(n).ok_or_else(|| self.lookup_failed(n))
    }

    fn module(&self, e: &Expr) -> Result<&FrobRightModule, String> {
        let n = name_of(e)?;
        self.modules.get(n).ok_or_else(|| self.lookup_failed(n))
    }

    fn split(&self, e: &Expr) -> Result<&SplitModule, String> {
        match self.module(e)? {
            FrobRightModule::SplitPolynomialRing(m) => Ok(m),
            FrobRightModule::ProductOfFields(_) => {
                Err("this command needs a polynomial-ring module".into())
            }
        }
    }

    fn arg(call: &Call, i: usize) -> Result<&Expr, String> {
        call.positional()
            .nth(i)
            .ok_or_else(|| format!("{}: missing argument {}", call.name, i + 1))
    }

    fn kw<'a>(call: &'a Call, key: &str) -> Result<&'a Expr, String> {
        call.keyword(key)
            .ok_or_else(|| format!("{}: missing argument '{key}'", call.name))
    }

    fn input_value(&self, e: &Expr) -> Value {
        match e {
            Expr::Name(n) => {
                if let Some(i) = self.ideals.get(n) {
                    let gens: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
                    return json!({"name": n, "generators": gens});
                }
                if let Some(m) = self.modules.get(n) {
                    return json!({"name": n, "module": self.module_json(m)});
                }
                json!(n)
            }
            Expr::List(items) => Value::Array(items.iter().map(|i| self.input_value(i)).collect()),
            other => json!(other.to_string()),
        }
    }

    fn module_json(&self, m: &FrobRightModule) -> Value {
        match m {
            FrobRightModule::SplitPolynomialRing(s) => json!({
                "kind": "frobenius_splitting",
                "p": s.ring().p(),
                "vars": s.ring().var_names(),
                "order": s.ring().order().to_string(),
                "carrier": s.carrier().describe().unwrap_or_default(),
            }),
            FrobRightModule::ProductOfFields(pm) => json!({
                "kind": "product_fields",
                "p": pm.p(),
                "k": pm.factors(),
                "x": pm.x_action(),
                "carrier": pm.sub_key(pm.carrier()).unwrap_or_default(),
            }),
        }
    }

    fn inputs(&self, call: &Call) -> Value {
        let mut m = Map::new();
        for (i, a) in call.args.iter().enumerate() {
            let key = a.key.clone().unwrap_or_else(|| format!("arg{}", i + 1));
            m.insert(key, self.input_value(&a.value));
        }
        Value::Object(m)
    }

    fn universe_split(
        &self,
        m: &SplitModule,
        call: &Call,
    ) -> Result<(Vec<Ideal>, &'static str), String> {
        match call.keyword("primes") {
            Some(Expr::List(items)) => Ok((
                items
                    .iter()
                    .map(|i| self.ideal(i).cloned())
                    .collect::<Result<_, _>>()?,
                "supplied",
            )),
            Some(_) => Err("'primes' must be a list".into()),
            None => Ok((m.prime_universe(), "monomial")),
        }
    }

    fn show(&self, call: &Call, rng: &mut ChaCha8Rng) -> Outcome {
        let v = match call.name.as_str() {
            "groebner" => json!({"basis": ideal_json(self.ideal(Self::arg(call, 0)?)?)?}),
            "compare" => {
                let c = self
                    .ideal(Self::arg(call, 0)?)?
                    .compare(self.ideal(Self::arg(call, 1)?)?)
                    .map_err(err)?;
                let rel = match c {
                    Containment::Equal => "equal",
                    Containment::Subset => "I_subset_J",
                    Containment::Superset => "J_subset_I",
                    Containment::Incomparable => "incomparable",
                };
                json!({"relation": rel})
            }
            "combine" => {
                let op = match name_of(Self::kw(call, "op")?)? {
                    "sum" => IdealOp::Sum,
                    "product" => IdealOp::Product,
                    "intersection" => IdealOp::Intersection,
                    "colon" => IdealOp::Colon,
                    other => return Err(format!("unknown ideal operation '{other}'")),
                };
                let r = self
                    .ideal(Self::arg(call, 0)?)?
                    .combine(self.ideal(Self::arg(call, 1)?)?, op)
                    .map_err(err)?;
                json!({"ideal": ideal_json(&r)?})
            }
            "minimal_primes" => {
                let primes = self
                    .ideal(Self::arg(call, 0)?)?
                    .monomial_minimal_primes()
                    .map_err(err)?;
                json!({"primes": primes.iter().map(ideal_json).collect::<Result<Vec<_>, _>>()?})
            }
            "special_submodule" => {
                let m = self.split(Self::arg(call, 0)?)?;
                let s = m
                    .special_submodule(self.ideal(Self::arg(call, 1)?)?)
                    .map_err(err)?;
                json!({"submodule": ideal_json(&s)?, "x_divisible": m.x_divisibility(&s).map_err(err)?})
            }
            "grann" => {
                let target = Self::arg(call, 1)?;
                match self.module(Self::arg(call, 0)?)? {
                    FrobRightModule::SplitPolynomialRing(m) => {
                        grann_json(m, self.ideal(target)?, rng)?
                    }
                    FrobRightModule::ProductOfFields(m) => {
                        let n = m
                            .submodule(matrix_of(target).ok_or("expected vectors")?)
                            .map_err(err)?;
                        grann_json(m, &n, rng)?
                    }
                }
            }
            "special_primes" | "lattice" => {
                let lattice = call.name == "lattice";
                match self.module(Self::arg(call, 0)?)? {
                    FrobRightModule::SplitPolynomialRing(m) => {
                        let (u, source) = self.universe_split(m, call)?;
                        if lattice {
                            lattice_json(m, &u, source)?
                        } else {
                            primes_json(m, &u, source)?
                        }
                    }
                    FrobRightModule::ProductOfFields(m) => {
                        if call.keyword("primes").is_some() {
                            return Err("supplied primes need a polynomial-ring module".into());
                        }
                        let u = m.prime_universe();
                        if lattice {
                            lattice_json(m, &u, "coordinate")?
                        } else {
                            primes_json(m, &u, "coordinate")?
                        }
                    }
                }
            }
            other => return Err(format!("unknown show command '{other}'")),
        };
        Ok((v, None))
    }

    fn check(&self, call: &Call, rng: &mut ChaCha8Rng) -> Outcome {
        if call.name == "counterexample" {
            return counterexample(call);
        }
        let m = self.split(Self::arg(call, 0)?)?;
        let params = match call.name.as_str() {
            "special" => {
                let t = special_ideal_test(m, self.ideal(Self::kw(call, "b")?)?).map_err(err)?;
                let v = json!({
                    "special": t.is_special,
                    "submodule": ideal_json(&t.submodule)?,
                    "annihilator": ideal_json(&t.annihilator)?,
                });
                return Ok((v, Some(t.is_special)));
            }
            "thm_1_8" => {
                let u = match Self::kw(call, "U")? {
                    Expr::List(items) => items
                        .iter()
                        .map(|i| {
                            int_of(i)
                                .filter(|&n| n >= 1)
                                .map(|n| n as usize - 1)
                                .ok_or("bad index in U")
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                    _ => return Err("'U' must be a list".into()),
                };
                let primes = match call.keyword("primes") {
                    Some(_) => Some(self.universe_split(m, call)?.0),
                    None => None,
                };
                CheckParams::QuotientAnnihilator(QuotientAnnihilatorParams {
                    b: self.ideal(Self::kw(call, "b")?)?.clone(),
                    primes,
                    u,
                    b_prime: self.ideal(Self::kw(call, "bprime")?)?.clone(),
                })
            }
            "thm_1_11" => CheckParams::SubmodulePrimes(SubmodulePrimesParams {
                a: self.ideal(Self::kw(call, "a")?)?.clone(),
                universe: Some(self.universe_split(m, call)?.0),
            }),
            "rmk_1_7_iii" => CheckParams::ProductLaw(ProductLawParams {
                a: self.ideal(Self::kw(call, "a")?)?.clone(),
                b: self.ideal(Self::kw(call, "b")?)?.clone(),
            }),
            other => return Err(format!("unknown check command '{other}'")),
        };
        let rep = theorem_verifier(m, &params, rng).map_err(err)?;
        Ok((report_json(&rep), Some(rep.verdict())))
    }
}

fn counterexample(call: &Call) -> Outcome {
    let p = call.keyword("p").and_then(int_of).ok_or("missing p")?;
    let n = call.keyword("n").and_then(int_of).ok_or("missing n")? as usize;
    let m = build_counterexample(p, n).map_err(err)?;
    let mut fixed = true;
    for i in 0..n {
        let q = Ideal::variables(m.ring(), [i]);
        fixed &= m
            .special_submodule(&q)
            .map_err(err)?
            .same_ideal(&q)
            .map_err(err)?;
    }
    let universe = m.prime_universe();
    let sp = enumerate_special_primes(&m, &universe).map_err(err)?;
    let count = sp.len();
    let v = json!({
        "p": p,
        "n": n,
        "variable_primes_fixed": fixed,
        "special_primes": keys(&m, &sp.ideals())?,
        "count": count,
        "universe_size": universe.len(),
    });
    Ok((v, Some(fixed && count > n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::session::parse_session;

    fn run(text: &str) -> ReportDocument {
        execute(&parse_session(text).unwrap(), &ExecOptions::default())
    }

    #[test]
    fn grann_example() {
        let doc = run("ring A = poly(p=2, vars=[t1]); ideal I = ideal(t1); module M = frobenius_splitting(A); show grann(M, I);");
        assert_eq!(doc.commands.len(), 1);
        assert_eq!(doc.commands[0].result["chain"], json!([["t1"]]));
        assert_eq!(doc.exit_code(), 0);
    }

    #[test]
    fn counterexample_example() {
        let doc = run("check counterexample(p=2, n=2);");
        assert_eq!(doc.commands[0].verdict, Some(true));
        assert_eq!(doc.commands[0].result["count"], json!(4));
    }

    #[test]
    fn empty_script() {
        let doc = run("");
        assert!(doc.commands.is_empty());
        assert_eq!(doc.exit_code(), 0);
        assert_eq!(doc.to_json()["commands"], json!([]));
    }

    #[test]
    fn exit_codes() {
        let base = "ring A = poly(p=2, vars=[t1,t2]); module M = frobenius_splitting(A);";
        let fail = run(&format!(
            "{base} ideal I = ideal(t1 + t2); check special(M, b=I);"
        ));
        assert_eq!(fail.exit_code(), 1);
        let rejected = run(&format!(
            "{base} ideal Z = ideal(); check thm_1_11(M, a=Z);"
        ));
        assert_eq!(rejected.exit_code(), 2);
        assert!(rejected.commands[0]
            .error
            .as_deref()
            .unwrap()
            .contains("instance rejected"));
        let bad = run("ring A = poly(p=2, vars=[t1]); ideal I = ideal(t1^2); module M = frobenius_splitting(A, carrier=I); show lattice(M);");
        assert_eq!(bad.exit_code(), 2);
        assert!(bad.commands[1]
            .error
            .as_deref()
            .unwrap()
            .contains("failed to bind"));
    }

    #[test]
    fn masked_output_is_stable() {
        let text =
            "ring A = poly(p=2, vars=[t1,t2]); module M = frobenius_splitting(A); show lattice(M);";
        assert_eq!(run(text).masked_json(), run(text).masked_json());
    }
}
