//! Scripted two-sided checks of the structural statements about special
//! ideals. Each check computes both sides by independent routes and compares.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::RngCore;

use super::annihilator::{audited_graded_annihilator, special_ideal_test, AnnihilatorAudit};
use super::lattice::enumerate_special_primes;
use crate::error::{Error, Result};
use crate::groebner::Containment;
use crate::module::FrobeniusModule;
use crate::skew::GradedTwoSidedIdeal;

/// Which statement a report checks. The CLI names are part of the script
/// language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    /// gr-ann(M(𝔟′R[x,f])/N) = (𝔟:𝔟′)R[x,f], gr-ann(L/N) = 𝔠R[x,f] and
    /// 0 :_R (M/L) = 𝔞 for a split of the minimal primes of 𝔟.
    QuotientAnnihilator,
    /// Iˢ(L) = {𝔭 ∈ Iˢ(M) : 𝔞 ⊄ 𝔭} for L = M(𝔞R[x,f]).
    SubmodulePrimes,
    /// (M(𝔞R[x,f]))(𝔟R[x,f]) = M((𝔞𝔟)R[x,f]).
    ProductLaw,
}

impl CheckKind {
    pub fn cli_name(self) -> &'static str {
        match self {
            CheckKind::QuotientAnnihilator => "thm_1_8",
            CheckKind::SubmodulePrimes => "thm_1_11",
            CheckKind::ProductLaw => "rmk_1_7_iii",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

/// Rendered algebraic value: canonical generator strings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rendered {
    Ideal(Vec<String>),
    /// A graded ideal: its chain components and stabilization index.
    Graded {
        chain: Vec<Vec<String>>,
        stable_from: usize,
    },
    IdealSet(Vec<Vec<String>>),
    Submodule(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct PartResult {
    pub label: String,
    pub expected: Rendered,
    pub computed: Rendered,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub kind: CheckKind,
    pub instance: String,
    pub parts: Vec<PartResult>,
    /// Facts about every graded annihilator computed along the way.
    pub audits: Vec<AnnihilatorAudit>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn verdict(&self) -> bool {
        self.parts.iter().all(|p| p.pass)
    }

    pub fn part(&self, label: &str) -> Option<&PartResult> {
        self.parts.iter().find(|p| p.label == label)
    }
}

fn render_graded<M: FrobeniusModule>(m: &M, g: &GradedTwoSidedIdeal<M::Ideal>) -> Result<Rendered> {
    Ok(Rendered::Graded {
        chain: g
            .chain()
            .iter()
            .map(|c| m.ideal_key(c))
            .collect::<Result<_>>()?,
        stable_from: g.stable_from(),
    })
}

fn reject(msg: impl Into<String>) -> Error {
    Error::InstanceRejected(msg.into())
}

/// Inputs for [`CheckKind::QuotientAnnihilator`].
#[derive(Debug, Clone)]
pub struct QuotientAnnihilatorParams<I> {
    pub b: I,
    /// Minimal primes of 𝔟. `None` computes them (monomial 𝔟 only); a supplied
    /// list is verified as an irredundant decomposition.
    pub primes: Option<Vec<I>>,
    /// Indices (0-based, into the sorted prime list) forming U; V is the rest.
    pub u: Vec<usize>,
    pub b_prime: I,
}

/// Inputs for [`CheckKind::SubmodulePrimes`].
#[derive(Debug, Clone)]
pub struct SubmodulePrimesParams<I> {
    pub a: I,
    /// Candidate primes; `None` uses the module's default universe.
    pub universe: Option<Vec<I>>,
}

/// Inputs for [`CheckKind::ProductLaw`].
#[derive(Debug, Clone)]
pub struct ProductLawParams<I> {
    pub a: I,
    pub b: I,
}

fn intersect_all<M: FrobeniusModule>(m: &M, ideals: &[&M::Ideal]) -> Result<M::Ideal> {
    let mut acc = m.unit_ideal();
    for i in ideals {
        acc = m.ideal_intersection(&acc, i)?;
    }
    Ok(acc)
}

/// Checks that `primes` is an irredundant prime decomposition of `b` and
/// returns it sorted by key.
pub fn verify_decomposition<M: FrobeniusModule>(
    m: &M,
    b: &M::Ideal,
    primes: &[M::Ideal],
) -> Result<Vec<M::Ideal>> {
    for p in primes {
        m.classify_prime(p)
            .map_err(|e| reject(format!("decomposition: {e}")))?;
    }
    let all: Vec<&M::Ideal> = primes.iter().collect();
    if m.ideal_compare(&intersect_all(m, &all)?, b)? != Containment::Equal {
        return Err(reject("decomposition does not intersect to b"));
    }
    for (i, p) in primes.iter().enumerate() {
        let others: Vec<&M::Ideal> = primes
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q)
            .collect();
        if !others.is_empty() && m.ideal_compare(&intersect_all(m, &others)?, p)?.is_le() {
            return Err(reject("decomposition is redundant"));
        }
    }
    let mut keyed: Vec<(Vec<String>, M::Ideal)> = primes
        .iter()
        .map(|p| Ok((m.ideal_key(p)?, p.clone())))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}

fn part(label: &str, expected: Rendered, computed: Rendered) -> PartResult {
    let pass = expected == computed;
    PartResult {
        label: label.into(),
        expected,
        computed,
        pass,
    }
}

pub fn check_quotient_annihilator<M: FrobeniusModule>(
    m: &M,
    params: &QuotientAnnihilatorParams<M::Ideal>,
    rng: &mut dyn RngCore,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let b_test = special_ideal_test(m, &params.b)?;
    if !b_test.is_special {
        return Err(reject("b is not a special M-ideal"));
    }
    let n = b_test.submodule;
    let primes = match &params.primes {
        Some(ps) => verify_decomposition(m, &params.b, ps)?,
        None => m
            .minimal_primes(&params.b)
            .map_err(|e| reject(format!("minimal primes: {e}")))?,
    };
    if primes.len() < 2 {
        return Err(reject("b needs at least two minimal primes"));
    }
    let u: BTreeSet<usize> = params.u.iter().copied().collect();
    if u.is_empty() || u.len() >= primes.len() || u.iter().any(|&i| i >= primes.len()) {
        return Err(reject(
            "U must be a nonempty proper subset of the prime indices",
        ));
    }
    let in_u: Vec<&M::Ideal> = primes
        .iter()
        .enumerate()
        .filter(|(i, _)| u.contains(i))
        .map(|(_, p)| p)
        .collect();
    let in_v: Vec<&M::Ideal> = primes
        .iter()
        .enumerate()
        .filter(|(i, _)| !u.contains(i))
        .map(|(_, p)| p)
        .collect();
    let a = intersect_all(m, &in_u)?;
    let c = intersect_all(m, &in_v)?;

    let bp_sub = m.special_submodule(&params.b_prime)?;
    if !m.sub_is_subset(&n, &bp_sub)? {
        return Err(reject("N is not contained in M(b'R[x,f])"));
    }
    let mut audits = Vec::new();
    let mut parts = Vec::new();

    // (i): module side via the quotient M(b'R[x,f])/N, ideal side via colon
    let bp_module = m.restrict(&bp_sub)?;
    let lhs = audited_graded_annihilator(&bp_module, &n, &mut audits, rng)?;
    let rhs = GradedTwoSidedIdeal::constant(m.ideal_colon(&params.b, &params.b_prime)?);
    parts.push(part("i", render_graded(m, &rhs)?, render_graded(m, &lhs)?));

    // (ii)
    let l = m.special_submodule(&a)?;
    let l_module = m.restrict(&l)?;
    let lhs2 = audited_graded_annihilator(&l_module, &n, &mut audits, rng)?;
    parts.push(part(
        "ii",
        render_graded(m, &GradedTwoSidedIdeal::constant(c))?,
        render_graded(m, &lhs2)?,
    ));

    // (iii)
    let lhs3 = audited_graded_annihilator(m, &l, &mut audits, rng)?;
    parts.push(part(
        "iii",
        Rendered::Ideal(m.ideal_key(&a)?),
        Rendered::Ideal(m.ideal_key(lhs3.component(0))?),
    ));

    let instance = format!(
        "b={:?} primes={:?} U={:?} b'={:?}",
        m.ideal_key(&params.b)?,
        primes
            .iter()
            .map(|p| m.ideal_key(p))
            .collect::<Result<Vec<_>>>()?,
        u,
        m.ideal_key(&params.b_prime)?
    );
    Ok(VerificationReport {
        kind: CheckKind::QuotientAnnihilator,
        instance,
        parts,
        audits,
        millis: start.elapsed().as_millis(),
    })
}

fn render_set<M: FrobeniusModule>(m: &M, ideals: &[M::Ideal]) -> Result<Rendered> {
    let mut keys: Vec<Vec<String>> = ideals
        .iter()
        .map(|i| m.ideal_key(i))
        .collect::<Result<_>>()?;
    keys.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Ok(Rendered::IdealSet(keys))
}

pub fn check_submodule_primes<M: FrobeniusModule>(
    m: &M,
    params: &SubmodulePrimesParams<M::Ideal>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let test = special_ideal_test(m, &params.a)?;
    if !test.is_special {
        return Err(reject("a is not a special M-ideal"));
    }
    let zero_ann = m.annihilator(&m.zero_sub())?;
    if m.ideal_compare(&zero_ann, &params.a)? == Containment::Equal {
        return Err(reject("a equals 0 :_R M"));
    }
    let universe = params
        .universe
        .clone()
        .unwrap_or_else(|| m.prime_universe());
    let l_module = m.restrict(&test.submodule)?;
    let computed = enumerate_special_primes(&l_module, &universe)?.ideals();
    let mut expected = Vec::new();
    for p in enumerate_special_primes(m, &universe)?.ideals() {
        if !m.ideal_compare(&params.a, &p)?.is_le() {
            expected.push(p);
        }
    }
    let parts = vec![part(
        "primes",
        render_set(m, &expected)?,
        render_set(m, &computed)?,
    )];
    Ok(VerificationReport {
        kind: CheckKind::SubmodulePrimes,
        instance: format!(
            "a={:?} universe={}",
            m.ideal_key(&params.a)?,
            universe.len()
        ),
        parts,
        audits: Vec::new(),
        millis: start.elapsed().as_millis(),
    })
}

pub fn check_product_law<M: FrobeniusModule>(
    m: &M,
    params: &ProductLawParams<M::Ideal>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let inner = m.restrict(&m.special_submodule(&params.a)?)?;
    let lhs = inner.special_submodule(&params.b)?;
    let rhs = m.special_submodule(&m.ideal_product(&params.a, &params.b)?)?;
    let parts = vec![part(
        "submodule",
        Rendered::Submodule(m.sub_key(&rhs)?),
        Rendered::Submodule(m.sub_key(&lhs)?),
    )];
    Ok(VerificationReport {
        kind: CheckKind::ProductLaw,
        instance: format!(
            "a={:?} b={:?}",
            m.ideal_key(&params.a)?,
            m.ideal_key(&params.b)?
        ),
        parts,
        audits: Vec::new(),
        millis: start.elapsed().as_millis(),
    })
}

/// Parameters for [`theorem_verifier`].
#[derive(Debug, Clone)]
pub enum CheckParams<I> {
    QuotientAnnihilator(QuotientAnnihilatorParams<I>),
    SubmodulePrimes(SubmodulePrimesParams<I>),
    ProductLaw(ProductLawParams<I>),
}

/// Dispatches to the individual checks.
pub fn theorem_verifier<M: FrobeniusModule>(
    m: &M,
    params: &CheckParams<M::Ideal>,
    rng: &mut dyn RngCore,
) -> Result<VerificationReport> {
    match params {
        CheckParams::QuotientAnnihilator(p) => check_quotient_annihilator(m, p, rng),
        CheckParams::SubmodulePrimes(p) => check_submodule_primes(m, p),
        CheckParams::ProductLaw(p) => check_product_law(m, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::module::SplitModule;
    use crate::ring::RingSpec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup() -> (crate::ring::Ring, SplitModule) {
        let r = RingSpec::standard(2, 2).unwrap();
        let m = SplitModule::whole(&r);
        (r, m)
    }

    #[test]
    fn quotient_annihilator_example() {
        let (r, m) = setup();
        let params = QuotientAnnihilatorParams {
            b: Ideal::parse(&r, &["t1*t2"]).unwrap(),
            primes: None,
            u: vec![0],
            b_prime: Ideal::parse(&r, &["t1"]).unwrap(),
        };
        let rep =
            check_quotient_annihilator(&m, &params, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert!(rep.verdict(), "{rep:?}");
        assert_eq!(
            rep.part("i").unwrap().computed,
            Rendered::Graded {
                chain: vec![vec!["t2".into()]],
                stable_from: 0
            }
        );
        assert!(rep.audits.iter().all(AnnihilatorAudit::ok));
    }

    #[test]
    fn supplied_decomposition_is_verified() {
        let (r, m) = setup();
        let b = Ideal::parse(&r, &["t1*t2"]).unwrap();
        let good = vec![
            Ideal::parse(&r, &["t2"]).unwrap(),
            Ideal::parse(&r, &["t1"]).unwrap(),
        ];
        let sorted = verify_decomposition(&m, &b, &good).unwrap();
        assert_eq!(m.ideal_key(&sorted[0]).unwrap(), vec!["t1"]);
        let bad = vec![Ideal::parse(&r, &["t1"]).unwrap()];
        assert!(matches!(
            verify_decomposition(&m, &b, &bad),
            Err(Error::InstanceRejected(_))
        ));
        let redundant = vec![
            Ideal::parse(&r, &["t1"]).unwrap(),
            Ideal::parse(&r, &["t2"]).unwrap(),
            Ideal::parse(&r, &["t1", "t2"]).unwrap(),
        ];
        assert!(matches!(
            verify_decomposition(&m, &b, &redundant),
            Err(Error::InstanceRejected(_))
        ));
    }

    #[test]
    fn rejected_instances_are_not_failures() {
        let (r, m) = setup();
        let params = QuotientAnnihilatorParams {
            b: Ideal::parse(&r, &["t1"]).unwrap(),
            primes: None,
            u: vec![0],
            b_prime: Ideal::parse(&r, &["t1"]).unwrap(),
        };
        let err =
            check_quotient_annihilator(&m, &params, &mut ChaCha8Rng::seed_from_u64(1)).unwrap_err();
        assert!(matches!(err, Error::InstanceRejected(_)));
        let zero = SubmodulePrimesParams {
            a: Ideal::zero(&r),
            universe: None,
        };
        assert!(matches!(
            check_submodule_primes(&m, &zero),
            Err(Error::InstanceRejected(_))
        ));
    }

    #[test]
    fn submodule_primes_example() {
        let (r, m) = setup();
        let params = SubmodulePrimesParams {
            a: Ideal::parse(&r, &["t1*t2"]).unwrap(),
            universe: None,
        };
        let rep = check_submodule_primes(&m, &params).unwrap();
        assert!(rep.verdict());
        assert_eq!(rep.parts[0].computed, Rendered::IdealSet(vec![vec![]]));
    }

    #[test]
    fn product_law_zero_example() {
        let (r, m) = setup();
        let params = ProductLawParams {
            a: Ideal::zero(&r),
            b: Ideal::zero(&r),
        };
        let rep = theorem_verifier(
            &m,
            &CheckParams::ProductLaw(params),
            &mut ChaCha8Rng::seed_from_u64(0),
        )
        .unwrap();
        assert!(rep.verdict());
        assert_eq!(rep.parts[0].computed, Rendered::Submodule(vec![]));
    }
}
