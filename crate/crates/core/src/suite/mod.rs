//! The built-in verification suite. Each criterion runs seeded random or
//! fixed instances and compares the library against [`oracle`].

pub mod oracle;

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::groebner::Ideal;
use crate::lab::{
    audited_graded_annihilator, build_artinian, build_counterexample, check_product_law,
    check_quotient_annihilator, check_submodule_primes, enumerate_special_primes,
    graded_annihilator, special_ideal_lattice, special_ideal_test, AnnihilatorAudit,
    ProductLawParams, QuotientAnnihilatorParams, Rendered, SpecialIdealLattice,
    SubmodulePrimesParams,
};
use crate::module::{CoordIdeal, FrobeniusModule, ProductModule, SplitModule};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring, RingSpec};
use oracle::{
    bounded_membership, intersect_variable_primes, intersection_closure, minimal_primes_brute,
    monomials_in_prime, render_supports,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Fewer random instances, for smoke runs.
    pub quick: bool,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            quick: false,
            seed: 1,
        }
    }
}

/// Criterion ids with short titles.
pub const CRITERIA: [(u32, &str); 9] = [
    (1, "counterexample: special primes grow with n"),
    (2, "gr-ann(M(b'R[x,f])/N) equals (b:b')R[x,f]"),
    (3, "gr-ann(L/N) equals cR[x,f] and L has special ideal a"),
    (4, "graded annihilators are constant and radical"),
    (5, "special ideals of F_2[t1,t2] and the correspondence"),
    (6, "special primes of L = M(aR[x,f])"),
    (7, "product-of-fields lattices match brute force"),
    (8, "intersection closure, x-divisibility, product law"),
    (9, "Groebner membership matches linear algebra"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: &'static str,
    pub pass: bool,
    pub instances: usize,
    pub failures: usize,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({} instances, {} failures, {} ms) {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.instances,
            self.failures,
            self.millis,
            self.detail
        )
    }
}

#[derive(Debug, Default, Clone)]
struct Tally {
    instances: usize,
    failures: Vec<String>,
    note: String,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

#[derive(Debug, Clone, Default)]
struct QuotientRun {
    first: Tally,
    second: Tally,
}

/// Runs criteria, sharing instances and annihilator audits between them.
#[derive(Debug)]
pub struct Suite {
    cfg: SuiteConfig,
    audits: Vec<AnnihilatorAudit>,
    quotient: Option<QuotientRun>,
}

impl Suite {
    pub fn new(cfg: SuiteConfig) -> Self {
        Self {
            cfg,
            audits: Vec::new(),
            quotient: None,
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }

    fn count(&self, full: usize, quick: usize) -> usize {
        if self.cfg.quick {
            quick
        } else {
            full
        }
    }

    /// Runs one criterion. Minimum instance counts apply to full runs.
    pub fn run(&mut self, id: u32) -> CriterionOutcome {
        let title = CRITERIA
            .iter()
            .find(|c| c.0 == id)
            .map(|c| c.1)
            .unwrap_or("unknown criterion");
        let start = Instant::now();
        let (result, minimum) = match id {
            1 => (self.counterexample(), 4),
            2 => (
                self.quotient_run().map(|q| q.first.clone()),
                self.count(200, 1),
            ),
            3 => (
                self.quotient_run().map(|q| q.second.clone()),
                self.count(400, 1),
            ),
            4 => (self.annihilator_audits(), 1),
            5 => (self.correspondence(), 6),
            6 => (self.submodule_primes(), 20),
            7 => (self.product_lattices(), 5),
            8 => (self.remark_suite(), self.count(100, 1)),
            9 => (self.membership(), self.count(100, 1)),
            _ => (Ok(Tally::default()), 1),
        };
        let millis = start.elapsed().as_millis();
        match result {
            Ok(t) => {
                let enough = t.instances >= minimum;
                let detail = match (t.failures.first(), enough) {
                    (Some(f), _) => format!("first failure: {f}"),
                    (None, false) => format!("only {} instances (need {minimum})", t.instances),
                    (None, true) => t.note.clone(),
                };
                CriterionOutcome {
                    id,
                    title,
                    pass: t.failures.is_empty() && enough,
                    instances: t.instances,
                    failures: t.failures.len(),
                    detail,
                    millis,
                }
            }
            Err(e) => CriterionOutcome {
                id,
                title,
                pass: false,
                instances: 0,
                failures: 1,
                detail: format!("error: {e}"),
                millis,
            },
        }
    }

    pub fn run_all(&mut self) -> Vec<CriterionOutcome> {
        CRITERIA.iter().map(|(id, _)| self.run(*id)).collect()
    }

    fn counterexample(&mut self) -> Result<Tally> {
        let mut t = Tally::default();
        let mut sizes: Vec<usize> = Vec::new();
        for n in 1..=4 {
            let m = build_counterexample(2, n)?;
            for i in 0..n {
                let p = Ideal::variables(m.ring(), [i]);
                let ok = m.special_submodule(&p)?.same_ideal(&p)?;
                t.check(ok, || format!("n={n}: M(<th{}>R[x,f]) differs", i + 1));
            }
            let sp = enumerate_special_primes(&m, &m.prime_universe())?;
            t.check(sp.len() > n, || {
                format!("n={n}: only {} special primes", sp.len())
            });
            if let Some(&prev) = sizes.last() {
                t.check(sp.len() > prev, || {
                    format!("n={n}: count {} not above {prev}", sp.len())
                });
            }
            sizes.push(sp.len());
        }
        t.note = format!("|special primes| for n=1..4: {sizes:?}");
        Ok(t)
    }

    fn quotient_run(&mut self) -> Result<&QuotientRun> {
        if self.quotient.is_none() {
            let run = self.compute_quotient_run()?;
            self.quotient = Some(run);
        }
        Ok(self.quotient.as_ref().unwrap())
    }

    fn compute_quotient_run(&mut self) -> Result<QuotientRun> {
        let mut rng = self.rng(2);
        let mut run = QuotientRun::default();
        for idx in 0..self.count(200, 40) {
            let p = *[2u64, 3].choose(&mut rng).unwrap();
            let n = rng.gen_range(2..=3usize);
            let ring = RingSpec::standard(p, n)?;
            let m = SplitModule::whole(&ring);
            let supports = loop {
                let k = rng.gen_range(1..=3);
                let s: Vec<u32> = (0..k).map(|_| rng.gen_range(1..1u32 << n)).collect();
                if minimal_primes_brute(&s, n).len() >= 2 {
                    break s;
                }
            };
            let mut primes: Vec<(Vec<String>, u32)> = minimal_primes_brute(&supports, n)
                .into_iter()
                .map(|s| Ok((variable_prime(&ring, s).describe()?, s)))
                .collect::<Result<_>>()?;
            primes.sort();
            let r = primes.len();
            let pick = rng.gen_range(1..(1u32 << r) - 1);
            let u: Vec<usize> = (0..r).filter(|i| pick & (1 << i) != 0).collect();
            let u_masks: Vec<u32> = u.iter().map(|&i| primes[i].1).collect();
            let v_masks: Vec<u32> = (0..r)
                .filter(|i| pick & (1 << i) == 0)
                .map(|i| primes[i].1)
                .collect();
            let a_supports = intersect_variable_primes(&u_masks, n);
            let a_oracle = render_supports(&ring, &a_supports);
            let c_oracle = render_supports(&ring, &intersect_variable_primes(&v_masks, n));
            let mut supplied: Vec<Ideal> = primes
                .iter()
                .map(|(_, s)| variable_prime(&ring, *s))
                .collect();
            supplied.shuffle(&mut rng);
            let params = QuotientAnnihilatorParams {
                b: squarefree_ideal(&ring, &supports)?,
                primes: Some(supplied),
                u,
                b_prime: squarefree_ideal(&ring, &a_supports)?,
            };
            let label = format!("#{idx} p={p} n={n} b={supports:?} U-primes={u_masks:?}");
            match check_quotient_annihilator(&m, &params, &mut rng) {
                Ok(rep) => {
                    self.audits.extend(rep.audits.iter().copied());
                    let part = |l: &str| rep.part(l).unwrap();
                    let graded_is = |r: &Rendered, want: &BTreeSet<String>| matches!(r, Rendered::Graded { chain, .. } if chain.len() == 1 && as_set(&chain[0]) == *want);
                    let i = part("i");
                    run.first
                        .check(i.pass && graded_is(&i.expected, &c_oracle), || {
                            format!("{label}: part i")
                        });
                    let ii = part("ii");
                    run.second
                        .check(ii.pass && graded_is(&ii.expected, &c_oracle), || {
                            format!("{label}: part ii")
                        });
                    let iii = part("iii");
                    let a_ok = matches!(&iii.expected, Rendered::Ideal(k) if as_set(k) == a_oracle);
                    run.second
                        .check(iii.pass && a_ok, || format!("{label}: part iii"));
                }
                Err(e) => {
                    run.first.check(false, || format!("{label}: {e}"));
                    run.second.check(false, || format!("{label}: {e}"));
                }
            }
        }
        run.first.note = format!("{} random squarefree instances", run.first.instances);
        run.second.note = format!("{} part checks", run.second.instances);
        Ok(run)
    }

    fn audit_lattice<M: FrobeniusModule>(
        &mut self,
        m: &M,
        lattice: &SpecialIdealLattice<M>,
        rng: &mut ChaCha8Rng,
    ) -> Result<()> {
        for e in &lattice.special_ideals {
            audited_graded_annihilator(m, &e.submodule, &mut self.audits, rng)?;
        }
        Ok(())
    }

    fn annihilator_audits(&mut self) -> Result<Tally> {
        self.quotient_run()?;
        let mut rng = self.rng(4);
        for (p, n) in [(2, 2), (3, 2), (2, 3)] {
            let m = SplitModule::whole(&RingSpec::standard(p, n)?);
            let lattice = special_ideal_lattice(&m, &m.prime_universe())?;
            self.audit_lattice(&m, &lattice, &mut rng)?;
        }
        for m in [
            ProductModule::identity(2, 3)?,
            build_artinian(3, 3, diagonal(&[1, 2, 2]))?,
        ] {
            let lattice = special_ideal_lattice(&m, &m.prime_universe())?;
            self.audit_lattice(&m, &lattice, &mut rng)?;
        }
        for _ in 0..self.count(30, 10) {
            let p = *[2u64, 3].choose(&mut rng).unwrap();
            let ring = RingSpec::standard(p, 2)?;
            let m = SplitModule::whole(&ring);
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2))
                .map(|_| random_poly(&ring, &mut rng, 2, None, 3))
                .collect();
            let n = m.special_submodule(&Ideal::new(&ring, gens)?)?;
            audited_graded_annihilator(&m, &n, &mut self.audits, &mut rng)?;
        }
        let mut t = Tally::default();
        for (i, a) in self.audits.iter().enumerate() {
            t.check(a.ok(), || {
                format!(
                    "annihilator #{i}: stable_from={} radical={}",
                    a.stable_from, a.radical
                )
            });
        }
        t.note = format!("{} graded annihilators audited", t.instances);
        Ok(t)
    }

    fn correspondence(&mut self) -> Result<Tally> {
        let mut t = Tally::default();
        let ring = RingSpec::standard(2, 2)?;
        let m = SplitModule::whole(&ring);
        let lattice = special_ideal_lattice(&m, &m.prime_universe())?;
        let expected: BTreeSet<Vec<String>> = [
            Ideal::zero(&ring),
            Ideal::parse(&ring, &["t1"])?,
            Ideal::parse(&ring, &["t2"])?,
            Ideal::parse(&ring, &["t1", "t2"])?,
            Ideal::parse(&ring, &["t1*t2"])?,
            Ideal::unit(&ring),
        ]
        .iter()
        .map(|i| i.describe())
        .collect::<Result<_>>()?;
        let got: BTreeSet<Vec<String>> = lattice.keys().into_iter().collect();
        t.check(got == expected && lattice.len() == 6, || {
            format!("lattice {got:?}")
        });
        for (p, n) in [(2, 2), (3, 2), (2, 3)] {
            let m = SplitModule::whole(&RingSpec::standard(p, n)?);
            self.correspondence_for(&m, &mut t)?;
        }
        t.note = format!("I(F_2[t1,t2]) = {:?}", lattice.keys());
        Ok(t)
    }

    fn correspondence_for(&mut self, m: &SplitModule, t: &mut Tally) -> Result<()> {
        let ring = m.ring();
        let n = ring.nvars();
        let lattice = special_ideal_lattice(m, &m.prime_universe())?;
        for e in &lattice.special_ideals {
            let ann = m.annihilator(&e.submodule)?;
            t.check(ann.describe()? == e.key, || {
                format!("(M(bR[x,f]) : M) != b for {:?}", e.key)
            });
            let back = m.special_submodule(&ann)?;
            t.check(back.same_ideal(&e.submodule)?, || {
                format!("M((N:M)R[x,f]) != N for {:?}", e.key)
            });
            let g = graded_annihilator(m, &e.submodule)?;
            let inner = m.special_submodule(g.component(0))?;
            t.check(inner.is_subset_of(&e.submodule)?, || {
                format!("M(gr-ann_0) not in N for {:?}", e.key)
            });
        }
        let chain = lattice.longest_submodule_chain(m)?;
        t.check(chain <= lattice.len(), || {
            format!("chain of length {chain} exceeds {}", lattice.len())
        });
        let masks: Vec<u32> = lattice
            .special_primes
            .ideals()
            .iter()
            .map(|p| {
                Ok(p.variable_support()?
                    .unwrap()
                    .iter()
                    .map(|i| 1u32 << i)
                    .sum())
            })
            .collect::<Result<_>>()?;
        let mut closure: BTreeSet<BTreeSet<String>> = intersection_closure(&masks, n)
            .iter()
            .map(|s| render_supports(ring, s))
            .collect();
        closure.insert(BTreeSet::from(["1".to_string()]));
        let got: BTreeSet<BTreeSet<String>> = lattice.keys().iter().map(|k| as_set(k)).collect();
        t.check(got == closure, || {
            format!(
                "p={} n={n}: lattice differs from intersection closure",
                ring.p()
            )
        });
        Ok(())
    }

    fn submodule_primes(&mut self) -> Result<Tally> {
        let mut t = Tally::default();
        let mut rng = self.rng(6);
        for p in [2u64, 3] {
            let ring = RingSpec::standard(p, 2)?;
            let m = SplitModule::whole(&ring);
            let lattice = special_ideal_lattice(&m, &m.prime_universe())?;
            for e in lattice.special_ideals.iter().filter(|e| !e.key.is_empty()) {
                let minimal: Vec<Monomial> = e
                    .ideal
                    .groebner_basis()?
                    .iter()
                    .map(|g| g.leading_monomial().unwrap().clone())
                    .collect();
                let oracle: BTreeSet<BTreeSet<String>> = (0..1u32 << 2)
                    .filter(|&s| !monomials_in_prime(&minimal, s))
                    .map(|s| prime_names(&ring, s))
                    .collect();
                for _ in 0..4 {
                    let a = random_presentation(&e.ideal, &mut rng)?;
                    let rep =
                        check_submodule_primes(&m, &SubmodulePrimesParams { a, universe: None })?;
                    let matches = |r: &Rendered| matches!(r, Rendered::IdealSet(s) if s.iter().map(|k| as_set(k)).collect::<BTreeSet<_>>() == oracle);
                    let part = &rep.parts[0];
                    t.check(
                        rep.verdict() && matches(&part.expected) && matches(&part.computed),
                        || format!("p={p} a={:?}", e.key),
                    );
                }
            }
        }
        t.note = format!("{} presentations over F_2 and F_3", t.instances);
        Ok(t)
    }

    fn product_lattices(&mut self) -> Result<Tally> {
        let mut t = Tally::default();
        let mut rng = self.rng(7);
        let mut modules: Vec<ProductModule> = (1..=5)
            .map(|k| ProductModule::identity(2, k))
            .collect::<Result<_>>()?;
        for k in 1..=3 {
            let d: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=2)).collect();
            modules.push(build_artinian(3, k, diagonal(&d))?);
        }
        for m in &modules {
            let k = m.factors();
            let lattice = special_ideal_lattice(m, &m.prime_universe())?;
            let got: BTreeSet<u32> = lattice
                .special_ideals
                .iter()
                .map(|e| e.ideal.mask())
                .collect();
            let mut brute = BTreeSet::new();
            for mask in 0..1u32 << k {
                if special_ideal_test(m, &CoordIdeal::from_mask(k, mask))?.is_special {
                    brute.insert(mask);
                }
            }
            // x acts invertibly and diagonally, so every ideal is special
            let closed: BTreeSet<u32> = (0..1u32 << k).collect();
            t.check(got == brute && brute == closed, || {
                format!("p={} k={k}: {got:?} vs {brute:?}", m.p())
            });
        }
        t.note = "identity actions for k=1..5 over F_2, diagonal actions over F_3".into();
        Ok(t)
    }

    fn remark_suite(&mut self) -> Result<Tally> {
        let mut t = Tally::default();
        for (p, n) in [(2, 2), (3, 2), (2, 3)] {
            let m = SplitModule::whole(&RingSpec::standard(p, n)?);
            let lattice = special_ideal_lattice(&m, &m.prime_universe())?;
            let keys: BTreeSet<Vec<String>> = lattice.keys().into_iter().collect();
            for a in &lattice.special_ideals {
                for b in &lattice.special_ideals {
                    let meet = a.submodule.intersection(&b.submodule)?;
                    let ann = m.annihilator(&meet)?;
                    let both = m.ideal_intersection(&a.ideal, &b.ideal)?;
                    t.check(
                        ann.same_ideal(&both)? && keys.contains(&ann.describe()?),
                        || format!("p={p} n={n}: {:?} meet {:?}", a.key, b.key),
                    );
                }
                t.check(m.x_divisibility(&a.submodule)?, || {
                    format!("p={p} n={n}: {:?} not x-divisible", a.key)
                });
            }
        }
        for m in [
            ProductModule::identity(2, 3)?,
            build_artinian(3, 2, diagonal(&[2, 1]))?,
        ] {
            for e in special_ideal_lattice(&m, &m.prime_universe())?.special_ideals {
                t.check(m.x_divisibility(&e.submodule)?, || {
                    format!("product: {:?} not x-divisible", e.key)
                });
            }
        }
        let mut rng = self.rng(8);
        let pairs = self.count(100, 30);
        for idx in 0..pairs {
            let p = *[2u64, 3].choose(&mut rng).unwrap();
            let n = rng.gen_range(1..=3usize);
            let ring = RingSpec::standard(p, n)?;
            let m = SplitModule::whole(&ring);
            let a = random_monomial_ideal(&ring, &mut rng)?;
            let b = random_monomial_ideal(&ring, &mut rng)?;
            let label = format!("#{idx} p={p} a={a} b={b}");
            let rep = check_product_law(&m, &ProductLawParams { a, b })?;
            t.check(rep.verdict(), || label);
        }
        let pm = ProductModule::identity(2, 3)?;
        for a in pm.all_ideals() {
            for b in pm.all_ideals() {
                let rep = check_product_law(&pm, &ProductLawParams { a, b })?;
                t.check(rep.verdict(), || format!("product: {a} {b}"));
            }
        }
        t.note = format!("{pairs} random monomial pairs plus lattice and product-mode checks");
        Ok(t)
    }

    fn membership(&mut self) -> Result<Tally> {
        let mut t = Tally::default();
        let mut rng = self.rng(9);
        let mut members = 0;
        for idx in 0..self.count(100, 50) {
            let p = *[2u64, 3].choose(&mut rng).unwrap();
            let n = rng.gen_range(1..=2usize);
            let ring = RingSpec::standard(p, n)?;
            let homogeneous = idx % 2 == 0;
            let degree = |rng: &mut ChaCha8Rng| {
                if homogeneous {
                    Some(rng.gen_range(1..=4))
                } else {
                    None
                }
            };
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..=n + 1))
                .map(|_| {
                    let d = degree(&mut rng);
                    random_poly_from(&ring, &mut rng, 1, 4, d, 3)
                })
                .collect();
            let fd = degree(&mut rng);
            let f = if rng.gen_bool(0.5) {
                let mut acc = Polynomial::zero(&ring);
                for g in &gens {
                    let gd = g.total_degree().unwrap_or(0);
                    let q = match fd {
                        Some(d) if d < gd => continue,
                        Some(d) => random_poly(&ring, &mut rng, 4, Some(d - gd), 2),
                        None => random_poly(&ring, &mut rng, 4u64.saturating_sub(gd), None, 2),
                    };
                    acc = acc.add(&q.mul(g));
                }
                acc
            } else {
                random_poly(&ring, &mut rng, 4, fd, 3)
            };
            let engine = Ideal::new(&ring, gens.clone())?.contains(&f)?;
            members += engine as usize;
            let oracle = if homogeneous {
                bounded_membership(&ring, &f, &gens, f.total_degree().unwrap_or(0))
            } else {
                // a bounded span certificate is sound; widen the bound before disagreeing
                [8, 12, 16]
                    .iter()
                    .any(|&b| bounded_membership(&ring, &f, &gens, b))
            };
            t.check(engine == oracle, || {
                format!("#{idx} p={p} f={f} gens={gens:?}: engine {engine}, oracle {oracle}")
            });
        }
        t.note = format!("{members} members, {} non-members", t.instances - members);
        Ok(t)
    }
}

/// Runs every criterion with the given configuration.
pub fn run_suite(cfg: SuiteConfig) -> Vec<CriterionOutcome> {
    Suite::new(cfg).run_all()
}

fn as_set(k: &[String]) -> BTreeSet<String> {
    k.iter().cloned().collect()
}

fn variable_prime(ring: &Ring, s: u32) -> Ideal {
    Ideal::variables(ring, (0..ring.nvars()).filter(|i| s & (1 << i) != 0))
}

fn prime_names(ring: &Ring, s: u32) -> BTreeSet<String> {
    (0..ring.nvars())
        .filter(|i| s & (1 << i) != 0)
        .map(|i| ring.var_names()[i].clone())
        .collect()
}

fn squarefree_ideal(ring: &Ring, supports: &[u32]) -> Result<Ideal> {
    let gens = supports
        .iter()
        .map(|&s| {
            let e: Vec<u32> = (0..ring.nvars()).map(|i| (s >> i) & 1).collect();
            Polynomial::monomial(ring, &e)
        })
        .collect();
    Ideal::new(ring, gens)
}

fn diagonal(d: &[u32]) -> Vec<Vec<u32>> {
    (0..d.len())
        .map(|i| {
            (0..d.len())
                .map(|j| if i == j { d[i] } else { 0 })
                .collect()
        })
        .collect()
}

fn random_monomial(nvars: usize, rng: &mut ChaCha8Rng, degree: u64) -> Monomial {
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(e)
}

/// Random polynomial with up to `terms` terms and nonzero result, either of
/// total degree ≤ `max_deg` or homogeneous of the given degree.
fn random_poly(
    ring: &Ring,
    rng: &mut ChaCha8Rng,
    max_deg: u64,
    homogeneous: Option<u64>,
    terms: usize,
) -> Polynomial {
    random_poly_from(ring, rng, 0, max_deg, homogeneous, terms)
}

fn random_poly_from(
    ring: &Ring,
    rng: &mut ChaCha8Rng,
    min_deg: u64,
    max_deg: u64,
    homogeneous: Option<u64>,
    terms: usize,
) -> Polynomial {
    let p = ring.p();
    loop {
        let f = Polynomial::from_terms(
            ring,
            (0..rng.gen_range(1..=terms)).map(|_| {
                let d = homogeneous.unwrap_or_else(|| rng.gen_range(min_deg..=max_deg));
                (random_monomial(ring.nvars(), rng, d), rng.gen_range(1..p))
            }),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_monomial_ideal(ring: &Ring, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let gens = (0..rng.gen_range(0..=2))
        .map(|_| {
            let d = rng.gen_range(0..=3);
            Polynomial::term(ring, 1, random_monomial(ring.nvars(), rng, d))
        })
        .collect();
    Ideal::new(ring, gens)
}

/// A different generating set of the same ideal: scaled generators, each
/// perturbed by multiples of the others, plus a redundant multiple.
fn random_presentation(ideal: &Ideal, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let ring = ideal.ring();
    let base: Vec<Polynomial> = ideal.groebner_basis()?.to_vec();
    let mut gens = Vec::new();
    for (i, g) in base.iter().enumerate() {
        let mut h = g.scale(rng.gen_range(1..ring.p()));
        for (j, other) in base.iter().enumerate() {
            if j > i && rng.gen_bool(0.5) {
                h = h.add(&random_poly(ring, rng, 2, None, 2).mul(other));
            }
        }
        gens.push(h);
    }
    if let Some(g) = base.choose(rng) {
        gens.push(random_poly(ring, rng, 2, None, 2).mul(g));
    }
    gens.shuffle(rng);
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let outcomes = run_suite(SuiteConfig {
            quick: true,
            seed: 7,
        });
        for o in &outcomes {
            assert!(o.pass, "{o}");
        }
        assert_eq!(outcomes.len(), 9);
    }
}
