//! Reduced Gröbner bases (Buchberger with the product and chain criteria) and
//! the ideal operations built on them.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring, RingSpec};

/// Outcome of comparing two ideals (or graded ideals, or submodules).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Containment {
    Equal,
    /// Left strictly inside right.
    Subset,
    /// Right strictly inside left.
    Superset,
    Incomparable,
}

impl Containment {
    pub fn from_inclusions(left_in_right: bool, right_in_left: bool) -> Self {
        match (left_in_right, right_in_left) {
            (true, true) => Containment::Equal,
            (true, false) => Containment::Subset,
            (false, true) => Containment::Superset,
            (false, false) => Containment::Incomparable,
        }
    }

    /// Left ⊆ right.
    pub fn is_le(self) -> bool {
        matches!(self, Containment::Equal | Containment::Subset)
    }
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Containment::Equal => "equal",
            Containment::Subset => "subset",
            Containment::Superset => "superset",
            Containment::Incomparable => "incomparable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Colon,
}

/// An ideal of F_p[θ₁..θₙ] given by generators. The reduced Gröbner basis is
/// computed on first use and cached.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

struct StepCounter {
    used: u64,
    limit: u64,
}

impl StepCounter {
    fn new(ring: &Ring) -> Self {
        Self {
            used: 0,
            limit: ring.budget().steps,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(format!(
                "more than {} reduction steps",
                self.limit
            )))
        } else {
            Ok(())
        }
    }
}

/// Full reduction of `f` by a list of monic polynomials.
fn reduce(f: &Polynomial, basis: &[Polynomial], steps: &mut StepCounter) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let mut rest = f.clone();
    let mut remainder: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = rest.terms().first().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                steps.tick()?;
                let q = g.leading_monomial().expect("nonzero").quotient_of(&m);
                rest = rest.sub(&g.mul_term(c, &q));
            }
            None => {
                rest.pop_leading();
                remainder.push((m, c));
            }
        }
    }
    Ok(Polynomial::from_sorted(&ring, remainder))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let l = lf.lcm(lg);
    f.mul_term(1, &lf.quotient_of(&l))
        .sub(&g.mul_term(1, &lg.quotient_of(&l)))
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Buchberger's algorithm; returns the reduced basis sorted increasingly by
/// leading monomial.
fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut steps = StepCounter::new(ring);
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add =
        |h: Polynomial, basis: &mut Vec<Polynomial>, pending: &mut HashSet<(usize, usize)>| {
            let k = basis.len();
            for i in 0..k {
                pending.insert((i, k));
            }
            basis.push(h);
        };

    for g in gens {
        let r = reduce(g, &basis, &mut steps)?;
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(vec![Polynomial::one(ring)]);
            }
            add(r.monic(), &mut basis, &mut pending);
        }
    }

    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first, index order on ties
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = basis[a.0]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[a.1].leading_monomial().unwrap());
                let lb = basis[b.0]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[b.1].leading_monomial().unwrap());
                ring.cmp_monomials(&la, &lb).then_with(|| a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));

        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending.contains(&pair_key(i, k))
                && !pending.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis, &mut steps)?;
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(vec![Polynomial::one(ring)]);
            }
            add(r.monic(), &mut basis, &mut pending);
        }
    }

    // minimize: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().unwrap();
            k != idx && lh.divides(lm) && (lh != lm || k < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // inter-reduce
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        reduced.push(reduce(&keep[idx], &others, &mut steps)?.monic());
    }
    reduced.sort_by(|a, b| {
        ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    Ok(reduced)
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            RingSpec::check_same(ring, g.ring())?;
        }
        Ok(Self {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        })
    }

    /// Parses each generator with [`crate::parse::parse_polynomial`].
    pub fn parse(ring: &Ring, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| crate::parse::parse_polynomial(ring, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new()).expect("no generators")
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by the variables with the given indices.
    pub fn variables(ring: &Ring, indices: impl IntoIterator<Item = usize>) -> Self {
        let gens = indices
            .into_iter()
            .map(|i| Polynomial::var(ring, i))
            .collect();
        Self::new(ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Gröbner basis (monic, auto-reduced, sorted by leading
    /// monomial). Computed once; a budget failure is not cached.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.ring, &self.generators)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Copy of the ideal with its basis populated.
    pub fn with_basis(&self) -> Result<Ideal> {
        self.groebner_basis()?;
        Ok(self.clone())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        RingSpec::check_same(&self.ring, f.ring())?;
        let gb = self.groebner_basis()?;
        reduce(f, gb, &mut StepCounter::new(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(Polynomial::is_constant))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// Every reduced basis element is a single term.
    pub fn is_monomial(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().all(Polynomial::is_monomial))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        RingSpec::check_same(&self.ring, &other.ring)?;
        for g in self.groebner_basis()? {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn compare(&self, other: &Ideal) -> Result<Containment> {
        Ok(Containment::from_inclusions(
            self.is_subset_of(other)?,
            other.is_subset_of(self)?,
        ))
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        RingSpec::check_same(&self.ring, &other.ring)?;
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn combine(&self, other: &Ideal, op: IdealOp) -> Result<Ideal> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersection => self.intersection(other),
            IdealOp::Colon => self.colon(other),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        RingSpec::check_same(&self.ring, &other.ring)?;
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Ideal::new(&self.ring, gens)?.with_basis()
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        RingSpec::check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens)?.with_basis()
    }

    /// `I ∩ J` as the contraction of `t·I + (1−t)·J` to the base ring.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        RingSpec::check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.extend_front(1);
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(t.mul(&g.embed(&ext, 1)));
        }
        for g in &other.generators {
            gens.push(one_minus_t.mul(&g.embed(&ext, 1)));
        }
        let big = Ideal::new(&ext, gens)?;
        let kept: Vec<Polynomial> = big
            .groebner_basis()?
            .iter()
            .filter_map(|g| g.contract(&self.ring, 1))
            .collect();
        Ideal::new(&self.ring, kept)?.with_basis()
    }

    /// `I : g`, via `(I ∩ ⟨g⟩) / g`. `I : 0` is the unit ideal.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        RingSpec::check_same(&self.ring, g.ring())?;
        if g.is_zero() {
            return Ideal::unit(&self.ring).with_basis();
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let inter = self.intersection(&principal)?;
        let gens = inter
            .groebner_basis()?
            .iter()
            .map(|h| h.exact_div(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)?.with_basis()
    }

    /// `I : J = ⋂_{g ∈ gens(J)} (I : g)`; `I : ⟨0⟩` is the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        RingSpec::check_same(&self.ring, &other.ring)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in other.groebner_basis()? {
            acc = acc.intersection(&self.colon_element(g)?)?;
        }
        acc.with_basis()
    }

    /// `f ∈ √I` by the Rabinowitsch trick: `1 ∈ I + ⟨1 − y·f⟩`.
    pub fn radical_membership(&self, f: &Polynomial) -> Result<bool> {
        RingSpec::check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let ext = self.ring.extend_front(1);
        let y = Polynomial::var(&ext, 0);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.embed(&ext, 1)).collect();
        gens.push(Polynomial::one(&ext).sub(&y.mul(&f.embed(&ext, 1))));
        Ideal::new(&ext, gens)?.is_unit()
    }

    /// Exponent supports of the generators, requiring each to be a single term.
    fn monomial_supports(&self) -> Result<Vec<u64>> {
        if self.ring.nvars() > 64 {
            return Err(Error::InvalidArgument("at most 64 variables".into()));
        }
        let mut out = Vec::new();
        for g in &self.generators {
            if g.is_zero() {
                continue;
            }
            if !g.is_monomial() {
                return Err(Error::MonomialIdealRequired);
            }
            let m = g.leading_monomial().unwrap();
            out.push(m.support().fold(0u64, |acc, i| acc | (1 << i)));
        }
        Ok(out)
    }

    /// `√I` for a monomial ideal: squarefree parts of the generators.
    pub fn monomial_radical(&self) -> Result<Ideal> {
        self.monomial_supports()?;
        let gens = self
            .generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                Polynomial::term(
                    &self.ring,
                    1,
                    g.leading_monomial().unwrap().squarefree_part(),
                )
            })
            .collect();
        Ideal::new(&self.ring, gens)?.with_basis()
    }

    /// Minimal primes of a proper nonzero monomial ideal, each generated by a
    /// set of variables. Sorted by variable set.
    pub fn monomial_minimal_primes(&self) -> Result<Vec<Ideal>> {
        let supports = self.monomial_supports()?;
        if supports.is_empty() || supports.contains(&0) {
            return Err(Error::ProperNonzeroRequired);
        }
        Ok(minimal_transversals(&supports)
            .into_iter()
            .map(|mask| Ideal::variables(&self.ring, (0..64).filter(|i| mask & (1 << i) != 0)))
            .collect())
    }

    /// If every reduced basis element is a single variable, the set of those
    /// variables (the zero ideal gives the empty set).
    pub fn variable_support(&self) -> Result<Option<Vec<usize>>> {
        let mut vars = Vec::new();
        for g in self.groebner_basis()? {
            let m = match (g.is_monomial(), g.leading_monomial()) {
                (true, Some(m)) if m.degree() == 1 => m,
                _ => return Ok(None),
            };
            vars.push(m.support().next().unwrap());
        }
        vars.sort_unstable();
        Ok(Some(vars))
    }

    /// Reduced basis elements rendered as strings, in basis order.
    pub fn describe(&self) -> Result<Vec<String>> {
        Ok(self
            .groebner_basis()?
            .iter()
            .map(|g| g.to_string())
            .collect())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = match self.gb.get() {
            Some(gb) => gb.iter().map(|g| g.to_string()).collect(),
            None => self.generators.iter().map(|g| g.to_string()).collect(),
        };
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Minimal hitting sets of the given nonempty supports (bitmasks), sorted by
/// (size, mask).
fn minimal_transversals(sets: &[u64]) -> Vec<u64> {
    fn grow(sets: &[u64], chosen: u64, out: &mut Vec<u64>) {
        match sets.iter().find(|s| *s & chosen == 0) {
            None => out.push(chosen),
            Some(&s) => {
                let mut bits = s;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    grow(sets, chosen | b, out);
                    bits &= bits - 1;
                }
            }
        }
    }
    let mut all = Vec::new();
    grow(sets, 0, &mut all);
    all.sort_unstable();
    all.dedup();
    let mut minimal: Vec<u64> = all
        .iter()
        .copied()
        .filter(|&c| !all.iter().any(|&d| d != c && d & c == d))
        .collect();
    minimal.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;

    fn ring(p: u64, n: usize) -> Ring {
        RingSpec::standard(p, n).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn strings(i: &Ideal) -> Vec<String> {
        i.describe().unwrap()
    }

    #[test]
    fn already_reduced_basis() {
        let r = ring(2, 2);
        assert_eq!(strings(&ideal(&r, &["t1", "t2"])), vec!["t2", "t1"]);
    }

    #[test]
    fn lex_basis_by_hand() {
        let r = RingSpec::new(3, ["t1", "t2"], MonomialOrder::Lex).unwrap();
        let i = ideal(&r, &["t1^2 - t2", "t1*t2 - t1"]);
        // S(g1, g2) = t2*g1 - t1*g2 = t1^2 - t2^2 -> reduces by g1 to t2 - t2^2,
        // giving t2^2 - t2 after normalization; every remaining S-pair reduces to 0.
        let want = ideal(&r, &["t1^2 - t2", "t1*t2 - t1", "t2^2 - t2"]);
        let gb: HashSet<String> = strings(&i).into_iter().collect();
        let expect: HashSet<String> = ["t1^2 + 2*t2", "t1*t2 + 2*t1", "t2^2 + 2*t2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(gb, expect);
        assert_eq!(i.compare(&want).unwrap(), Containment::Equal);
        for g in i.generators() {
            assert!(i.contains(g).unwrap());
        }
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = ring(2, 2);
        assert!(Ideal::zero(&r).groebner_basis().unwrap().is_empty());
        assert!(ideal(&r, &["0"]).groebner_basis().unwrap().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2, 2);
        assert!(Ideal::parse(&r, &["t1"])
            .unwrap()
            .normal_form(&Polynomial::var(&r, 0))
            .unwrap()
            .is_zero());
        assert_eq!(
            ideal(&r, &["t1"])
                .normal_form(&Polynomial::var(&r, 1))
                .unwrap(),
            Polynomial::var(&r, 1)
        );
        let lex = RingSpec::new(2, ["t1", "t2"], MonomialOrder::Lex).unwrap();
        let f = crate::parse::parse_polynomial(&lex, "t1^2*t2").unwrap();
        let nf = ideal(&lex, &["t1^2 - t2"]).normal_form(&f).unwrap();
        assert_eq!(nf, crate::parse::parse_polynomial(&lex, "t2^2").unwrap());
    }

    #[test]
    fn comparisons() {
        let r = ring(2, 2);
        assert_eq!(
            ideal(&r, &["t1", "t2"])
                .compare(&ideal(&r, &["t1 + t2", "t2"]))
                .unwrap(),
            Containment::Equal
        );
        assert_eq!(
            ideal(&r, &["t1*t2"]).compare(&ideal(&r, &["t1"])).unwrap(),
            Containment::Subset
        );
        assert_eq!(
            ideal(&r, &["t1"]).compare(&ideal(&r, &["t2"])).unwrap(),
            Containment::Incomparable
        );
    }

    #[test]
    fn combine_examples() {
        let r = ring(2, 2);
        let a = ideal(&r, &["t1"]);
        let b = ideal(&r, &["t2"]);
        assert_eq!(
            strings(&a.combine(&b, IdealOp::Intersection).unwrap()),
            vec!["t1*t2"]
        );
        let c = ideal(&r, &["t1*t2"]);
        assert_eq!(strings(&c.combine(&a, IdealOp::Colon).unwrap()), vec!["t2"]);
        assert_eq!(
            strings(&a.combine(&a, IdealOp::Product).unwrap()),
            vec!["t1^2"]
        );
        assert_eq!(
            strings(&a.combine(&b, IdealOp::Sum).unwrap()),
            vec!["t2", "t1"]
        );
    }

    #[test]
    fn colon_by_zero_is_unit() {
        let r = ring(3, 2);
        let got = ideal(&r, &["t1"]).colon(&Ideal::zero(&r)).unwrap();
        assert!(got.is_unit().unwrap());
    }

    #[test]
    fn ring_mismatch_everywhere() {
        let a = ring(2, 2);
        let b = ring(3, 2);
        let i = Ideal::unit(&a);
        let j = Ideal::unit(&b);
        assert_eq!(i.compare(&j), Err(Error::RingMismatch));
        assert_eq!(i.intersection(&j).unwrap_err(), Error::RingMismatch);
        assert_eq!(
            i.normal_form(&Polynomial::one(&b)).unwrap_err(),
            Error::RingMismatch
        );
        assert_eq!(
            i.radical_membership(&Polynomial::one(&b)).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn radical_membership_examples() {
        let r = ring(2, 2);
        assert!(ideal(&r, &["t1^2"])
            .radical_membership(&Polynomial::var(&r, 0))
            .unwrap());
        assert!(!ideal(&r, &["t1"])
            .radical_membership(&Polynomial::var(&r, 1))
            .unwrap());
        let f = crate::parse::parse_polynomial(&r, "t1*t2").unwrap();
        assert!(ideal(&r, &["t1^3*t2^5"]).radical_membership(&f).unwrap());
    }

    #[test]
    fn minimal_primes_examples() {
        let r = ring(2, 3);
        let show = |i: &Ideal| -> Vec<Vec<String>> {
            i.monomial_minimal_primes()
                .unwrap()
                .iter()
                .map(strings)
                .collect()
        };
        assert_eq!(show(&ideal(&r, &["t1*t2"])), vec![vec!["t1"], vec!["t2"]]);
        assert_eq!(show(&ideal(&r, &["t1^2"])), vec![vec!["t1"]]);
        assert_eq!(
            show(&ideal(&r, &["t1*t2", "t1*t3"])),
            vec![vec!["t1".to_string()], vec!["t3".into(), "t2".into()]]
        );
        assert_eq!(
            ideal(&r, &["t1 + t2"])
                .monomial_minimal_primes()
                .unwrap_err(),
            Error::MonomialIdealRequired
        );
        assert_eq!(
            Ideal::unit(&r).monomial_minimal_primes().unwrap_err(),
            Error::ProperNonzeroRequired
        );
    }

    #[test]
    fn transversals_match_brute_force() {
        // all nonempty families of nonempty subsets of a 4-element set, sampled
        let mut seed = 7u64;
        for _ in 0..300 {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let k = 1 + (seed >> 60) as usize % 4;
            let sets: Vec<u64> = (0..k).map(|j| 1 + ((seed >> (8 * j)) & 0xe) % 15).collect();
            let covers: Vec<u64> = (0u64..16)
                .filter(|c| sets.iter().all(|s| s & c != 0))
                .collect();
            let mut brute: Vec<u64> = covers
                .iter()
                .copied()
                .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
                .collect();
            brute.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
            assert_eq!(minimal_transversals(&sets), brute, "{sets:?}");
        }
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let r = RingSpec::standard(3, 3)
            .unwrap()
            .with_budget(crate::ring::Budget {
                steps: 3,
                rounds: 64,
            });
        let i = Ideal::parse(
            &r,
            &[
                "t1^2*t2 + t3 + 1",
                "t1*t2^2 + t1 + t3",
                "t1*t2*t3 + t2^2 + 1",
            ],
        )
        .unwrap();
        let got = i.groebner_basis();
        assert!(matches!(got, Err(Error::BudgetExceeded(_))), "{got:?}");
    }

    #[test]
    fn basis_is_idempotent() {
        let r = ring(3, 3);
        let i = ideal(&r, &["t1^2 - t2*t3", "t2^2 - t1", "t1*t3 + t2"]);
        let gb1 = i.groebner_basis().unwrap().to_vec();
        let again = Ideal::new(&r, gb1.clone()).unwrap();
        assert_eq!(again.groebner_basis().unwrap(), &gb1[..]);
    }
}
