use std::collections::BTreeMap;

use super::annihilator::special_ideal_test;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::module::{FrobeniusModule, Primality, SplitModule};
use crate::poly::Polynomial;
use crate::ring::Monomial;

/// Canonical sort key: fewer generators first, then lexicographic.
pub(crate) type Key = Vec<String>;

pub(crate) fn sort_key(k: &Key) -> (usize, Key) {
    (k.len(), k.clone())
}

/// Iˢ(M) restricted to a candidate universe.
#[derive(Debug, Clone)]
pub struct SpecialPrimes<M: FrobeniusModule> {
    /// Special primes with how their primality was established, sorted by key.
    pub primes: Vec<(M::Ideal, Primality)>,
    /// Number of distinct candidates examined.
    pub universe_size: usize,
}

impl<M: FrobeniusModule> SpecialPrimes<M> {
    pub fn ideals(&self) -> Vec<M::Ideal> {
        self.primes.iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// Candidates passing the annihilator-colon test 𝔭 = 0 :_R (M / M(𝔭R[x,f])).
/// Each returned prime is checked to contain 0 :_R M.
pub fn enumerate_special_primes<M: FrobeniusModule>(
    module: &M,
    candidates: &[M::Ideal],
) -> Result<SpecialPrimes<M>> {
    let zero_ann = module.annihilator(&module.zero_sub())?;
    let mut seen: BTreeMap<(usize, Key), (M::Ideal, Primality)> = BTreeMap::new();
    let mut examined = 0;
    let mut distinct = std::collections::BTreeSet::new();
    for cand in candidates {
        let key = module.ideal_key(cand)?;
        if !distinct.insert(key.clone()) {
            continue;
        }
        examined += 1;
        let kind = module.classify_prime(cand)?;
        if special_ideal_test(module, cand)?.is_special {
            if !module.ideal_compare(&zero_ann, cand)?.is_le() {
                return Err(Error::InvariantViolated(format!(
                    "special prime {key:?} does not contain 0 :_R M"
                )));
            }
            seen.insert(sort_key(&key), (cand.clone(), kind));
        }
    }
    Ok(SpecialPrimes {
        primes: seen.into_values().collect(),
        universe_size: examined,
    })
}

/// One member of I(M) with its special submodule.
#[derive(Debug, Clone)]
pub struct LatticeEntry<M: FrobeniusModule> {
    pub ideal: M::Ideal,
    pub key: Key,
    pub submodule: M::Sub,
}

/// I(M) and Iˢ(M) over a candidate universe, with witnesses.
#[derive(Debug, Clone)]
pub struct SpecialIdealLattice<M: FrobeniusModule> {
    pub special_primes: SpecialPrimes<M>,
    /// Sorted by key; the unit ideal is always present.
    pub special_ideals: Vec<LatticeEntry<M>>,
}

impl<M: FrobeniusModule> SpecialIdealLattice<M> {
    pub fn keys(&self) -> Vec<Key> {
        self.special_ideals.iter().map(|e| e.key.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.special_ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.special_ideals.is_empty()
    }

    /// Length of the longest strictly ascending chain of special submodules.
    pub fn longest_submodule_chain(&self, module: &M) -> Result<usize> {
        let n = self.special_ideals.len();
        let mut below = vec![vec![false; n]; n];
        for (i, row) in below.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if i != j {
                    let (a, b) = (
                        &self.special_ideals[i].submodule,
                        &self.special_ideals[j].submodule,
                    );
                    *cell = module.sub_is_subset(a, b)? && !module.sub_is_subset(b, a)?;
                }
            }
        }
        let mut memo = vec![0usize; n];
        fn longest(i: usize, below: &[Vec<bool>], memo: &mut [usize]) -> usize {
            if memo[i] > 0 {
                return memo[i];
            }
            let best = (0..below.len())
                .filter(|&j| below[i][j])
                .map(|j| longest(j, below, memo))
                .max()
                .unwrap_or(0);
            memo[i] = best + 1;
            memo[i]
        }
        Ok((0..n)
            .map(|i| longest(i, &below, &mut memo))
            .max()
            .unwrap_or(0))
    }
}

/// I(M) = {finite intersections of members of Iˢ(M)} ∪ {R}, every member
/// re-verified by [`special_ideal_test`].
pub fn special_ideal_lattice<M: FrobeniusModule>(
    module: &M,
    candidates: &[M::Ideal],
) -> Result<SpecialIdealLattice<M>> {
    let special_primes = enumerate_special_primes(module, candidates)?;
    let mut members: BTreeMap<(usize, Key), M::Ideal> = BTreeMap::new();
    let unit = module.unit_ideal();
    members.insert(sort_key(&module.ideal_key(&unit)?), unit);
    let mut frontier: Vec<M::Ideal> = Vec::new();
    for p in special_primes.ideals() {
        let k = sort_key(&module.ideal_key(&p)?);
        if members.insert(k, p.clone()).is_none() {
            frontier.push(p);
        }
    }
    let primes = special_primes.ideals();
    // closure under intersection with a prime suffices for finite intersections
    while let Some(a) = frontier.pop() {
        for p in &primes {
            let c = module.ideal_intersection(&a, p)?;
            let k = sort_key(&module.ideal_key(&c)?);
            if let std::collections::btree_map::Entry::Vacant(slot) = members.entry(k) {
                slot.insert(c.clone());
                frontier.push(c);
            }
        }
    }
    let mut special_ideals = Vec::with_capacity(members.len());
    for ((_, key), ideal) in members {
        let test = special_ideal_test(module, &ideal)?;
        if !test.is_special {
            return Err(Error::InvariantViolated(format!(
                "intersection {key:?} of special primes is not special"
            )));
        }
        special_ideals.push(LatticeEntry {
            ideal,
            key,
            submodule: test.submodule,
        });
    }
    Ok(SpecialIdealLattice {
        special_primes,
        special_ideals,
    })
}

fn monomials_of_degree_at_most(nvars: usize, d: u64) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(nvars)];
    for i in 0..nvars {
        let mut next = Vec::new();
        for m in &out {
            let mut e = m.exponents().to_vec();
            while Monomial::new(e.clone()).degree() <= d {
                next.push(Monomial::new(e.clone()));
                e[i] += 1;
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
    out
}

/// Searches for m ∈ M with 0 :_R (m + M(𝔭R[x,f])) = 𝔭 among monomial
/// multiples (degree ≤ `max_degree`) of the generators of M. Best effort:
/// `None` means no witness in the searched range.
pub fn associated_prime_witness(
    module: &SplitModule,
    prime: &Ideal,
    max_degree: u64,
) -> Result<Option<Polynomial>> {
    let s = module.special_submodule(prime)?;
    let ring = module.ring().clone();
    for g in module.carrier().groebner_basis()? {
        for mono in monomials_of_degree_at_most(ring.nvars(), max_degree) {
            let m = g.mul_term(1, &mono);
            if s.contains(&m)? {
                continue;
            }
            if s.colon_element(&m)?.same_ideal(prime)? {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::ProductModule;
    use crate::ring::RingSpec;

    #[test]
    fn special_primes_univariate() {
        let r = RingSpec::standard(2, 1).unwrap();
        let m = SplitModule::whole(&r);
        let sp = enumerate_special_primes(&m, &m.prime_universe()).unwrap();
        assert_eq!(sp.len(), 2);
        assert_eq!(sp.universe_size, 2);
        assert!(sp.primes.iter().all(|(_, k)| *k == Primality::Certified));
    }

    #[test]
    fn special_primes_bivariate_and_empty() {
        let r = RingSpec::standard(2, 2).unwrap();
        let m = SplitModule::whole(&r);
        let sp = enumerate_special_primes(&m, &m.prime_universe()).unwrap();
        assert_eq!(sp.len(), 4);
        assert!(enumerate_special_primes(&m, &[]).unwrap().is_empty());
    }

    #[test]
    fn non_prime_monomial_candidate_is_an_error() {
        let r = RingSpec::standard(2, 2).unwrap();
        let m = SplitModule::whole(&r);
        let bad = Ideal::parse(&r, &["t1*t2"]).unwrap();
        assert!(matches!(
            enumerate_special_primes(&m, &[bad]),
            Err(Error::NonPrimeCandidate(_))
        ));
    }

    #[test]
    fn non_monomial_candidate_is_trusted() {
        let r = RingSpec::standard(2, 2).unwrap();
        let m = SplitModule::whole(&r);
        let cand = Ideal::parse(&r, &["t1 + t2"]).unwrap();
        let sp = enumerate_special_primes(&m, &[cand]).unwrap();
        // ⟨t1+t2⟩ is prime but not special: its special submodule is ⟨t1,t2⟩
        assert!(sp.is_empty());
    }

    #[test]
    fn lattice_examples() {
        let r1 = RingSpec::standard(2, 1).unwrap();
        let m1 = SplitModule::whole(&r1);
        let l1 = special_ideal_lattice(&m1, &m1.prime_universe()).unwrap();
        assert_eq!(
            l1.keys(),
            vec![
                vec![] as Vec<String>,
                vec!["1".to_string()],
                vec!["t1".to_string()]
            ]
        );

        let r2 = RingSpec::standard(2, 2).unwrap();
        let m2 = SplitModule::whole(&r2);
        let l2 = special_ideal_lattice(&m2, &m2.prime_universe()).unwrap();
        assert_eq!(l2.len(), 6);
        assert!(l2.longest_submodule_chain(&m2).unwrap() <= l2.len());

        let pm = ProductModule::identity(2, 2).unwrap();
        let lp = special_ideal_lattice(&pm, &pm.prime_universe()).unwrap();
        assert_eq!(lp.len(), 4);
        let k1 = ProductModule::identity(2, 1).unwrap();
        assert_eq!(
            special_ideal_lattice(&k1, &k1.prime_universe())
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn witness_for_variable_primes() {
        let r = RingSpec::standard(2, 2).unwrap();
        let m = SplitModule::whole(&r);
        for p in m.prime_universe() {
            let w = associated_prime_witness(&m, &p, 2).unwrap();
            assert!(w.is_some(), "{p}");
        }
    }
}
