use std::fmt;

use rand::{Rng, RngCore};

use super::{FrobeniusModule, Primality};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::ring::{Budget, Monomial, Ring, RingSpec};

/// The standard Frobenius splitting h of A = F_p[θ₁..θₙ]: keeps the terms
/// whose exponents are all divisible by p and divides those exponents by p.
/// Coefficients are fixed since k^(1/p) = k in F_p.
pub fn apply_splitting(f: &Polynomial) -> Polynomial {
    let p = f.ring().p();
    Polynomial::from_terms(
        f.ring(),
        f.terms()
            .iter()
            .filter(|(m, _)| m.exponents().iter().all(|e| e % p == 0))
            .map(|(m, c)| {
                (
                    Monomial::new(m.exponents().iter().map(|e| e / p).collect()),
                    *c,
                )
            }),
    )
}

/// h(N) for an ideal N: generated by h(θᵉ·g) over generators g of N and
/// exponent vectors e ∈ {0..p−1}ⁿ, since A is free over Aᵖ on those θᵉ.
pub fn frobenius_root(n: &Ideal) -> Result<Ideal> {
    let ring = n.ring();
    let p = ring.p();
    let nvars = ring.nvars();
    let mut gens = Vec::new();
    for g in n.generators() {
        if g.is_zero() {
            continue;
        }
        let mut e = vec![0u32; nvars];
        loop {
            let root = apply_splitting(&g.mul_term(1, &Monomial::new(e.clone())));
            if !root.is_zero() {
                gens.push(root);
            }
            // odometer over {0..p-1}^nvars
            let mut i = 0;
            while i < nvars && e[i] == p - 1 {
                e[i] = 0;
                i += 1;
            }
            if i == nvars {
                break;
            }
            e[i] += 1;
        }
    }
    Ideal::new(ring, gens)?.with_basis()
}

/// An ideal M of A = F_p[θ₁..θₙ] with h(M) = M, as a right A[x,f]-module
/// via m·x = h(m).
#[derive(Debug, Clone)]
pub struct SplitModule {
    ring: Ring,
    carrier: Ideal,
}

impl SplitModule {
    /// A itself.
    pub fn whole(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            carrier: Ideal::unit(ring),
        }
    }

    /// Checks that the carrier is x-divisible: h(M) = M.
    pub fn new(carrier: Ideal) -> Result<Self> {
        let root = frobenius_root(&carrier)?;
        if !root.same_ideal(&carrier)? {
            return Err(Error::NotXDivisible);
        }
        Ok(Self {
            ring: carrier.ring().clone(),
            carrier,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Ideal of A spanned by m·(r·xⁿ) = hⁿ(r·m) for m ∈ N: used by tests as
    /// a direct definition of the action.
    pub fn act(&self, n: &Ideal, r: &Polynomial, degree: u32) -> Result<Ideal> {
        let mut cur = Ideal::new(&self.ring, vec![r.clone()])?.product(n)?;
        for _ in 0..degree {
            cur = frobenius_root(&cur)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for SplitModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] with standard splitting, M = {}",
            self.ring.p(),
            self.ring.var_names().join(","),
            self.carrier
        )
    }
}

const RADICAL_SAMPLES: usize = 20;

fn random_poly(ring: &Ring, rng: &mut dyn RngCore) -> Polynomial {
    let n = ring.nvars();
    let terms = rng.gen_range(1..=3);
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let e = (0..n).map(|_| rng.gen_range(0..3)).collect();
            (Monomial::new(e), rng.gen_range(1..ring.p()))
        }),
    )
}

impl FrobeniusModule for SplitModule {
    type Ideal = Ideal;
    type Sub = Ideal;

    fn carrier(&self) -> &Ideal {
        &self.carrier
    }

    fn budget(&self) -> Budget {
        self.ring.budget()
    }

    fn zero_ideal(&self) -> Ideal {
        Ideal::zero(&self.ring)
    }

    fn unit_ideal(&self) -> Ideal {
        Ideal::unit(&self.ring)
    }

    fn ideal_intersection(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.intersection(b)
    }

    fn ideal_sum(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.sum(b)
    }

    fn ideal_product(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.product(b)
    }

    fn ideal_colon(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.colon(b)
    }

    fn ideal_is_unit(&self, a: &Ideal) -> Result<bool> {
        a.is_unit()
    }

    fn ideal_key(&self, a: &Ideal) -> Result<Vec<String>> {
        a.describe()
    }

    /// Every variable-generated prime, the zero ideal included, ordered by
    /// size and then variable index.
    fn prime_universe(&self) -> Vec<Ideal> {
        let n = self.ring.nvars();
        let mut masks: Vec<u64> = (0..1u64 << n).collect();
        masks.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
        masks
            .into_iter()
            .map(|m| Ideal::variables(&self.ring, (0..n).filter(|i| m & (1 << i) != 0)))
            .collect()
    }

    fn classify_prime(&self, p: &Ideal) -> Result<Primality> {
        RingSpec::check_same(&self.ring, p.ring())?;
        if p.variable_support()?.is_some() {
            return Ok(Primality::Certified);
        }
        if p.is_unit()? || p.is_monomial()? {
            return Err(Error::NonPrimeCandidate(p.to_string()));
        }
        Ok(Primality::Trusted)
    }

    fn minimal_primes(&self, b: &Ideal) -> Result<Vec<Ideal>> {
        let gb = Ideal::new(&self.ring, b.groebner_basis()?.to_vec())?;
        gb.monomial_minimal_primes()
    }

    fn certify_radical(&self, b: &Ideal, rng: &mut dyn RngCore) -> Result<bool> {
        let gb = Ideal::new(&self.ring, b.groebner_basis()?.to_vec())?;
        if gb.is_monomial()? {
            return gb.same_ideal(&gb.monomial_radical()?);
        }
        let mut checked = 0;
        for _ in 0..20 * RADICAL_SAMPLES {
            if checked == RADICAL_SAMPLES {
                break;
            }
            let f = random_poly(&self.ring, rng);
            if b.radical_membership(&f)? {
                checked += 1;
                if !b.contains(&f)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn zero_sub(&self) -> Ideal {
        Ideal::zero(&self.ring)
    }

    fn sub_is_subset(&self, a: &Ideal, b: &Ideal) -> Result<bool> {
        a.is_subset_of(b)
    }

    fn sub_key(&self, a: &Ideal) -> Result<Vec<String>> {
        a.describe()
    }

    fn sub_sum(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.sum(b)
    }

    fn ideal_times(&self, b: &Ideal, n: &Ideal) -> Result<Ideal> {
        b.product(n)
    }

    fn x_image(&self, n: &Ideal) -> Result<Ideal> {
        RingSpec::check_same(&self.ring, n.ring())?;
        frobenius_root(n)
    }

    /// With q = pⁿ: hⁿ(J) ⊆ N iff θ^(q−1)·J ⊆ N^[q], because hⁿ is the
    /// generator of Hom(F^n_* A, A) precomposed with multiplication by
    /// θ^(q−1). Hence the component is N^[q] : θ^(q−1)·M.
    fn annihilator_component(&self, n: &Ideal, degree: u32) -> Result<Ideal> {
        RingSpec::check_same(&self.ring, n.ring())?;
        let q = self
            .ring
            .p()
            .checked_pow(degree)
            .ok_or_else(|| Error::InvalidArgument(format!("p^{degree} overflows")))?;
        let bracket = Ideal::new(
            &self.ring,
            n.generators()
                .iter()
                .map(|g| g.frobenius_power(degree))
                .collect(),
        )?;
        let shift = Monomial::new(vec![q - 1; self.ring.nvars()]);
        let shifted = Ideal::new(
            &self.ring,
            self.carrier
                .generators()
                .iter()
                .map(|g| g.mul_term(1, &shift))
                .collect(),
        )?;
        bracket.colon(&shifted)
    }

    fn restrict(&self, n: &Ideal) -> Result<Self> {
        RingSpec::check_same(&self.ring, n.ring())?;
        SplitModule::new(n.clone())
    }
}
