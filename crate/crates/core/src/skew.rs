//! The Frobenius skew polynomial ring R[x,f] = ⊕ Rxⁿ with x·r = rᵖ·x, and
//! graded two-sided ideals ⊕ 𝔟ₙxⁿ.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{Containment, Ideal};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingSpec};

/// A finite sum Σ rᵢxⁱ with strictly increasing degrees and nonzero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPolynomial {
    ring: Ring,
    terms: Vec<(u32, Polynomial)>,
}

impl SkewPolynomial {
    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    /// r·xⁿ.
    pub fn monomial(coeff: Polynomial, degree: u32) -> Self {
        let ring = coeff.ring().clone();
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![(degree, coeff)]
        };
        Self { ring, terms }
    }

    /// x itself.
    pub fn x(ring: &Ring) -> Self {
        Self::monomial(Polynomial::one(ring), 1)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::monomial(Polynomial::one(ring), 0)
    }

    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (u32, Polynomial)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ring);
        for (d, c) in terms {
            RingSpec::check_same(ring, c.ring())?;
            out = out.add(&Self::monomial(c, d))?;
        }
        Ok(out)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(u32, Polynomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(d, _)| *d)
    }

    /// Coefficient of xⁿ.
    pub fn component(&self, n: u32) -> Polynomial {
        self.terms
            .iter()
            .find(|(d, _)| *d == n)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        RingSpec::check_same(&self.ring, &other.ring)?;
        let mut terms: Vec<(u32, Polynomial)> = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                terms.push(a[i].clone());
                i += 1;
            } else if take_b {
                terms.push(b[j].clone());
                j += 1;
            } else {
                let c = a[i].1.add(&b[j].1);
                if !c.is_zero() {
                    terms.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }
}

/// Bilinear extension of (r·xᵃ)(s·xᵇ) = r·s^(pᵃ)·x^(a+b).
pub fn skew_multiply(alpha: &SkewPolynomial, beta: &SkewPolynomial) -> Result<SkewPolynomial> {
    RingSpec::check_same(&alpha.ring, &beta.ring)?;
    let p = alpha.ring.p();
    let mut acc = SkewPolynomial::zero(&alpha.ring);
    for (a, r) in &alpha.terms {
        if p.checked_pow(*a).is_none() {
            return Err(Error::InvalidArgument(format!("p^{a} overflows")));
        }
        for (b, s) in &beta.terms {
            let coeff = r.mul(&s.frobenius_power(*a));
            acc = acc.add(&SkewPolynomial::monomial(coeff, a + b))?;
        }
    }
    Ok(acc)
}

impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| match d {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{d}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// What a graded two-sided ideal needs from its homogeneous components.
pub trait IdealLike: Clone + fmt::Debug {
    /// `self ⊆ other`; errors on mismatched rings.
    fn is_subset_of(&self, other: &Self) -> Result<bool>;

    fn same_ideal(&self, other: &Self) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }
}

impl IdealLike for Ideal {
    fn is_subset_of(&self, other: &Self) -> Result<bool> {
        Ideal::is_subset_of(self, other)
    }

    fn same_ideal(&self, other: &Self) -> Result<bool> {
        Ideal::same_ideal(self, other)
    }
}

/// ⊕ 𝔟ₙxⁿ for an ascending chain that is constant from `stable_from` on.
/// Stored canonically: the chain ends at its stabilization index.
#[derive(Debug, Clone)]
pub struct GradedTwoSidedIdeal<I = Ideal> {
    chain: Vec<I>,
    stable_from: usize,
}

impl<I: IdealLike> GradedTwoSidedIdeal<I> {
    /// The constant chain 𝔟R[x,f].
    pub fn constant(b: I) -> Self {
        Self {
            chain: vec![b],
            stable_from: 0,
        }
    }

    /// Validates ascent and truncates at stabilization.
    pub fn from_chain(mut chain: Vec<I>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidArgument("empty chain".into()));
        }
        for (n, w) in chain.windows(2).enumerate() {
            if !w[0].is_subset_of(&w[1])? {
                return Err(Error::ChainNotAscending(n));
            }
        }
        let last = chain.len() - 1;
        let mut s = last;
        while s > 0 && chain[s - 1].same_ideal(&chain[last])? {
            s -= 1;
        }
        chain.truncate(s + 1);
        Ok(Self {
            chain,
            stable_from: s,
        })
    }

    pub fn stable_from(&self) -> usize {
        self.stable_from
    }

    pub fn chain(&self) -> &[I] {
        &self.chain
    }

    /// 𝔟ₙ.
    pub fn component(&self, n: usize) -> &I {
        &self.chain[n.min(self.stable_from)]
    }

    /// Re-checks 𝔟₀ ⊆ 𝔟₁ ⊆ … ⊆ 𝔟ₛ.
    pub fn validate(&self) -> Result<()> {
        for (n, w) in self.chain.windows(2).enumerate() {
            if !w[0].is_subset_of(&w[1])? {
                return Err(Error::ChainNotAscending(n));
            }
        }
        Ok(())
    }

    /// Componentwise comparison through the later stabilization index.
    pub fn compare(&self, other: &Self) -> Result<Containment> {
        let top = self.stable_from.max(other.stable_from);
        let (mut le, mut ge) = (true, true);
        for n in 0..=top {
            let (a, b) = (self.component(n), other.component(n));
            le = le && a.is_subset_of(b)?;
            ge = ge && b.is_subset_of(a)?;
        }
        Ok(Containment::from_inclusions(le, ge))
    }
}

impl GradedTwoSidedIdeal<Ideal> {
    pub fn ring(&self) -> &Ring {
        self.chain[0].ring()
    }

    pub fn contains(&self, alpha: &SkewPolynomial) -> Result<bool> {
        RingSpec::check_same(self.ring(), alpha.ring())?;
        for (d, c) in alpha.terms() {
            if !self.component(*d as usize).contains(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Input accepted by [`graded_ideal_make`].
pub enum GradedInput<I = Ideal> {
    Single(I),
    Chain(Vec<I>),
}

pub fn graded_ideal_make<I: IdealLike>(input: GradedInput<I>) -> Result<GradedTwoSidedIdeal<I>> {
    match input {
        GradedInput::Single(b) => Ok(GradedTwoSidedIdeal::constant(b)),
        GradedInput::Chain(c) => GradedTwoSidedIdeal::from_chain(c),
    }
}
