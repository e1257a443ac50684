//! x-divisible right R[x,f]-modules and their submodule calculus.
//!
//! Two realizations are provided:
//!
//! * [`SplitModule`]: an ideal M of A = F_p[θ₁..θₙ] with m·x = h(m), where h
//!   is the standard Frobenius splitting.
//! * [`ProductModule`]: an R-submodule of R = F_pᵏ with an R-linear
//!   surjective x-action.
//!
//! Everything above this layer is written against [`FrobeniusModule`].

pub mod linalg;
mod product;
mod split;

use std::fmt;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::groebner::Containment;
use crate::ring::Budget;
use crate::skew::IdealLike;

pub use product::{CoordIdeal, ProductModule, MAX_FACTORS};
pub use split::{apply_splitting, frobenius_root, SplitModule};

/// How a prime candidate was admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    /// Primality is certified (variable-generated, zero ideal of a domain,
    /// or a coordinate prime of a product of fields).
    Certified,
    /// Accepted on the caller's word.
    Trusted,
}

/// The operations the graded-annihilator layer needs from a module
/// realization. `Ideal` ranges over ideals of the base ring R, `Sub` over
/// R-submodules of the ambient module.
pub trait FrobeniusModule: Clone + fmt::Debug {
    type Ideal: IdealLike;
    type Sub: Clone + fmt::Debug;

    /// M itself.
    fn carrier(&self) -> &Self::Sub;
    fn budget(&self) -> Budget;

    fn zero_ideal(&self) -> Self::Ideal;
    fn unit_ideal(&self) -> Self::Ideal;
    fn ideal_intersection(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn ideal_sum(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn ideal_product(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn ideal_colon(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn ideal_is_unit(&self, a: &Self::Ideal) -> Result<bool>;
    /// Canonical rendering: two ideals are equal iff their keys are equal.
    fn ideal_key(&self, a: &Self::Ideal) -> Result<Vec<String>>;
    /// Default candidate primes.
    fn prime_universe(&self) -> Vec<Self::Ideal>;
    /// Errors with [`Error::NonPrimeCandidate`] when the candidate is
    /// certifiably not prime.
    fn classify_prime(&self, p: &Self::Ideal) -> Result<Primality>;
    /// Minimal primes of a proper radical ideal.
    fn minimal_primes(&self, b: &Self::Ideal) -> Result<Vec<Self::Ideal>>;
    /// Decides (monomial case) or cross-checks (general case) radicality.
    fn certify_radical(&self, b: &Self::Ideal, rng: &mut dyn RngCore) -> Result<bool>;

    fn zero_sub(&self) -> Self::Sub;
    fn sub_is_subset(&self, a: &Self::Sub, b: &Self::Sub) -> Result<bool>;
    fn sub_key(&self, a: &Self::Sub) -> Result<Vec<String>>;
    fn sub_sum(&self, a: &Self::Sub, b: &Self::Sub) -> Result<Self::Sub>;
    /// 𝔟·N.
    fn ideal_times(&self, b: &Self::Ideal, n: &Self::Sub) -> Result<Self::Sub>;
    /// N·x.
    fn x_image(&self, n: &Self::Sub) -> Result<Self::Sub>;
    /// {r ∈ R : (M·r)·xⁿ ⊆ N}, the degree-n component of gr-ann(M/N).
    fn annihilator_component(&self, n: &Self::Sub, degree: u32) -> Result<Self::Ideal>;
    /// The submodule N as an x-divisible module in its own right.
    fn restrict(&self, n: &Self::Sub) -> Result<Self>;

    fn sub_compare(&self, a: &Self::Sub, b: &Self::Sub) -> Result<Containment> {
        Ok(Containment::from_inclusions(
            self.sub_is_subset(a, b)?,
            self.sub_is_subset(b, a)?,
        ))
    }

    fn ideal_compare(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Containment> {
        Ok(Containment::from_inclusions(
            a.is_subset_of(b)?,
            b.is_subset_of(a)?,
        ))
    }

    /// N ⊆ M and N·x ⊆ N.
    fn is_submodule(&self, n: &Self::Sub) -> Result<bool> {
        Ok(self.sub_is_subset(n, self.carrier())? && self.sub_is_subset(&self.x_image(n)?, n)?)
    }

    /// N·x = N.
    fn x_divisibility(&self, n: &Self::Sub) -> Result<bool> {
        Ok(self.sub_compare(&self.x_image(n)?, n)? == Containment::Equal)
    }

    /// 0 :_R (M/N).
    fn annihilator(&self, n: &Self::Sub) -> Result<Self::Ideal> {
        self.annihilator_component(n, 0)
    }

    /// M(𝔟R[x,f]) = Σₙ (𝔟M)xⁿ, as the least fixed point of
    /// S ↦ 𝔟M + S·x starting from 𝔟M.
    fn special_submodule(&self, b: &Self::Ideal) -> Result<Self::Sub> {
        let base = self.ideal_times(b, self.carrier())?;
        let mut current = base.clone();
        let rounds = self.budget().rounds;
        for _ in 0..rounds {
            let next = self.sub_sum(&base, &self.x_image(&current)?)?;
            // iterates ascend, so inclusion of the next in the current is equality
            if self.sub_is_subset(&next, &current)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::BudgetExceeded(format!(
            "special submodule did not stabilize within {rounds} rounds"
        )))
    }
}

/// An x-divisible right R[x,f]-module in one of the supported realizations.
#[derive(Debug, Clone)]
pub enum FrobRightModule {
    SplitPolynomialRing(SplitModule),
    ProductOfFields(ProductModule),
}

impl From<SplitModule> for FrobRightModule {
    fn from(m: SplitModule) -> Self {
        FrobRightModule::SplitPolynomialRing(m)
    }
}

impl From<ProductModule> for FrobRightModule {
    fn from(m: ProductModule) -> Self {
        FrobRightModule::ProductOfFields(m)
    }
}

impl fmt::Display for FrobRightModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobRightModule::SplitPolynomialRing(m) => m.fmt(f),
            FrobRightModule::ProductOfFields(m) => m.fmt(f),
        }
    }
}
