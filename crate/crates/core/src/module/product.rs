use std::fmt;

use rand::RngCore;

use super::linalg::{mat_mul, mat_vec, nullspace, unit_vector, Subspace};
use super::{FrobeniusModule, Primality};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ring::Budget;
use crate::skew::IdealLike;

/// Largest supported number of factors.
pub const MAX_FACTORS: usize = 24;

/// An ideal of R = F_pᵏ. Every such ideal is eᵀR for a set T of coordinates,
/// stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordIdeal {
    k: u32,
    mask: u32,
}

impl CoordIdeal {
    pub fn new(k: usize, coords: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u32;
        for c in coords {
            if c >= k {
                return Err(Error::InvalidArgument(format!(
                    "coordinate {c} out of range for k = {k}"
                )));
            }
            mask |= 1 << c;
        }
        Ok(Self { k: k as u32, mask })
    }

    pub fn from_mask(k: usize, mask: u32) -> Self {
        Self {
            k: k as u32,
            mask: mask & full_mask(k),
        }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn factors(&self) -> usize {
        self.k as usize
    }

    /// Coordinates i whose idempotent eᵢ lies in the ideal.
    pub fn coords(&self) -> Vec<usize> {
        (0..self.k as usize)
            .filter(|i| self.mask & (1 << i) != 0)
            .collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl IdealLike for CoordIdeal {
    fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.mask & !other.mask == 0)
    }
}

impl fmt::Display for CoordIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .coords()
            .iter()
            .map(|i| format!("e{}", i + 1))
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

fn full_mask(k: usize) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// An R-submodule M of R = F_pᵏ (componentwise action) with an x-action
/// v ↦ A·v. Since rᵖ = r in F_pᵏ, the right-module law makes A R-linear;
/// x-divisibility makes it surjective on M.
#[derive(Debug, Clone)]
pub struct ProductModule {
    field: PrimeField,
    k: usize,
    x_action: Vec<Vec<u32>>,
    carrier: Subspace,
    budget: Budget,
}

fn hadamard(field: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| field.mul(*x, *y)).collect()
}

impl ProductModule {
    /// M = R with the given x-action.
    pub fn new(p: u64, k: usize, x_action: Vec<Vec<u32>>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let carrier = Subspace::full(&field, k);
        Self::build(field, k, x_action, carrier)
    }

    /// M = the R-submodule spanned by `spanning`.
    pub fn with_carrier(
        p: u64,
        k: usize,
        x_action: Vec<Vec<u32>>,
        spanning: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if spanning.iter().any(|v| v.len() != k) {
            return Err(Error::InvalidArgument(format!(
                "carrier vectors must have length {k}"
            )));
        }
        let carrier = Subspace::span(&field, k, spanning);
        Self::build(field, k, x_action, carrier)
    }

    pub fn identity(p: u64, k: usize) -> Result<Self> {
        Self::new(p, k, (0..k).map(|i| unit_vector(k, i)).collect())
    }

    fn build(
        field: PrimeField,
        k: usize,
        x_action: Vec<Vec<u32>>,
        carrier: Subspace,
    ) -> Result<Self> {
        if k == 0 || k > MAX_FACTORS {
            return Err(Error::InvalidArgument(format!(
                "k must be in 1..={MAX_FACTORS}"
            )));
        }
        if x_action.len() != k || x_action.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidArgument(format!(
                "x action must be a {k}x{k} matrix"
            )));
        }
        let p = field.characteristic();
        let x_action: Vec<Vec<u32>> = x_action
            .into_iter()
            .map(|r| r.into_iter().map(|c| c % p).collect())
            .collect();
        let m = Self {
            field,
            k,
            x_action,
            carrier,
            budget: Budget::default(),
        };
        m.check_closed(&m.carrier)?;
        for v in m.carrier.basis() {
            let image = mat_vec(&m.field, &m.x_action, v);
            for i in 0..k {
                let e = unit_vector(k, i);
                if mat_vec(&m.field, &m.x_action, &hadamard(&m.field, &e, v))
                    != hadamard(&m.field, &e, &image)
                {
                    return Err(Error::NotRLinear);
                }
            }
        }
        if m.carrier.image(&m.field, &m.x_action) != m.carrier {
            return Err(Error::NotXDivisible);
        }
        Ok(m)
    }

    fn check_closed(&self, s: &Subspace) -> Result<()> {
        for v in s.basis() {
            for i in 0..self.k {
                if !s.contains(
                    &self.field,
                    &hadamard(&self.field, &unit_vector(self.k, i), v),
                ) {
                    return Err(Error::NotSubmodule("not closed under the R-action".into()));
                }
            }
        }
        Ok(())
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn factors(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn x_action(&self) -> &[Vec<u32>] {
        &self.x_action
    }

    /// The R-submodule generated by the given vectors.
    pub fn submodule(&self, vectors: Vec<Vec<u32>>) -> Result<Subspace> {
        if vectors.iter().any(|v| v.len() != self.k) {
            return Err(Error::InvalidArgument(format!(
                "vectors must have length {}",
                self.k
            )));
        }
        let closure = vectors
            .iter()
            .flat_map(|v| {
                (0..self.k).map(move |i| hadamard(&self.field, &unit_vector(self.k, i), v))
            })
            .collect::<Vec<_>>();
        Ok(Subspace::span(&self.field, self.k, closure))
    }

    /// Every ideal of R, by coordinate mask.
    pub fn all_ideals(&self) -> Vec<CoordIdeal> {
        (0..=full_mask(self.k))
            .map(|m| CoordIdeal::from_mask(self.k, m))
            .collect()
    }

    fn check_ideal(&self, a: &CoordIdeal) -> Result<()> {
        if a.factors() == self.k {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl fmt::Display for ProductModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}^{} with x-action {:?}, dim M = {}",
            self.p(),
            self.k,
            self.x_action,
            self.carrier.dimension()
        )
    }
}

fn render_vector(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

impl FrobeniusModule for ProductModule {
    type Ideal = CoordIdeal;
    type Sub = Subspace;

    fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    fn budget(&self) -> Budget {
        self.budget
    }

    fn zero_ideal(&self) -> CoordIdeal {
        CoordIdeal::from_mask(self.k, 0)
    }

    fn unit_ideal(&self) -> CoordIdeal {
        CoordIdeal::from_mask(self.k, full_mask(self.k))
    }

    fn ideal_intersection(&self, a: &CoordIdeal, b: &CoordIdeal) -> Result<CoordIdeal> {
        a.check(b)?;
        Ok(CoordIdeal::from_mask(self.k, a.mask & b.mask))
    }

    fn ideal_sum(&self, a: &CoordIdeal, b: &CoordIdeal) -> Result<CoordIdeal> {
        a.check(b)?;
        Ok(CoordIdeal::from_mask(self.k, a.mask | b.mask))
    }

    fn ideal_product(&self, a: &CoordIdeal, b: &CoordIdeal) -> Result<CoordIdeal> {
        // idempotents: eᵢ·eⱼ = δᵢⱼ eᵢ
        self.ideal_intersection(a, b)
    }

    fn ideal_colon(&self, a: &CoordIdeal, b: &CoordIdeal) -> Result<CoordIdeal> {
        a.check(b)?;
        Ok(CoordIdeal::from_mask(self.k, a.mask | !b.mask))
    }

    fn ideal_is_unit(&self, a: &CoordIdeal) -> Result<bool> {
        self.check_ideal(a)?;
        Ok(a.mask == full_mask(self.k))
    }

    fn ideal_key(&self, a: &CoordIdeal) -> Result<Vec<String>> {
        self.check_ideal(a)?;
        Ok(a.coords().iter().map(|i| format!("e{}", i + 1)).collect())
    }

    /// The k maximal ideals 𝔭ᵢ = {r : rᵢ = 0}; these are all primes of R.
    fn prime_universe(&self) -> Vec<CoordIdeal> {
        (0..self.k)
            .map(|i| CoordIdeal::from_mask(self.k, full_mask(self.k) & !(1 << i)))
            .collect()
    }

    fn classify_prime(&self, p: &CoordIdeal) -> Result<Primality> {
        self.check_ideal(p)?;
        if (full_mask(self.k) & !p.mask).count_ones() == 1 {
            Ok(Primality::Certified)
        } else {
            Err(Error::NonPrimeCandidate(p.to_string()))
        }
    }

    fn minimal_primes(&self, b: &CoordIdeal) -> Result<Vec<CoordIdeal>> {
        self.check_ideal(b)?;
        if b.mask == full_mask(self.k) {
            return Err(Error::ProperNonzeroRequired);
        }
        Ok((0..self.k)
            .filter(|i| b.mask & (1 << i) == 0)
            .map(|i| CoordIdeal::from_mask(self.k, full_mask(self.k) & !(1 << i)))
            .collect())
    }

    /// F_pᵏ is reduced, so every ideal is radical.
    fn certify_radical(&self, b: &CoordIdeal, _rng: &mut dyn RngCore) -> Result<bool> {
        self.check_ideal(b)?;
        Ok(true)
    }

    fn zero_sub(&self) -> Subspace {
        Subspace::zero(self.k)
    }

    fn sub_is_subset(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        Ok(a.is_subspace_of(&self.field, b))
    }

    fn sub_key(&self, a: &Subspace) -> Result<Vec<String>> {
        Ok(a.basis().iter().map(|v| render_vector(v)).collect())
    }

    fn sub_sum(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        Ok(a.sum(&self.field, b))
    }

    fn ideal_times(&self, b: &CoordIdeal, n: &Subspace) -> Result<Subspace> {
        self.check_ideal(b)?;
        let vectors: Vec<Vec<u32>> = n
            .basis()
            .iter()
            .flat_map(|v| b.coords().into_iter().map(move |i| (i, v)))
            .map(|(i, v)| hadamard(&self.field, &unit_vector(self.k, i), v))
            .collect();
        Ok(Subspace::span(&self.field, self.k, vectors))
    }

    fn x_image(&self, n: &Subspace) -> Result<Subspace> {
        Ok(n.image(&self.field, &self.x_action))
    }

    /// Linear algebra: r lies in the component iff φ(Aⁿ(r ⊙ mⱼ)) = 0 for every
    /// functional φ vanishing on N and every basis vector mⱼ of M.
    fn annihilator_component(&self, n: &Subspace, degree: u32) -> Result<CoordIdeal> {
        let f = &self.field;
        let mut power: Vec<Vec<u32>> = (0..self.k).map(|i| unit_vector(self.k, i)).collect();
        for _ in 0..degree {
            power = mat_mul(f, &self.x_action, &power);
        }
        let perp = n.orthogonal(f);
        let mut constraints = Vec::new();
        for phi in perp.basis() {
            // row vector φ·Aⁿ
            let row: Vec<u32> = (0..self.k)
                .map(|c| (0..self.k).fold(0, |acc, l| f.add(acc, f.mul(phi[l], power[l][c]))))
                .collect();
            for m in self.carrier.basis() {
                constraints.push(hadamard(f, &row, m));
            }
        }
        let solution = Subspace::span(f, self.k, nullspace(f, &constraints, self.k));
        let mask = (0..self.k)
            .filter(|&i| solution.contains(f, &unit_vector(self.k, i)))
            .fold(0u32, |acc, i| acc | (1 << i));
        let ideal = CoordIdeal::from_mask(self.k, mask);
        let as_space = Subspace::span(
            f,
            self.k,
            ideal.coords().into_iter().map(|i| unit_vector(self.k, i)),
        );
        if as_space != solution {
            return Err(Error::NotSubmodule(
                "annihilator is not an ideal; N is not an R-submodule".into(),
            ));
        }
        Ok(ideal)
    }

    fn restrict(&self, n: &Subspace) -> Result<Self> {
        Self::build(self.field, self.k, self.x_action.clone(), n.clone())
            .map(|m| m.with_budget(self.budget))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(entries: &[u32]) -> Vec<Vec<u32>> {
        let k = entries.len();
        (0..k)
            .map(|i| {
                let mut r = vec![0; k];
                r[i] = entries[i];
                r
            })
            .collect()
    }

    #[test]
    fn cyclic_permutation_is_not_r_linear() {
        let cyc = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(
            ProductModule::new(3, 3, cyc).unwrap_err(),
            Error::NotRLinear
        );
    }

    #[test]
    fn singular_action_is_not_x_divisible() {
        assert_eq!(
            ProductModule::new(2, 2, diag(&[1, 0])).unwrap_err(),
            Error::NotXDivisible
        );
        // but it is fine on the carrier where it is invertible
        let m = ProductModule::with_carrier(2, 2, diag(&[1, 0]), vec![vec![1, 0]]).unwrap();
        assert_eq!(m.carrier().dimension(), 1);
    }

    #[test]
    fn annihilators_by_linear_algebra() {
        let m = ProductModule::new(3, 3, diag(&[1, 2, 2])).unwrap();
        let n = m.submodule(vec![vec![0, 1, 0]]).unwrap();
        // 0 :_R (M/N) kills coordinates 1 and 3 but must be 1 at coordinate 2
        let ann = m.annihilator(&n).unwrap();
        assert_eq!(ann.coords(), vec![1]);
        for d in 0..3 {
            assert_eq!(m.annihilator_component(&n, d).unwrap(), ann);
        }
        assert_eq!(m.annihilator(m.carrier()).unwrap(), m.unit_ideal());
        assert_eq!(m.annihilator(&m.zero_sub()).unwrap(), m.zero_ideal());
    }

    #[test]
    fn annihilator_on_a_proper_carrier() {
        let m =
            ProductModule::with_carrier(2, 3, diag(&[1, 1, 1]), vec![vec![1, 0, 0], vec![0, 1, 0]])
                .unwrap();
        // 0 :_R M is the coordinate outside the support
        assert_eq!(m.annihilator(&m.zero_sub()).unwrap().coords(), vec![2]);
    }

    #[test]
    fn special_submodules_are_supports() {
        let m = ProductModule::identity(2, 3).unwrap();
        let b = CoordIdeal::new(3, [0, 2]).unwrap();
        let s = m.special_submodule(&b).unwrap();
        assert_eq!(m.sub_key(&s).unwrap(), vec!["(1,0,0)", "(0,0,1)"]);
        assert_eq!(m.annihilator(&s).unwrap(), b);
    }

    #[test]
    fn mismatched_factor_counts() {
        let m = ProductModule::identity(2, 2).unwrap();
        let other = CoordIdeal::from_mask(3, 1);
        assert_eq!(m.ideal_is_unit(&other).unwrap_err(), Error::RingMismatch);
    }
}
