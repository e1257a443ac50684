//! Sparse multivariate polynomials over F_p.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Ring, RingSpec};

/// A polynomial in canonical form: terms sorted strictly decreasing under the
/// ring's monomial order, no zero coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        RingSpec::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact `f op g`.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    RingSpec::check_same(&f.ring, &g.ring)?;
    Ok(match op {
        ArithOp::Add => f.add(g),
        ArithOp::Sub => f.sub(g),
        ArithOp::Mul => f.mul(g),
    })
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    /// The i-th variable.
    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::term(ring, 1, Monomial::var(ring.nvars(), i))
    }

    pub fn term(ring: &Ring, c: u32, m: Monomial) -> Self {
        assert_eq!(m.len(), ring.nvars(), "monomial length");
        let c = c % ring.p();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Ring, exponents: &[u32]) -> Self {
        Self::term(ring, 1, Monomial::new(exponents.to_vec()))
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let field = *ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "monomial length");
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c % ring.p());
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Single term (monomial times a nonzero scalar).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| *c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: u32| if negate_other { field.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a[i].1, sign(b[j].1));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(*c))));
        Self {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        self.scale(self.ring.p() - 1)
    }

    pub fn scale(&self, c: u32) -> Self {
        let field = self.ring.field();
        let c = c % self.ring.p();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// `c · m · self`. Multiplying by a monomial preserves term order.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Self {
        let field = self.ring.field();
        let c = c % self.ring.p();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let field = *self.ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = field.add(*e, field.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| self.ring.cmp_monomials(&b.0, &a.0));
        Self {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^(p^e)`: exponents are multiplied by p^e, coefficients are fixed
    /// because c^p = c in F_p.
    pub fn frobenius_power(&self, e: u32) -> Self {
        let k = self.ring.p().pow(e);
        Self {
            ring: self.ring.clone(),
            // scaling exponents by a positive constant preserves the order
            terms: self.terms.iter().map(|(m, c)| (m.scale(k), *c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c).expect("nonzero")),
        }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Drops the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, u32)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Re-expresses the polynomial in `target`, whose variables are
    /// `offset` fresh variables followed by this ring's variables.
    pub(crate) fn embed(&self, target: &Ring, offset: usize) -> Self {
        Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; offset];
                e.extend_from_slice(m.exponents());
                (Monomial::new(e), *c)
            }),
        )
    }

    /// Inverse of [`embed`](Self::embed); `None` if a dropped variable occurs.
    pub(crate) fn contract(&self, target: &Ring, offset: usize) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            if m.exponents()[..offset].iter().any(|&e| e != 0) {
                return None;
            }
            terms.push((Monomial::new(m.exponents()[offset..].to_vec()), *c));
        }
        Some(Self::from_terms(target, terms))
    }

    /// Same polynomial in a ring with identical variables but possibly a
    /// different order.
    pub fn reorder(&self, target: &Ring) -> Result<Self> {
        if target.nvars() != self.ring.nvars() || target.p() != self.ring.p() {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_terms(target, self.terms.iter().cloned()))
    }

    /// Exact quotient `self / g`; errors if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        RingSpec::check_same(&self.ring, &g.ring)?;
        let (lm, lc) = match g.terms.first() {
            Some((m, c)) => (m, *c),
            None => return Err(Error::NotDivisible),
        };
        let field = self.ring.field();
        let inv = field.inv(lc).expect("nonzero");
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return Err(Error::NotDivisible);
            }
            let q = lm.quotient_of(&m);
            let qc = field.mul(c, inv);
            rem = rem.sub(&g.mul_term(qc, &q));
            quotient.push((q, qc));
        }
        Ok(Self::from_terms(&self.ring, quotient))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
