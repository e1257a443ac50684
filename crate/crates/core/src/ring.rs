//! Ring descriptors, monomials and monomial orders.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Monomial order tag. Every ideal records the order of its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Pure lexicographic, first variable largest.
    Lex,
    /// Product order: grevlex on the first `block` variables, ties broken by
    /// grevlex on the rest. Used internally for elimination.
    Elimination { block: usize },
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Elimination { block } => write!(f, "elim({block})"),
        }
    }
}

/// Work limits for the Gröbner engine and the special-submodule fixed point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget {
    /// Maximum number of single-term reduction steps per basis computation.
    pub steps: u64,
    /// Maximum number of fixed-point rounds in `special_submodule`.
    pub rounds: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            steps: 1_000_000,
            rounds: 64,
        }
    }
}

/// The polynomial ring F_p[θ₁..θₙ] together with its monomial order.
///
/// Equality ignores the attached [`Budget`].
#[derive(Debug, Clone)]
pub struct RingSpec {
    field: PrimeField,
    var_names: Vec<String>,
    order: MonomialOrder,
    budget: Budget,
}

pub type Ring = Arc<RingSpec>;

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.var_names == other.var_names && self.order == other.order
    }
}

impl Eq for RingSpec {}

impl RingSpec {
    pub fn new<S: Into<String>>(
        p: u64,
        var_names: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        let var_names: Vec<String> = var_names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &var_names {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Elimination { block } = order {
            if block > var_names.len() {
                return Err(Error::InvalidArgument(format!(
                    "elimination block {block} exceeds {} variables",
                    var_names.len()
                )));
            }
        }
        Ok(Arc::new(Self {
            field,
            var_names,
            order,
            budget: Budget::default(),
        }))
    }

    /// Grevlex ring with variables `t1..tn`.
    pub fn standard(p: u64, nvars: usize) -> Result<Ring> {
        Self::new(
            p,
            (1..=nvars).map(|i| format!("t{i}")),
            MonomialOrder::Grevlex,
        )
    }

    /// Same ring with a different budget.
    pub fn with_budget(self: &Arc<Self>, budget: Budget) -> Ring {
        let mut r = (**self).clone();
        r.budget = budget;
        Arc::new(r)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Ring with `extra` fresh variables prepended, using an elimination order
    /// that eliminates exactly those variables.
    pub(crate) fn extend_front(self: &Arc<Self>, extra: usize) -> Ring {
        let mut names: Vec<String> = (0..extra).map(|i| self.fresh_name(i)).collect();
        names.extend(self.var_names.iter().cloned());
        Arc::new(Self {
            field: self.field,
            var_names: names,
            order: MonomialOrder::Elimination { block: extra },
            budget: self.budget,
        })
    }

    fn fresh_name(&self, i: usize) -> String {
        let mut name = format!("_u{i}");
        while self.var_names.contains(&name) {
            name.push('_');
        }
        name
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        compare_exponents(&a.0, &b.0, self.order)
    }

    pub(crate) fn same(a: &Ring, b: &Ring) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub(crate) fn check_same(a: &Ring, b: &Ring) -> Result<()> {
        if Self::same(a, b) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

/// Exponent vector θ^e.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Self(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn scale(&self, k: u32) -> Self {
        Self(self.0.iter().map(|e| e * k).collect())
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// Product of the variables in the support.
    pub fn squarefree_part(&self) -> Self {
        Self(self.0.iter().map(|&e| e.min(1)).collect())
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn compare_exponents(a: &[u32], b: &[u32], order: MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::Grevlex => grevlex(a, b),
        MonomialOrder::Elimination { block } => {
            grevlex(&a[..block], &b[..block]).then_with(|| grevlex(&a[block..], &b[block..]))
        }
    }
}

/// Compares two monomials under `order`.
pub fn monomial_compare(m1: &Monomial, m2: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if m1.len() != m2.len() {
        return Err(Error::LengthMismatch {
            expected: m1.len(),
            got: m2.len(),
        });
    }
    if let MonomialOrder::Elimination { block } = order {
        if block > m1.len() {
            return Err(Error::InvalidArgument("elimination block too large".into()));
        }
    }
    Ok(compare_exponents(&m1.0, &m2.0, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_example() {
        let got = monomial_compare(&m(&[2, 1]), &m(&[1, 2]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(got, Ordering::Greater);
    }

    #[test]
    fn reflexive() {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            assert_eq!(
                monomial_compare(&m(&[3, 1]), &m(&[3, 1]), order).unwrap(),
                Ordering::Equal
            );
        }
    }

    #[test]
    fn lex_example() {
        let got = monomial_compare(&m(&[0, 5]), &m(&[1, 0]), MonomialOrder::Lex).unwrap();
        assert_eq!(got, Ordering::Less);
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        // t1*t3 < t2^2 in grevlex with t1 > t2 > t3
        let got = monomial_compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(got, Ordering::Less);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            monomial_compare(&m(&[1]), &m(&[1, 0]), MonomialOrder::Grevlex),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn ring_construction_checks() {
        assert_eq!(
            RingSpec::new(4, ["t1"], MonomialOrder::Grevlex).unwrap_err(),
            Error::NotPrime(4)
        );
        assert_eq!(
            RingSpec::new(2, ["a", "a"], MonomialOrder::Grevlex).unwrap_err(),
            Error::DuplicateVariable("a".into())
        );
    }

    #[test]
    fn elimination_order_eliminates() {
        // any monomial involving the first variable beats any monomial without it
        let order = MonomialOrder::Elimination { block: 1 };
        let got = monomial_compare(&m(&[1, 0, 0]), &m(&[0, 9, 9]), order).unwrap();
        assert_eq!(got, Ordering::Greater);
    }

    fn exps() -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..5, 3)
    }

    proptest! {
        #[test]
        fn total_order_properties(a in exps(), b in exps(), c in exps()) {
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Elimination { block: 1 }] {
                let (a, b, c) = (m(&a), m(&b), m(&c));
                let ab = monomial_compare(&a, &b, order).unwrap();
                let ba = monomial_compare(&b, &a, order).unwrap();
                prop_assert_eq!(ab, ba.reverse());
                if ab == Ordering::Equal {
                    prop_assert_eq!(&a, &b);
                }
                let bc = monomial_compare(&b, &c, order).unwrap();
                if ab != Ordering::Less && bc != Ordering::Less {
                    prop_assert_ne!(monomial_compare(&a, &c, order).unwrap(), Ordering::Less);
                }
                // multiplicative compatibility
                let ac = monomial_compare(&a.mul(&c), &b.mul(&c), order).unwrap();
                prop_assert_eq!(ab, ac);
            }
        }
    }
}
