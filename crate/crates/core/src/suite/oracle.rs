//! Reference computations that avoid the Gröbner engine: linear algebra over
//! bounded-degree monomial spaces and bitmask combinatorics for squarefree
//! monomial ideals.

use std::collections::{BTreeSet, HashMap};

use crate::module::linalg::Subspace;
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// Monomials in `nvars` variables of total degree at most `bound`.
pub fn monomials_up_to(nvars: usize, bound: u64) -> Vec<Monomial> {
    fn rec(i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e as u32;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, bound, &mut vec![0; nvars], &mut out);
    out
}

/// Decides whether f lies in the F_p-span of {m·g : deg(m·g) ≤ bound}.
/// A `true` answer is a certificate of ideal membership; for homogeneous
/// generators and homogeneous f, `bound = deg f` makes the answer exact.
pub fn bounded_membership(ring: &Ring, f: &Polynomial, gens: &[Polynomial], bound: u64) -> bool {
    if f.is_zero() {
        return true;
    }
    if f.total_degree().unwrap() > bound {
        return false;
    }
    let basis = monomials_up_to(ring.nvars(), bound);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dim = basis.len();
    let to_vec = |q: &Polynomial| {
        let mut v = vec![0u32; dim];
        for (m, c) in q.terms() {
            v[index[m]] = *c;
        }
        v
    };
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap();
        if dg > bound {
            continue;
        }
        for m in monomials_up_to(ring.nvars(), bound - dg) {
            rows.push(to_vec(&g.mul_term(1, &m)));
        }
    }
    Subspace::span(ring.field(), dim, rows).contains(ring.field(), &to_vec(f))
}

/// Minimal variable sets meeting every support (support = bitmask of the
/// variables of a squarefree generator), by exhaustive search.
pub fn minimal_primes_brute(supports: &[u32], nvars: usize) -> Vec<u32> {
    let hits = |s: u32| supports.iter().all(|g| g & s != 0);
    let mut out: Vec<u32> = (0..1u32 << nvars)
        .filter(|&s| hits(s))
        .filter(|&s| (0..nvars).all(|i| s & (1 << i) == 0 || !hits(s & !(1 << i))))
        .collect();
    out.sort_by_key(|s| (s.count_ones(), *s));
    out
}

/// Minimal squarefree generators (as supports) of the intersection of the
/// variable primes P_S for S in `primes`. The empty family gives the unit
/// ideal, represented by the empty support.
pub fn intersect_variable_primes(primes: &[u32], nvars: usize) -> Vec<u32> {
    if primes.contains(&0) {
        return Vec::new();
    }
    // a squarefree monomial lies in every P_S iff its support meets every S
    minimal_primes_brute(primes, nvars)
}

/// Squarefree monomial ideal with the given supports, rendered as a set of
/// generator strings. The empty list renders as the zero ideal.
pub fn render_supports(ring: &Ring, supports: &[u32]) -> BTreeSet<String> {
    supports
        .iter()
        .map(|&s| {
            let e: Vec<u32> = (0..ring.nvars()).map(|i| (s >> i) & 1).collect();
            Polynomial::monomial(ring, &e).to_string()
        })
        .collect()
}

/// Whether the monomial ideal generated by `gens` lies in P_S.
pub fn monomials_in_prime(gens: &[Monomial], s: u32) -> bool {
    gens.iter().all(|m| {
        m.exponents()
            .iter()
            .enumerate()
            .any(|(i, &e)| e > 0 && s & (1 << i) != 0)
    })
}

/// All intersections of nonempty subfamilies of `primes`, each as its
/// minimal generator supports.
pub fn intersection_closure(primes: &[u32], nvars: usize) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for pick in 1u32..(1 << primes.len()) {
        let fam: Vec<u32> = (0..primes.len())
            .filter(|i| pick & (1 << i) != 0)
            .map(|i| primes[i])
            .collect();
        out.insert(intersect_variable_primes(&fam, nvars));
    }
    out
}
