use frobgrann_core::suite::oracle::minimal_primes_brute;
use frobgrann_core::{Ideal, Monomial, MonomialOrder, Polynomial, Ring, RingSpec};
use proptest::prelude::*;

fn poly_strategy(
    n: usize,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    proptest::collection::vec(
        (proptest::collection::vec(0..=max_deg, n), 1u32..3),
        1..=max_terms,
    )
}

fn build(r: &Ring, t: &[(Vec<u32>, u32)]) -> Polynomial {
    Polynomial::from_terms(r, t.iter().map(|(e, c)| (Monomial::new(e.clone()), *c)))
}

fn ring(p: u64, lex: bool) -> Ring {
    let order = if lex {
        MonomialOrder::Lex
    } else {
        MonomialOrder::Grevlex
    };
    RingSpec::new(p, ["t1", "t2", "t3"], order).unwrap()
}

fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    f.mul_term(1, &lf.quotient_of(&l))
        .sub(&g.mul_term(1, &lg.quotient_of(&l)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_invariants(
        p in prop::sample::select(vec![2u64, 3]),
        lex in any::<bool>(),
        gens in proptest::collection::vec(poly_strategy(3, 2, 3), 1..=3),
    ) {
        let r = ring(p, lex);
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let gb = ideal.groebner_basis().unwrap().to_vec();
        let basis = Ideal::new(&r, gb.clone()).unwrap();
        for g in &gens {
            prop_assert!(ideal.normal_form(g).unwrap().is_zero());
        }
        for (i, f) in gb.iter().enumerate() {
            prop_assert_eq!(f.leading_coefficient(), Some(1));
            for (j, g) in gb.iter().enumerate() {
                if i < j {
                    prop_assert!(ideal.normal_form(&s_poly(f, g)).unwrap().is_zero());
                }
                if i != j {
                    let lf = f.leading_monomial().unwrap();
                    prop_assert!(g.terms().iter().all(|(m, _)| !lf.divides(m)));
                }
            }
        }
        prop_assert_eq!(basis.groebner_basis().unwrap().to_vec(), gb);
        prop_assert!(basis.same_ideal(&ideal).unwrap());
    }

    #[test]
    fn normal_form_properties(
        p in prop::sample::select(vec![2u64, 3]),
        gens in proptest::collection::vec(poly_strategy(3, 2, 3), 1..=2),
        f in poly_strategy(3, 3, 4),
    ) {
        let r = ring(p, false);
        let ideal = Ideal::new(&r, gens.iter().map(|g| build(&r, g)).collect()).unwrap();
        let f = build(&r, &f);
        let nf = ideal.normal_form(&f).unwrap();
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(ideal.contains(&f.sub(&nf)).unwrap());
        prop_assert_eq!(ideal.contains(&f).unwrap(), nf.is_zero());
    }

    #[test]
    fn ideal_operation_containments(
        p in prop::sample::select(vec![2u64, 3]),
        a in proptest::collection::vec(poly_strategy(3, 2, 2), 1..=2),
        b in proptest::collection::vec(poly_strategy(3, 2, 2), 1..=2),
    ) {
        let r = ring(p, false);
        let i = Ideal::new(&r, a.iter().map(|g| build(&r, g)).collect()).unwrap();
        let j = Ideal::new(&r, b.iter().map(|g| build(&r, g)).collect()).unwrap();
        let meet = i.intersection(&j).unwrap();
        let prod = i.product(&j).unwrap();
        let sum = i.sum(&j).unwrap();
        let colon = i.colon(&j).unwrap();
        prop_assert!(meet.is_subset_of(&i).unwrap() && meet.is_subset_of(&j).unwrap());
        prop_assert!(prod.is_subset_of(&meet).unwrap());
        prop_assert!(i.is_subset_of(&sum).unwrap() && j.is_subset_of(&sum).unwrap());
        prop_assert!(i.is_subset_of(&colon).unwrap());
        prop_assert!(colon.product(&j).unwrap().is_subset_of(&i).unwrap());
        for g in i.generators() {
            for h in j.generators() {
                prop_assert!(meet.contains(&g.mul(h)).unwrap());
            }
        }
    }

    #[test]
    fn monomial_minimal_primes_match_brute_force(
        supports in proptest::collection::vec(1u32..8, 1..=4),
        extra in proptest::collection::vec(0u32..3, 3),
    ) {
        let r = ring(2, false);
        let gens: Vec<Polynomial> = supports
            .iter()
            .map(|s| {
                let e: Vec<u32> = (0..3).map(|i| if s & (1 << i) != 0 { 1 + extra[i] } else { 0 }).collect();
                Polynomial::monomial(&r, &e)
            })
            .collect();
        let ideal = Ideal::new(&r, gens).unwrap();
        let got: Vec<u32> = ideal
            .monomial_minimal_primes()
            .unwrap()
            .iter()
            .map(|q| q.variable_support().unwrap().unwrap().iter().map(|i| 1u32 << i).sum())
            .collect();
        prop_assert_eq!(got, minimal_primes_brute(&supports, 3));
        let rad = ideal.monomial_radical().unwrap();
        for g in ideal.generators() {
            prop_assert!(rad.radical_membership(g).unwrap());
        }
    }
}
