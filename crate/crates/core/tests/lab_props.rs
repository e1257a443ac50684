use frobgrann_core::lab::{graded_annihilator, special_ideal_lattice, special_ideal_test};
use frobgrann_core::module::{FrobeniusModule, ProductModule, SplitModule};
use frobgrann_core::suite::{run_suite, SuiteConfig};
use frobgrann_core::{Ideal, Monomial, Polynomial, RingSpec};
use proptest::prelude::*;

fn squarefree(r: &frobgrann_core::Ring, supports: &[u32]) -> Ideal {
    let gens = supports
        .iter()
        .map(|s| {
            let e: Vec<u32> = (0..r.nvars()).map(|i| (s >> i) & 1).collect();
            Polynomial::monomial(r, &e)
        })
        .collect();
    Ideal::new(r, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn special_ideals_round_trip(p in prop::sample::select(vec![2u64, 3]), supports in proptest::collection::vec(1u32..8, 0..=3)) {
        let r = RingSpec::standard(p, 3).unwrap();
        let m = SplitModule::whole(&r);
        let b = squarefree(&r, &supports);
        let t = special_ideal_test(&m, &b).unwrap();
        prop_assert!(t.is_special);
        let back = m.special_submodule(&t.annihilator).unwrap();
        prop_assert!(back.same_ideal(&t.submodule).unwrap());
        prop_assert!(m.x_divisibility(&t.submodule).unwrap());
    }

    #[test]
    fn annihilators_preserve_order(
        p in prop::sample::select(vec![2u64, 3]),
        a in proptest::collection::vec(1u32..8, 1..=2),
        b in proptest::collection::vec(1u32..8, 1..=2),
    ) {
        let r = RingSpec::standard(p, 3).unwrap();
        let m = SplitModule::whole(&r);
        let small = m.special_submodule(&squarefree(&r, &a).product(&squarefree(&r, &b)).unwrap()).unwrap();
        let big = m.special_submodule(&squarefree(&r, &a)).unwrap();
        prop_assert!(small.is_subset_of(&big).unwrap());
        let (ga, gb) = (graded_annihilator(&m, &small).unwrap(), graded_annihilator(&m, &big).unwrap());
        prop_assert!(ga.compare(&gb).unwrap().is_le());
        let inner = m.special_submodule(ga.component(0)).unwrap();
        prop_assert!(inner.is_subset_of(&small).unwrap());
    }

    #[test]
    fn special_submodules_of_any_ideal_are_x_divisible(
        p in prop::sample::select(vec![2u64, 3]),
        terms in proptest::collection::vec((proptest::collection::vec(0u32..=2, 2), 1u32..3), 1..=3),
    ) {
        let r = RingSpec::standard(p, 2).unwrap();
        let m = SplitModule::whole(&r);
        let f = Polynomial::from_terms(&r, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)));
        let n = m.special_submodule(&Ideal::new(&r, vec![f]).unwrap()).unwrap();
        prop_assert!(m.x_divisibility(&n).unwrap());
        let g = graded_annihilator(&m, &n).unwrap();
        prop_assert_eq!(g.stable_from(), 0);
    }
}

#[test]
fn product_lattices_are_all_ideals() {
    for k in 1..=4 {
        let m = ProductModule::identity(3, k).unwrap();
        let l = special_ideal_lattice(&m, &m.prime_universe()).unwrap();
        assert_eq!(l.len(), 1 << k);
    }
}

#[test]
fn suite_passes_under_other_seeds() {
    for seed in [2, 3] {
        for o in run_suite(SuiteConfig { quick: true, seed }) {
            assert!(o.pass, "seed {seed}: {o}");
        }
    }
}
