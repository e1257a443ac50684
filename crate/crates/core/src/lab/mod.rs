//! Graded annihilators, special ideals and the structural checks.

mod annihilator;
mod builders;
mod lattice;
mod theorems;

pub use annihilator::{
    audited_graded_annihilator, graded_annihilator, graded_annihilator_through, special_ideal_test,
    AnnihilatorAudit, SpecialTest, GRADED_HORIZON,
};
pub use builders::{build_artinian, build_counterexample};
pub use lattice::{
    associated_prime_witness, enumerate_special_primes, special_ideal_lattice, LatticeEntry,
    SpecialIdealLattice, SpecialPrimes,
};
pub use theorems::{
    check_product_law, check_quotient_annihilator, check_submodule_primes, theorem_verifier,
    verify_decomposition, CheckKind, CheckParams, PartResult, ProductLawParams,
    QuotientAnnihilatorParams, Rendered, SubmodulePrimesParams, VerificationReport,
};
