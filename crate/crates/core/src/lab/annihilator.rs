use rand::RngCore;

use crate::error::{Error, Result};
use crate::module::FrobeniusModule;
use crate::skew::GradedTwoSidedIdeal;

/// Number of graded components computed explicitly (degrees 0..=HORIZON).
pub const GRADED_HORIZON: u32 = 2;

/// gr-ann(M/N) for an R[x,f]-submodule N of M, with components computed
/// independently in degrees 0..=[`GRADED_HORIZON`].
pub fn graded_annihilator<M: FrobeniusModule>(
    module: &M,
    n: &M::Sub,
) -> Result<GradedTwoSidedIdeal<M::Ideal>> {
    graded_annihilator_through(module, n, GRADED_HORIZON)
}

pub fn graded_annihilator_through<M: FrobeniusModule>(
    module: &M,
    n: &M::Sub,
    horizon: u32,
) -> Result<GradedTwoSidedIdeal<M::Ideal>> {
    if !module.sub_is_subset(n, module.carrier())? {
        return Err(Error::NotSubmodule("not contained in M".into()));
    }
    if !module.sub_is_subset(&module.x_image(n)?, n)? {
        return Err(Error::NotSubmodule("not stable under x".into()));
    }
    let chain = (0..=horizon)
        .map(|d| module.annihilator_component(n, d))
        .collect::<Result<Vec<_>>>()?;
    GradedTwoSidedIdeal::from_chain(chain)
}

/// Result of testing whether 𝔟 is a special M-ideal.
#[derive(Debug, Clone)]
pub struct SpecialTest<M: FrobeniusModule> {
    pub is_special: bool,
    /// M(𝔟R[x,f]).
    pub submodule: M::Sub,
    /// 0 :_R (M / M(𝔟R[x,f])).
    pub annihilator: M::Ideal,
}

/// 𝔟 ∈ I(M) iff 0 :_R (M / M(𝔟R[x,f])) = 𝔟.
pub fn special_ideal_test<M: FrobeniusModule>(module: &M, b: &M::Ideal) -> Result<SpecialTest<M>> {
    let submodule = module.special_submodule(b)?;
    let annihilator = module.annihilator(&submodule)?;
    let is_special = module.ideal_key(&annihilator)? == module.ideal_key(b)?;
    Ok(SpecialTest {
        is_special,
        submodule,
        annihilator,
    })
}

/// Structural facts recorded for every graded annihilator a checker computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnihilatorAudit {
    pub stable_from: usize,
    pub radical: bool,
}

impl AnnihilatorAudit {
    pub fn ok(&self) -> bool {
        self.stable_from == 0 && self.radical
    }
}

/// Computes gr-ann(M/N) and records chain constancy and radicality of its
/// degree-0 component.
pub fn audited_graded_annihilator<M: FrobeniusModule>(
    module: &M,
    n: &M::Sub,
    audits: &mut Vec<AnnihilatorAudit>,
    rng: &mut dyn RngCore,
) -> Result<GradedTwoSidedIdeal<M::Ideal>> {
    let g = graded_annihilator(module, n)?;
    let radical = module.certify_radical(g.component(0), rng)?;
    audits.push(AnnihilatorAudit {
        stable_from: g.stable_from(),
        radical,
    });
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{Containment, Ideal};
    use crate::module::{ProductModule, SplitModule};
    use crate::ring::RingSpec;

    #[test]
    fn annihilator_examples() {
        let r = RingSpec::standard(2, 2).unwrap();
        let m = SplitModule::whole(&r);
        let n = Ideal::parse(&r, &["t1*t2"]).unwrap();
        let g = graded_annihilator(&m, &n).unwrap();
        assert_eq!(g.stable_from(), 0);
        assert_eq!(g.component(0).describe().unwrap(), vec!["t1*t2"]);
        let whole = graded_annihilator(&m, &Ideal::unit(&r)).unwrap();
        assert!(whole.component(0).is_unit().unwrap());
        assert_eq!(whole.stable_from(), 0);

        let r1 = RingSpec::standard(2, 1).unwrap();
        let m1 = SplitModule::whole(&r1);
        let g1 = graded_annihilator(&m1, &Ideal::parse(&r1, &["t1"]).unwrap()).unwrap();
        assert_eq!(g1.component(0).describe().unwrap(), vec!["t1"]);
        assert_eq!(g1.stable_from(), 0);
    }

    #[test]
    fn unstable_submodule_is_rejected() {
        let r = RingSpec::standard(2, 1).unwrap();
        let m = SplitModule::whole(&r);
        let err = graded_annihilator(&m, &Ideal::parse(&r, &["t1^2"]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotSubmodule(_)));
    }

    #[test]
    fn special_test_examples() {
        let r = RingSpec::standard(2, 2).unwrap();
        let m = SplitModule::whole(&r);
        assert!(
            special_ideal_test(&m, &Ideal::parse(&r, &["t1*t2"]).unwrap())
                .unwrap()
                .is_special
        );
        let t = special_ideal_test(&m, &Ideal::parse(&r, &["t1 + t2"]).unwrap()).unwrap();
        assert!(!t.is_special);
        assert_eq!(
            t.annihilator
                .compare(&Ideal::parse(&r, &["t1", "t2"]).unwrap())
                .unwrap(),
            Containment::Equal
        );
        assert!(special_ideal_test(&m, &Ideal::unit(&r)).unwrap().is_special);
    }

    #[test]
    fn product_mode_chain_is_constant() {
        let m = ProductModule::identity(2, 3).unwrap();
        let n = m.submodule(vec![vec![1, 0, 0]]).unwrap();
        let g = graded_annihilator(&m, &n).unwrap();
        assert_eq!(g.stable_from(), 0);
        assert_eq!(g.component(0).coords(), vec![0]);
    }
}
