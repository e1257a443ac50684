use crate::error::{Error, Result};
use crate::module::{ProductModule, SplitModule};
use crate::ring::{MonomialOrder, RingSpec};

/// The counterexample ring K[θ₁,θ₂,…] truncated to `n` variables `th1..thn`,
/// with K = F_p and the standard splitting h as x-action.
pub fn build_counterexample(p: u64, n: usize) -> Result<SplitModule> {
    if n == 0 {
        return Err(Error::InvalidArgument("counterexample needs n >= 1".into()));
    }
    let ring = RingSpec::new(p, (1..=n).map(|i| format!("th{i}")), MonomialOrder::Grevlex)?;
    Ok(SplitModule::whole(&ring))
}

/// M = R = F_pᵏ with x acting by the given matrix.
pub fn build_artinian(p: u64, k: usize, x_action: Vec<Vec<u32>>) -> Result<ProductModule> {
    ProductModule::new(p, k, x_action)
}
