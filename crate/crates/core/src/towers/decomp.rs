use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{direct_product, gcd, subgroups, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    /// Subgroups of index `n` examined.
    pub checked: usize,
    /// Those containing `K0 × (H ∩ Kn)`.
    pub passed: usize,
    pub holds: bool,
}

/// In `G = K0 × Kn` with `gcd(n, |K0|) = 1`, checks that every subgroup `H`
/// of index `n` contains `K0 × (H ∩ Kn)`, hence `K0`.
pub fn decomposition_check(k0: &FiniteGroup, kn: &FiniteGroup, n: usize, caps: &Caps) -> Result<DecompositionReport> {
    if n == 0 || gcd(n, k0.order()) != 1 {
        return Err(Error::InvalidParameter(format!("need gcd(n, |K0|) = 1, got n = {n}, |K0| = {}", k0.order())));
    }
    caps.check_group_order((k0.order() * kn.order()) as u128)?;
    let g = direct_product(k0, kn);
    let m = kn.order();
    // (a, b) has index a·|Kn| + b
    let mut checked = 0;
    let mut passed = 0;
    for h in subgroups(&g, caps)?.into_iter().filter(|h| h.index() == n) {
        checked += 1;
        let h_kn: Vec<usize> = (0..m).filter(|&b| h.contains(b)).collect();
        if k0.elements().all(|a| h_kn.iter().all(|&b| h.contains(a * m + b))) {
            passed += 1;
        }
    }
    Ok(DecompositionReport { n, checked, passed, holds: passed == checked })
}
