use alloc::vec;
use alloc::vec::Vec;

use crate::{Allocation, Coalition, CostGame, Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreCheck {
    pub member: bool,
    /// First coalition, by ascending bitmask, whose constraint fails. The
    /// grand coalition (the last mask) reports an efficiency failure.
    pub violation: Option<Coalition>,
}

/// `x_S` for every coalition, indexed by bitmask.
pub(crate) fn subset_sums(x: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    let mut sums = vec![Rational::default(); 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = &sums[mask & (mask - 1)] + &x[low];
    }
    sums
}

pub(crate) fn check_len<G: CostGame>(g: &G, x: &Allocation) -> Result<()> {
    if x.len() != g.players() {
        return Err(Error::DimensionMismatch {
            what: "allocation length",
            expected: g.players(),
            found: x.len(),
        });
    }
    Ok(())
}

/// Exact core test by scanning all `2^n - 1` coalition constraints.
///
/// Deciding core membership for PI-games is NP-complete in general, so no
/// shortcut is attempted.
pub fn is_core_member<G: CostGame>(g: &G, x: &Allocation) -> Result<CoreCheck> {
    check_len(g, x)?;
    let sums = subset_sums(x);
    let grand = g.grand();
    let violation = Coalition::all(g.players()).skip(1).find(|&s| {
        let xs = &sums[s.bits() as usize];
        if s == grand {
            xs != g.cost(s)
        } else {
            xs > g.cost(s)
        }
    });
    Ok(CoreCheck {
        member: violation.is_none(),
        violation,
    })
}

/// Whether a core allocation makes some nonempty proper coalition
/// constraint tight. Fails with [`Error::NotInCore`] for non-members.
pub fn is_boundary_point<G: CostGame>(g: &G, x: &Allocation) -> Result<bool> {
    if !is_core_member(g, x)?.member {
        return Err(Error::NotInCore);
    }
    let sums = subset_sums(x);
    Ok(Coalition::proper(g.players()).any(|s| &sums[s.bits() as usize] == g.cost(s)))
}
