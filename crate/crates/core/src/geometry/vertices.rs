use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::core_set::subset_sums;
use crate::lp::{solve_linear_system, LinearSolve, RowSpace};
use crate::{rat, Allocation, Coalition, CostGame, Error, Rational, Result};

/// Default largest player count for [`enumerate_core_vertices`].
pub const DEFAULT_VERTEX_CAP: usize = 6;

/// A deduplicated, ordered set of efficient allocations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    total: Rational,
    points: BTreeSet<Allocation>,
}

impl VertexSet {
    pub(crate) fn new(total: Rational) -> Self {
        Self {
            total,
            points: BTreeSet::new(),
        }
    }

    pub(crate) fn insert(&mut self, x: Allocation) -> bool {
        assert_eq!(x.total(), self.total, "vertex set points must be efficient");
        self.points.insert(x)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &Allocation) -> bool {
        self.points.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Allocation> {
        self.points.iter()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.points.is_subset(&other.points)
    }
}

/// All vertices of the core polytope by brute force: every choice of
/// `n − 1` coalition constraints together with efficiency is solved as a
/// square system, and the solutions satisfying all remaining constraints
/// are kept.
///
/// Refuses games with more than `cap` players.
pub fn enumerate_core_vertices<G: CostGame>(g: &G, cap: usize) -> Result<VertexSet> {
    let n = g.players();
    if n > cap {
        return Err(Error::TooManyPlayers { players: n, cap });
    }
    let grand_cost = g.cost(g.grand()).clone();
    let mut out = VertexSet::new(grand_cost.clone());
    let rows: Vec<Coalition> = Coalition::proper(n).collect();
    let indicator =
        |s: Coalition| -> Vec<Rational> { (0..n).map(|i| rat(i64::from(s.contains(i)))).collect() };
    let ones = vec![rat(1); n];
    let mut space = RowSpace::new(n);
    space.insert(&ones);
    let mut chosen: Vec<Coalition> = Vec::with_capacity(n);
    search(
        g,
        &rows,
        0,
        &indicator,
        &ones,
        &grand_cost,
        &mut space,
        &mut chosen,
        &mut out,
    );
    Ok(out)
}

// Depth-first over index-increasing choices; a branch is cut as soon as a
// chosen row is linearly dependent on the earlier ones, since no completion
// of it can be a basis.
#[allow(clippy::too_many_arguments)]
fn search<G: CostGame>(
    g: &G,
    rows: &[Coalition],
    start: usize,
    indicator: &dyn Fn(Coalition) -> Vec<Rational>,
    ones: &[Rational],
    grand_cost: &Rational,
    space: &mut RowSpace,
    chosen: &mut Vec<Coalition>,
    out: &mut VertexSet,
) {
    let n = g.players();
    if space.is_full() {
        let mut matrix = vec![ones.to_vec()];
        let mut rhs = vec![grand_cost.clone()];
        for &s in chosen.iter() {
            matrix.push(indicator(s));
            rhs.push(g.cost(s).clone());
        }
        if let LinearSolve::Unique(x) = solve_linear_system(&matrix, &rhs) {
            let sums = subset_sums(&x);
            let feasible = Coalition::proper(n).all(|s| &sums[s.bits() as usize] <= g.cost(s));
            if feasible {
                out.insert(Allocation::new(x));
            }
        }
        return;
    }
    let needed = n - space.rank();
    for k in start..rows.len() {
        if rows.len() - k < needed {
            break;
        }
        let row = indicator(rows[k]);
        let mut next = space.clone();
        if !next.insert(&row) {
            continue;
        }
        chosen.push(rows[k]);
        search(
            g,
            rows,
            k + 1,
            indicator,
            ones,
            grand_cost,
            &mut next,
            chosen,
            out,
        );
        chosen.pop();
    }
}
