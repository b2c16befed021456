use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::core_set::{check_len, subset_sums};
use super::essential::{pair_set, EssentialFanPair};
use super::vertices::VertexSet;
use crate::{Allocation, Coalition, CostGame, Error, GameTable, Rational, Result};

/// Default number of extreme-function evaluations a walk may spend.
pub const DEFAULT_WALK_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferResult {
    /// `α_p(x)`.
    pub alpha: Rational,
    /// A minimizing coalition: smallest cardinality, then smallest bitmask.
    pub witness: Coalition,
}

/// The largest cost the fan can take over from its essential player at `x`:
/// the minimum slack `c(R) − x_R` over coalitions `R` containing the fan
/// but not the essential player.
pub fn transferred_cost<G: CostGame>(
    g: &G,
    pair: EssentialFanPair,
    x: &Allocation,
) -> Result<TransferResult> {
    check_len(g, x)?;
    let (i, j) = (pair.essential(), pair.fan());
    let free = g.grand().without(i).without(j);
    let mut best: Option<(Rational, Coalition)> = None;
    for rest in free.subsets() {
        let r = rest.with(j);
        let slack = g.cost(r) - x.coalition_sum(r);
        let better = match &best {
            None => true,
            Some((alpha, w)) => {
                slack < *alpha || (slack == *alpha && (r.len(), r.bits()) < (w.len(), w.bits()))
            }
        };
        if better {
            best = Some((slack, r));
        }
    }
    let (alpha, witness) = best.expect("coalition {fan} is always a candidate");
    Ok(TransferResult { alpha, witness })
}

/// `f_p(x)`: shifts `α_p(x)` from the essential player onto the fan.
pub fn extreme_function<G: CostGame>(
    g: &G,
    pair: EssentialFanPair,
    x: &Allocation,
) -> Result<Allocation> {
    let t = transferred_cost(g, pair, x)?;
    let mut y = x.clone();
    y.transfer(pair.essential(), pair.fan(), &t.alpha);
    Ok(y)
}

/// A sequence of exactly `|ℙ|` essential-fan pairs (repeats allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSequence(Vec<EssentialFanPair>);

impl PairSequence {
    pub fn new(game: &GameTable, pairs: Vec<EssentialFanPair>) -> Result<Self> {
        let expected = pair_set(game).len();
        if pairs.len() != expected {
            return Err(Error::SequenceLength {
                expected,
                found: pairs.len(),
            });
        }
        Ok(Self(pairs))
    }

    pub fn pairs(&self) -> &[EssentialFanPair] {
        &self.0
    }
}

/// Applies the pairs of `sequence` left to right: `f_{σ_k} ∘ … ∘ f_{σ_1}`.
pub fn composite_walk<G: CostGame>(
    g: &G,
    sequence: &PairSequence,
    x: &Allocation,
) -> Result<Allocation> {
    sequence
        .pairs()
        .iter()
        .try_fold(x.clone(), |acc, &p| extreme_function(g, p, &acc))
}

#[derive(Debug, Clone)]
pub struct ExtremeWalk {
    /// The Owen point and every composite image reached.
    pub points: VertexSet,
    /// Set when the budget ran out before the search finished.
    pub truncated: bool,
    /// Extreme-function evaluations spent.
    pub evaluations: usize,
}

/// Collects `{o} ∪ {F_σ(o) : σ ∈ ℙ^{|ℙ|}}`.
///
/// Instead of enumerating all `|ℙ|^{|ℙ|}` sequences, the search expands
/// points depth-first and skips any step with `α = 0`: such a step is the
/// identity, and padding a shorter sequence with a repeat of its last pair
/// reaches the same point, so the collected set is unchanged. A point is
/// re-expanded only when reached with more remaining steps than before.
pub fn generate_extremes_from_owen(game: &GameTable, budget: usize) -> ExtremeWalk {
    let pairs = pair_set(game);
    let depth_limit = pairs.len();
    let owen = game.owen_point();
    let mut points = VertexSet::new(game.cost(game.grand()).clone());
    points.insert(owen.clone());

    let mut depth_seen: BTreeMap<Allocation, usize> = BTreeMap::new();
    depth_seen.insert(owen.clone(), 0);
    let mut stack = alloc::vec![(owen, 0usize)];
    let mut evaluations = 0;
    let mut truncated = false;

    'search: while let Some((x, depth)) = stack.pop() {
        if depth == depth_limit {
            continue;
        }
        let sums = subset_sums(&x);
        for &p in &pairs {
            if evaluations >= budget {
                truncated = true;
                break 'search;
            }
            evaluations += 1;
            let alpha = min_slack(game, p, &sums);
            if alpha.is_zero() {
                continue;
            }
            let mut y = x.clone();
            y.transfer(p.essential(), p.fan(), &alpha);
            match depth_seen.get(&y) {
                Some(&d) if d <= depth + 1 => {}
                _ => {
                    depth_seen.insert(y.clone(), depth + 1);
                    points.insert(y.clone());
                    stack.push((y, depth + 1));
                }
            }
        }
    }
    ExtremeWalk {
        points,
        truncated,
        evaluations,
    }
}

fn min_slack<G: CostGame>(g: &G, p: EssentialFanPair, sums: &[Rational]) -> Rational {
    let free = g.grand().without(p.essential()).without(p.fan());
    free.subsets()
        .map(|rest| {
            let r = rest.with(p.fan());
            g.cost(r) - &sums[r.bits() as usize]
        })
        .min()
        .expect("nonempty")
}
