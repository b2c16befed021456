use alloc::vec::Vec;

use super::nucleolus::nucleolus;
use super::qpq::solomonic;
use super::shapley::shapley;
use crate::geometry::essential_players;
use crate::{Allocation, Coalition, CostGame, GameTable, Rational};

/// Marginal cost of `i` joining `s`.
fn delta<G: CostGame>(g: &G, i: usize, s: Coalition) -> Rational {
    g.cost(s.with(i)) - g.cost(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConcavityViolation {
    pub player: usize,
    /// `S ∋ player` with `S ⊆ T` and `c(S) − c(S∖{i}) < c(T) − c(T∖{i})`.
    pub smaller: Coalition,
    pub larger: Coalition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcavityCheck {
    pub concave: bool,
    pub violation: Option<ConcavityViolation>,
}

/// Exhaustive concavity test.
///
/// Marginals decrease along every chain exactly when they decrease on each
/// single added player, so it suffices to compare `S = R ∪ {i}` against
/// `T = R ∪ {i, j}`. The scan runs over `i`, then `R ⊆ N∖{i}` by bitmask,
/// then `j`, and reports the first failure.
pub fn is_concave<G: CostGame>(g: &G) -> ConcavityCheck {
    let grand = g.grand();
    for i in 0..g.players() {
        for r in grand.without(i).subsets() {
            let here = delta(g, i, r);
            for j in (grand - r).without(i).members() {
                if here < delta(g, i, r.with(j)) {
                    return ConcavityCheck {
                        concave: false,
                        violation: Some(ConcavityViolation {
                            player: i,
                            smaller: r.with(i),
                            larger: r.with(i).with(j),
                        }),
                    };
                }
            }
        }
    }
    ConcavityCheck {
        concave: true,
        violation: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsWitness {
    pub is_ps: bool,
    /// `c_i` for every player, when the game is a PS-game.
    pub constants: Option<Vec<Rational>>,
    /// The first `(i, S)` whose pair-sum differs from the one at `S = ∅`.
    pub counterexample: Option<(usize, Coalition)>,
}

/// Checks `Δ_i(S) + Δ_i(N∖(S ∪ {i})) = c_i` for every player and every
/// `S ⊆ N∖{i}`, taking `c_i` from `S = ∅`.
pub fn is_ps_game<G: CostGame>(g: &G) -> PsWitness {
    let n = g.players();
    let grand = g.grand();
    let mut constants = Vec::with_capacity(n);
    for i in 0..n {
        let others = grand.without(i);
        let pair_sum = |s: Coalition| delta(g, i, s) + delta(g, i, others - s);
        let c = pair_sum(Coalition::empty());
        if let Some(s) = others.subsets().skip(1).find(|&s| pair_sum(s) != c) {
            return PsWitness {
                is_ps: false,
                constants: None,
                counterexample: Some((i, s)),
            };
        }
        constants.push(c);
    }
    PsWitness {
        is_ps: true,
        constants: Some(constants),
        counterexample: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodConditions {
    pub essential: Coalition,
    /// (i): at most one essential player.
    pub at_most_one_essential: bool,
    /// (ii): the essential players alone reach the grand-coalition price.
    pub essential_price_matches: bool,
    /// (iii): every inessential player alone pays the price of all
    /// inessential players together.
    pub inessential_prices_match: bool,
    /// First inessential player breaking (iii), with `y_t*(N∖𝓔^t)` and
    /// that player's own price.
    pub inessential_witness: Option<(usize, Rational, Rational)>,
}

impl PeriodConditions {
    pub fn holds(&self) -> bool {
        self.at_most_one_essential && self.essential_price_matches && self.inessential_prices_match
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolomonicConditions {
    pub per_period: Vec<PeriodConditions>,
    pub overall: bool,
}

/// Evaluates the sufficient conditions for the Solomonic allocation, the
/// Shapley value and the Nucleolus to coincide, period by period.
pub fn check_solomonic_conditions(g: &GameTable) -> SolomonicConditions {
    let inst = g.instance();
    let n = inst.players();
    let grand = inst.grand();
    let essential = essential_players(inst);
    let grand_prices = inst.dual_prices(grand).expect("nonempty");
    let singles: Vec<_> = (0..n)
        .map(|i| inst.dual_prices(Coalition::singleton(i)).expect("nonempty"))
        .collect();
    let per_period: Vec<PeriodConditions> = essential
        .per_period
        .iter()
        .enumerate()
        .map(|(t, &e)| {
            let essential_price_matches =
                e.is_empty() || inst.dual_prices(e).expect("nonempty")[t] == grand_prices[t];
            let rest = grand - e;
            let inessential_witness = if rest.is_empty() {
                None
            } else {
                let y_rest = inst.dual_prices(rest).expect("nonempty")[t].clone();
                rest.members()
                    .find(|&i| singles[i][t] != y_rest)
                    .map(|i| (i, y_rest, singles[i][t].clone()))
            };
            PeriodConditions {
                essential: e,
                at_most_one_essential: e.len() <= 1,
                essential_price_matches,
                inessential_prices_match: inessential_witness.is_none(),
                inessential_witness,
            }
        })
        .collect();
    let overall = per_period.iter().all(PeriodConditions::holds);
    SolomonicConditions {
        per_period,
        overall,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceReport {
    pub solomonic: Allocation,
    pub shapley: Allocation,
    pub nucleolus: Allocation,
    pub solomonic_eq_shapley: bool,
    pub shapley_eq_nucleolus: bool,
    pub solomonic_eq_nucleolus: bool,
    pub conditions: SolomonicConditions,
    pub concavity: ConcavityCheck,
    pub ps: PsWitness,
    /// False only when the conditions hold but the three allocations differ.
    pub prediction_consistent: bool,
}

impl CoincidenceReport {
    pub fn all_coincide(&self) -> bool {
        self.solomonic_eq_shapley && self.shapley_eq_nucleolus
    }
}

pub fn coincidence_report(g: &GameTable) -> CoincidenceReport {
    let solomonic = solomonic(g);
    let shapley = shapley(g);
    let nucleolus = nucleolus(g);
    let conditions = check_solomonic_conditions(g);
    let solomonic_eq_shapley = solomonic == shapley;
    let shapley_eq_nucleolus = shapley == nucleolus;
    let prediction_consistent =
        !conditions.overall || (solomonic_eq_shapley && shapley_eq_nucleolus);
    CoincidenceReport {
        solomonic_eq_nucleolus: solomonic == nucleolus,
        solomonic,
        shapley,
        nucleolus,
        solomonic_eq_shapley,
        shapley_eq_nucleolus,
        conditions,
        concavity: is_concave(g),
        ps: is_ps_game(g),
        prediction_consistent,
    }
}
