use alloc::vec::Vec;

use super::omega::omega_point_of_instance;
use crate::geometry::{essential_players, is_core_member};
use crate::{Allocation, CostGame, Error, GameTable, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IbcBound {
    pub player: usize,
    /// `Σ_t y_t*(N∖𝓔^t) d_t^i`.
    pub bound: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TyrannyCheck {
    /// The game does not have exactly one essential player.
    NotApplicable,
    Checked {
        essential: usize,
        /// `c(N∖{k})`.
        rest_cost: Rational,
        /// `x_{N∖{k}}`.
        rest_share: Rational,
        holds: bool,
    },
}

impl TyrannyCheck {
    pub fn holds(&self) -> Option<bool> {
        match self {
            TyrannyCheck::NotApplicable => None,
            TyrannyCheck::Checked { holds, .. } => Some(*holds),
        }
    }
}

/// Additivity over periods, checked for the Omega rule itself: the rule
/// applied to each single-period demand matrix must sum to the rule on the
/// whole demand. Periods with several essential players contribute the
/// Owen point of their demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcpCheck {
    pub period_allocations: Vec<Allocation>,
    pub combined: Allocation,
    pub rule_value: Allocation,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub ef: bool,
    pub ne: bool,
    /// Bounds for the inessential players only.
    pub ibc_bounds: Vec<IbcBound>,
    pub ibc: bool,
    pub ti: TyrannyCheck,
    pub acp: AcpCheck,
    /// Whether `x` is the Omega point, the rule `acp` speaks about.
    pub is_omega_point: bool,
    pub in_core: bool,
}

pub fn check_axioms(g: &GameTable, x: &Allocation) -> Result<AxiomReport> {
    let inst = g.instance();
    let n = inst.players();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            what: "allocation length",
            expected: n,
            found: x.len(),
        });
    }
    let grand = g.grand();
    let essential = essential_players(inst);

    let ef = x.total() == *g.cost(grand);

    let rest_prices: Vec<_> = essential
        .per_period
        .iter()
        .map(|&e| {
            let rest = if e.is_empty() { grand } else { grand - e };
            inst.dual_prices(rest).expect("inessential players exist")
        })
        .collect();
    let ibc_bounds: Vec<IbcBound> = (0..n)
        .filter(|&i| !essential.overall.contains(i))
        .map(|i| {
            let bound: Rational = (0..inst.periods())
                .map(|t| &rest_prices[t][t] * Rational::from_integer(inst.demand()[i][t].into()))
                .sum();
            IbcBound {
                player: i,
                holds: x[i] <= bound,
                bound,
            }
        })
        .collect();
    let ibc = ibc_bounds.iter().all(|b| b.holds);

    let ti = match essential.single() {
        None => TyrannyCheck::NotApplicable,
        Some(k) => {
            let rest = grand.without(k);
            let rest_cost = g.cost(rest).clone();
            let rest_share = x.coalition_sum(rest);
            TyrannyCheck::Checked {
                essential: k,
                holds: rest_share == rest_cost,
                rest_cost,
                rest_share,
            }
        }
    };

    let rule_value = omega_point_of_instance(inst).omega;
    let period_allocations: Vec<Allocation> = (0..inst.periods())
        .map(|t| {
            let part = inst.per_period_instance(t).expect("period in range");
            if essential.per_period[t].len() <= 1 {
                omega_point_of_instance(&part).omega
            } else {
                part.owen_point()
            }
        })
        .collect();
    let mut combined = Allocation::zeros(n);
    for a in &period_allocations {
        combined = combined.iter().zip(a.iter()).map(|(u, v)| u + v).collect();
    }
    let acp = AcpCheck {
        holds: combined == rule_value,
        period_allocations,
        combined,
        rule_value,
    };
    Ok(AxiomReport {
        ef,
        ne: true,
        ibc_bounds,
        ibc,
        ti,
        is_omega_point: *x == acp.rule_value,
        acp,
        in_core: is_core_member(g, x)?.member,
    })
}
