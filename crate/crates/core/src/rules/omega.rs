use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::geometry::{essential_players, price_gap};
use crate::{Allocation, Error, GameTable, PiInstance, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaDecomposition {
    pub omega: Allocation,
    /// `ω_i^t`, indexed `[t][i]`.
    pub per_period: Vec<Vec<Rational>>,
    /// `q_t(i, j)`, indexed `[t][i][j]`.
    pub q: Vec<Vec<Vec<Rational>>>,
    /// `Q_i^t = ω_i^t − o_i^t`, indexed `[t][i]`.
    pub q_per_period: Vec<Vec<Rational>>,
    /// `Q_i = Σ_t Q_i^t`.
    pub q_total: Vec<Rational>,
}

/// `q_t(i, j)`: what `j` would save in period `t` through `i`'s presence,
/// `(y_t*(N∖{i}) − y_t*(N))·d_t^j`, and zero on the diagonal.
pub fn cost_reduction_q(g: &GameTable, t: usize, i: usize, j: usize) -> Result<Rational> {
    let inst = g.instance();
    for p in [i, j] {
        if p >= inst.players() {
            return Err(Error::PlayerOutOfRange {
                player: p,
                players: inst.players(),
            });
        }
    }
    if t >= inst.periods() {
        return Err(Error::PeriodOutOfRange {
            period: t,
            periods: inst.periods(),
        });
    }
    if i == j {
        return Ok(Rational::zero());
    }
    Ok(price_gap(inst, i, t) * Rational::from_integer(inst.demand()[j][t].into()))
}

pub fn omega_point(g: &GameTable) -> OmegaDecomposition {
    omega_point_of_instance(g.instance())
}

/// The Omega point computed straight from the situation data, without a
/// coalition table.
pub fn omega_point_of_instance(inst: &PiInstance) -> OmegaDecomposition {
    let n = inst.players();
    let periods = inst.periods();
    let grand_prices = inst.dual_prices(inst.grand()).expect("nonempty");
    let essential = essential_players(inst);
    let gaps: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..periods).map(|t| price_gap(inst, i, t)).collect())
        .collect();
    let demand = |j: usize, t: usize| Rational::from_integer(inst.demand()[j][t].into());

    let mut per_period = Vec::with_capacity(periods);
    let mut q = Vec::with_capacity(periods);
    let mut q_per_period = Vec::with_capacity(periods);
    let mut q_total = vec![Rational::zero(); n];
    for t in 0..periods {
        let qt: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::zero()
                        } else {
                            &gaps[i][t] * demand(j, t)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut shift = vec![Rational::zero(); n];
        if let Some(k) = essential.single_in_period(t) {
            let fans = &essential_fans(inst, k, t);
            for &j in fans {
                shift[j] += &qt[k][j];
                shift[k] -= &qt[k][j];
            }
        }
        let omega_t: Vec<Rational> = (0..n)
            .map(|i| &grand_prices[t] * demand(i, t) + &shift[i])
            .collect();
        for (acc, s) in q_total.iter_mut().zip(&shift) {
            *acc += s;
        }
        per_period.push(omega_t);
        q.push(qt);
        q_per_period.push(shift);
    }
    let omega = (0..n)
        .map(|i| per_period.iter().map(|row| &row[i]).sum())
        .collect();
    OmegaDecomposition {
        omega,
        per_period,
        q,
        q_per_period,
        q_total,
    }
}

// F^t of the single essential player `k`: the others with demand in `t`.
fn essential_fans(inst: &PiInstance, k: usize, t: usize) -> Vec<usize> {
    (0..inst.players())
        .filter(|&j| j != k && inst.demand()[j][t] > 0)
        .collect()
}
