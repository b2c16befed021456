use alloc::vec;
use alloc::vec::Vec;
use core::ops::Deref;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::allocation::Allocation;
use super::coalition::{Coalition, MAX_PLAYERS};
use crate::lp::LpProblem;
use crate::{Error, Rational, Result};

/// A PI-situation: integer demands and unit production, holding and
/// backlogging costs for `players` players over `periods` periods.
///
/// Holding and backlogging rows have `periods - 1` entries: only the
/// transitions between consecutive periods carry a cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiInstance {
    players: usize,
    periods: usize,
    demand: Vec<Vec<u64>>,
    production: Vec<Vec<Rational>>,
    holding: Vec<Vec<Rational>>,
    backlog: Vec<Vec<Rational>>,
}

/// Pooled parameters of a coalition in one period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionParams {
    pub production: Rational,
    /// `None` in the last period.
    pub holding: Option<Rational>,
    /// `None` in the last period.
    pub backlog: Option<Rational>,
    pub demand: u128,
}

/// Optimal dual prices `y*(S)`, one per period.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualPriceVector(Vec<Rational>);

impl DualPriceVector {
    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }
}

impl Deref for DualPriceVector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

fn check_rows<T>(what: &'static str, rows: &[Vec<T>], players: usize, width: usize) -> Result<()> {
    if rows.len() != players {
        return Err(Error::DimensionMismatch {
            what,
            expected: players,
            found: rows.len(),
        });
    }
    for row in rows {
        if row.len() != width {
            return Err(Error::DimensionMismatch {
                what,
                expected: width,
                found: row.len(),
            });
        }
    }
    Ok(())
}

fn check_non_negative(what: &'static str, rows: &[Vec<Rational>]) -> Result<()> {
    for (player, row) in rows.iter().enumerate() {
        if let Some(period) = row.iter().position(Signed::is_negative) {
            return Err(Error::NegativeCost {
                what,
                player,
                period,
            });
        }
    }
    Ok(())
}

impl PiInstance {
    /// Builds an instance from row-per-player matrices.
    pub fn new(
        demand: Vec<Vec<u64>>,
        production: Vec<Vec<Rational>>,
        holding: Vec<Vec<Rational>>,
        backlog: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let players = demand.len();
        if players == 0 {
            return Err(Error::DimensionMismatch {
                what: "player count",
                expected: 1,
                found: 0,
            });
        }
        if players > MAX_PLAYERS {
            return Err(Error::TooManyPlayers {
                players,
                cap: MAX_PLAYERS,
            });
        }
        let periods = demand[0].len();
        if periods == 0 {
            return Err(Error::DimensionMismatch {
                what: "period count",
                expected: 1,
                found: 0,
            });
        }
        check_rows("demand", &demand, players, periods)?;
        check_rows("production", &production, players, periods)?;
        check_rows("holding", &holding, players, periods - 1)?;
        check_rows("backlog", &backlog, players, periods - 1)?;
        check_non_negative("production", &production)?;
        check_non_negative("holding", &holding)?;
        check_non_negative("backlog", &backlog)?;
        Ok(Self {
            players,
            periods,
            demand,
            production,
            holding,
            backlog,
        })
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn periods(&self) -> usize {
        self.periods
    }

    pub fn demand(&self) -> &[Vec<u64>] {
        &self.demand
    }

    pub fn production(&self) -> &[Vec<Rational>] {
        &self.production
    }

    pub fn holding(&self) -> &[Vec<Rational>] {
        &self.holding
    }

    pub fn backlog(&self) -> &[Vec<Rational>] {
        &self.backlog
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.players)
    }

    fn check_coalition(&self, s: Coalition) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !s.is_subset(self.grand()) {
            let player = s.members().find(|&i| i >= self.players).unwrap();
            return Err(Error::PlayerOutOfRange {
                player,
                players: self.players,
            });
        }
        Ok(())
    }

    fn check_period(&self, t: usize) -> Result<()> {
        if t >= self.periods {
            return Err(Error::PeriodOutOfRange {
                period: t,
                periods: self.periods,
            });
        }
        Ok(())
    }

    fn pooled_min(rows: &[Vec<Rational>], s: Coalition, t: usize) -> Rational {
        s.members().map(|i| &rows[i][t]).min().unwrap().clone()
    }

    /// `d_t^S`; zero for the empty coalition.
    pub fn coalition_demand(&self, s: Coalition, t: usize) -> u128 {
        s.members()
            .filter(|&i| i < self.players)
            .map(|i| u128::from(self.demand[i][t]))
            .sum()
    }

    pub fn coalition_params(&self, s: Coalition, t: usize) -> Result<CoalitionParams> {
        self.check_coalition(s)?;
        self.check_period(t)?;
        let last = t + 1 == self.periods;
        Ok(CoalitionParams {
            production: Self::pooled_min(&self.production, s, t),
            holding: (!last).then(|| Self::pooled_min(&self.holding, s, t)),
            backlog: (!last).then(|| Self::pooled_min(&self.backlog, s, t)),
            demand: self.coalition_demand(s, t),
        })
    }

    /// Closed-form optimal dual prices of the coalition's lot-sizing LP.
    ///
    /// `y_t` is the cheapest of producing in `t`, producing in an earlier
    /// period `k` and carrying stock over `k..t`, or producing in a later
    /// period `k` and backlogging over `t..k`. The forward and backward
    /// passes below evaluate those chain minima in linear time.
    pub fn dual_prices(&self, s: Coalition) -> Result<DualPriceVector> {
        self.check_coalition(s)?;
        let periods = self.periods;
        let p: Vec<Rational> = (0..periods)
            .map(|t| Self::pooled_min(&self.production, s, t))
            .collect();
        let h: Vec<Rational> = (0..periods - 1)
            .map(|t| Self::pooled_min(&self.holding, s, t))
            .collect();
        let b: Vec<Rational> = (0..periods - 1)
            .map(|t| Self::pooled_min(&self.backlog, s, t))
            .collect();

        // cheapest "produce at or before t, hold until t"
        let mut forward = p.clone();
        for t in 1..periods {
            let carried = &forward[t - 1] + &h[t - 1];
            if carried < forward[t] {
                forward[t] = carried;
            }
        }
        // cheapest "produce at or after t, backlog back to t"
        let mut backward = p;
        for t in (0..periods - 1).rev() {
            let carried = &backward[t + 1] + &b[t];
            if carried < backward[t] {
                backward[t] = carried;
            }
        }
        Ok(DualPriceVector(
            forward
                .into_iter()
                .zip(backward)
                .map(|(f, g)| if g < f { g } else { f })
                .collect(),
        ))
    }

    /// Cost of coalition `s` from its dual prices, `Σ_t d_t^S y_t*(S)`.
    pub fn coalition_cost(&self, s: Coalition) -> Result<Rational> {
        if s.is_empty() {
            return Ok(Rational::zero());
        }
        let y = self.dual_prices(s)?;
        Ok(y.iter()
            .enumerate()
            .map(|(t, price)| price * BigInt::from(self.coalition_demand(s, t)))
            .sum())
    }

    /// The dual lot-sizing program of coalition `s`, posed as a
    /// minimization of `-Σ_t d_t^S y_t` over free prices `y`.
    pub fn dual_lp(&self, s: Coalition) -> Result<LpProblem> {
        self.check_coalition(s)?;
        let periods = self.periods;
        let objective = (0..periods)
            .map(|t| -Rational::from_integer(BigInt::from(self.coalition_demand(s, t))))
            .collect();
        let mut lp = LpProblem::minimize(objective);
        let unit = |t: usize, sign: i64| {
            let mut row = vec![Rational::zero(); periods];
            row[t] = Rational::from_integer(sign.into());
            row
        };
        for t in 0..periods {
            lp.add_le(unit(t, 1), Self::pooled_min(&self.production, s, t));
        }
        for t in 0..periods - 1 {
            // y_{t+1} - y_t <= h_t
            let mut row = unit(t + 1, 1);
            row[t] = Rational::from_integer((-1).into());
            lp.add_le(row, Self::pooled_min(&self.holding, s, t));
            // y_t - y_{t+1} <= b_t
            let mut row = unit(t, 1);
            row[t + 1] = Rational::from_integer((-1).into());
            lp.add_le(row, Self::pooled_min(&self.backlog, s, t));
        }
        Ok(lp)
    }

    /// Charges every player its own demand at the grand coalition's dual
    /// prices: `o_i = Σ_t d_t^i y_t*(N)`.
    pub fn owen_point(&self) -> Allocation {
        let prices = self
            .dual_prices(self.grand())
            .expect("grand coalition is nonempty");
        self.demand
            .iter()
            .map(|row| {
                row.iter()
                    .zip(prices.iter())
                    .map(|(&d, y)| y * BigInt::from(d))
                    .sum()
            })
            .collect()
    }

    /// Same costs, demand kept only in period `t`.
    pub fn per_period_instance(&self, t: usize) -> Result<PiInstance> {
        self.check_period(t)?;
        let mut out = self.clone();
        for row in out.demand.iter_mut() {
            for (k, d) in row.iter_mut().enumerate() {
                if k != t {
                    *d = 0;
                }
            }
        }
        Ok(out)
    }
}
