use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::{Coalition, CostGame, Error, GameTable, PiInstance, Rational, Result};

/// `y_t*(N∖{i}) − y_t*(N)`, the rise in period-`t` price when `i` leaves.
/// Zero for one-player instances.
pub fn price_gap(instance: &PiInstance, i: usize, t: usize) -> Rational {
    let grand = instance.grand();
    let rest = grand.without(i);
    if rest.is_empty() {
        return Rational::zero();
    }
    let with = instance.dual_prices(grand).expect("nonempty");
    let without = instance.dual_prices(rest).expect("nonempty");
    &without[t] - &with[t]
}

fn gaps(instance: &PiInstance) -> Vec<Vec<Rational>> {
    let grand = instance.grand();
    let with = instance.dual_prices(grand).expect("nonempty");
    (0..instance.players())
        .map(|i| {
            let rest = grand.without(i);
            if rest.is_empty() {
                return alloc::vec![Rational::zero(); instance.periods()];
            }
            let without = instance.dual_prices(rest).expect("nonempty");
            without
                .iter()
                .zip(with.iter())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialPlayers {
    pub overall: Coalition,
    /// `𝓔^t` for every period.
    pub per_period: Vec<Coalition>,
}

impl EssentialPlayers {
    /// The player of a period with exactly one essential player.
    pub fn single_in_period(&self, t: usize) -> Option<usize> {
        let e = self.per_period[t];
        (e.len() == 1).then(|| e.members().next().unwrap())
    }

    /// The player, when exactly one is essential overall.
    pub fn single(&self) -> Option<usize> {
        (self.overall.len() == 1).then(|| self.overall.members().next().unwrap())
    }
}

/// Players whose departure raises some period's price while the others
/// still have demand in that period.
pub fn essential_players(instance: &PiInstance) -> EssentialPlayers {
    let gaps = gaps(instance);
    let grand = instance.grand();
    let per_period: Vec<Coalition> = (0..instance.periods())
        .map(|t| {
            Coalition::from_members((0..instance.players()).filter(|&i| {
                gaps[i][t].is_positive() && instance.coalition_demand(grand.without(i), t) > 0
            }))
        })
        .collect();
    let overall = per_period
        .iter()
        .fold(Coalition::empty(), |acc, &e| acc | e);
    EssentialPlayers {
        overall,
        per_period,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanSet {
    pub overall: Coalition,
    /// Fans of the player restricted to each period.
    pub per_period: Vec<Coalition>,
}

/// Players other than `i` with demand in some period whose price rises
/// without `i`. Fails unless `i` is essential.
pub fn fan_set(instance: &PiInstance, i: usize) -> Result<FanSet> {
    if i >= instance.players() {
        return Err(Error::PlayerOutOfRange {
            player: i,
            players: instance.players(),
        });
    }
    if !essential_players(instance).overall.contains(i) {
        return Err(Error::NotEssential(i));
    }
    Ok(fans_unchecked(instance, i, &gaps(instance)[i]))
}

fn fans_unchecked(instance: &PiInstance, i: usize, gap: &[Rational]) -> FanSet {
    let per_period: Vec<Coalition> = (0..instance.periods())
        .map(|t| {
            if !gap[t].is_positive() {
                return Coalition::empty();
            }
            Coalition::from_members(
                (0..instance.players()).filter(|&j| j != i && instance.demand()[j][t] > 0),
            )
        })
        .collect();
    let overall = per_period
        .iter()
        .fold(Coalition::empty(), |acc, &f| acc | f);
    FanSet {
        overall,
        per_period,
    }
}

/// An essential player together with one of its fans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EssentialFanPair {
    essential: usize,
    fan: usize,
}

impl EssentialFanPair {
    /// Checks that `essential` is essential in `game` and `fan` one of its fans.
    pub fn new(game: &GameTable, essential: usize, fan: usize) -> Result<Self> {
        let fans = fan_set(game.instance(), essential)?;
        if !fans.overall.contains(fan) {
            return Err(Error::NotAPair { essential, fan });
        }
        Ok(Self { essential, fan })
    }

    pub fn essential(self) -> usize {
        self.essential
    }

    pub fn fan(self) -> usize {
        self.fan
    }
}

/// All essential-fan pairs, ordered by essential player then fan.
pub fn pair_set(game: &GameTable) -> Vec<EssentialFanPair> {
    let instance = game.instance();
    let gaps = gaps(instance);
    let essential = essential_players(instance);
    let mut pairs = Vec::new();
    for i in essential.overall.members() {
        for fan in fans_unchecked(instance, i, &gaps[i]).overall.members() {
            pairs.push(EssentialFanPair { essential: i, fan });
        }
    }
    debug_assert!(pairs.iter().all(|p| p.fan < game.players()));
    pairs
}
