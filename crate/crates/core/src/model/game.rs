use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::Zero;
use once_cell::race::OnceBox;

use super::allocation::Allocation;
use super::coalition::Coalition;
use super::instance::{DualPriceVector, PiInstance};
use crate::lp::{solve_lp, LpSolution};
use crate::{Error, Rational, Result};

/// Default upper bound on the number of players a [`GameTable`] accepts.
pub const DEFAULT_PLAYER_CAP: usize = 20;

/// Tables up to this many players are filled at construction; larger ones
/// fill in on first access.
pub const EAGER_PLAYER_LIMIT: usize = 16;

/// A transferable-utility cost game on players `0..players()`.
pub trait CostGame {
    fn players(&self) -> usize;

    /// `c(S)`, with `c(∅) = 0`.
    ///
    /// # Panics
    /// May panic when `s` names a player outside the game.
    fn cost(&self, s: Coalition) -> &Rational;

    fn grand(&self) -> Coalition {
        Coalition::grand(self.players())
    }
}

/// A game given by an explicit value table indexed by coalition bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularGame {
    players: usize,
    values: Vec<Rational>,
}

impl TabularGame {
    pub fn from_fn(players: usize, mut f: impl FnMut(Coalition) -> Rational) -> Self {
        let values = Coalition::all(players)
            .map(|s| if s.is_empty() { Rational::zero() } else { f(s) })
            .collect();
        Self { players, values }
    }

    /// Snapshot of any other game.
    pub fn from_game<G: CostGame>(game: &G) -> Self {
        Self::from_fn(game.players(), |s| game.cost(s).clone())
    }
}

impl CostGame for TabularGame {
    fn players(&self) -> usize {
        self.players
    }

    fn cost(&self, s: Coalition) -> &Rational {
        &self.values[s.bits() as usize]
    }
}

/// The PI-game of an instance: `c(S) = Σ_t d_t^S y_t*(S)`, memoized per
/// coalition.
///
/// Reads are safe from several threads; lazily filled entries are
/// initialized at most once in effect (racing initializers compute the same
/// value and one of them wins).
pub struct GameTable {
    instance: PiInstance,
    values: Vec<OnceBox<Rational>>,
}

impl core::fmt::Debug for GameTable {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GameTable")
            .field("players", &self.instance.players())
            .field("periods", &self.instance.periods())
            .finish()
    }
}

impl GameTable {
    pub fn new(instance: PiInstance) -> Result<Self> {
        Self::with_player_cap(instance, DEFAULT_PLAYER_CAP)
    }

    pub fn with_player_cap(instance: PiInstance, cap: usize) -> Result<Self> {
        let players = instance.players();
        if players > cap {
            return Err(Error::TooManyPlayers { players, cap });
        }
        let size = 1usize << players;
        let values: Vec<OnceBox<Rational>> = (0..size).map(|_| OnceBox::new()).collect();
        let table = Self { instance, values };
        if players <= EAGER_PLAYER_LIMIT {
            for s in Coalition::all(players) {
                table.cost(s);
            }
        }
        Ok(table)
    }

    pub fn instance(&self) -> &PiInstance {
        &self.instance
    }

    pub fn periods(&self) -> usize {
        self.instance.periods()
    }

    /// `y*(S)`.
    pub fn dual_prices(&self, s: Coalition) -> Result<DualPriceVector> {
        self.instance.dual_prices(s)
    }

    /// `c(S)`; same as [`CostGame::cost`].
    pub fn characteristic_value(&self, s: Coalition) -> &Rational {
        self.cost(s)
    }

    /// See [`PiInstance::owen_point`].
    pub fn owen_point(&self) -> Allocation {
        self.instance.owen_point()
    }
}

impl CostGame for GameTable {
    fn players(&self) -> usize {
        self.instance.players()
    }

    fn cost(&self, s: Coalition) -> &Rational {
        self.values[s.bits() as usize].get_or_init(|| {
            Box::new(
                self.instance
                    .coalition_cost(s)
                    .expect("coalition inside the grand coalition"),
            )
        })
    }
}

/// `c(S)` recomputed by solving the coalition's dual lot-sizing LP with the
/// exact simplex, independent of the closed-form prices.
pub fn characteristic_value_lp_oracle(instance: &PiInstance, s: Coalition) -> Result<Rational> {
    let lp = instance.dual_lp(s)?;
    match solve_lp(&lp) {
        LpSolution::Optimal { value, .. } => Ok(-value),
        LpSolution::Infeasible => Err(Error::Lp("dual lot-sizing program infeasible")),
        LpSolution::Unbounded => Err(Error::Lp("dual lot-sizing program unbounded")),
    }
}
