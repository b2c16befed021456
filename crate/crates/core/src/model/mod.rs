//! PI-situations, coalitions and the cost games they induce.

mod allocation;
mod coalition;
mod game;
mod instance;

pub use allocation::Allocation;
pub use coalition::{Coalition, Subsets, MAX_PLAYERS};
pub use game::{
    characteristic_value_lp_oracle, CostGame, GameTable, TabularGame, DEFAULT_PLAYER_CAP,
    EAGER_PLAYER_LIMIT,
};
pub use instance::{CoalitionParams, DualPriceVector, PiInstance};
