//! Core membership, essential players and their fans, extreme functions,
//! and a brute-force vertex enumerator for the core polytope.

mod core_set;
mod essential;
mod extreme;
mod vertices;

pub use core_set::{is_boundary_point, is_core_member, CoreCheck};
pub use essential::{
    essential_players, fan_set, pair_set, price_gap, EssentialFanPair, EssentialPlayers, FanSet,
};
pub use extreme::{
    composite_walk, extreme_function, generate_extremes_from_owen, transferred_cost, ExtremeWalk,
    PairSequence, TransferResult, DEFAULT_WALK_BUDGET,
};
pub use vertices::{enumerate_core_vertices, VertexSet, DEFAULT_VERTEX_CAP};
