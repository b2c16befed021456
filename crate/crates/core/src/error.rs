use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coalition must be nonempty")]
    EmptyCoalition,
    #[error("period {period} out of range (instance has {periods} periods)")]
    PeriodOutOfRange { period: usize, periods: usize },
    #[error("player {player} out of range (game has {players} players)")]
    PlayerOutOfRange { player: usize, players: usize },
    #[error("{what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} must be non-negative (player {player}, period {period})")]
    NegativeCost {
        what: &'static str,
        player: usize,
        period: usize,
    },
    #[error("{players} players exceeds the cap of {cap}")]
    TooManyPlayers { players: usize, cap: usize },
    #[error("player {0} is not essential")]
    NotEssential(usize),
    #[error("({essential}, {fan}) is not an essential-fan pair")]
    NotAPair { essential: usize, fan: usize },
    #[error("pair sequence must have length {expected}, found {found}")]
    SequenceLength { expected: usize, found: usize },
    #[error("lambda must lie in [0, 1]")]
    LambdaOutOfRange,
    #[error("allocation is not in the core")]
    NotInCore,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("internal LP failure: {0}")]
    Lp(&'static str),
}
