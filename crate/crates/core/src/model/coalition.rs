use core::fmt;
use core::ops::{BitAnd, BitOr, Not, Sub};

/// Bitmask width limit; bit `i` stands for player `i`.
pub const MAX_PLAYERS: usize = 30;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const fn empty() -> Self {
        Self(0)
    }

    pub const fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// # Panics
    /// When `n > MAX_PLAYERS`.
    pub fn grand(n: usize) -> Self {
        assert!(n <= MAX_PLAYERS, "at most {MAX_PLAYERS} players");
        Self(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_PLAYERS);
        Self(1 << i)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        members
            .into_iter()
            .fold(Self::empty(), |acc, i| acc | Self::singleton(i))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        self | Self::singleton(i)
    }

    pub fn without(self, i: usize) -> Self {
        self - Self::singleton(i)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the first `n` players.
    pub fn complement(self, n: usize) -> Self {
        Self::grand(n) - self
    }

    pub fn members(self) -> impl Iterator<Item = usize> + Clone {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// All subsets of `self` (including `∅` and `self`) in increasing
    /// bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every coalition of an `n`-player game in increasing bitmask order,
    /// starting with `∅`.
    pub fn all(n: usize) -> Subsets {
        Self::grand(n).subsets()
    }

    /// Nonempty proper coalitions of an `n`-player game, ascending.
    pub fn proper(n: usize) -> impl Iterator<Item = Coalition> + Clone {
        let grand = Self::grand(n);
        Self::all(n).filter(move |&s| !s.is_empty() && s != grand)
    }
}

/// Iterator over the submasks of a fixed mask, ascending.
#[derive(Debug, Clone)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        // next submask in increasing order
        self.next = if cur == self.mask {
            None
        } else {
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Coalition(cur))
    }
}

impl BitOr for Coalition {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        Self(self.0 | rhs.0)
    }
}

impl BitAnd for Coalition {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        Self(self.0 & rhs.0)
    }
}

impl Sub for Coalition {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 & !rhs.0)
    }
}

impl Not for Coalition {
    type Output = Self;
    fn not(self) -> Self {
        Self(!self.0)
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// Prints members one-based, e.g. `{1,3}`, matching the usual notation.
impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}
