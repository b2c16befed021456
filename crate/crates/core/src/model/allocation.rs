use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use num_traits::Zero;

use super::coalition::Coalition;
use crate::{rat, Rational};

/// A cost-sharing vector, one exact share per player.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Allocation(Vec<Rational>);

impl Allocation {
    pub fn new(shares: Vec<Rational>) -> Self {
        Self(shares)
    }

    pub fn from_integers(shares: &[i64]) -> Self {
        Self(shares.iter().map(|&v| rat(v)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(alloc::vec![Rational::zero(); n])
    }

    pub fn shares(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    /// `x_S`.
    pub fn coalition_sum(&self, s: Coalition) -> Rational {
        s.members().map(|i| &self.0[i]).sum()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    /// Moves `amount` of cost from player `from` onto player `to`.
    pub fn transfer(&mut self, from: usize, to: usize, amount: &Rational) {
        self.0[from] -= amount;
        self.0[to] += amount;
    }

    /// `(1 - weight) · self + weight · other`.
    pub fn interpolate(&self, other: &Allocation, weight: &Rational) -> Allocation {
        let keep = rat(1) - weight;
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| &keep * a + weight * b)
                .collect(),
        )
    }
}

impl Deref for Allocation {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl FromIterator<Rational> for Allocation {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for Allocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}
