use num_traits::{One, Signed};

use super::omega::omega_point;
use crate::{ratio, Allocation, Error, GameTable, Rational, Result};

/// The λ-agreement `λω + (1 − λ)o`.
pub fn qpq(g: &GameTable, lambda: &Rational) -> Result<Allocation> {
    if lambda.is_negative() || *lambda > Rational::one() {
        return Err(Error::LambdaOutOfRange);
    }
    let owen = g.owen_point();
    let omega = omega_point(g).omega;
    Ok(owen.interpolate(&omega, lambda))
}

/// The midpoint of the QPQ segment.
pub fn solomonic(g: &GameTable) -> Allocation {
    qpq(g, &ratio(1, 2)).expect("1/2 is in range")
}
