//! Exact rational linear algebra and linear programming.
//!
//! Everything here runs on dense matrices of [`Rational`](crate::Rational);
//! the games this crate handles have at most a few dozen variables.

mod linear;
mod simplex;

pub use linear::{solve_linear_system, LinearSolve, RowSpace};
pub use simplex::{solve_lp, LpProblem, LpSolution, LpStatus};
