//! Exact-arithmetic toolkit for production-inventory (PI) cooperative cost games.
//!
//! A PI-situation pools per-period production, holding and backlogging
//! technologies: a coalition always uses the cheapest member technology in
//! every period. This crate builds the resulting cost game from closed-form
//! dual prices and computes the allocations and structural predicates that
//! come with it (Owen and Omega points, the quid-pro-quo segment between
//! them, Shapley value, nucleolus, extreme functions walking the core).
//!
//! Every number is an arbitrary-precision rational. The crate is `no_std`
//! and only needs `alloc`; file formats and the command line live in the
//! companion `pigame` crate.
//!
//! Players and periods are zero-based throughout the API.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod builtin;
mod error;
pub mod geometry;
pub mod lp;
pub mod model;
mod rational;
pub mod rules;

pub use error::{Error, Result};
pub use model::{
    Allocation, Coalition, CostGame, DualPriceVector, GameTable, PiInstance, TabularGame,
};
pub use rational::{parse_rational, rat, ratio, Rational};
