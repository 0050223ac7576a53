//! Horoball packings of asymptotic Coxeter simplex tilings of hyperbolic space.
//!
//! The crate works in the projective model of H^n with the Lorentzian form
//! `−x⁰y⁰ + Σ xⁱyⁱ`. Simplices come with exact algebraic coordinates
//! ([`algexpr`]), are checked against their Coxeter diagrams ([`catalog`]),
//! carry horoballs at their ideal vertices ([`horoball`]) and are searched for
//! densest admissible arrangements ([`packing`]).
//!
//! ```
//! use horopack::catalog::builtin;
//! use horopack::packing::{optimize, OptimizeOptions};
//!
//! let x5 = builtin("X5").unwrap();
//! let best = optimize(&x5, &OptimizeOptions::default()).unwrap();
//! assert!((best.density - 0.59421).abs() < 1e-4);
//! ```

pub mod algexpr;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod horoball;
pub mod lorentz;
pub mod packing;
pub mod real;

pub use error::{Error, Result};
