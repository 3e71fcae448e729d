//! Exact-arithmetic rank bounds and torsion subgroups for elliptic curves
//! of the form y² = x³ + ax² + bx over the rationals.
//!
//! The rank machinery is descent via a 2-isogeny: rational points map to
//! square classes in ℚ*/ℚ*², membership of a class is decided by the integer
//! solvability of a quartic torsor equation, and the sizes of the images on
//! the curve and its isogenous partner bound the rank from both sides.
//! Torsion is computed by Nagell-Lutz candidate enumeration followed by
//! exact order tests, classified against Mazur's list.
//!
//! The [`family`] module specializes everything to the curves
//! y² = x³ − 5pq·x for odd prime pairs (p, q) under congruence conditions
//! mod 40, including the quadratic-twist rank over ℚ(i).
//!
//! All arithmetic is exact (`num-bigint` / `num-rational`); nothing is
//! rounded and no probabilistic primality answer is ever accepted. The crate
//! is `no_std` (with `alloc`) so the algorithmic core stays free of IO; the
//! companion CLI crate carries file formats and parallel sweeps.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod curve;
pub mod descent;
pub mod family;
pub mod torsion;

pub use arith::SquareClass;
pub use curve::{Curve, Point};
pub use descent::{DescentReport, RankBounds, Side, Torsor, TorsorStatus, TorsorWitness};
pub use family::FamilyParams;
pub use torsion::TorsionStructure;

/// Arbitrary-precision signed integer used throughout the crate.
pub type Int = num_bigint::BigInt;

/// Exact rational number (always reduced, positive denominator).
pub type Rational = num_rational::BigRational;
