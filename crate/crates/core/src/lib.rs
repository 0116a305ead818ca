//! Exact automorphism-group orders for finite abelian groups.
//!
//! A finite abelian group is stored in canonical form: one [`PGroupShape`]
//! per prime, each a sorted list of exponents `e_1 <= ... <= e_n` standing for
//! `Z_{p^e_1} x ... x Z_{p^e_n}`. On top of that this crate provides
//!
//! - the closed-form order of `Aut(G)` and the reduced ratio `|Aut(G)|/|G|`
//!   ([`formula`]),
//! - the `p`-adic valuation of `|Aut(G)|` and the classification of p-groups
//!   by ratio behaviour,
//! - a brute-force automorphism counter that shares no code with the formula
//!   ([`oracle`]),
//! - deterministic enumeration of all abelian groups of a given order
//!   ([`enumeration`]),
//! - a realizability search for target ratios ([`search`]).
//!
//! Everything is exact. The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod enumeration;
pub mod error;
pub mod formula;
pub mod oracle;
pub mod rational;
pub mod search;
pub mod shape;

pub use arith::FactorBound;
pub use error::{Error, Result};
pub use formula::{
    aut_order, aut_order_p, classify, closed_form_ratio, p_valuation_of_aut, ratio, ratio_p,
    ClosedForm, PGroupClass, ValuationParts,
};
pub use rational::BigRational;
pub use shape::{canonicalize, GroupShape, Level, PGroupShape, RunLengthShape};

pub use num_bigint::BigUint;
