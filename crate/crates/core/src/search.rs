//! Realizability of target ratios.
//!
//! Two facts rule targets out without searching. If `|Aut(G)|/|G| = a/b` in
//! lowest terms then `b` is squarefree, and the ratio is never an odd prime.
//! Everything else is searched for exhaustively in enumeration order, so the
//! first hit has minimal group order.
//!
//! A bounded miss is reported as [`SearchVerdict::NotFoundWithinBounds`],
//! which says nothing about realizability.

use alloc::collections::BTreeMap;
use core::fmt;
use core::time::Duration;

use num_integer::Integer;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{self, FactorBound};
use crate::enumeration::groups_in_range;
use crate::error::{Error, Result};
use crate::formula::ratio;
use crate::rational::BigRational;
use crate::shape::GroupShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    max_order: u64,
    /// Wall-clock limit. The core search has no clock; callers with one
    /// enforce it through [`realize_until`].
    pub time_limit: Option<Duration>,
}

impl SearchBounds {
    pub fn new(max_order: u64) -> Result<Self> {
        if max_order == 0 {
            return Err(Error::ZeroMaxOrder);
        }
        Ok(SearchBounds { max_order, time_limit: None })
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn max_order(&self) -> u64 {
        self.max_order
    }
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_order: 10_000, time_limit: None }
    }
}

/// Why a target can never be a ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnrealizableReason {
    /// The reduced denominator has a squared prime factor.
    NonSquarefreeDenominator,
    /// The target is an odd prime.
    OddPrimeTarget,
}

impl fmt::Display for UnrealizableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnrealizableReason::NonSquarefreeDenominator => f.write_str("NonSquarefreeDenominator"),
            UnrealizableReason::OddPrimeTarget => f.write_str("OddPrimeTarget"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub group: GroupShape,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchVerdict {
    Witness(Witness),
    Unrealizable(UnrealizableReason),
    /// Every group of order up to `max_order_searched` was checked.
    NotFoundWithinBounds { max_order_searched: u64 },
}

/// Provable rejection of `target`, if one applies.
pub fn screen(target: &BigRational, bound: &FactorBound) -> Result<Option<UnrealizableReason>> {
    if !arith::is_squarefree(target.denom(), bound)? {
        return Ok(Some(UnrealizableReason::NonSquarefreeDenominator));
    }
    if target.is_integer() {
        let n = target.numer();
        if n.is_odd() && arith::is_prime_big(n)? {
            return Ok(Some(UnrealizableReason::OddPrimeTarget));
        }
    }
    Ok(None)
}

/// True when no group of order `group_order` can have ratio `target`.
///
/// Each primary component contributes a denominator of 1 or its own prime, so
/// every prime of the target's denominator must divide the group order.
pub fn denominator_prune(target: &BigRational, group_order: u64) -> bool {
    // strip from the denominator every prime it shares with the order
    let order = BigUint::from(group_order);
    let mut rest = target.denom().clone();
    loop {
        let g = rest.gcd(&order);
        if g.is_one() {
            break;
        }
        while (&rest % &g).is_zero() {
            rest /= &g;
        }
    }
    !rest.is_one()
}

/// [`realize_until`] without a stopping condition.
pub fn realize(target: &BigRational, bounds: &SearchBounds, bound: &FactorBound) -> Result<SearchVerdict> {
    realize_until(target, bounds, bound, |_| false)
}

/// Screens `target`, then scans groups in enumeration order for the first
/// with ratio exactly `target`.
///
/// `stop` is consulted before each new order with the order about to be
/// scanned; returning `true` ends the search with the previous order as the
/// largest fully swept.
pub fn realize_until(
    target: &BigRational,
    bounds: &SearchBounds,
    bound: &FactorBound,
    mut stop: impl FnMut(u64) -> bool,
) -> Result<SearchVerdict> {
    if target.is_zero() {
        return Err(Error::NonPositiveTarget);
    }
    if let Some(reason) = screen(target, bound)? {
        return Ok(SearchVerdict::Unrealizable(reason));
    }
    let mut current = 0;
    let mut skipping = false;
    for (order, group) in groups_in_range(1, bounds.max_order, bound)? {
        if order != current {
            if stop(order) {
                return Ok(SearchVerdict::NotFoundWithinBounds { max_order_searched: current });
            }
            current = order;
            skipping = denominator_prune(target, order);
        }
        if !skipping && ratio(&group) == *target {
            return Ok(SearchVerdict::Witness(Witness { group, order }));
        }
    }
    Ok(SearchVerdict::NotFoundWithinBounds { max_order_searched: bounds.max_order })
}

/// Every ratio achieved by a group of order `<= max_order`, each with its
/// first witness in enumeration order. Iteration is by increasing ratio.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RatioAtlas {
    entries: BTreeMap<BigRational, Witness>,
}

impl RatioAtlas {
    pub fn get(&self, r: &BigRational) -> Option<&Witness> {
        self.entries.get(r)
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        self.entries.contains_key(r)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigRational, &Witness)> {
        self.entries.iter()
    }

    /// Records `witness` unless `r` already has one.
    pub fn record(&mut self, r: BigRational, witness: Witness) {
        self.entries.entry(r).or_insert(witness);
    }

    /// Folds in an atlas built from a later order range. Existing witnesses
    /// win, so merging chunks in order reproduces the sequential atlas.
    pub fn merge_later(&mut self, later: RatioAtlas) {
        for (r, w) in later.entries {
            self.record(r, w);
        }
    }
}

/// Atlas of the groups with order in `first..=last`.
pub fn ratio_atlas_range(first: u64, last: u64, bound: &FactorBound) -> Result<RatioAtlas> {
    let mut atlas = RatioAtlas::default();
    for (order, group) in groups_in_range(first, last, bound)? {
        let r = ratio(&group);
        if !atlas.contains(&r) {
            atlas.record(r, Witness { group, order });
        }
    }
    Ok(atlas)
}

pub fn ratio_atlas(bounds: &SearchBounds, bound: &FactorBound) -> Result<RatioAtlas> {
    ratio_atlas_range(1, bounds.max_order, bound)
}
