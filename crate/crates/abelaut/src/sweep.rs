//! Sweeps over order ranges: parallel atlas, oracle verification, and the
//! wall-clock bounded search.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use abelaut_core::enumeration::groups_up_to;
use abelaut_core::oracle::{count_automorphisms, OracleBudget};
use abelaut_core::search::{ratio_atlas_range, realize_until, RatioAtlas, SearchBounds, SearchVerdict};
use abelaut_core::{aut_order, BigRational, BigUint, FactorBound, GroupShape, PGroupShape};
use rayon::prelude::*;

/// Splits `1..=max_order` into at most `chunks` contiguous ranges.
pub fn order_chunks(max_order: u64, chunks: u64) -> Vec<(u64, u64)> {
    let chunks = chunks.clamp(1, max_order.max(1));
    let step = max_order.div_ceil(chunks);
    (0..chunks)
        .map(|i| (i * step + 1, ((i + 1) * step).min(max_order)))
        .filter(|(lo, hi)| lo <= hi)
        .collect()
}

/// The ratio atlas, built chunk by chunk in parallel and merged in order.
/// Equal to the sequential atlas for any chunk count.
pub fn parallel_atlas(max_order: u64, chunks: u64, bound: &FactorBound) -> crate::Result<RatioAtlas> {
    let parts = order_chunks(max_order, chunks)
        .into_par_iter()
        .map(|(lo, hi)| ratio_atlas_range(lo, hi, bound))
        .collect::<Result<Vec<_>, _>>()?;
    let mut atlas = RatioAtlas::default();
    for part in parts {
        atlas.merge_later(part);
    }
    Ok(atlas)
}

/// Screens and scans like [`realize_until`], giving up once `bounds.time_limit`
/// has elapsed.
pub fn realize_timed(
    target: &BigRational,
    bounds: &SearchBounds,
    bound: &FactorBound,
) -> crate::Result<SearchVerdict> {
    let start = Instant::now();
    let limit = bounds.time_limit;
    Ok(realize_until(target, bounds, bound, |_| limit.is_some_and(|l| start.elapsed() >= l))?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub group: GroupShape,
    pub formula: BigUint,
    pub oracle: BigUint,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Groups of order `<= max_order`.
    pub groups: u64,
    /// Groups whose every primary component fit the oracle budget.
    pub checked: u64,
    pub skipped: u64,
    /// Distinct p-group shapes counted by the oracle.
    pub shapes_counted: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `|Aut(G)|` from the formula with the brute-force count for every
/// group of order `<= max_order` whose primary components all fit `budget`.
///
/// Each distinct p-group is counted once (in parallel); a group's oracle
/// value is the product over its components.
pub fn verify(max_order: u64, budget: &OracleBudget, bound: &FactorBound) -> crate::Result<VerifyReport> {
    let groups: Vec<GroupShape> = groups_up_to(max_order, bound)?.map(|(_, g)| g).collect();
    let shapes: BTreeSet<&PGroupShape> = groups.iter().flat_map(|g| g.factors()).collect();
    let counted: BTreeMap<&PGroupShape, BigUint> = shapes
        .into_par_iter()
        .filter(|s| budget.admits(s))
        .map(|s| count_automorphisms(s, budget).map(|c| (s, c)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .collect();

    let mut report = VerifyReport {
        groups: groups.len() as u64,
        shapes_counted: counted.len() as u64,
        ..Default::default()
    };
    for g in &groups {
        let per_factor: Option<Vec<&BigUint>> = g.factors().map(|f| counted.get(f)).collect();
        let Some(per_factor) = per_factor else {
            report.skipped += 1;
            continue;
        };
        report.checked += 1;
        let oracle: BigUint = per_factor.into_iter().product();
        let formula = aut_order(g);
        if formula != oracle {
            report.mismatches.push(Mismatch { group: g.clone(), formula, oracle });
        }
    }
    Ok(report)
}
