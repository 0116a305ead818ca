//! Deterministic streams of abelian groups by order.
//!
//! Abelian groups of order `N = p_1^{a_1} ... p_r^{a_r}` correspond to tuples
//! of partitions of the `a_i`. Streams are ordered by group order, then by
//! the partition of the smallest prime (slowest varying), and so on; the
//! partitions of each exponent come in [`PartitionGenerator`] order. Search
//! relies on this order to return minimal-order witnesses.

use alloc::vec::Vec;

use crate::arith::{self, FactorBound};
use crate::error::Result;
use crate::shape::{GroupShape, PGroupShape};

/// Streams the partitions of `target`.
///
/// Partitions are produced as non-increasing part lists in reverse
/// lexicographic order (`[3]`, `[2, 1]`, `[1, 1, 1]`) and each is emitted
/// reversed, i.e. as an ascending exponent list (`[3]`, `[1, 2]`, `[1, 1, 1]`).
#[derive(Debug, Clone)]
pub struct PartitionGenerator {
    target: u32,
    // non-increasing; None once exhausted
    parts: Option<Vec<u32>>,
    started: bool,
}

impl PartitionGenerator {
    pub fn new(target: u32) -> Self {
        assert!(target >= 1, "partitions are generated for positive integers");
        PartitionGenerator { target, parts: Some(alloc::vec![target]), started: false }
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    fn advance(parts: &mut Vec<u32>) -> bool {
        let Some(i) = parts.iter().rposition(|&x| x > 1) else {
            return false;
        };
        let mut rest = (parts.len() - i - 1) as u32 + 1;
        parts[i] -= 1;
        let cap = parts[i];
        parts.truncate(i + 1);
        while rest >= cap {
            parts.push(cap);
            rest -= cap;
        }
        if rest > 0 {
            parts.push(rest);
        }
        true
    }
}

impl Iterator for PartitionGenerator {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let parts = self.parts.as_mut()?;
        if self.started && !Self::advance(parts) {
            self.parts = None;
            return None;
        }
        self.started = true;
        Some(parts.iter().rev().copied().collect())
    }
}

/// Every partition of `a` as an ascending exponent list.
pub fn partitions(a: u32) -> PartitionGenerator {
    PartitionGenerator::new(a)
}

/// All abelian groups of one order, one per isomorphism class.
#[derive(Debug, Clone)]
pub struct GroupsOfOrder {
    primes: Vec<(u64, u32)>,
    generators: Vec<PartitionGenerator>,
    current: Vec<Vec<u32>>,
    done: bool,
}

impl GroupsOfOrder {
    fn from_factorization(primes: Vec<(u64, u32)>) -> Self {
        let mut generators: Vec<PartitionGenerator> =
            primes.iter().map(|&(_, a)| partitions(a)).collect();
        let current = generators.iter_mut().map(|g| g.next().expect("nonempty")).collect();
        GroupsOfOrder { primes, generators, current, done: false }
    }

    fn shape(&self) -> GroupShape {
        GroupShape::from_factors(self.primes.iter().zip(&self.current).map(|(&(p, _), e)| {
            PGroupShape::new(p, e.clone()).expect("prime from factorization")
        }))
    }

    // odometer with the last prime's partition as the fastest digit
    fn step(&mut self) {
        for i in (0..self.generators.len()).rev() {
            if let Some(next) = self.generators[i].next() {
                self.current[i] = next;
                return;
            }
            self.generators[i] = partitions(self.primes[i].1);
            self.current[i] = self.generators[i].next().expect("nonempty");
        }
        self.done = true;
    }
}

impl Iterator for GroupsOfOrder {
    type Item = GroupShape;

    fn next(&mut self) -> Option<GroupShape> {
        if self.done {
            return None;
        }
        let out = self.shape();
        self.step();
        Some(out)
    }
}

pub fn groups_of_order(order: u64, bound: &FactorBound) -> Result<GroupsOfOrder> {
    Ok(GroupsOfOrder::from_factorization(arith::factor(order, bound)?))
}

/// `(order, group)` for every abelian group with order in `first..=last`.
#[derive(Debug, Clone)]
pub struct GroupsInRange {
    next_order: u64,
    last: u64,
    bound: FactorBound,
    current: Option<(u64, GroupsOfOrder)>,
}

impl Iterator for GroupsInRange {
    type Item = (u64, GroupShape);

    fn next(&mut self) -> Option<(u64, GroupShape)> {
        loop {
            if let Some((order, groups)) = &mut self.current {
                if let Some(g) = groups.next() {
                    return Some((*order, g));
                }
                self.current = None;
            }
            if self.next_order > self.last {
                return None;
            }
            let order = self.next_order;
            self.next_order += 1;
            let groups = groups_of_order(order, &self.bound).expect("range checked against bound");
            self.current = Some((order, groups));
        }
    }
}

/// Groups of every order in `first..=last`. An empty range yields nothing.
/// The whole range is checked against the factorization bound up front.
pub fn groups_in_range(first: u64, last: u64, bound: &FactorBound) -> Result<GroupsInRange> {
    let first = first.max(1);
    if last >= first {
        // factor() rejects exactly the values beyond the bound
        arith::factor(last.min(bound.max_value().saturating_add(1)), bound)?;
    }
    Ok(GroupsInRange { next_order: first, last, bound: *bound, current: None })
}

/// Groups of every order `1..=max_order`.
pub fn groups_up_to(max_order: u64, bound: &FactorBound) -> Result<GroupsInRange> {
    groups_in_range(1, max_order, bound)
}
