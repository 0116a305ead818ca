//! Brute-force automorphism counting for small abelian p-groups.
//!
//! A homomorphism out of `Z_{p^e_1} x ... x Z_{p^e_n}` is fixed by the images
//! `g_1, ..., g_n` of the standard generators, and any choice with
//! `p^{e_i} g_i = 0` extends to one. On a finite group an endomorphism is an
//! automorphism exactly when it is onto, i.e. when the `g_i` generate. The
//! count below uses nothing else, so it is an independent check of the
//! closed form in [`crate::formula`].

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::shape::PGroupShape;

/// Element of `Z_{p^e_1} x ... x Z_{p^e_n}` in coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementVector {
    pub coordinates: Vec<u64>,
}

impl ElementVector {
    pub fn new(coordinates: impl Into<Vec<u64>>) -> Self {
        ElementVector { coordinates: coordinates.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    max_candidate_tuples: u64,
}

impl OracleBudget {
    pub fn new(max_candidate_tuples: u64) -> Result<Self> {
        if max_candidate_tuples == 0 {
            return Err(Error::ZeroBudget);
        }
        Ok(OracleBudget { max_candidate_tuples })
    }

    pub fn max_candidate_tuples(&self) -> u64 {
        self.max_candidate_tuples
    }

    /// Whether `count_automorphisms` will accept `shape`: `|G|^n <= budget`.
    pub fn admits(&self, shape: &PGroupShape) -> bool {
        candidate_tuples(shape) <= BigUint::from(self.max_candidate_tuples)
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_candidate_tuples: 1_000_000 }
    }
}

fn candidate_tuples(shape: &PGroupShape) -> BigUint {
    num_traits::Pow::pow(shape.order(), shape.rank() as u64)
}

/// Mixed-radix indexing of group elements: index = sum c_i * stride_i.
struct Layout {
    prime: u64,
    exponents: Vec<u32>,
    moduli: Vec<u64>,
    strides: Vec<u64>,
    size: u64,
}

impl Layout {
    fn new(shape: &PGroupShape) -> Result<Self> {
        let order = shape.order();
        let size = order.to_u64().ok_or(Error::OrderTooLarge(order))?;
        let moduli: Vec<u64> = shape.exponents().iter().map(|&e| shape.prime().pow(e)).collect();
        let mut strides = Vec::with_capacity(moduli.len());
        let mut s = 1;
        for m in &moduli {
            strides.push(s);
            s *= m;
        }
        Ok(Layout { prime: shape.prime(), exponents: shape.exponents().to_vec(), moduli, strides, size })
    }

    fn index(&self, v: &ElementVector) -> Result<u64> {
        if v.coordinates.len() != self.moduli.len() {
            return Err(Error::InvalidElement);
        }
        let mut idx = 0;
        for ((&c, &m), &s) in v.coordinates.iter().zip(&self.moduli).zip(&self.strides) {
            if c >= m {
                return Err(Error::InvalidElement);
            }
            idx += c * s;
        }
        Ok(idx)
    }

    fn coordinate(&self, idx: u64, i: usize) -> u64 {
        (idx / self.strides[i]) % self.moduli[i]
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        for i in 0..self.moduli.len() {
            let c = (self.coordinate(a, i) + self.coordinate(b, i)) % self.moduli[i];
            out += c * self.strides[i];
        }
        out
    }

    /// Exponent `k` with element order `p^k`.
    fn order_exponent(&self, idx: u64) -> u32 {
        let mut k = 0;
        for (i, &e) in self.exponents.iter().enumerate() {
            let mut c = self.coordinate(idx, i);
            let mut v = 0;
            if c == 0 {
                v = e;
            } else {
                while c.is_multiple_of(self.prime) {
                    c /= self.prime;
                    v += 1;
                }
            }
            k = k.max(e - v);
        }
        k
    }
}

/// Least `k >= 1` with `k * v = 0`.
pub fn element_order(v: &ElementVector, shape: &PGroupShape) -> Result<u64> {
    let layout = Layout::new(shape)?;
    let idx = layout.index(v)?;
    Ok(layout.prime.pow(layout.order_exponent(idx)))
}

/// Size of the subgroup generated by `generators`, by breadth-first closure
/// under addition.
pub fn subgroup_closure(generators: &[ElementVector], shape: &PGroupShape) -> Result<u64> {
    let layout = Layout::new(shape)?;
    let gens = generators.iter().map(|g| layout.index(g)).collect::<Result<Vec<_>>>()?;
    let mut seen = vec![false; layout.size as usize];
    let mut queue = VecDeque::from([0u64]);
    seen[0] = true;
    let mut size = 1;
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = layout.add(x, g);
            if !seen[y as usize] {
                seen[y as usize] = true;
                size += 1;
                queue.push_back(y);
            }
        }
    }
    Ok(size)
}

#[derive(Clone)]
struct Subgroup {
    member: Vec<bool>,
    elements: Vec<u64>,
}

impl Subgroup {
    fn trivial(size: u64) -> Self {
        let mut member = vec![false; size as usize];
        member[0] = true;
        Subgroup { member, elements: vec![0] }
    }

    /// `H + <g>` as the union of the cosets `H + kg`.
    fn join(&self, g: u64, layout: &Layout) -> Subgroup {
        let mut out = self.clone();
        let base = self.elements.len();
        let mut x = g;
        while !out.member[x as usize] {
            for i in 0..base {
                let y = layout.add(self.elements[i], x);
                out.member[y as usize] = true;
                out.elements.push(y);
            }
            x = layout.add(x, g);
        }
        out
    }
}

/// Number of automorphisms of `shape`, by enumerating generator images.
///
/// Fails with [`Error::BudgetExceeded`] when `|G|^n` exceeds the budget; the
/// caller should skip the shape rather than estimate.
pub fn count_automorphisms(shape: &PGroupShape, budget: &OracleBudget) -> Result<BigUint> {
    let required = candidate_tuples(shape);
    if required > BigUint::from(budget.max_candidate_tuples) {
        return Err(Error::BudgetExceeded { required, budget: budget.max_candidate_tuples });
    }
    let layout = Layout::new(shape)?;
    let orders: Vec<u32> = (0..layout.size).map(|x| layout.order_exponent(x)).collect();
    // images of generator i must be killed by p^{e_i}
    let candidates: Vec<Vec<u64>> = layout
        .exponents
        .iter()
        .map(|&e| (0..layout.size).filter(|&x| orders[x as usize] <= e).collect())
        .collect();
    // suffix products: free choices left once the prefix already generates G
    let mut tail = vec![1u128; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        tail[i] = tail[i + 1] * candidates[i].len() as u128;
    }

    let mut count = 0u128;
    search(0, &Subgroup::trivial(layout.size), &layout, &candidates, &tail, &mut count);
    Ok(BigUint::from(count))
}

fn search(
    depth: usize,
    sub: &Subgroup,
    layout: &Layout,
    candidates: &[Vec<u64>],
    tail: &[u128],
    count: &mut u128,
) {
    if sub.elements.len() as u64 == layout.size {
        *count += tail[depth];
        return;
    }
    if depth == candidates.len() {
        return;
    }
    for &g in &candidates[depth] {
        if sub.member[g as usize] {
            search(depth + 1, sub, layout, candidates, tail, count);
        } else {
            let next = sub.join(g, layout);
            search(depth + 1, &next, layout, candidates, tail, count);
        }
    }
}

impl From<&[u64]> for ElementVector {
    fn from(c: &[u64]) -> Self {
        ElementVector::new(c.to_vec())
    }
}
