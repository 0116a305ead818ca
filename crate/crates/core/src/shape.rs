//! Canonical representations of finite abelian groups.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::arith::{self, FactorBound};
use crate::error::{Error, Result};

/// `Z_{p^e_1} x ... x Z_{p^e_n}` with `1 <= e_1 <= ... <= e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PGroupShape {
    prime: u64,
    exponents: Vec<u32>,
}

impl PGroupShape {
    /// Exponents may be given in any order; they are sorted ascending.
    pub fn new(prime: u64, exponents: impl Into<Vec<u32>>) -> Result<Self> {
        let mut exponents = exponents.into();
        if !arith::is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        if exponents.is_empty() {
            return Err(Error::EmptyExponents);
        }
        if exponents.contains(&0) {
            return Err(Error::ZeroExponent);
        }
        exponents.sort_unstable();
        Ok(PGroupShape { prime, exponents })
    }

    pub fn cyclic(prime: u64, exponent: u32) -> Result<Self> {
        Self::new(prime, [exponent])
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of cyclic factors, `n`.
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// `a` with `|G| = p^a`.
    pub fn order_exponent(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn order(&self) -> BigUint {
        Pow::pow(BigUint::from(self.prime), self.order_exponent())
    }

    /// Cyclic factor orders `p^e_i`, ascending.
    pub fn moduli(&self) -> impl Iterator<Item = BigUint> + '_ {
        let p = BigUint::from(self.prime);
        self.exponents.iter().map(move |&e| Pow::pow(&p, e))
    }

    /// Distinct exponents with multiplicities.
    pub fn run_length(&self) -> RunLengthShape {
        let mut levels: Vec<Level> = Vec::new();
        for &e in &self.exponents {
            match levels.last_mut() {
                Some(last) if last.exponent == e => last.multiplicity += 1,
                _ => levels.push(Level { exponent: e, multiplicity: 1 }),
            }
        }
        RunLengthShape { prime: self.prime, levels }
    }
}

impl fmt::Display for PGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.moduli().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

/// One block `(Z_{p^exponent})^multiplicity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Level {
    pub exponent: u32,
    pub multiplicity: u32,
}

/// `(Z_{p^e_1})^{k_1} x ... x (Z_{p^e_m})^{k_m}` with `e_1 < ... < e_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunLengthShape {
    prime: u64,
    levels: Vec<Level>,
}

impl RunLengthShape {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn rank(&self) -> u64 {
        self.levels.iter().map(|l| l.multiplicity as u64).sum()
    }

    pub fn order_exponent(&self) -> u64 {
        self.levels.iter().map(|l| l.exponent as u64 * l.multiplicity as u64).sum()
    }

    pub fn expand(&self) -> PGroupShape {
        let exponents = self
            .levels
            .iter()
            .flat_map(|l| core::iter::repeat_n(l.exponent, l.multiplicity as usize))
            .collect();
        PGroupShape { prime: self.prime, exponents }
    }
}

/// A finite abelian group as its primary decomposition. The empty map is the
/// trivial group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupShape {
    factors: BTreeMap<u64, PGroupShape>,
}

impl GroupShape {
    pub fn trivial() -> Self {
        GroupShape::default()
    }

    /// Builds the product of the given p-groups. Factors sharing a prime are
    /// merged into one p-group.
    pub fn from_factors(factors: impl IntoIterator<Item = PGroupShape>) -> Self {
        let mut g = GroupShape::trivial();
        for f in factors {
            g.absorb(f);
        }
        g
    }

    fn absorb(&mut self, f: PGroupShape) {
        match self.factors.get_mut(&f.prime) {
            Some(existing) => {
                existing.exponents.extend_from_slice(&f.exponents);
                existing.exponents.sort_unstable();
            }
            None => {
                self.factors.insert(f.prime, f);
            }
        }
    }

    pub fn direct_product(&self, other: &GroupShape) -> GroupShape {
        let mut g = self.clone();
        for f in other.factors.values() {
            g.absorb(f.clone());
        }
        g
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Primary components, primes ascending.
    pub fn factors(&self) -> impl Iterator<Item = &PGroupShape> {
        self.factors.values()
    }

    pub fn factor(&self, prime: u64) -> Option<&PGroupShape> {
        self.factors.get(&prime)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn order(&self) -> BigUint {
        self.factors.values().fold(BigUint::one(), |acc, f| acc * f.order())
    }

    /// Cyclic factor orders, sorted by (prime, exponent). Empty for the
    /// trivial group.
    pub fn moduli(&self) -> Vec<BigUint> {
        self.factors.values().flat_map(|f| f.moduli()).collect()
    }
}

/// `Z2 x Z3 x Z9`; the trivial group prints as `Z1`.
impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("Z1");
        }
        for (i, p) in self.factors.values().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Canonical form of `Z_{m_1} x ... x Z_{m_t}`.
///
/// Each modulus is split into prime-power cyclic factors; moduli equal to 1
/// vanish.
pub fn canonicalize(moduli: &[u64], bound: &FactorBound) -> Result<GroupShape> {
    let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &m in moduli {
        if m == 0 {
            return Err(Error::InvalidModulus(0));
        }
        for (p, e) in arith::factor(m, bound)? {
            per_prime.entry(p).or_default().push(e);
        }
    }
    let factors = per_prime
        .into_iter()
        .map(|(p, exps)| PGroupShape::new(p, exps).map(|s| (p, s)))
        .collect::<Result<_>>()?;
    Ok(GroupShape { factors })
}
