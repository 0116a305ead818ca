use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Nonnegative rational `a/b`, always stored with `gcd(a, b) = 1` and `b >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BigRational {
    numer: BigUint,
    denom: BigUint,
}

impl BigRational {
    pub fn new(numer: BigUint, denom: BigUint) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = numer.gcd(&denom);
        if g.is_zero() || g.is_one() {
            // g == 0 only when numer == 0 and denom == 0, excluded above
            return Ok(BigRational { numer, denom });
        }
        Ok(BigRational { numer: numer / &g, denom: denom / g })
    }

    pub fn from_integer(n: impl Into<BigUint>) -> Self {
        BigRational { numer: n.into(), denom: BigUint::one() }
    }

    pub fn one() -> Self {
        Self::from_integer(1u32)
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl Mul for &BigRational {
    type Output = BigRational;

    fn mul(self, rhs: &BigRational) -> BigRational {
        // cross-cancel so the product comes out reduced
        let g1 = self.numer.gcd(&rhs.denom);
        let g2 = rhs.numer.gcd(&self.denom);
        let div = |x: &BigUint, g: &BigUint| if g.is_zero() { x.clone() } else { x / g };
        BigRational {
            numer: div(&self.numer, &g1) * div(&rhs.numer, &g2),
            denom: div(&self.denom, &g2) * div(&rhs.denom, &g1),
        }
    }
}

impl Mul for BigRational {
    type Output = BigRational;

    fn mul(self, rhs: BigRational) -> BigRational {
        &self * &rhs
    }
}

impl Ord for BigRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for BigRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// Accepts `a/b` or a bare integer `a`, decimal digits only, surrounding
/// whitespace allowed. The result is reduced. Signs are rejected, and so is
/// zero: every automorphism ratio is positive.
impl FromStr for BigRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let digits = |t: &str| -> Result<BigUint> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let value = match s.split_once('/') {
            Some((a, b)) => {
                let denom = digits(b)?;
                if denom.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                BigRational::new(digits(a)?, denom)?
            }
            None => BigRational::from_integer(digits(s)?),
        };
        if value.is_zero() {
            return Err(Error::NonPositiveTarget);
        }
        Ok(value)
    }
}
