//! Closed-form `|Aut(G)|`, the ratio `|Aut(G)|/|G|`, the `p`-adic valuation of
//! `|Aut(G)|`, and the classification of p-groups by ratio behaviour.
//!
//! For `G = Z_{p^e_1} x ... x Z_{p^e_n}` with `e_1 <= ... <= e_n`,
//!
//! ```text
//! |Aut(G)| = prod_k (p^{d_k} - p^{k-1}) * prod_j (p^{e_j})^{n-d_j} * prod_i (p^{e_i-1})^{n-c_i+1}
//! ```
//!
//! where `d_r` (`c_r`) is the largest (smallest) 1-based index `s` with
//! `e_s = e_r`. Automorphism groups of coprime-order factors multiply, so the
//! general case is a product over primary components.

use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::rational::BigRational;
use crate::shape::{GroupShape, PGroupShape};

/// `|Aut(G)|` for a p-group.
pub fn aut_order_p(shape: &PGroupShape) -> BigUint {
    let p = BigUint::from(shape.prime());
    let e = shape.exponents();
    let n = e.len();
    let pow = |k: u64| -> BigUint { Pow::pow(&p, k) };

    let mut acc = BigUint::one();
    // walk blocks of equal exponents; indices are 1-based
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && e[end + 1] == e[start] {
            end += 1;
        }
        let (c, d) = (start as u64 + 1, end as u64 + 1);
        let exp = e[start] as u64;
        for k in c..=d {
            acc *= pow(d) - pow(k - 1);
            acc *= pow(exp * (n as u64 - d));
            acc *= pow((exp - 1) * (n as u64 - c + 1));
        }
        start = end + 1;
    }
    acc
}

/// `|Aut(G)|`; 1 for the trivial group.
pub fn aut_order(group: &GroupShape) -> BigUint {
    group.factors().fold(BigUint::one(), |acc, f| acc * aut_order_p(f))
}

pub fn ratio_p(shape: &PGroupShape) -> BigRational {
    BigRational::new(aut_order_p(shape), shape.order()).expect("group order is positive")
}

/// `|Aut(G)|/|G|`, reduced; `1` for the trivial group.
pub fn ratio(group: &GroupShape) -> BigRational {
    BigRational::new(aut_order(group), group.order()).expect("group order is positive")
}

/// The exponent of the largest power of `p` dividing `|Aut(G)|`, split into
/// its three contributions: `total = n(n-1)/2 + d + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationParts {
    pub n: u64,
    pub d: u64,
    pub c: u64,
    pub total: u64,
}

pub fn p_valuation_of_aut(shape: &PGroupShape) -> ValuationParts {
    let rl = shape.run_length();
    let levels = rl.levels();
    let n = rl.rank();
    let mut d = 0;
    let mut c = 0;
    // suffix sums of multiplicities: at_or_above[j] = k_j + ... + k_m
    let mut at_or_above = n;
    for level in levels {
        let e = level.exponent as u64;
        let k = level.multiplicity as u64;
        let above = at_or_above - k;
        d += e * k * above;
        c += (e - 1) * k * at_or_above;
        at_or_above = above;
    }
    ValuationParts { n, d, c, total: n * (n - 1) / 2 + d + c }
}

/// Ratio behaviour of an abelian p-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PGroupClass {
    /// `Z_{p^e}`
    Cyclic,
    /// `Z_p x Z_p`
    ElementaryRank2,
    /// `Z_p x Z_{p^i}` with `i > 1`
    ZpTimesHigher(u32),
    /// `Z_p x Z_p x Z_p`
    ElementaryRank3,
    /// Everything else: the ratio is an integer divisible by `p(p-1)^2`.
    General,
}

impl fmt::Display for PGroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PGroupClass::Cyclic => f.write_str("Cyclic"),
            PGroupClass::ElementaryRank2 => f.write_str("ElementaryRank2"),
            PGroupClass::ZpTimesHigher(i) => write!(f, "ZpTimesHigher({i})"),
            PGroupClass::ElementaryRank3 => f.write_str("ElementaryRank3"),
            PGroupClass::General => f.write_str("General"),
        }
    }
}

pub fn classify(shape: &PGroupShape) -> PGroupClass {
    match shape.exponents() {
        [_] => PGroupClass::Cyclic,
        [1, 1] => PGroupClass::ElementaryRank2,
        [1, i] => PGroupClass::ZpTimesHigher(*i),
        [1, 1, 1] => PGroupClass::ElementaryRank3,
        _ => PGroupClass::General,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    Exact(BigRational),
    /// Only the guarantee `p(p-1)^2 | ratio` is available.
    DivisibleGuaranteeOnly,
}

/// The ratio for the four special classes, as a function of `p` alone.
pub fn closed_form_ratio(class: PGroupClass, p: u64) -> ClosedForm {
    let p = BigUint::from(p);
    let pm1 = &p - 1u32;
    let pp1 = &p + 1u32;
    let frac = |a: BigUint, b: BigUint| BigRational::new(a, b).expect("p is positive");
    let value = match class {
        PGroupClass::Cyclic => frac(pm1, p),
        PGroupClass::ElementaryRank2 => frac(&pm1 * &pm1 * pp1, p),
        PGroupClass::ZpTimesHigher(_) => BigRational::from_integer(&pm1 * &pm1),
        PGroupClass::ElementaryRank3 => {
            BigRational::from_integer(&pm1 * &pm1 * &pm1 * pp1 * (&p * &p + &p + 1u32))
        }
        PGroupClass::General => return ClosedForm::DivisibleGuaranteeOnly,
    };
    ClosedForm::Exact(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pg(p: u64, e: &[u32]) -> PGroupShape {
        PGroupShape::new(p, e).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn frac(a: u64, b: u64) -> BigRational {
        BigRational::new(a.into(), b.into()).unwrap()
    }

    #[test]
    fn aut_order_p_examples() {
        assert_eq!(aut_order_p(&pg(2, &[1, 1])), big(6));
        assert_eq!(aut_order_p(&pg(3, &[1, 2])), big(108));
        assert_eq!(aut_order_p(&pg(5, &[3])), big(100));
        assert_eq!(aut_order_p(&pg(2, &[2, 3])), big(128));
        // GL(3, 2)
        assert_eq!(aut_order_p(&pg(2, &[1, 1, 1])), big(168));
    }

    #[test]
    fn aut_order_of_products() {
        assert_eq!(aut_order(&GroupShape::trivial()), BigUint::one());
        let g = GroupShape::from_factors([pg(2, &[1]), pg(3, &[1, 2])]);
        assert_eq!(aut_order(&g), big(108));
        let g = GroupShape::from_factors([pg(2, &[1]), pg(5, &[1, 2])]);
        assert_eq!(aut_order(&g), big(2000));
    }

    #[test]
    fn ratio_examples() {
        let g = GroupShape::from_factors([pg(2, &[1]), pg(3, &[1, 2])]);
        assert_eq!(ratio(&g), frac(2, 1));
        assert_eq!(ratio(&GroupShape::from_factors([pg(2, &[1])])), frac(1, 2));
        assert_eq!(ratio(&GroupShape::from_factors([pg(2, &[1, 1])])), frac(3, 2));
        let g = GroupShape::from_factors([pg(2, &[1]), pg(5, &[1, 2])]);
        assert_eq!(ratio(&g), frac(8, 1));
        assert_eq!(ratio(&GroupShape::trivial()), BigRational::one());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(
            p_valuation_of_aut(&pg(2, &[1, 2])),
            ValuationParts { n: 2, d: 1, c: 1, total: 3 }
        );
        assert_eq!(
            p_valuation_of_aut(&pg(2, &[1, 2, 3])),
            ValuationParts { n: 3, d: 4, c: 4, total: 11 }
        );
        for e in 1..8 {
            assert_eq!(
                p_valuation_of_aut(&pg(7, &[e])),
                ValuationParts { n: 1, d: 0, c: e as u64 - 1, total: e as u64 - 1 }
            );
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&pg(7, &[1, 1])), PGroupClass::ElementaryRank2);
        assert_eq!(classify(&pg(3, &[1, 2])), PGroupClass::ZpTimesHigher(2));
        assert_eq!(classify(&pg(2, &[2, 2])), PGroupClass::General);
        assert_eq!(classify(&pg(2, &[5])), PGroupClass::Cyclic);
        assert_eq!(classify(&pg(2, &[1, 1, 1])), PGroupClass::ElementaryRank3);
        assert_eq!(classify(&pg(2, &[1, 1, 2])), PGroupClass::General);
        assert_eq!(classify(&pg(2, &[1, 1, 1, 1])), PGroupClass::General);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_ratio(PGroupClass::Cyclic, 5), ClosedForm::Exact(frac(4, 5)));
        assert_eq!(
            closed_form_ratio(PGroupClass::ElementaryRank3, 2),
            ClosedForm::Exact(frac(21, 1))
        );
        assert_eq!(
            closed_form_ratio(PGroupClass::ElementaryRank2, 2),
            ClosedForm::Exact(frac(3, 2))
        );
        assert_eq!(
            closed_form_ratio(PGroupClass::ZpTimesHigher(4), 3),
            ClosedForm::Exact(frac(4, 1))
        );
        assert_eq!(closed_form_ratio(PGroupClass::General, 3), ClosedForm::DivisibleGuaranteeOnly);
    }

    #[test]
    fn class_display() {
        use alloc::string::ToString;
        assert_eq!(PGroupClass::ZpTimesHigher(3).to_string(), "ZpTimesHigher(3)");
        assert_eq!(PGroupClass::General.to_string(), "General");
    }
}
