use num_bigint::BigUint;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid modulus {0}: cyclic factors need a modulus of at least 1")]
    InvalidModulus(u64),
    #[error("{value} is beyond the factorization bound (largest trial divisor {max_divisor})")]
    FactorizationOverflow { value: BigUint, max_divisor: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("a p-group shape needs at least one exponent")]
    EmptyExponents,
    #[error("exponents must be at least 1")]
    ZeroExponent,
    #[error("order {0} does not fit in 64 bits")]
    OrderTooLarge(BigUint),
    #[error("oracle needs {required} candidate tuples, budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },
    #[error("oracle budget must be positive")]
    ZeroBudget,
    #[error("element does not belong to the group")]
    InvalidElement,
    #[error("max order must be at least 1")]
    ZeroMaxOrder,
    #[error("ratios are positive; target must be greater than zero")]
    NonPositiveTarget,
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot parse rational {0:?}")]
    InvalidRational(alloc::string::String),
    #[error("{0} is too large for deterministic primality testing")]
    PrimalityOutOfRange(BigUint),
}
