//! Group expressions such as `Z2 x Z3 x Z9`, `C12*C18` or `z4xz2`.
//!
//! Grammar: factors `Z<n>` or `C<n>` (decimal `n >= 1`) separated by `x` or
//! `*`. Letters are case-insensitive and whitespace is ignored.

use std::fmt;

use abelaut_core::{canonicalize, BigUint, FactorBound, GroupShape};
use num_bigint::ParseBigIntError;

/// Syntax error at a byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

/// A parsed expression: source text plus the cyclic factor moduli, in the
/// order written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupExpr {
    pub source: String,
    pub moduli: Vec<BigUint>,
}

impl GroupExpr {
    pub fn parse(source: &str) -> Result<Self, ParseError> {
        let bytes = source.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let mut moduli = Vec::new();
        loop {
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b'z' | b'Z' | b'c' | b'C') => pos += 1,
                Some(_) => return Err(ParseError::new(pos, "expected a factor `Z<n>` or `C<n>`")),
                None => return Err(ParseError::new(pos, "expected a factor, found end of input")),
            }
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(ParseError::new(pos, "expected a decimal modulus"));
            }
            let n: BigUint = source[start..pos]
                .parse()
                .map_err(|e: ParseBigIntError| ParseError::new(start, e.to_string()))?;
            if n == BigUint::ZERO {
                return Err(ParseError::new(start, "modulus must be at least 1"));
            }
            moduli.push(n);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                None => break,
                Some(b'x' | b'X' | b'*') => pos += 1,
                Some(_) => return Err(ParseError::new(pos, "expected `x`, `*` or end of input")),
            }
        }
        Ok(GroupExpr { source: source.to_string(), moduli })
    }

    /// Canonical form: moduli split into prime powers and sorted.
    pub fn shape(&self, bound: &FactorBound) -> Result<GroupShape, abelaut_core::Error> {
        let small = self
            .moduli
            .iter()
            .map(|m| {
                u64::try_from(m).map_err(|_| abelaut_core::Error::FactorizationOverflow {
                    value: m.clone(),
                    max_divisor: bound.max_divisor,
                })
            })
            .collect::<Result<Vec<u64>, _>>()?;
        canonicalize(&small, bound)
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

pub fn parse_group(text: &str, bound: &FactorBound) -> crate::Result<GroupShape> {
    Ok(GroupExpr::parse(text)?.shape(bound)?)
}
