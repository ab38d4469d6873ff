//! Exact integer and rational machinery: integer matrices, Smith normal form,
//! integer kernels and phases in Q/Z. Nothing in here touches floating point.

mod matrix;
mod phase;
mod smith;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use matrix::IntMatrix;
pub use phase::PhaseQ;
pub use smith::{integer_kernel, smith_normal_form, SmithDecomposition};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type RationalQ = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("expected {rows}x{cols} = {} entries, found {found}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("incompatible shapes {left:?} and {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub fn rational(num: i64, den: i64) -> RationalQ {
    RationalQ::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: impl Into<BigInt>) -> RationalQ {
    RationalQ::from_integer(n.into())
}

/// Renders as `"num/den"`, including integers (`"3/1"`, `"0/1"`).
pub fn format_rational(q: &RationalQ) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or a bare integer `"num"`.
pub fn parse_rational(s: &str) -> Result<RationalQ, ExactError> {
    let err = || ExactError::ParseRational(s.to_string());
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(RationalQ::new(num, den))
}

pub fn is_integral(q: &RationalQ) -> bool {
    q.denom().is_one()
}

pub fn dot_rational(a: &[RationalQ], b: &[RationalQ]) -> RationalQ {
    assert_eq!(
        a.len(),
        b.len(),
        "dot product of vectors with different lengths"
    );
    a.iter()
        .zip(b)
        .fold(RationalQ::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int_rational(a: &[BigInt], b: &[RationalQ]) -> RationalQ {
    assert_eq!(
        a.len(),
        b.len(),
        "dot product of vectors with different lengths"
    );
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .fold(RationalQ::zero(), |acc, (x, y)| acc + y * x)
}

/// Reduces a rational into `[0, 1)`.
pub fn frac(q: &RationalQ) -> RationalQ {
    q - q.floor()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for s in ["0/1", "3/5", "-7/2", "12/1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rational(2, 3));
        assert_eq!(parse_rational("5").unwrap(), integer(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn frac_lands_in_unit_interval() {
        assert_eq!(frac(&rational(-1, 3)), rational(2, 3));
        assert_eq!(frac(&rational(7, 3)), rational(1, 3));
        assert_eq!(frac(&integer(-4)), integer(0));
    }
}
