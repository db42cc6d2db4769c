//! Exact rational scalars and their `"num/den"` wire format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type ExactRational = BigRational;

pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: &BigInt) -> ExactRational {
    BigRational::from_integer(n.clone())
}

/// `2^e` for a possibly negative exponent.
pub fn pow2(e: i32) -> ExactRational {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Serializes as `"num/den"`, always with an explicit denominator.
pub fn to_wire(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"num/den"` or a bare integer `"num"`.
pub fn from_wire(s: &str) -> Result<ExactRational, Error> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Returns the integer value when `r` has denominator one.
pub fn as_integer(r: &ExactRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// True when the denominator is a power of two (an element of ℤ[1/2]).
pub fn is_dyadic(r: &ExactRational) -> bool {
    let d = r.denom();
    d.is_positive() && (d & (d - BigInt::one())).is_zero()
}
