//! The coefficient-ring interface shared by every series and polynomial type.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::ExactRational;

/// A commutative ℚ-algebra with exact arithmetic.
///
/// Series, (δ,ε)-polynomials and characteristic classes all implement this,
/// so they can be nested: a z-series whose coefficients are q-series is a
/// `Series<Series<ExactRational>>`.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &ExactRational) -> Self;
    /// Multiplicative inverse, when it exists and is computable exactly.
    fn inverse(&self) -> Option<Self>;

    fn from_rational(r: &ExactRational) -> Self {
        Self::one().scale(r)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Coeff for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &ExactRational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(r: &ExactRational) -> Self {
        r.clone()
    }
}
