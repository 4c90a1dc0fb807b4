use std::fmt::{Debug, Display};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bipoly::{BiPoly, RatFunc2};
use crate::error::AlgebraError;
use crate::poly::UniPoly;
use crate::ratfunc::RatFunc1;
use crate::var::Indeterminate;

/// Coefficient ring interface used by the symmetric-polynomial code.
///
/// `try_div` must succeed whenever the quotient exists in the ring; for
/// polynomial rings that means exact division only.
pub trait Coeff: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(c: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    fn scale(&self, k: &BigRational) -> Self {
        self.mul(&Self::from_rational(k))
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(c: &BigRational) -> Self {
        c.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(rhs) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

impl<V: Indeterminate> Coeff for UniPoly<V> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn from_rational(c: &BigRational) -> Self {
        UniPoly::constant(c.clone())
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.exact_div(rhs)
    }
    fn scale(&self, k: &BigRational) -> Self {
        UniPoly::scale(self, k)
    }
}

impl<V: Indeterminate> Coeff for RatFunc1<V> {
    fn zero() -> Self {
        RatFunc1::zero()
    }
    fn one() -> Self {
        RatFunc1::one()
    }
    fn from_rational(c: &BigRational) -> Self {
        RatFunc1::constant(c.clone())
    }
    fn is_zero(&self) -> bool {
        RatFunc1::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.checked_div(rhs)
    }
    fn scale(&self, k: &BigRational) -> Self {
        RatFunc1::scale(self, k)
    }
}

impl Coeff for RatFunc2 {
    fn zero() -> Self {
        RatFunc2::zero()
    }
    fn one() -> Self {
        RatFunc2::one()
    }
    fn from_rational(c: &BigRational) -> Self {
        RatFunc2::constant(c.clone())
    }
    fn is_zero(&self) -> bool {
        RatFunc2::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.checked_div(rhs)
    }
    fn scale(&self, k: &BigRational) -> Self {
        RatFunc2::scale(self, k)
    }
}

impl Coeff for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn from_rational(c: &BigRational) -> Self {
        BiPoly::constant(c.clone())
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.exact_div(rhs)
    }
    fn scale(&self, k: &BigRational) -> Self {
        BiPoly::scale(self, k)
    }
}
