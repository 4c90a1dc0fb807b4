use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::var::{Alpha, Indeterminate};

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree. The highest stored coefficient is never zero; the zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<V = Alpha> {
    coeffs: Vec<BigRational>,
    var: PhantomData<V>,
}

impl<V: Indeterminate> UniPoly<V> {
    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    /// `c0 + c1·v`.
    pub fn linear(c0: BigRational, c1: BigRational) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    /// `c·v^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Coefficient of `v^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Lowest power of the variable dividing the polynomial (0 for zero).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            var: PhantomData,
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients reversed with respect to degree `deg` (i.e. `v^deg · p(1/v)`).
    pub fn reversed(&self, deg: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= deg));
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(deg + 1, BigRational::zero());
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    /// Same coefficients read in another indeterminate.
    pub fn rename<W: Indeterminate>(&self) -> UniPoly<W> {
        UniPoly {
            coeffs: self.coeffs.clone(),
            var: PhantomData,
        }
    }

    /// Polynomial long division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NotExact)
        }
    }

    /// Divides by `v − root`, requiring `root` to be a zero.
    pub fn deflate(&self, root: &BigRational) -> Result<Self, AlgebraError> {
        let Some(n) = self.degree() else {
            return Ok(Self::zero());
        };
        if n == 0 {
            return Err(AlgebraError::NotExact);
        }
        let mut quot = vec![BigRational::zero(); n];
        let mut carry = BigRational::zero();
        for k in (1..=n).rev() {
            carry = carry * root + &self.coeffs[k];
            quot[k - 1] = carry.clone();
        }
        if !(carry * root + &self.coeffs[0]).is_zero() {
            return Err(AlgebraError::NotExact);
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        if b.is_zero() {
            return a.monic();
        }
        if b.is_constant() {
            return Self::one();
        }
        // Integer-primitive remainders keep the coefficient size in check.
        a = a.primitive_part();
        b = b.primitive_part();
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.monic()
    }

    /// Positive rational content: gcd of numerators over lcm of denominators.
    pub fn content(&self) -> BigRational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in &self.coeffs {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return BigRational::one();
        }
        BigRational::new(g, l)
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, equal to `self` up to a rational unit.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.scale(&c.recip())
        }
    }

    /// `(L, ints)` with `self = ints / L`, `L > 0` the lcm of the coefficient
    /// denominators.
    pub fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        (l, ints)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<V: Indeterminate> Default for UniPoly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Indeterminate> Add<&UniPoly<V>> for &UniPoly<V> {
    type Output = UniPoly<V>;
    fn add(self, rhs: &UniPoly<V>) -> UniPoly<V> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl<V: Indeterminate> Sub<&UniPoly<V>> for &UniPoly<V> {
    type Output = UniPoly<V>;
    fn sub(self, rhs: &UniPoly<V>) -> UniPoly<V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigRational::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl<V: Indeterminate> Mul<&UniPoly<V>> for &UniPoly<V> {
    type Output = UniPoly<V>;
    fn mul(self, rhs: &UniPoly<V>) -> UniPoly<V> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl<V: Indeterminate> Neg for &UniPoly<V> {
    type Output = UniPoly<V>;
    fn neg(self) -> UniPoly<V> {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            var: PhantomData,
        }
    }
}

impl<V: Indeterminate> Neg for UniPoly<V> {
    type Output = UniPoly<V>;
    fn neg(self) -> UniPoly<V> {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ident, $($tr:ident :: $m:ident),*) => {$(
        impl<V: Indeterminate> $tr<$ty<V>> for $ty<V> {
            type Output = $ty<V>;
            fn $m(self, rhs: $ty<V>) -> $ty<V> {
                (&self).$m(&rhs)
            }
        }
        impl<V: Indeterminate> $tr<&$ty<V>> for $ty<V> {
            type Output = $ty<V>;
            fn $m(self, rhs: &$ty<V>) -> $ty<V> {
                (&self).$m(rhs)
            }
        }
        impl<V: Indeterminate> $tr<$ty<V>> for &$ty<V> {
            type Output = $ty<V>;
            fn $m(self, rhs: $ty<V>) -> $ty<V> {
                self.$m(&rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(UniPoly, Add::add, Sub::sub, Mul::mul);

pub(crate) fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Ascending human-readable form of integer coefficients, e.g. `3+2α²`.
pub(crate) fn format_int_terms(coeffs: &[BigInt], sym: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag = c.abs();
        if i == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        if i >= 1 {
            out.push_str(sym);
        }
        if i >= 2 {
            out.push_str(&superscript(i));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<V: Indeterminate> fmt::Display for UniPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, ints) = self.integer_form();
        let body = format_int_terms(&ints, V::SYMBOL);
        if l.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{l}")
        }
    }
}

impl<V: Indeterminate> fmt::Debug for UniPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    type P = UniPoly<Alpha>;

    #[test]
    fn arithmetic_basics() {
        let a = P::from_ints(&[1, 1]);
        let b = P::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, P::from_ints(&[-1, 0, 1]));
        assert_eq!(&a - &a, P::zero());
        assert_eq!((&a + &b).degree(), Some(1));
        assert_eq!(a.pow(3), P::from_ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn division_and_gcd() {
        let p = P::from_ints(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&P::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, P::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let g = P::from_ints(&[2, 4]).gcd(&P::from_ints(&[-2, 0, 8]));
        assert_eq!(g, P::linear(rat(1, 2), int(1)));
        assert!(p.div_rem(&P::zero()).is_err());
        assert_eq!(p.deflate(&int(1)).unwrap(), P::from_ints(&[1, 1]));
        assert!(p.deflate(&int(2)).is_err());
    }

    #[test]
    fn content_and_primitive() {
        let p = P::from_coeffs(vec![rat(2, 3), rat(-4, 9)]);
        assert_eq!(p.content(), rat(2, 9));
        assert_eq!(p.primitive_part(), P::from_ints(&[-3, 2]));
        let (l, ints) = p.integer_form();
        assert_eq!(l, BigInt::from(9));
        assert_eq!(ints, vec![BigInt::from(6), BigInt::from(-4)]);
    }

    #[test]
    fn display() {
        assert_eq!(P::from_ints(&[3, 2, 0, -1]).to_string(), "3+2α-α³");
        assert_eq!(P::from_ints(&[0, 2]).to_string(), "2α");
        assert_eq!(P::zero().to_string(), "0");
    }
}
