use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::poly::{superscript, UniPoly};
use crate::ratfunc::RatFunc1;
use crate::var::{Q, T};

/// Sparse polynomial in `q` and `t`. Keys are `(q exponent, t exponent)`;
/// zero coefficients are never stored. Key order is lexicographic with `q`
/// most significant, so the last entry is the lex-leading term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRational, qe: u32, te: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, te), c);
        }
        BiPoly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `1 − q^a t^b`, the shape of every (q,t)-hook.
    pub fn one_minus(a: u32, b: u32) -> Self {
        &Self::one() - &Self::monomial(BigRational::one(), a, b)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigRational)>>(it: I) -> Self {
        let mut p = BiPoly::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    fn add_term(&mut self, k: (u32, u32), c: &BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn leading(&self) -> Option<(&(u32, u32), &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn deg_q(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
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

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut s = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            s += c * pow_rat(q, a) * pow_rat(t, b);
        }
        s
    }

    /// Substitutes `q = t^k`.
    pub fn q_to_t_pow(&self, k: u32) -> UniPoly<T> {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (&(a, b), c) in &self.terms {
            let d = (a * k + b) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Positive rational content.
    pub fn content(&self) -> BigRational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return BigRational::one();
        }
        BigRational::new(g, l)
    }

    /// Integer coefficients with content 1 and positive lex-leading term.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.scale(&c.recip())
        }
    }

    /// Exact division by lex-leading terms.
    pub fn exact_div(&self, d: &Self) -> Result<Self, AlgebraError> {
        let (&(dq, dt), dc) = d.leading().ok_or(AlgebraError::DivisionByZero)?;
        if d.terms.len() == 1 {
            let mut out = BTreeMap::new();
            for (&(a, b), c) in &self.terms {
                if a < dq || b < dt {
                    return Err(AlgebraError::NotExact);
                }
                out.insert((a - dq, b - dt), c / dc);
            }
            return Ok(BiPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((&(a, b), c)) = rem.leading() {
            if a < dq || b < dt {
                return Err(AlgebraError::NotExact);
            }
            let k = (a - dq, b - dt);
            let qc = c / dc;
            for (&(x, y), dcoef) in &d.terms {
                rem.add_term((x + k.0, y + k.1), &-(dcoef * &qc));
            }
            quot.terms.insert(k, qc);
        }
        Ok(quot)
    }

    /// Coefficients in `Q[q]` indexed by `t` degree.
    fn to_recursive(&self) -> Vec<UniPoly<Q>> {
        let n = self.deg_t().map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<BigRational>> = vec![Vec::new(); n];
        for (&(a, b), c) in &self.terms {
            let row = &mut rows[b as usize];
            if row.len() <= a as usize {
                row.resize(a as usize + 1, BigRational::zero());
            }
            row[a as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::from_coeffs).collect()
    }

    fn from_recursive(rows: &[UniPoly<Q>]) -> Self {
        let mut terms = BTreeMap::new();
        for (b, row) in rows.iter().enumerate() {
            for (a, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((a as u32, b as u32), c.clone());
                }
            }
        }
        BiPoly { terms }
    }

    /// Greatest common divisor, normalized by [`BiPoly::primitive_part`].
    /// Computed in `Q[q][t]` with a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let a = self.to_recursive();
        let b = other.to_recursive();
        let ca = rec_content(&a);
        let cb = rec_content(&b);
        let c = ca.gcd(&cb);
        let mut a = rec_div_content(&a, &ca);
        let mut b = rec_div_content(&b, &cb);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = rec_prem(&a, &b);
            a = b;
            b = if r.is_empty() {
                r
            } else {
                let cr = rec_content(&r);
                rec_div_content(&r, &cr)
            };
        }
        // `b` is now zero or a nonzero element of Q[q], which is a unit
        // after content removal.
        let g = if b.is_empty() {
            a
        } else {
            vec![UniPoly::one()]
        };
        let g: Vec<UniPoly<Q>> = g.iter().map(|row| row * &c).collect();
        Self::from_recursive(&g).primitive_part()
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

fn rec_trim(mut v: Vec<UniPoly<Q>>) -> Vec<UniPoly<Q>> {
    while v.last().is_some_and(UniPoly::is_zero) {
        v.pop();
    }
    v
}

fn rec_content(a: &[UniPoly<Q>]) -> UniPoly<Q> {
    let mut g = UniPoly::zero();
    for c in a {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic() } else { g.gcd(c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn rec_div_content(a: &[UniPoly<Q>], c: &UniPoly<Q>) -> Vec<UniPoly<Q>> {
    let v: Vec<UniPoly<Q>> = if c.is_constant() {
        let inv = c.coeff(0).recip();
        a.iter().map(|x| x.scale(&inv)).collect()
    } else {
        a.iter()
            .map(|x| x.exact_div(c).expect("content divides"))
            .collect()
    };
    // Integer-primitive overall keeps coefficients small.
    let l = v.iter().fold(BigRational::zero(), |acc, x| {
        let cx = x.content();
        if x.is_zero() {
            acc
        } else if acc.is_zero() {
            cx
        } else {
            BigRational::new(acc.numer().gcd(cx.numer()), acc.denom().lcm(cx.denom()))
        }
    });
    if l.is_zero() || l.is_one() {
        v
    } else {
        let inv = l.recip();
        v.iter().map(|x| x.scale(&inv)).collect()
    }
}

/// Pseudo-remainder of `a` by `b` in `Q[q][t]`.
fn rec_prem(a: &[UniPoly<Q>], b: &[UniPoly<Q>]) -> Vec<UniPoly<Q>> {
    let n = b.len() - 1;
    let lb = &b[n];
    let mut r: Vec<UniPoly<Q>> = a.to_vec();
    while r.len() > n {
        let m = r.len() - 1;
        let lr = r[m].clone();
        let shift = m - n;
        for x in r.iter_mut() {
            *x = &*x * lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(bi * &lr);
        }
        debug_assert!(r[m].is_zero());
        r = rec_trim(r);
    }
    r
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), &(c * d));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_bi {
    ($ty:ident, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_bi!(BiPoly, Add::add, Sub::sub, Mul::mul);

fn fmt_monomial(out: &mut String, a: u32, b: u32) {
    for (sym, e) in [("q", a), ("t", b)] {
        if e >= 1 {
            out.push_str(sym);
        }
        if e >= 2 {
            out.push_str(&superscript(e as usize));
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (&(a, b), c) in &self.terms {
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mag = c.abs();
            if (a, b) == (0, 0) || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            fmt_monomial(&mut out, a, b);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{self}]")
    }
}

/// Canonical quotient of bivariate polynomials: coprime, denominator with
/// content 1 and positive lex-leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc2 {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc2 {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Ok(Self::canonical_scale(num, den))
        } else {
            Ok(Self::canonical_scale(
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            ))
        }
    }

    fn canonical_scale(num: BiPoly, den: BiPoly) -> Self {
        let mut c = den.content();
        if den.leading().unwrap().1.is_negative() {
            c = -c;
        }
        if c.is_one() {
            RatFunc2 { num, den }
        } else {
            let inv = c.recip();
            RatFunc2 {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc2 {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFunc2 {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RatFunc2 {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical_scale(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::canonical_scale(self.num.pow(e), self.den.pow(e))
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(AlgebraError::Pole);
        }
        Ok(self.num.eval(q, t) / d)
    }

    /// Specializes `q = t^k`, giving a rational function of `t`.
    pub fn q_to_t_pow(&self, k: u32) -> Result<RatFunc1<T>, AlgebraError> {
        RatFunc1::new(self.num.q_to_t_pow(k), self.den.q_to_t_pow(k))
    }

    pub fn swap_qt(&self) -> Self {
        Self::canonical_scale(self.num.swap_qt(), self.den.swap_qt())
    }
}

impl Default for RatFunc2 {
    fn default() -> Self {
        Self::zero()
    }
}

fn add2(a: &RatFunc2, b: &RatFunc2, negate_b: bool) -> RatFunc2 {
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return RatFunc2 {
            num: bn,
            den: b.den.clone(),
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let num = &a.num + &bn;
        if num.is_zero() {
            return RatFunc2::zero();
        }
        if a.den.is_one() {
            return RatFunc2::from_poly(num);
        }
        return RatFunc2::new(num, a.den.clone()).expect("nonzero denominator");
    }
    let g = a.den.gcd(&b.den);
    let (ad, bd) = if g.is_one() {
        (a.den.clone(), b.den.clone())
    } else {
        (a.den.exact_div(&g).unwrap(), b.den.exact_div(&g).unwrap())
    };
    let num = &(&a.num * &bd) + &(&bn * &ad);
    if num.is_zero() {
        return RatFunc2::zero();
    }
    if g.is_one() {
        return RatFunc2::canonical_scale(num, &ad * &b.den);
    }
    let h = num.gcd(&g);
    let (num, g) = if h.is_one() {
        (num, g)
    } else {
        (num.exact_div(&h).unwrap(), g.exact_div(&h).unwrap())
    };
    RatFunc2::canonical_scale(num, &(&ad * &bd) * &g)
}

impl Add<&RatFunc2> for &RatFunc2 {
    type Output = RatFunc2;
    fn add(self, rhs: &RatFunc2) -> RatFunc2 {
        add2(self, rhs, false)
    }
}

impl Sub<&RatFunc2> for &RatFunc2 {
    type Output = RatFunc2;
    fn sub(self, rhs: &RatFunc2) -> RatFunc2 {
        add2(self, rhs, true)
    }
}

impl Mul<&RatFunc2> for &RatFunc2 {
    type Output = RatFunc2;
    fn mul(self, rhs: &RatFunc2) -> RatFunc2 {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc2::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc2::from_poly(&self.num * &rhs.num);
        }
        let div = |p: &BiPoly, g: &BiPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        RatFunc2::canonical_scale(num, den)
    }
}

impl Div<&RatFunc2> for &RatFunc2 {
    type Output = RatFunc2;
    fn div(self, rhs: &RatFunc2) -> RatFunc2 {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }
}

impl Neg for &RatFunc2 {
    type Output = RatFunc2;
    fn neg(self) -> RatFunc2 {
        RatFunc2 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_bi!(RatFunc2, Add::add, Sub::sub, Mul::mul, Div::div);

impl From<BiPoly> for RatFunc2 {
    fn from(p: BiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc2[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};
    use proptest::prelude::*;

    fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(k, c)| (k, int(c))))
    }

    #[test]
    fn gcd_finds_shared_factor() {
        let a = BiPoly::one_minus(1, 1); // 1 - qt
        let b = BiPoly::one_minus(0, 1); // 1 - t
        let c = &BiPoly::one() + &BiPoly::q(); // 1 + q
        let x = &(&a * &b) * &c;
        let y = &(&a * &c) * &BiPoly::one_minus(2, 0);
        let g = x.gcd(&y);
        assert_eq!(g, (&a * &c).primitive_part());
        assert!(BiPoly::q().gcd(&BiPoly::t()).is_one());
    }

    #[test]
    fn example_coefficient_simplifies() {
        // (1−t²)(1−q) / ((1−qt)(1−t)) = (1+t)(1−q)/(1−qt)
        let n = &BiPoly::one_minus(0, 2) * &BiPoly::one_minus(1, 0);
        let d = &BiPoly::one_minus(1, 1) * &BiPoly::one_minus(0, 1);
        let f = RatFunc2::new(n, d).unwrap();
        let expect = RatFunc2::new(
            &(&BiPoly::one() + &BiPoly::t()) * &BiPoly::one_minus(1, 0),
            BiPoly::one_minus(1, 1),
        )
        .unwrap();
        assert_eq!(f, expect);
        assert!(f.den().leading().unwrap().1.is_positive());
        assert_eq!(f.q_to_t_pow(1).unwrap(), RatFunc1::one());
    }

    #[test]
    fn exact_div_rejects_remainder() {
        assert_eq!(
            BiPoly::q().exact_div(&BiPoly::one_minus(0, 1)),
            Err(AlgebraError::NotExact)
        );
    }

    fn small_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..4)
            .prop_map(|v| BiPoly::from_terms(v.into_iter().map(|(k, c)| (k, int(c)))))
    }

    fn small_rf2() -> impl Strategy<Value = RatFunc2> {
        (small_bipoly(), small_bipoly()).prop_filter_map("nonzero den", |(n, d)| {
            (!d.is_zero()).then(|| RatFunc2::new(n, d).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in small_rf2(), b in small_rf2(), c in small_rf2()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RatFunc2::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RatFunc2::one());
            }
        }

        #[test]
        fn canonical_under_common_factor(n in small_bipoly(), d in small_bipoly(), k in small_bipoly()) {
            prop_assume!(!d.is_zero() && !k.is_zero());
            let a = RatFunc2::new(n.clone(), d.clone()).unwrap();
            let b = RatFunc2::new(&n * &k, &d * &k).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn gcd_divides_both(a in small_bipoly(), b in small_bipoly(), k in small_bipoly()) {
            prop_assume!(!k.is_zero() && !(a.is_zero() && b.is_zero()));
            let x = &a * &k;
            let y = &b * &k;
            let g = x.gcd(&y);
            prop_assert!(x.exact_div(&g).is_ok());
            prop_assert!(y.exact_div(&g).is_ok());
            prop_assert!(g.exact_div(&k.primitive_part()).is_ok() || x.is_zero() || y.is_zero());
        }
    }

    #[test]
    fn display() {
        let f = RatFunc2::new(BiPoly::one_minus(1, 0), BiPoly::one_minus(1, 1)).unwrap();
        assert_eq!(f.to_string(), "(-1+q)/(-1+qt)");
        assert_eq!(bp(&[((0, 2), 3)]).to_string(), "3t²");
        let _ = rat(1, 2);
    }
}
