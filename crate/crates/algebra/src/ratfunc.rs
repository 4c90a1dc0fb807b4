use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::poly::{format_int_terms, UniPoly};
use crate::var::{Alpha, Indeterminate, R};

/// Quotient of univariate polynomials in canonical form: coprime numerator
/// and denominator, the denominator an integer polynomial of content one with
/// positive leading coefficient. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc1<V = Alpha> {
    num: UniPoly<V>,
    den: UniPoly<V>,
}

impl<V: Indeterminate> RatFunc1<V> {
    /// Normalizes `num/den`.
    pub fn new(num: UniPoly<V>, den: UniPoly<V>) -> Result<Self, AlgebraError> {
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

    /// Rescales an already coprime pair so the denominator is primitive with
    /// positive leading coefficient.
    fn canonical_scale(num: UniPoly<V>, den: UniPoly<V>) -> Self {
        let mut c = den.content();
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            RatFunc1 { num, den }
        } else {
            let inv = c.recip();
            RatFunc1 {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc1 {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn from_poly(p: UniPoly<V>) -> Self {
        RatFunc1 {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// The indeterminate as a rational function.
    pub fn var() -> Self {
        Self::from_poly(UniPoly::var())
    }

    pub fn num(&self) -> &UniPoly<V> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<V> {
        &self.den
    }

    pub fn into_parts(self) -> (UniPoly<V>, UniPoly<V>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&UniPoly<V>> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn eval(&self, at: &BigRational) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(AlgebraError::Pole);
        }
        Ok(self.num.eval(at) / d)
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

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RatFunc1 {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        Self::canonical_scale(self.num.pow(e), self.den.pow(e))
    }

    pub fn rename<W: Indeterminate>(&self) -> RatFunc1<W> {
        RatFunc1 {
            num: self.num.rename(),
            den: self.den.rename(),
        }
    }

    /// Integer numerator and denominator coefficient arrays of the same
    /// value: `(L·num, L·den)` with `L` the lcm of the numerator's
    /// coefficient denominators.
    pub fn integer_parts(&self) -> (Vec<num_bigint::BigInt>, Vec<num_bigint::BigInt>) {
        let (l, num) = self.num.integer_form();
        let lr = BigRational::from_integer(l);
        let (_, den) = self.den.scale(&lr).integer_form();
        (num, den)
    }
}

impl<V: Indeterminate> Default for RatFunc1<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Indeterminate> From<UniPoly<V>> for RatFunc1<V> {
    fn from(p: UniPoly<V>) -> Self {
        Self::from_poly(p)
    }
}

fn add_impl<V: Indeterminate>(a: &RatFunc1<V>, b: &RatFunc1<V>, negate_b: bool) -> RatFunc1<V> {
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return RatFunc1 {
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
            return RatFunc1::zero();
        }
        if a.den.is_one() {
            return RatFunc1::from_poly(num);
        }
        return RatFunc1::new(num, a.den.clone()).expect("nonzero denominator");
    }
    // Henrici: with g = gcd(b1, b2), only g can share factors with the new
    // numerator.
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        let num = &(&a.num * &b.den) + &(&bn * &a.den);
        if num.is_zero() {
            return RatFunc1::zero();
        }
        return RatFunc1::canonical_scale(num, &a.den * &b.den);
    }
    let ad = a.den.exact_div(&g).expect("gcd divides");
    let bd = b.den.exact_div(&g).expect("gcd divides");
    let num = &(&a.num * &bd) + &(&bn * &ad);
    if num.is_zero() {
        return RatFunc1::zero();
    }
    let h = num.gcd(&g);
    let (num, g) = if h.is_one() {
        (num, g)
    } else {
        (num.exact_div(&h).unwrap(), g.exact_div(&h).unwrap())
    };
    RatFunc1::canonical_scale(num, &(&ad * &bd) * &g)
}

impl<V: Indeterminate> Add<&RatFunc1<V>> for &RatFunc1<V> {
    type Output = RatFunc1<V>;
    fn add(self, rhs: &RatFunc1<V>) -> RatFunc1<V> {
        add_impl(self, rhs, false)
    }
}

impl<V: Indeterminate> Sub<&RatFunc1<V>> for &RatFunc1<V> {
    type Output = RatFunc1<V>;
    fn sub(self, rhs: &RatFunc1<V>) -> RatFunc1<V> {
        add_impl(self, rhs, true)
    }
}

impl<V: Indeterminate> Mul<&RatFunc1<V>> for &RatFunc1<V> {
    type Output = RatFunc1<V>;
    fn mul(self, rhs: &RatFunc1<V>) -> RatFunc1<V> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc1::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc1::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &UniPoly<V>, g: &UniPoly<V>| {
            if g.is_one() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        RatFunc1::canonical_scale(num, den)
    }
}

impl<V: Indeterminate> Div<&RatFunc1<V>> for &RatFunc1<V> {
    type Output = RatFunc1<V>;
    /// Panics on division by zero; see [`RatFunc1::checked_div`].
    fn div(self, rhs: &RatFunc1<V>) -> RatFunc1<V> {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }
}

impl<V: Indeterminate> Neg for &RatFunc1<V> {
    type Output = RatFunc1<V>;
    fn neg(self) -> RatFunc1<V> {
        RatFunc1 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<V: Indeterminate> Neg for RatFunc1<V> {
    type Output = RatFunc1<V>;
    fn neg(self) -> RatFunc1<V> {
        -&self
    }
}

crate::poly::forward_owned!(RatFunc1, Add::add, Sub::sub, Mul::mul, Div::div);

/// Substitutes `r = 1/α` and clears denominators.
pub fn r_to_alpha(f: &RatFunc1<R>) -> RatFunc1<Alpha> {
    if f.is_zero() {
        return RatFunc1::zero();
    }
    let dn = f.num.degree().unwrap();
    let dd = f.den.degree().unwrap();
    // num(1/α)/den(1/α) = α^dd·rev(num) / (α^dn·rev(den))
    let num = f.num.reversed(dn).rename::<Alpha>().shift(dd);
    let den = f.den.reversed(dd).rename::<Alpha>().shift(dn);
    RatFunc1::new(num, den).expect("reversed denominator is nonzero")
}

impl<V: Indeterminate> fmt::Display for RatFunc1<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.integer_parts();
        let n = format_int_terms(&num, V::SYMBOL);
        if den.len() == 1 && den[0].is_one() {
            return write!(f, "{n}");
        }
        let d = format_int_terms(&den, V::SYMBOL);
        write!(f, "({n})/({d})")
    }
}

impl<V: Indeterminate> fmt::Debug for RatFunc1<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc1[{}]", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};
    use proptest::prelude::*;

    type P = UniPoly<Alpha>;
    type F = RatFunc1<Alpha>;

    fn f(num: &[i64], den: &[i64]) -> F {
        F::new(P::from_ints(num), P::from_ints(den)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(f(&[2, 2], &[4, 4]), F::constant(rat(1, 2)));
        assert_eq!(
            f(&[-1, 0, 1], &[-1, 1]),
            F::from_poly(P::from_ints(&[1, 1]))
        );
        let z = f(&[0], &[7, 0, 0, 1]);
        assert!(z.is_zero());
        assert!(z.den().is_one());
        assert_eq!(
            F::new(P::one(), P::zero()).unwrap_err().to_string(),
            "division by zero polynomial"
        );
        // denominator made primitive with positive leading coefficient
        let g = f(&[1], &[-2, -4]);
        assert_eq!(g.den(), &P::from_ints(&[1, 2]));
        assert_eq!(g.num(), &P::constant(rat(-1, 2)));
    }

    #[test]
    fn r_to_alpha_examples() {
        let two_r =
            RatFunc1::<R>::new(UniPoly::from_ints(&[0, 2]), UniPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(r_to_alpha(&two_r), f(&[2], &[1, 1]));
        let m_plus_nr = RatFunc1::<R>::from_poly(UniPoly::from_ints(&[3, 2]));
        assert_eq!(r_to_alpha(&m_plus_nr), f(&[2, 3], &[0, 1]));
        let one_minus_r = RatFunc1::<R>::from_poly(UniPoly::from_ints(&[1, -1]));
        assert_eq!(r_to_alpha(&one_minus_r), f(&[-1, 1], &[0, 1]));
    }

    #[test]
    fn display_matches_report_style() {
        assert_eq!(f(&[0, 2], &[1, 1]).to_string(), "(2α)/(1+α)");
        assert_eq!(F::one().to_string(), "1");
        assert_eq!(F::constant(rat(16, 3)).to_string(), "(16)/(3)");
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(-6i64..=6, 0..4).prop_map(|v| P::from_ints(&v))
    }

    fn small_ratfunc() -> impl Strategy<Value = F> {
        (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| {
            (!d.is_zero()).then(|| F::new(n, d).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, F::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), F::one());
            }
        }

        #[test]
        fn canonical_representation(n in small_poly(), d in small_poly(), k in small_poly()) {
            prop_assume!(!d.is_zero() && !k.is_zero());
            let a = F::new(n.clone(), d.clone()).unwrap();
            let b = F::new(&n * &k, &d * &k).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(F::new(a.num().clone(), a.den().clone()).unwrap(), a.clone());
            prop_assert_eq!(crate::text::ratfunc_to_text(&a), crate::text::ratfunc_to_text(&b));
        }

        #[test]
        fn r_to_alpha_is_homomorphism(
            a in small_ratfunc().prop_map(|f| f.rename::<R>()),
            b in small_ratfunc().prop_map(|f| f.rename::<R>()),
        ) {
            prop_assert_eq!(r_to_alpha(&(&a * &b)), r_to_alpha(&a) * r_to_alpha(&b));
            prop_assert_eq!(r_to_alpha(&(&a + &b)), r_to_alpha(&a) + r_to_alpha(&b));
        }
    }

    #[test]
    fn eval_and_pole() {
        let g = f(&[0, 2], &[1, 1]);
        assert_eq!(g.eval(&int(1)).unwrap(), int(1));
        assert_eq!(g.eval(&int(-1)), Err(AlgebraError::Pole));
    }
}
