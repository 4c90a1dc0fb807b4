use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::poly::UniPoly;
use crate::ratfunc::RatFunc1;
use crate::var::{Alpha, T};

/// The linear polynomial `n + m·α` with `gcd(m, n) = 1` and `m > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFactor {
    pub m: BigInt,
    pub n: BigInt,
}

impl LinearFactor {
    pub fn new(m: i64, n: i64) -> Self {
        LinearFactor {
            m: m.into(),
            n: n.into(),
        }
    }

    pub fn to_poly(&self) -> UniPoly<Alpha> {
        UniPoly::from_bigints(&[self.n.clone(), self.m.clone()])
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_poly())
    }
}

/// `constant · ∏ factor^e · residual`, the residual primitive with positive
/// leading coefficient and no rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootFactorization {
    pub constant: BigRational,
    /// Sorted by factor; `α` itself appears as `(1, 0)`.
    pub factors: Vec<(LinearFactor, u32)>,
    pub residual: UniPoly<Alpha>,
}

impl RootFactorization {
    pub fn expand(&self) -> UniPoly<Alpha> {
        let mut p = &UniPoly::constant(self.constant.clone()) * &self.residual;
        for (f, e) in &self.factors {
            p = &p * &f.to_poly().pow(*e);
        }
        p
    }

    pub fn multiplicity(&self, m: i64, n: i64) -> u32 {
        let key = LinearFactor::new(m, n);
        self.factors
            .iter()
            .find(|(f, _)| *f == key)
            .map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for RootFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (lf, e) in &self.factors {
            if lf.n.is_zero() {
                write!(f, "α")?;
            } else {
                write!(f, "{lf}")?;
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if !self.residual.is_one() {
            write!(f, "({})", self.residual)?;
        }
        Ok(())
    }
}

const DIVISOR_LIMIT: u128 = 1 << 80;

fn divisors(n: &BigInt) -> Result<Vec<u128>, AlgebraError> {
    let n = n.abs().to_u128().ok_or(AlgebraError::CoefficientOverflow)?;
    if n > DIVISOR_LIMIT {
        return Err(AlgebraError::CoefficientOverflow);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Splits off every rational root of `p`.
pub fn factor_rational_roots(p: &UniPoly<Alpha>) -> Result<RootFactorization, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    let k = p.valuation();
    let mut rest = UniPoly::from_coeffs(p.coeffs()[k..].to_vec());
    if k > 0 {
        factors.push((LinearFactor::new(1, 0), k as u32));
    }
    let pp = rest.primitive_part();
    let constant = rest.leading().unwrap() / pp.leading().unwrap();
    rest = pp;
    if rest.degree() > Some(0) {
        let (_, ints) = rest.integer_form();
        let lead_divs = divisors(ints.last().unwrap())?;
        let const_divs = divisors(&ints[0])?;
        for &m in &lead_divs {
            for &n in &const_divs {
                if m.gcd(&n) != 1 {
                    continue;
                }
                for sign in [1i32, -1] {
                    let n_signed = BigInt::from(n) * sign;
                    // root of n + m·α is −n/m
                    let root = BigRational::new(-n_signed.clone(), BigInt::from(m));
                    let mut e = 0u32;
                    while rest.degree() > Some(0) && rest.eval(&root).is_zero() {
                        rest = rest.deflate(&root)?;
                        e += 1;
                    }
                    if e > 0 {
                        factors.push((
                            LinearFactor {
                                m: m.into(),
                                n: n_signed,
                            },
                            e,
                        ));
                    }
                }
            }
        }
    }
    // Deflation by monic (α − root) leaves a rational multiple of the
    // primitive cofactor; move that scalar into the constant.
    let pp = rest.primitive_part();
    let mut constant = constant * (rest.leading().unwrap() / pp.leading().unwrap());
    for (f, e) in &factors {
        // (α − root) = (n + mα)/m
        constant /= num_traits::pow(BigRational::from_integer(f.m.clone()), *e as usize);
    }
    factors.sort();
    Ok(RootFactorization {
        constant,
        factors,
        residual: pp,
    })
}

/// Order of vanishing of `p` at `t = 1` and the cofactor.
fn split_t_minus_1(p: &UniPoly<T>) -> (usize, UniPoly<T>) {
    let one = BigRational::one();
    let mut k = 0;
    let mut q = p.clone();
    while !q.is_zero() && q.eval(&one).is_zero() {
        q = q.deflate(&one).expect("root divides");
        k += 1;
    }
    (k, q)
}

/// `lim_{t→1} f(t)`, computed exactly by cancelling powers of `t − 1`.
pub fn limit_t_to_1(f: &RatFunc1<T>) -> Result<BigRational, AlgebraError> {
    if f.is_zero() {
        return Ok(BigRational::zero());
    }
    let (kn, n) = split_t_minus_1(f.num());
    let (kd, d) = split_t_minus_1(f.den());
    if kn < kd {
        return Err(AlgebraError::DivergentLimit);
    }
    if kn > kd {
        return Ok(BigRational::zero());
    }
    let one = BigRational::one();
    Ok(n.eval(&one) / d.eval(&one))
}
