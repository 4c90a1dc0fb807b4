//! Exact arithmetic substrate: arbitrary-precision rationals, dense univariate
//! polynomials, sparse bivariate polynomials and the rational functions built
//! from them.
//!
//! Every value is kept in a canonical form so that structural equality is
//! value equality. Univariate objects carry their indeterminate as a type
//! parameter ([`Alpha`], [`R`], [`T`], [`Q`], [`X`]) so that, for instance, an
//! expression in `r = 1/α` cannot be silently mixed with one in `α`.

mod bipoly;
mod coeff;
mod error;
mod factor;
mod poly;
mod ratfunc;
mod text;
mod var;

pub use bipoly::{BiPoly, RatFunc2};
pub use coeff::Coeff;
pub use error::AlgebraError;
pub use factor::{factor_rational_roots, limit_t_to_1, LinearFactor, RootFactorization};
pub use poly::UniPoly;
pub use ratfunc::{r_to_alpha, RatFunc1};
pub use text::{parse_poly, parse_ratfunc, poly_to_text, ratfunc_to_text};
pub use var::{Alpha, Indeterminate, Q, R, T, X};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an exact rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an exact integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
