//! Canonical text form: `den=3; [0,16,32]` is `(16α+32α²)/3`. A rational
//! function is two such polynomials joined by ` / `.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::AlgebraError;
use crate::poly::UniPoly;
use crate::ratfunc::RatFunc1;
use crate::var::Indeterminate;

pub fn poly_to_text<V: Indeterminate>(p: &UniPoly<V>) -> String {
    let (l, ints) = p.integer_form();
    let body: Vec<String> = ints.iter().map(ToString::to_string).collect();
    format!("den={l}; [{}]", body.join(","))
}

pub fn ratfunc_to_text<V: Indeterminate>(f: &RatFunc1<V>) -> String {
    format!("{} / {}", poly_to_text(f.num()), poly_to_text(f.den()))
}

pub fn parse_poly<V: Indeterminate>(s: &str) -> Result<UniPoly<V>, AlgebraError> {
    let err = |m: &str| AlgebraError::Parse(format!("{m} in {s:?}"));
    let (head, body) = s.trim().split_once(';').ok_or_else(|| err("missing ';'"))?;
    let den: BigInt = head
        .trim()
        .strip_prefix("den=")
        .ok_or_else(|| err("missing den="))?
        .trim()
        .parse()
        .map_err(|_| err("bad denominator"))?;
    if den <= BigInt::from(0) {
        return Err(err("denominator must be positive"));
    }
    let inner = body
        .trim()
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| err("missing brackets"))?;
    let mut coeffs = Vec::new();
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let c: BigInt = tok.parse().map_err(|_| err("bad coefficient"))?;
        coeffs.push(BigRational::new(c, den.clone()));
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

pub fn parse_ratfunc<V: Indeterminate>(s: &str) -> Result<RatFunc1<V>, AlgebraError> {
    let (n, d) = s
        .split_once(" / ")
        .ok_or_else(|| AlgebraError::Parse(format!("missing ' / ' in {s:?}")))?;
    RatFunc1::new(parse_poly(n)?, parse_poly(d)?)
}
