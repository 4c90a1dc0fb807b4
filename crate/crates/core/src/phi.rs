//! The vanishing-product calculus `φ(x;β) = ∏_{b∈β, b≠0} (b − x)/b` and its
//! arithmetic-run specializations.

use std::fmt;

use jlk_algebra::{BigRational, Coeff, RatFunc1, UniPoly, R};
use num_traits::{One, Zero};

use crate::error::{CoreError, Result};

/// `c + d·r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinExpr {
    pub constant: BigRational,
    pub r_coeff: BigRational,
}

impl LinExpr {
    pub fn new(constant: BigRational, r_coeff: BigRational) -> Self {
        LinExpr { constant, r_coeff }
    }

    pub fn ints(c: i64, d: i64) -> Self {
        LinExpr::new(
            BigRational::from_integer(c.into()),
            BigRational::from_integer(d.into()),
        )
    }

    pub fn constant(c: i64) -> Self {
        LinExpr::ints(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        Zero::is_zero(&self.constant) && Zero::is_zero(&self.r_coeff)
    }

    pub fn add_int(&self, k: i64) -> Self {
        LinExpr::new(
            &self.constant + BigRational::from_integer(k.into()),
            self.r_coeff.clone(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        LinExpr::new(&self.constant + &o.constant, &self.r_coeff + &o.r_coeff)
    }

    pub fn neg(&self) -> Self {
        LinExpr::new(-&self.constant, -&self.r_coeff)
    }

    pub fn to_poly(&self) -> UniPoly<R> {
        UniPoly::linear(self.constant.clone(), self.r_coeff.clone())
    }

    pub fn to_ratfunc(&self) -> RatFunc1<R> {
        RatFunc1::from_poly(self.to_poly())
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// `φ(x;β)`; identically zero entries of `β` are skipped.
pub fn phi<F: Coeff>(x: &F, beta: &[F]) -> Result<F> {
    let mut num = F::one();
    let mut den = F::one();
    for b in beta.iter().filter(|b| !b.is_zero()) {
        num = num.mul(&b.sub(x));
        den = den.mul(b);
    }
    Ok(num.try_div(&den)?)
}

/// `⟨x;a⟩_j = φ(x; {a, a+1, …, a+j−1})`.
pub fn angle<F: Coeff>(x: &F, a: &F, j: i64) -> Result<F> {
    if j < 0 {
        return Err(CoreError::InvalidArgument(format!("run length {j} < 0")));
    }
    let beta: Vec<F> = (0..j).map(|k| a.add(&F::from_int(k))).collect();
    phi(x, &beta)
}

/// `[b;n] = φ(1−r; {b+1, …, b+n})`.
pub fn strip_term(b: &LinExpr, n: u32) -> RatFunc1<R> {
    let x = RatFunc1::<R>::from_poly(UniPoly::from_ints(&[1, -1]));
    let beta: Vec<RatFunc1<R>> = (1..=n as i64).map(|k| b.add_int(k).to_ratfunc()).collect();
    phi(&x, &beta).expect("nonzero entries only")
}

/// `β_j(σ,τ) = {σ_i − σ_j} ∪ {τ_i + σ_j}` (0-based `j`).
pub fn beta_col<F: Coeff>(j: usize, sigma: &[F], tau: &[F]) -> Vec<F> {
    let mut beta: Vec<F> = sigma.iter().map(|s| s.sub(&sigma[j])).collect();
    beta.extend(tau.iter().map(|t| t.add(&sigma[j])));
    beta
}

/// `Φ(x;σ,τ) = Σ_j φ(x; β_j(σ,τ))`.
pub fn phi_col<F: Coeff>(x: &F, sigma: &[F], tau: &[F]) -> Result<F> {
    if sigma.len() != tau.len() || sigma.is_empty() {
        return Err(CoreError::InvalidArgument(format!(
            "Φ needs equal nonzero lengths, got {} and {}",
            sigma.len(),
            tau.len()
        )));
    }
    let mut acc = F::zero();
    for j in 0..sigma.len() {
        acc = acc.add(&phi(x, &beta_col(j, sigma, tau))?);
    }
    Ok(acc)
}

/// `β^n_t(j;σ,τ)` over `k ∈ [n−t]`: `{−k}`, `σ_i^{k−1} − σ_j^t` for
/// `i ≠ j`, and `τ_i^{k−1} + σ_j^t` for both `i` (0-based `j`).
pub fn beta_row<F: Coeff>(n: u32, t: u32, j: usize, sigma: &[F; 2], tau: &[F; 2]) -> Vec<F> {
    let shift = |v: &F, k: i64| v.add(&F::from_int(k));
    let sj = shift(&sigma[j], t as i64);
    let mut beta = Vec::new();
    for k in 1..=(n - t) as i64 {
        beta.push(F::from_int(-k));
        beta.push(shift(&sigma[1 - j], k - 1).sub(&sj));
        for ti in tau {
            beta.push(shift(ti, k - 1).add(&sj));
        }
    }
    beta
}

/// `φ^n_t = φ(x; β^n_t(1)) · φ(x; β^n_{n−t}(2))`.
pub fn phi_row_term<F: Coeff>(n: u32, t: u32, x: &F, sigma: &[F; 2], tau: &[F; 2]) -> Result<F> {
    Ok(phi(x, &beta_row(n, t, 0, sigma, tau))?.mul(&phi(x, &beta_row(n, n - t, 1, sigma, tau))?))
}

/// `Φ_n(x;σ,τ) = Σ_{t=0}^n φ^n_t(x;σ,τ)`.
pub fn phi_row<F: Coeff>(n: u32, x: &F, sigma: &[F; 2], tau: &[F; 2]) -> Result<F> {
    let mut acc = F::zero();
    for t in 0..=n {
        acc = acc.add(&phi_row_term(n, t, x, sigma, tau)?);
    }
    Ok(acc)
}

/// The anchor-shift identities `[h;n−t]/[h;n] = 1/[h+n−t;t]` and
/// `[h+t;n]/[h;n] = [h+n;t]/[h;t]`.
pub fn check_mod_identities(h: &LinExpr, n: u32, t: u32) -> Result<bool> {
    if t > n {
        return Err(CoreError::InvalidArgument(format!(
            "t = {t} exceeds n = {n}"
        )));
    }
    let s = strip_term;
    let base = s(h, n);
    let first = s(h, n - t).checked_div(&base)? == s(&h.add_int((n - t) as i64), t).inv()?;
    let second = s(&h.add_int(t as i64), n).checked_div(&base)?
        == s(&h.add_int(n as i64), t).checked_div(&s(h, t))?;
    Ok(first && second)
}

/// `φ(x; {h})` for a single nonzero value, the per-box flip ratio.
pub fn flip_ratio<F: Coeff>(x: &F, h: &F) -> Result<F> {
    phi(x, std::slice::from_ref(h))
}

pub fn one_minus_r() -> RatFunc1<R> {
    RatFunc1::from_poly(UniPoly::linear(
        <BigRational as One>::one(),
        -<BigRational as One>::one(),
    ))
}
