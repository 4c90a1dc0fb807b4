//! Structure constants of a triangular basis from its integral form.
//!
//! With `J_κ = N_κ P_κ` having polynomial m-coefficients, the coefficient of
//! `x^λ` in `J_μ J_ν` is a sum of ring products, and the `J`-basis
//! coefficients are peeled off in descending lex order.

use std::collections::BTreeMap;
use std::sync::Arc;

use jlk_algebra::Coeff;

use crate::error::{CoreError, Result};
use crate::partition::{dominance_leq_same_weight, partitions_of, Partition};

pub type Expansion<C> = BTreeMap<Partition, C>;

pub trait Family {
    /// Polynomial coefficients of the integral form.
    type Ring: Coeff;
    /// Field holding `P`-coefficients and structure constants.
    type Field: Coeff;

    /// m-expansion of `J_λ` truncated to `n` variables.
    fn integral(&self, lambda: &Partition, n: usize) -> Result<Arc<Expansion<Self::Ring>>>;
    /// `N_λ`, the coefficient of `m_λ` in `J_λ`.
    fn norm(&self, lambda: &Partition) -> Self::Ring;
    fn lift(&self, r: &Self::Ring) -> Self::Field;
}

fn sort_desc(v: &[u32]) -> Partition {
    let mut v = v.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).expect("sorted")
}

/// Coefficient of `x^λ` in `A·B` for symmetric `A` of weight `wa`.
fn product_coeff<C: Coeff>(a: &Expansion<C>, b: &Expansion<C>, wa: u32, lambda: &[u32]) -> C {
    let mut acc = C::zero();
    let mut cur = vec![0u32; lambda.len()];
    fn rec<C: Coeff>(
        i: usize,
        rem: u32,
        lambda: &[u32],
        cur: &mut Vec<u32>,
        a: &Expansion<C>,
        b: &Expansion<C>,
        acc: &mut C,
    ) {
        if i == lambda.len() {
            if rem != 0 {
                return;
            }
            let Some(x) = a.get(&sort_desc(cur)) else {
                return;
            };
            let other: Vec<u32> = lambda.iter().zip(cur.iter()).map(|(l, c)| l - c).collect();
            if let Some(y) = b.get(&sort_desc(&other)) {
                *acc = acc.add(&x.mul(y));
            }
            return;
        }
        let room: u32 = lambda[i + 1..].iter().sum();
        let lo = rem.saturating_sub(room);
        for v in lo..=lambda[i].min(rem) {
            cur[i] = v;
            rec(i + 1, rem - v, lambda, cur, a, b, acc);
        }
        cur[i] = 0;
    }
    rec(0, wa, lambda, &mut cur, a, b, &mut acc);
    acc
}

/// `P_μ P_ν = Σ_λ c^λ_{μν} P_λ` over all `λ` with at most `n` parts.
pub fn structure_constants<F: Family>(
    fam: &F,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<Expansion<F::Field>> {
    if mu.len() > n || nu.len() > n {
        return Err(CoreError::TooManyParts(n));
    }
    let jm = fam.integral(mu, n)?;
    let jn = fam.integral(nu, n)?;
    let w = mu.weight() + nu.weight();
    let top = {
        let mut v = mu.padded(n.max(nu.len()));
        for (x, y) in v.iter_mut().zip(nu.padded(n)) {
            *x += y;
        }
        Partition::new(v).expect("sum of partitions")
    };
    let scale = fam.lift(&fam.norm(mu).mul(&fam.norm(nu)));
    // J-basis coefficients found so far, with their integral forms
    let mut found: Vec<(Partition, F::Field, Arc<Expansion<F::Ring>>)> = Vec::new();
    let mut out = Expansion::new();
    for lambda in partitions_of(w, n) {
        if !dominance_leq_same_weight(&lambda, &top) {
            continue;
        }
        let prod = product_coeff(&jm, &jn, mu.weight(), &lambda.padded(n));
        let mut rem = fam.lift(&prod);
        for (_, k, j) in &found {
            if let Some(v) = j.get(&lambda) {
                rem = rem.sub(&k.mul(&fam.lift(v)));
            }
        }
        if rem.is_zero() {
            continue;
        }
        let k = rem.try_div(&fam.lift(&fam.norm(&lambda)))?;
        // c = k·N_λ/(N_μ N_ν)
        out.insert(lambda.clone(), rem.try_div(&scale)?);
        let j = fam.integral(&lambda, n)?;
        found.push((lambda, k, j));
    }
    Ok(out)
}
