//! Jack polynomials as triangular eigenfunctions of `D(α)`, and the
//! structure constants `c^λ_{μν}(α)` read off from products.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock};

use jlk_algebra::{r_to_alpha, Alpha, BigRational, Coeff, RatFunc1, UniPoly, R};
use parking_lot::RwLock;

use crate::cache;
use crate::error::{CoreError, Result};
use crate::monomial::{Basis, MonomialPoly, SymExpansion};
use crate::partition::{
    dominance_leq_same_weight, is_vertical_strip, partitions_of, Cell, Partition,
};
use crate::product::{structure_constants, Expansion, Family};

pub type RF = RatFunc1<Alpha>;
pub type Poly = UniPoly<Alpha>;

/// Coefficient rings containing the parameter `α`.
pub trait AlphaCoeff: Coeff {
    fn alpha() -> Self;
}

impl AlphaCoeff for Poly {
    fn alpha() -> Self {
        UniPoly::var()
    }
}

impl AlphaCoeff for RF {
    fn alpha() -> Self {
        RatFunc1::var()
    }
}

fn lin(c: u32, a: u32) -> Poly {
    UniPoly::from_ints(&[c as i64, a as i64])
}

/// `h*_λ(b) = α(a+1) + ℓ`.
pub fn upper_hook(lambda: &Partition, c: Cell) -> Result<Poly> {
    let (a, l, _) = lambda.arm_leg_hook(c)?;
    Ok(lin(l, a + 1))
}

/// `h^λ_*(b) = αa + ℓ + 1`.
pub fn lower_hook(lambda: &Partition, c: Cell) -> Result<Poly> {
    let (a, l, _) = lambda.arm_leg_hook(c)?;
    Ok(lin(l + 1, a))
}

#[derive(Clone, Debug, PartialEq)]
pub struct HookProducts {
    /// `H*_λ`, product of upper hooks.
    pub upper: Poly,
    /// `H^λ_*`, product of lower hooks.
    pub lower: Poly,
    /// `j_λ = H*_λ H^λ_*`.
    pub j: Poly,
    /// `b_λ = H^λ_* / H*_λ`.
    pub b: RF,
}

pub fn hook_products(lambda: &Partition) -> HookProducts {
    let mut upper = Poly::one();
    let mut lower = Poly::one();
    for c in lambda.cells() {
        let (a, l, _) = lambda.arm_leg_unchecked(c);
        upper = &upper * &lin(l, a + 1);
        lower = &lower * &lin(l + 1, a);
    }
    let b = RatFunc1::new(lower.clone(), upper.clone()).expect("nonzero hook product");
    HookProducts {
        j: &upper * &lower,
        upper,
        lower,
        b,
    }
}

/// Image of `D(α)` on a symmetric polynomial: the second-order part plus,
/// for each pair `i < j`, `(x_i²∂_i f − x_j²∂_j f)/(x_i − x_j)` divided
/// exactly.
pub fn apply_d_alpha<C: AlphaCoeff>(f: &MonomialPoly<C>) -> Result<MonomialPoly<C>> {
    if !f.is_symmetric() {
        return Err(CoreError::Asymmetric);
    }
    let n = f.nvars();
    let alpha = C::alpha();
    let mut out = MonomialPoly::zero(n);
    for (e, c) in f.terms() {
        let k: u64 = e
            .iter()
            .map(|&a| a as u64 * (a as u64).saturating_sub(1) / 2)
            .sum();
        if k > 0 {
            out.add_term(
                e.clone(),
                &c.mul(&alpha).scale(&BigRational::from_integer(k.into())),
            );
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut num = MonomialPoly::zero(n);
            for (e, c) in f.terms() {
                for (v, sign) in [(i, 1i64), (j, -1)] {
                    if e[v] > 0 {
                        let mut s = e.clone();
                        s[v] += 1;
                        num.add_term(
                            s,
                            &c.scale(&BigRational::from_integer((sign * e[v] as i64).into())),
                        );
                    }
                }
            }
            let q = num
                .div_by_difference(i, j)
                .map_err(|_| CoreError::Asymmetric)?;
            out = out.add(&q);
        }
    }
    debug_assert!(out.is_symmetric());
    Ok(out)
}

/// `D(α) m_ρ = e_ρ m_ρ + Σ_{κ<ρ} d(ρ→κ) m_κ`. Returns, for fixed `κ`,
/// every `ρ > κ` with `d(ρ→κ) ≠ 0`. The entries do not depend on the
/// number of variables.
pub fn d_matrix_into(kappa: &Partition) -> BTreeMap<Partition, i64> {
    let k = kappa.parts();
    let mut out = BTreeMap::new();
    for i in 0..k.len() {
        for j in i + 1..k.len() {
            let s = k[i] + k[j];
            for q in 0..k[i].min(k[j]) {
                let p = s - q;
                let mut v = k.to_vec();
                v[i] = p;
                v[j] = q;
                v.sort_unstable_by(|a, b| b.cmp(a));
                *out.entry(Partition::new(v).expect("sorted")).or_insert(0) += (p - q) as i64;
            }
        }
    }
    out
}

/// Diagonal entry `e_κ` of `D(α)` in `n` variables.
pub fn eigenvalue(kappa: &Partition, n: usize) -> Poly {
    let b2: u64 = kappa
        .parts()
        .iter()
        .map(|&a| a as u64 * (a as u64).saturating_sub(1) / 2)
        .sum();
    let c = (n as i64 - 1) * kappa.weight() as i64 - kappa.n_statistic() as i64;
    UniPoly::from_ints(&[c, b2 as i64])
}

/// `e_λ − e_κ`, independent of `n`.
fn eigen_gap(lambda: &Partition, kappa: &Partition) -> Poly {
    &eigenvalue(lambda, 1) - &eigenvalue(kappa, 1)
}

type Cache<V> = LazyLock<RwLock<HashMap<(Partition, usize), Arc<V>>>>;

static P_CACHE: Cache<Expansion<RF>> = LazyLock::new(Default::default);
static J_CACHE: Cache<Expansion<Poly>> = LazyLock::new(Default::default);

fn effective_n(lambda: &Partition, n: usize) -> Result<usize> {
    if lambda.len() > n {
        return Err(CoreError::TooManyParts(n));
    }
    Ok(n.min(lambda.weight() as usize).max(1))
}

fn solve_p(lambda: &Partition, n: usize) -> Result<Expansion<RF>> {
    let mut v: Expansion<RF> = BTreeMap::new();
    v.insert(lambda.clone(), RF::one());
    for kappa in partitions_of(lambda.weight(), n) {
        if kappa >= *lambda || !dominance_leq_same_weight(&kappa, lambda) {
            continue;
        }
        let mut acc = RF::zero();
        for (rho, d) in d_matrix_into(&kappa) {
            if let Some(x) = v.get(&rho) {
                acc = &acc + &x.scale(&BigRational::from_integer(d.into()));
            }
        }
        let gap = eigen_gap(lambda, &kappa);
        if gap.is_zero() {
            return Err(CoreError::EigenvalueCollision(
                format!("{lambda:?}"),
                format!("{kappa:?}"),
            ));
        }
        if !acc.is_zero() {
            v.insert(kappa, acc.checked_div(&RF::from_poly(gap))?);
        }
    }
    Ok(v)
}

fn p_expansion(lambda: &Partition, n: usize) -> Result<Arc<Expansion<RF>>> {
    let n = effective_n(lambda, n)?;
    let key = (lambda.clone(), n);
    if let Some(v) = P_CACHE.read().get(&key) {
        return Ok(v.clone());
    }
    let v = match cache::load_jack(lambda, n) {
        Some(v) => v,
        None => {
            let v = solve_p(lambda, n)?;
            cache::store_jack(lambda, n, &v);
            v
        }
    };
    let v = Arc::new(v);
    P_CACHE.write().entry(key).or_insert_with(|| v.clone());
    Ok(v)
}

/// m-expansion of `P_λ` in `n` variables.
pub fn jack_p(lambda: &Partition, n: usize) -> Result<SymExpansion> {
    let v = p_expansion(lambda, n)?;
    Ok(SymExpansion::from_terms(Basis::M, (*v).clone()))
}

fn j_expansion(lambda: &Partition, n: usize) -> Result<Arc<Expansion<Poly>>> {
    let n = effective_n(lambda, n)?;
    let key = (lambda.clone(), n);
    if let Some(v) = J_CACHE.read().get(&key) {
        return Ok(v.clone());
    }
    let p = p_expansion(lambda, n)?;
    let norm = RF::from_poly(hook_products(lambda).lower);
    let mut out = BTreeMap::new();
    for (k, c) in p.iter() {
        let x = c * &norm;
        let poly = x.as_poly().ok_or(CoreError::NotPolynomial)?.clone();
        out.insert(k.clone(), poly);
    }
    let v = Arc::new(out);
    J_CACHE.write().entry(key).or_insert_with(|| v.clone());
    Ok(v)
}

/// m-expansion of `J_λ = H^λ_* P_λ`.
pub fn jack_j(lambda: &Partition, n: usize) -> Result<SymExpansion> {
    let v = j_expansion(lambda, n)?;
    let mut s = SymExpansion::new(Basis::M);
    for (k, c) in v.iter() {
        s.insert(k.clone(), RF::from_poly(c.clone()));
    }
    Ok(s)
}

pub struct JackFamily;

impl Family for JackFamily {
    type Ring = Poly;
    type Field = RF;

    fn integral(&self, lambda: &Partition, n: usize) -> Result<Arc<Expansion<Poly>>> {
        j_expansion(lambda, n)
    }

    fn norm(&self, lambda: &Partition) -> Poly {
        hook_products(lambda).lower
    }

    fn lift(&self, r: &Poly) -> RF {
        RF::from_poly(r.clone())
    }
}

type PairKey = (Partition, Partition, usize);
static PRODUCT_CACHE: LazyLock<RwLock<HashMap<PairKey, Arc<Expansion<RF>>>>> =
    LazyLock::new(Default::default);

fn product_expansion(mu: &Partition, nu: &Partition, n: usize) -> Result<Arc<Expansion<RF>>> {
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let n = n.min((a.weight() + b.weight()) as usize).max(1);
    let key = (a.clone(), b.clone(), n);
    if let Some(v) = PRODUCT_CACHE.read().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(structure_constants(&JackFamily, a, b, n)?);
    PRODUCT_CACHE
        .write()
        .entry(key)
        .or_insert_with(|| v.clone());
    Ok(v)
}

/// `P_μ P_ν = Σ c^λ_{μν}(α) P_λ` over `λ` with at most `n` parts.
pub fn product_coeffs(mu: &Partition, nu: &Partition, n: usize) -> Result<SymExpansion> {
    let v = product_expansion(mu, nu, n)?;
    Ok(SymExpansion::from_terms(Basis::P, (*v).clone()))
}

/// The same expansion by multiplying `P_μ P_ν` as polynomials in `n`
/// variables and stripping the lex-largest `m_λ` repeatedly.
pub fn product_coeffs_by_monomials(
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<SymExpansion> {
    let pm = MonomialPoly::from_m_expansion(&jack_p(mu, n)?, n);
    let pn = MonomialPoly::from_m_expansion(&jack_p(nu, n)?, n);
    let mut rem = pm.mul(&pn).to_m_expansion()?;
    let mut out = SymExpansion::new(Basis::P);
    let bound = partitions_of(mu.weight() + nu.weight(), n).len();
    for _ in 0..=bound {
        let Some((lambda, c)) = rem.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return Ok(out);
        };
        for (k, v) in jack_p(&lambda, n)?.iter() {
            rem.insert(k.clone(), -(&c * v));
        }
        out.insert(lambda, c);
    }
    Err(CoreError::NonTermination)
}

/// `c^λ_{μν}(α)`, computed with `ℓ(λ)` variables.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<RF> {
    lr_coeff_n(lambda, mu, nu, lambda.len().max(1))
}

/// `c^λ_{μν}(α)` read from the product in `n ≥ ℓ(λ)` variables.
pub fn lr_coeff_n(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<RF> {
    if lambda.len() > n {
        return Err(CoreError::TooManyParts(n));
    }
    if lambda.weight() != mu.weight() + nu.weight()
        || !mu.is_contained_in(lambda)
        || !nu.is_contained_in(lambda)
    {
        return Ok(RF::zero());
    }
    Ok(product_expansion(mu, nu, n)?
        .get(lambda)
        .cloned()
        .unwrap_or_else(RF::zero))
}

/// Column Pieri coefficient for a vertical `r`-strip `λ/μ` and `ν = (1^r)`.
pub fn pieri_c(lambda: &Partition, mu: &Partition) -> Result<RF> {
    if !mu.is_contained_in(lambda) || !is_vertical_strip(lambda, mu) {
        return Err(CoreError::NotVerticalStrip);
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut out = RF::one();
    for c in mu.cells() {
        let (i, j) = (c.row as usize, c.col as usize);
        if mu.part(i) == lambda.part(i) && mc.part(j) < lc.part(j) {
            let num = &lower_hook(lambda, c)? * &upper_hook(mu, c)?;
            let den = &upper_hook(lambda, c)? * &lower_hook(mu, c)?;
            out = &out * &RF::new(num, den)?;
        }
    }
    Ok(out)
}

/// `f(α) ↦ f(1/α)`.
pub fn invert_alpha(f: &RF) -> RF {
    r_to_alpha(&f.rename::<R>())
}

/// The transpose relation
/// `c^{λ'}_{μ'ν'}(1/α) = c^λ_{μν}(α) b_μ(α) b_ν(α) / b_λ(α)`:
/// returns the right side evaluated at `1/α`, which is `c^{λ'}_{μ'ν'}(α)`.
pub fn transpose_coeff(lambda: &Partition, mu: &Partition, nu: &Partition, c: &RF) -> Result<RF> {
    let b = |p: &Partition| hook_products(p).b;
    let rhs = (c * &b(mu)) * b(nu);
    Ok(invert_alpha(&rhs.checked_div(&b(lambda))?))
}

/// Row Pieri coefficient for a horizontal strip `λ/μ` and `ν = (r)`, from
/// the column rule on the conjugates.
pub fn pieri_row_c(lambda: &Partition, mu: &Partition) -> Result<RF> {
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    let r = lambda.weight() - mu.weight();
    let col = pieri_c(&lc, &mc).map_err(|_| CoreError::NotHorizontalStrip)?;
    transpose_coeff(&lc, &mc, &Partition::of(&vec![1; r as usize]), &col)
}

/// Checks the transpose relation between `(λ,μ,ν)` and the conjugates
/// with the oracle on both sides.
pub fn transpose_check(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    let c = lr_coeff(lambda, mu, nu)?;
    let ct = lr_coeff(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())?;
    Ok(transpose_coeff(lambda, mu, nu, &c)? == ct)
}

/// `g^λ_{μν} = H*_λ H^μ_* H^ν_* c^λ_{μν}`, which must be a polynomial.
pub fn g_from_c(lambda: &Partition, mu: &Partition, nu: &Partition, c: &RF) -> Result<Poly> {
    let k = &(&hook_products(lambda).upper * &hook_products(mu).lower) * &hook_products(nu).lower;
    let g = c * &RF::from_poly(k);
    g.as_poly().cloned().ok_or(CoreError::NotPolynomial)
}

pub fn g_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Poly> {
    g_from_c(lambda, mu, nu, &lr_coeff(lambda, mu, nu)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use jlk_algebra::int;

    fn p(v: &[u32]) -> Partition {
        Partition::of(v)
    }

    fn rf(n: &[i64], d: &[i64]) -> RF {
        RF::new(UniPoly::from_ints(n), UniPoly::from_ints(d)).unwrap()
    }

    #[test]
    fn hook_examples() {
        let h = hook_products(&p(&[1]));
        assert_eq!(
            (h.upper, h.lower.clone(), h.j),
            (
                UniPoly::from_ints(&[0, 1]),
                Poly::one(),
                UniPoly::from_ints(&[0, 1])
            )
        );
        let h = hook_products(&p(&[1, 1]));
        assert_eq!(h.lower, UniPoly::from_ints(&[2]));
        assert_eq!(h.upper, UniPoly::from_ints(&[0, 1, 1]));
        // at α = 1 both products are the classical hook product
        let h = hook_products(&p(&[3, 2]));
        assert_eq!(h.upper.eval(&int(1)), int(24));
        assert_eq!(h.lower.eval(&int(1)), int(24));
    }

    #[test]
    fn d_alpha_examples() {
        type M = MonomialPoly<Poly>;
        assert!(apply_d_alpha(&M::m(&p(&[1]), 1).unwrap())
            .unwrap()
            .is_zero());
        let x2 = M::m(&p(&[2]), 1).unwrap();
        assert_eq!(apply_d_alpha(&x2).unwrap(), x2.scale(&Poly::var()));
        let x1x2 = M::m(&p(&[1, 1]), 2).unwrap();
        assert_eq!(apply_d_alpha(&x1x2).unwrap(), x1x2);
        let mut bad = M::zero(2);
        bad.add_term(vec![2, 0], &Poly::one());
        assert_eq!(apply_d_alpha(&bad).unwrap_err(), CoreError::Asymmetric);
    }

    #[test]
    fn small_jacks() {
        let p2 = jack_p(&p(&[2]), 2).unwrap();
        assert_eq!(p2.coeff(&p(&[2])), RF::one());
        assert_eq!(p2.coeff(&p(&[1, 1])), rf(&[2], &[1, 1]));
        let p111 = jack_p(&p(&[1, 1, 1]), 3).unwrap();
        assert_eq!(p111.len(), 1);
        for lambda in partitions_of(4, 4) {
            let j = jack_j(&lambda, 4).unwrap();
            assert_eq!(j.coeff(&p(&[1, 1, 1, 1])), RF::from_int(24));
        }
    }

    #[test]
    fn known_coefficients() {
        let c = lr_coeff(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(c, rf(&[0, 2], &[1, 1]));
        let c = lr_coeff(&p(&[3, 3, 1, 1]), &p(&[3, 2, 1]), &p(&[2])).unwrap();
        let den = &UniPoly::from_ints(&[3]) * &UniPoly::from_ints(&[1, 1]).pow(4);
        assert_eq!(
            c,
            RF::new(UniPoly::from_ints(&[0, 0, 16, 32]), den).unwrap()
        );
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri_c(&p(&[4, 2, 2]), &p(&[3, 2, 1])).unwrap(),
            rf(&[0, 2], &[1, 1])
        );
        assert_eq!(
            pieri_row_c(&p(&[3, 3, 1, 1]), &p(&[3, 2, 1])).unwrap(),
            lr_coeff(&p(&[3, 3, 1, 1]), &p(&[3, 2, 1]), &p(&[2])).unwrap()
        );
        assert_eq!(
            pieri_c(&p(&[1, 1]), &p(&[1])).unwrap(),
            lr_coeff(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap()
        );
        assert_eq!(
            pieri_c(&p(&[3]), &p(&[1])).unwrap_err(),
            CoreError::NotVerticalStrip
        );
    }
}
