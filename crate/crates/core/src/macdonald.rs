//! Macdonald polynomials `P_λ(q,t)` as triangular eigenfunctions of
//! `D(q,t)`, their structure constants, and the `(q,t)` version of the
//! division-number formula.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock};

use jlk_algebra::{limit_t_to_1, BiPoly, BigRational, Coeff, RatFunc2};
use parking_lot::RwLock;

use crate::error::{CoreError, Result};
use crate::horn::classify_cases;
use crate::monomial::{Basis, MonomialPoly, SymExpansion};
use crate::partition::{dominance_leq_same_weight, partitions_of, Cell, Partition};
use crate::product::{structure_constants, Expansion, Family};
use crate::stanley::{
    division_numbers, Convention, DivisionNumbers, Hook, HookAssignment, Reading,
};
use crate::tableau::lr_count;

pub type QT = RatFunc2;

/// The two `(q,t)`-hooks of a box and their normalized forms.
#[derive(Clone, Debug, PartialEq)]
pub struct QTHooks {
    /// `1 − q^{a+1} t^ℓ`
    pub upper: BiPoly,
    /// `1 − q^a t^{ℓ+1}`
    pub lower: BiPoly,
    /// `upper / (q^a t^ℓ)`
    pub hat_upper: QT,
    /// `lower / (q^a t^ℓ)`
    pub hat_lower: QT,
}

pub fn qt_hooks(lambda: &Partition, c: Cell) -> Result<QTHooks> {
    let (a, l, _) = lambda.arm_leg_hook(c)?;
    let upper = BiPoly::one_minus(a + 1, l);
    let lower = BiPoly::one_minus(a, l + 1);
    let mono = BiPoly::monomial(BigRational::from_integer(1.into()), a, l);
    Ok(QTHooks {
        hat_upper: QT::new(upper.clone(), mono.clone())?,
        hat_lower: QT::new(lower.clone(), mono)?,
        upper,
        lower,
    })
}

/// `(H*_λ, H^λ_*)` over `(q,t)`.
pub fn qt_hook_products(lambda: &Partition) -> (BiPoly, BiPoly) {
    let mut up = BiPoly::one();
    let mut low = BiPoly::one();
    for c in lambda.cells() {
        let h = qt_hooks(lambda, c).expect("cell of its own diagram");
        up = &up * &h.upper;
        low = &low * &h.lower;
    }
    (up, low)
}

/// `b_λ(q,t) = H^λ_* / H*_λ`.
pub fn qt_b(lambda: &Partition) -> QT {
    let (up, low) = qt_hook_products(lambda);
    QT::new(low, up).expect("nonzero hook product")
}

fn vandermonde_without(n: usize, skip: usize) -> MonomialPoly<BiPoly> {
    let mut v = MonomialPoly::zero(n);
    v.add_term(vec![0; n], &BiPoly::one());
    for a in (0..n).filter(|&a| a != skip) {
        for b in (a + 1..n).filter(|&b| b != skip) {
            v = v.mul(&difference(n, a, b, &BiPoly::one()));
        }
    }
    v
}

/// `k·x_a − x_b`.
fn difference(n: usize, a: usize, b: usize, k: &BiPoly) -> MonomialPoly<BiPoly> {
    let mut p = MonomialPoly::zero(n);
    let mut ea = vec![0; n];
    ea[a] = 1;
    let mut eb = vec![0; n];
    eb[b] = 1;
    p.add_term(ea, k);
    p.add_term(eb, &BiPoly::one().neg());
    p
}

/// `D(q,t) f = Σ_i ∏_{j≠i} (t x_i − x_j)/(x_i − x_j) · T_{q,i} f`, computed
/// over the common denominator `∏_{i<j} (x_i − x_j)` and divided exactly.
pub fn apply_d_qt(f: &MonomialPoly<BiPoly>) -> Result<MonomialPoly<BiPoly>> {
    if !f.is_symmetric() {
        return Err(CoreError::Asymmetric);
    }
    let n = f.nvars();
    let t = BiPoly::t();
    let mut num = MonomialPoly::zero(n);
    for i in 0..n {
        let mut shifted = MonomialPoly::zero(n);
        for (e, c) in f.terms() {
            shifted.add_term(
                e.clone(),
                &c.mul(&BiPoly::monomial(
                    BigRational::from_integer(1.into()),
                    e[i],
                    0,
                )),
            );
        }
        let mut a = vandermonde_without(n, i);
        if i % 2 == 1 {
            a = a.scale(&BiPoly::one().neg());
        }
        for j in (0..n).filter(|&j| j != i) {
            a = a.mul(&difference(n, i, j, &t));
        }
        num = num.add(&a.mul(&shifted));
    }
    for a in 0..n {
        for b in a + 1..n {
            num = num
                .div_by_difference(a, b)
                .map_err(|_| CoreError::NotPolynomialImage)?;
        }
    }
    if !num.is_symmetric() {
        return Err(CoreError::NotPolynomialImage);
    }
    Ok(num)
}

/// `e_κ = Σ_i q^{κ_i} t^{n−i}`.
pub fn eigenvalue_qt(kappa: &Partition, n: usize) -> BiPoly {
    let one = BigRational::from_integer(1.into());
    let mut e = BiPoly::zero();
    for (i, k) in kappa.padded(n).into_iter().enumerate() {
        e = &e + &BiPoly::monomial(one.clone(), k, (n - 1 - i) as u32);
    }
    e
}

type Cache<V> = LazyLock<RwLock<HashMap<(Partition, usize), Arc<V>>>>;

static D_ROWS: Cache<Expansion<BiPoly>> = LazyLock::new(Default::default);
static P_CACHE: Cache<Expansion<QT>> = LazyLock::new(Default::default);

/// `D(q,t) m_κ` in the monomial basis, `n` variables.
fn d_image(kappa: &Partition, n: usize) -> Result<Arc<Expansion<BiPoly>>> {
    let key = (kappa.clone(), n);
    if let Some(v) = D_ROWS.read().get(&key) {
        return Ok(v.clone());
    }
    let image = apply_d_qt(&MonomialPoly::m(kappa, n)?)?.to_m_expansion()?;
    let v = Arc::new(image.terms().clone());
    D_ROWS.write().entry(key).or_insert_with(|| v.clone());
    Ok(v)
}

fn solve_p(lambda: &Partition, n: usize) -> Result<Expansion<QT>> {
    let mut v: Expansion<QT> = BTreeMap::new();
    v.insert(lambda.clone(), QT::one());
    let e_lambda = eigenvalue_qt(lambda, n);
    let below: Vec<Partition> = partitions_of(lambda.weight(), n)
        .into_iter()
        .filter(|k| dominance_leq_same_weight(k, lambda))
        .collect();
    // rows of D restricted to the dominance interval, keyed by target
    let mut into: BTreeMap<Partition, Vec<(Partition, BiPoly)>> = BTreeMap::new();
    for rho in &below {
        for (kappa, c) in d_image(rho, n)?.iter() {
            if kappa != rho {
                into.entry(kappa.clone())
                    .or_default()
                    .push((rho.clone(), c.clone()));
            }
        }
    }
    for kappa in &below {
        if kappa == lambda {
            continue;
        }
        let mut acc = QT::zero();
        for (rho, c) in into.get(kappa).map(Vec::as_slice).unwrap_or(&[]) {
            if let Some(x) = v.get(rho) {
                acc = &acc + &(x * &QT::from_poly(c.clone()));
            }
        }
        if acc.is_zero() {
            continue;
        }
        let gap = &e_lambda - &eigenvalue_qt(kappa, n);
        if gap.is_zero() {
            return Err(CoreError::EigenvalueCollision(
                format!("{lambda:?}"),
                format!("{kappa:?}"),
            ));
        }
        v.insert(kappa.clone(), acc.checked_div(&QT::from_poly(gap))?);
    }
    Ok(v)
}

fn p_expansion(lambda: &Partition, n: usize) -> Result<Arc<Expansion<QT>>> {
    if lambda.len() > n {
        return Err(CoreError::TooManyParts(n));
    }
    let n = n.max(1);
    let key = (lambda.clone(), n);
    if let Some(v) = P_CACHE.read().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(solve_p(lambda, n)?);
    P_CACHE.write().entry(key).or_insert_with(|| v.clone());
    Ok(v)
}

/// m-expansion of `P_λ(q,t)` in `n` variables.
pub fn macdonald_p(lambda: &Partition, n: usize) -> Result<SymExpansion<QT>> {
    Ok(SymExpansion::from_terms(
        Basis::M,
        (*p_expansion(lambda, n)?).clone(),
    ))
}

/// Structure constants over the `P` basis itself, with unit norms.
pub struct MacdonaldFamily;

impl Family for MacdonaldFamily {
    type Ring = QT;
    type Field = QT;

    fn integral(&self, lambda: &Partition, n: usize) -> Result<Arc<Expansion<QT>>> {
        p_expansion(lambda, n)
    }

    fn norm(&self, _: &Partition) -> QT {
        QT::one()
    }

    fn lift(&self, r: &QT) -> QT {
        r.clone()
    }
}

type PairKey = (Partition, Partition, usize);
static PRODUCT_CACHE: LazyLock<RwLock<HashMap<PairKey, Arc<Expansion<QT>>>>> =
    LazyLock::new(Default::default);

fn product_expansion(mu: &Partition, nu: &Partition, n: usize) -> Result<Arc<Expansion<QT>>> {
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (a.clone(), b.clone(), n);
    if let Some(v) = PRODUCT_CACHE.read().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(structure_constants(&MacdonaldFamily, a, b, n)?);
    PRODUCT_CACHE
        .write()
        .entry(key)
        .or_insert_with(|| v.clone());
    Ok(v)
}

/// `P_μ P_ν = Σ c^λ_{μν}(q,t) P_λ` over `λ` with at most `n` parts.
pub fn product_coeffs_qt(mu: &Partition, nu: &Partition, n: usize) -> Result<SymExpansion<QT>> {
    Ok(SymExpansion::from_terms(
        Basis::P,
        (*product_expansion(mu, nu, n)?).clone(),
    ))
}

/// `c^λ_{μν}(q,t)` with `n ≥ ℓ(λ)` variables.
pub fn lr_coeff_qt(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<QT> {
    if lambda.len() > n {
        return Err(CoreError::TooManyParts(n));
    }
    if lambda.weight() != mu.weight() + nu.weight()
        || !mu.is_contained_in(lambda)
        || !nu.is_contained_in(lambda)
    {
        return Ok(QT::zero());
    }
    Ok(product_expansion(mu, nu, n)?
        .get(lambda)
        .cloned()
        .unwrap_or_else(QT::zero))
}

fn t_minus_q() -> QT {
    QT::from_poly(&BiPoly::t() - &BiPoly::q())
}

fn phi1(x: &QT, b: &QT) -> Result<QT> {
    Ok((b - x).checked_div(b)?)
}

/// Product over flipped boxes of `φ(t−q; ĥ*)` in `λ` and `φ(t−q; −ĥ_*)` in
/// `μ`, `ν`.
pub fn evaluate_d_qt_boxes(a: &HookAssignment) -> Result<QT> {
    let x = t_minus_q();
    let mut acc = QT::one();
    for c in a.lambda.shape.cells() {
        if a.lambda.get(c) == Hook::Lower {
            acc = &acc * &phi1(&x, &qt_hooks(&a.lambda.shape, c)?.hat_upper)?;
        }
    }
    for grid in [&a.mu, &a.nu] {
        for c in grid.shape.cells() {
            if grid.get(c) == Hook::Upper {
                acc = &acc * &phi1(&x, &(-&qt_hooks(&grid.shape, c)?.hat_lower))?;
            }
        }
    }
    Ok(acc)
}

/// The same product as plain hook ratios `h_*/h*` and `h*/h_*`.
pub fn evaluate_d_qt_ratios(a: &HookAssignment) -> Result<QT> {
    let mut num = BiPoly::one();
    let mut den = BiPoly::one();
    for c in a.lambda.shape.cells() {
        if a.lambda.get(c) == Hook::Lower {
            let h = qt_hooks(&a.lambda.shape, c)?;
            num = &num * &h.lower;
            den = &den * &h.upper;
        }
    }
    for grid in [&a.mu, &a.nu] {
        for c in grid.shape.cells() {
            if grid.get(c) == Hook::Upper {
                let h = qt_hooks(&grid.shape, c)?;
                num = &num * &h.upper;
                den = &den * &h.lower;
            }
        }
    }
    Ok(QT::new(num, den)?)
}

pub fn evaluate_d_qt(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    dn: &DivisionNumbers,
) -> Result<QT> {
    let a = HookAssignment::from_division_numbers(lambda, mu, nu, dn)?;
    let x = evaluate_d_qt_boxes(&a)?;
    if x != evaluate_d_qt_ratios(&a)? {
        return Err(CoreError::PathDisagreement);
    }
    Ok(x)
}

/// `f(q,t) ↦ f(t,q)` applied to `c^λ_{μν} b_μ b_ν / b_λ`; equals
/// `c^{λ'}_{μ'ν'}(q,t)`.
pub fn transpose_coeff_qt(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    c: &QT,
) -> Result<QT> {
    let rhs = &(&(c * &qt_b(mu)) * &qt_b(nu)) / &qt_b(lambda);
    Ok(rhs.swap_qt())
}

/// `c` at `q = t`, which must be a constant.
pub fn at_q_equals_t(c: &QT) -> Result<BigRational> {
    let f = c.q_to_t_pow(1)?;
    let one = BigRational::from_integer(1.into());
    // a constant rational function evaluates the same everywhere
    let v = f.eval(&one)?;
    if f != jlk_algebra::RatFunc1::constant(v.clone()) {
        return Err(CoreError::InvalidArgument(format!(
            "{c} is not constant at q = t"
        )));
    }
    Ok(v)
}

/// `lim_{t→1} c(t^α, t)`.
pub fn jack_limit(c: &QT, alpha: u32) -> Result<BigRational> {
    Ok(limit_t_to_1(&c.q_to_t_pow(alpha)?)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleReportQT {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub minimal: bool,
    pub case: Option<u8>,
    pub division_numbers: Option<DivisionNumbers>,
    pub d: Option<QT>,
    pub c_oracle: QT,
    pub match_c: bool,
    /// `None` when the conjugates leave four rows.
    pub transpose_ok: Option<bool>,
    pub error: Option<CoreError>,
}

pub fn verify_triple_qt(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<TripleReportQT> {
    verify_triple_qt_with(lambda, mu, nu, Convention::Minus, false)
}

/// With `transpose`, also checks the `(t,q)` duality against the oracle on
/// the conjugate triple (at most four rows).
pub fn verify_triple_qt_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    reading: impl Into<Reading>,
    transpose: bool,
) -> Result<TripleReportQT> {
    if lambda.len() > 3 || mu.len() > 3 || nu.len() > 3 {
        return Err(CoreError::OutsideP3);
    }
    let c_oracle = lr_coeff_qt(lambda, mu, nu, 3)?;
    let minimal = lr_count(lambda, mu, nu) == 1;
    let mut r = TripleReportQT {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        minimal,
        case: None,
        division_numbers: None,
        d: None,
        c_oracle,
        match_c: false,
        transpose_ok: None,
        error: None,
    };
    if transpose {
        let (lc, mc, nc) = (lambda.conjugate(), mu.conjugate(), nu.conjugate());
        if lc.len() <= 4 {
            let ct = lr_coeff_qt(&lc, &mc, &nc, 4)?;
            r.transpose_ok = Some(transpose_coeff_qt(lambda, mu, nu, &r.c_oracle)? == ct);
        }
    }
    if !minimal {
        return Ok(r);
    }
    let case = classify_cases(lambda, mu, nu)?[0];
    r.case = Some(case);
    let out = division_numbers(lambda, mu, nu, case, reading)
        .and_then(|dn| evaluate_d_qt(lambda, mu, nu, &dn).map(|d| (dn, d)));
    match out {
        Ok((dn, d)) => {
            r.match_c = d == r.c_oracle;
            r.division_numbers = Some(dn);
            r.d = Some(d);
        }
        Err(e) => r.error = Some(e),
    }
    Ok(r)
}
