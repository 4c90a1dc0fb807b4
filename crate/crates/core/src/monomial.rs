//! Polynomials in finitely many variables and symmetric-function expansions.

use std::collections::BTreeMap;
use std::fmt;

use jlk_algebra::{Alpha, Coeff, RatFunc1};

use crate::error::{CoreError, Result};
use crate::partition::Partition;
use crate::tableau::ssyt;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq)]
pub struct MonomialPoly<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

/// Distinct rearrangements of `v`.
pub fn orbit(v: &[u32]) -> Vec<Exponent> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation until exhausted
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

fn sorted_desc(e: &[u32]) -> Partition {
    let mut v = e.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).expect("sorted")
}

impl<C: Coeff> MonomialPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: &C) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// `m_λ` in `nvars` variables.
    pub fn m(lambda: &Partition, nvars: usize) -> Result<Self> {
        if lambda.len() > nvars {
            return Err(CoreError::TooManyParts(nvars));
        }
        let mut p = Self::zero(nvars);
        for e in orbit(&lambda.padded(nvars)) {
            p.terms.insert(e, C::one());
        }
        Ok(p)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &c.neg());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, &x.mul(y));
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.mul(k));
        }
        out
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (0..self.nvars.saturating_sub(1)).all(|i| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }

    /// Sets the last variable to zero.
    pub fn drop_last_var(&self) -> Self {
        let mut out = Self::zero(self.nvars.saturating_sub(1));
        for (e, c) in &self.terms {
            if e.last() == Some(&0) {
                out.terms.insert(e[..e.len() - 1].to_vec(), c.clone());
            }
        }
        out
    }

    /// Exact quotient by `x_i − x_j`.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        assert!(i != j);
        // group by the other exponents and total degree in x_i, x_j; each
        // group is a binary form c_p u^p v^{d−p}
        let mut groups: BTreeMap<(Exponent, u32), BTreeMap<u32, C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            rest[j] = 0;
            groups
                .entry((rest, e[i] + e[j]))
                .or_default()
                .insert(e[i], c.clone());
        }
        let mut out = Self::zero(self.nvars);
        for ((rest, d), form) in groups {
            if d == 0 {
                return Err(CoreError::Algebra(jlk_algebra::AlgebraError::NotExact));
            }
            let c = |p: u32| form.get(&p).cloned().unwrap_or_else(C::zero);
            // q_{d−1} = c_d, q_{p−1} = c_p + q_p, and c_0 = −q_0
            let mut q = c(d);
            for p in (0..d).rev() {
                let mut e = rest.clone();
                e[i] = p;
                e[j] = d - 1 - p;
                out.add_term(e, &q);
                if p > 0 {
                    q = c(p).add(&q);
                }
            }
            if !c(0).add(&q).is_zero() {
                return Err(CoreError::Algebra(jlk_algebra::AlgebraError::NotExact));
            }
        }
        Ok(out)
    }

    /// Coefficients of the monomial basis, read at decreasing exponents.
    pub fn to_m_expansion(&self) -> Result<SymExpansion<C>> {
        if !self.is_symmetric() {
            return Err(CoreError::Asymmetric);
        }
        let mut out = SymExpansion::new(Basis::M);
        for (e, c) in &self.terms {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.insert(sorted_desc(e), c.clone());
            }
        }
        Ok(out)
    }

    /// Expands an m-basis expansion into monomials, dropping `m_κ` with more
    /// than `nvars` parts.
    pub fn from_m_expansion(s: &SymExpansion<C>, nvars: usize) -> Self {
        assert_eq!(s.basis, Basis::M);
        let mut p = Self::zero(nvars);
        for (k, c) in &s.terms {
            if k.len() <= nvars {
                for e in orbit(&k.padded(nvars)) {
                    p.add_term(e, c);
                }
            }
        }
        p
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MonomialPoly<D> {
        let mut out = MonomialPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &f(c));
        }
        out
    }
}

impl<C: Coeff> fmt::Debug for MonomialPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| format!("({c})x^{e:?}"))
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

/// `m_λ` with coefficient 1 per distinct rearrangement.
pub fn m_poly(lambda: &Partition, n: usize) -> Result<MonomialPoly<RatFunc1<Alpha>>> {
    MonomialPoly::m(lambda, n)
}

/// `s_λ` as the tableau sum.
pub fn schur_poly<C: Coeff>(lambda: &Partition, n: usize) -> MonomialPoly<C> {
    let mut p = MonomialPoly::zero(n);
    for t in ssyt(lambda, n as u32) {
        let mut e = vec![0u32; n];
        for &v in t.iter().flatten() {
            e[v as usize - 1] += 1;
        }
        p.add_term(e, &C::one());
    }
    p
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    M,
    P,
    J,
}

/// A symmetric function as coefficients over partitions in a named basis.
#[derive(Clone, PartialEq)]
pub struct SymExpansion<C = RatFunc1<Alpha>> {
    pub basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymExpansion<C> {
    pub fn new(basis: Basis) -> Self {
        SymExpansion {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(basis: Basis, terms: BTreeMap<Partition, C>) -> Self {
        let mut s = Self::new(basis);
        for (k, c) in terms {
            s.insert(k, c);
        }
        s
    }

    /// Adds to the existing coefficient.
    pub fn insert(&mut self, k: Partition, c: C) {
        if let Some(w) = self.weight() {
            assert_eq!(w, k.weight(), "mixed weights in expansion");
        }
        let v = match self.terms.remove(&k) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(k, v);
        }
    }

    pub fn get(&self, k: &Partition) -> Option<&C> {
        self.terms.get(k)
    }

    pub fn coeff(&self, k: &Partition) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight(&self) -> Option<u32> {
        self.terms.keys().next().map(Partition::weight)
    }

    /// Drops every partition with more than `n` parts.
    pub fn truncate(&self, n: usize) -> Self {
        SymExpansion {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.len() <= n)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymExpansion<D> {
        let mut out = SymExpansion::new(self.basis);
        for (k, c) in &self.terms {
            out.insert(k.clone(), f(c));
        }
        out
    }
}

impl<C: Coeff> fmt::Debug for SymExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = match self.basis {
            Basis::M => "m",
            Basis::P => "P",
            Basis::J => "J",
        };
        let s: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| format!("({c}){b}_{k:?}"))
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jlk_algebra::BigRational;

    type M = MonomialPoly<BigRational>;

    #[test]
    fn orbit_sizes() {
        assert_eq!(M::m(&Partition::of(&[1, 1]), 2).unwrap().len(), 1);
        assert_eq!(M::m(&Partition::of(&[2, 1]), 3).unwrap().len(), 6);
        assert_eq!(M::m(&Partition::of(&[2, 2]), 3).unwrap().len(), 3);
        assert!(M::m(&Partition::of(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_examples() {
        let s: M = schur_poly(&Partition::of(&[2, 1]), 3);
        assert_eq!(s.len(), 7);
        assert_eq!(s.coeff(&[1, 1, 1]), jlk_algebra::int(2));
        assert_eq!(s.coeff(&[2, 1, 0]), jlk_algebra::int(1));
        let s: M = schur_poly(&Partition::of(&[1]), 1);
        assert_eq!(s.terms().keys().collect::<Vec<_>>(), vec![&vec![1]]);
        let s: M = schur_poly(&Partition::of(&[1, 1, 1]), 3);
        assert_eq!(s.terms().keys().collect::<Vec<_>>(), vec![&vec![1, 1, 1]]);
        assert!(s.is_symmetric());
    }

    #[test]
    fn exact_difference_division() {
        let x = M::m(&Partition::of(&[1]), 2).unwrap();
        // x1^3 − x2^3 over x1 − x2
        let mut f = M::zero(2);
        f.add_term(vec![3, 0], &jlk_algebra::int(1));
        f.add_term(vec![0, 3], &jlk_algebra::int(-1));
        let q = f.div_by_difference(0, 1).unwrap();
        assert_eq!(
            q,
            M::m(&Partition::of(&[2]), 2)
                .unwrap()
                .add(&M::m(&Partition::of(&[1, 1]), 2).unwrap())
        );
        assert!(x.div_by_difference(0, 1).is_err());
        let mut g = M::zero(2);
        g.add_term(vec![1, 0], &jlk_algebra::int(1));
        g.add_term(vec![0, 1], &jlk_algebra::int(-1));
        assert_eq!(
            g.div_by_difference(0, 1).unwrap().coeff(&[0, 0]),
            jlk_algebra::int(1)
        );
        assert_eq!(
            g.div_by_difference(1, 0).unwrap().coeff(&[0, 0]),
            jlk_algebra::int(-1)
        );
    }

    #[test]
    fn expansion_round_trip() {
        let s: M = schur_poly(&Partition::of(&[2, 1]), 3);
        let e = s.to_m_expansion().unwrap();
        assert_eq!(e.coeff(&Partition::of(&[1, 1, 1])), jlk_algebra::int(2));
        assert_eq!(M::from_m_expansion(&e, 3), s);
        let mut a = M::zero(2);
        a.add_term(vec![1, 0], &jlk_algebra::int(1));
        assert_eq!(a.to_m_expansion().unwrap_err(), CoreError::Asymmetric);
    }
}
