//! The Horn cone for three parts: the 18 facet inequalities, minimality and
//! the skew-filling classification of minimal triples.

use std::fmt;

use crate::error::{CoreError, Result};
use crate::partition::{partitions_of, Partition};
use crate::tableau::{lr_count_capped, lr_tableaux};

/// Linear form `Σ coeff · part` over `(λ1,λ2,λ3, μ1,μ2,μ3, ν1,ν2,ν3)`; the
/// inequality is `form ≥ 0`.
type Form = [i8; 9];

const L1: usize = 0;
const L2: usize = 1;
const L3: usize = 2;
const M1: usize = 3;
const M2: usize = 4;
const M3: usize = 5;
const N1: usize = 6;
const N2: usize = 7;
const N3: usize = 8;

const fn form(pos: &[usize], neg: &[usize]) -> Form {
    let mut f = [0i8; 9];
    let mut i = 0;
    while i < pos.len() {
        f[pos[i]] += 1;
        i += 1;
    }
    let mut i = 0;
    while i < neg.len() {
        f[neg[i]] -= 1;
        i += 1;
    }
    f
}

/// Inequality `k` (1-based) as `big − small ≥ 0`.
pub const INEQUALITIES: [Form; 18] = [
    form(&[M2], &[M3]),     // 1  μ3 ≤ μ2
    form(&[M1], &[M2]),     // 2  μ2 ≤ μ1
    form(&[N2], &[N3]),     // 3  ν3 ≤ ν2
    form(&[N1], &[N2]),     // 4  ν2 ≤ ν1
    form(&[L2], &[L3]),     // 5  λ3 ≤ λ2
    form(&[L1], &[L2]),     // 6  λ2 ≤ λ1
    form(&[M1, N1], &[L1]), // 7  λ1 ≤ μ1+ν1
    form(&[M1, N2], &[L2]), // 8  λ2 ≤ μ1+ν2
    form(&[M2, N1], &[L2]), // 9  λ2 ≤ μ2+ν1
    form(&[M1, N3], &[L3]), // 10 λ3 ≤ μ1+ν3
    form(&[M2, N2], &[L3]), // 11 λ3 ≤ μ2+ν2
    form(&[M3, N1], &[L3]), // 12 λ3 ≤ μ3+ν1
    form(&[L3], &[M3, N3]), // 13 λ3 ≥ μ3+ν3
    form(&[L2], &[M3, N2]), // 14 λ2 ≥ μ3+ν2
    form(&[L2], &[M2, N3]), // 15 λ2 ≥ μ2+ν3
    form(&[L1], &[M3, N1]), // 16 λ1 ≥ μ3+ν1
    form(&[L1], &[M2, N2]), // 17 λ1 ≥ μ2+ν2
    form(&[L1], &[M1, N3]), // 18 λ1 ≥ μ1+ν3
];

/// Image of each facet under exchanging `μ` and `ν`.
pub const SWAP_MU_NU: [u8; 18] = [
    3, 4, 1, 2, 5, 6, 7, 9, 8, 12, 11, 10, 13, 15, 14, 18, 17, 16,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSet {
    /// All 18 inequalities hold and `|λ| = |μ| + |ν|`.
    pub satisfied: bool,
    /// Facet numbers whose inequality holds with equality, ascending.
    pub equalities: Vec<u8>,
}

fn coords(l: &Partition, m: &Partition, n: &Partition) -> Result<[i64; 9]> {
    if l.len() > 3 || m.len() > 3 || n.len() > 3 {
        return Err(CoreError::OutsideP3);
    }
    let mut x = [0i64; 9];
    for i in 0..3 {
        x[i] = l.part(i + 1) as i64;
        x[3 + i] = m.part(i + 1) as i64;
        x[6 + i] = n.part(i + 1) as i64;
    }
    Ok(x)
}

pub fn horn_facets(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<FacetSet> {
    let x = coords(lambda, mu, nu)?;
    let mut satisfied = lambda.weight() == mu.weight() + nu.weight();
    let mut equalities = Vec::new();
    for (k, f) in INEQUALITIES.iter().enumerate() {
        let v: i64 = f.iter().zip(&x).map(|(&c, &p)| c as i64 * p).sum();
        if v < 0 {
            satisfied = false;
        } else if v == 0 {
            equalities.push(k as u8 + 1);
        }
    }
    Ok(FacetSet {
        satisfied,
        equalities,
    })
}

/// Minimality by counting LR tableaux.
pub fn is_minimal_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lr_count_capped(lambda, mu, nu, 2) == 1
}

/// Minimality by Horn facets: inside the cone and on at least one facet.
pub fn is_minimal_horn(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    let f = horn_facets(lambda, mu, nu)?;
    Ok(f.satisfied && !f.equalities.is_empty())
}

/// Facets through a minimal triple, ascending; the first is the canonical
/// division-number case.
pub fn classify_cases(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Vec<u8>> {
    let f = horn_facets(lambda, mu, nu)?;
    if !is_minimal_lr(lambda, mu, nu) || !f.satisfied || f.equalities.is_empty() {
        return Err(CoreError::NoCase);
    }
    Ok(f.equalities)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeLetter {
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeRoman {
    I,
    II,
    III,
    IV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overlap {
    G1G2,
    G1O2,
    O1G2,
    O1O2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillingProfile {
    pub a1: u32,
    pub b1: u32,
    pub b2: u32,
    pub c1: u32,
    pub c2: u32,
    pub o1: u32,
    pub o2: u32,
    pub g1: u32,
    pub g2: u32,
    /// Constant columns stripped from `μ` and `ν` before reading counts.
    pub mu3: u32,
    pub nu3: u32,
    pub letter: TypeLetter,
    pub roman: TypeRoman,
    pub overlap: Overlap,
}

/// Facet named by a cell of the classification table.
pub fn filling_facet(letter: TypeLetter, roman: TypeRoman, overlap: Overlap) -> u8 {
    use Overlap::*;
    let row: [u8; 4] = match (letter, roman) {
        (TypeLetter::B, TypeRoman::I) => [3, 11, 8, 16],
        (TypeLetter::B, TypeRoman::II) => [15, 5, 2, 10],
        (TypeLetter::B, TypeRoman::III) => [18, 18, 6, 6],
        (TypeLetter::B, TypeRoman::IV) => [12, 12, 17, 17],
        (TypeLetter::C, TypeRoman::I) => [13, 1, 13, 1],
        (TypeLetter::C, TypeRoman::II) => [7, 14, 7, 14],
        (TypeLetter::C, TypeRoman::III) => [9, 9, 9, 9],
        (TypeLetter::C, TypeRoman::IV) => [4, 4, 4, 4],
    };
    row[match overlap {
        G1G2 => 0,
        G1O2 => 1,
        O1G2 => 2,
        O1O2 => 3,
    }]
}

impl FillingProfile {
    pub fn filling_facet(&self) -> u8 {
        filling_facet(self.letter, self.roman, self.overlap)
    }

    /// The part equations of the classification, returning `(λ, μ, ν)`.
    pub fn reconstruct(&self) -> (Partition, Partition, Partition) {
        let s = self;
        let nu = [
            s.a1 + s.b1 + s.c1 + s.o1 + s.o2 + s.nu3,
            s.b2 + s.c2 + s.o1 + s.o2 + s.nu3,
            s.nu3,
        ];
        let mu = [
            s.b1 + s.b2 + s.g1 + s.o2 + s.c1 + s.c2 + s.g2 + s.mu3,
            s.c1 + s.c2 + s.g2 + s.mu3,
            s.mu3,
        ];
        let lambda = [
            s.b1 + s.b2 + s.g1 + s.o2 + s.c1 + s.c2 + s.g2 + s.a1 + s.o1 + s.mu3 + s.nu3,
            s.b1 + s.b2 + s.o2 + s.c1 + s.c2 + s.g2 + s.o1 + s.mu3 + s.nu3,
            s.o2 + s.c1 + s.c2 + s.mu3 + s.nu3,
        ];
        let mk = |v: [u32; 3]| Partition::new(v.to_vec()).expect("reconstructed parts decrease");
        (mk(lambda), mk(mu), mk(nu))
    }
}

impl fmt::Display for FillingProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ov = match self.overlap {
            Overlap::G1G2 => "g1g2",
            Overlap::G1O2 => "g1o2",
            Overlap::O1G2 => "o1g2",
            Overlap::O1O2 => "o1o2",
        };
        write!(f, "{:?}.{:?}.{}", self.letter, self.roman, ov)
    }
}

/// Reads the counts `a1, b1, b2, c1, c2, o, g` off the unique LR tableau
/// after stripping the forced `ν3` and then `μ3` columns.
pub fn classify_filling(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<FillingProfile> {
    if lambda.len() > 3 || mu.len() > 3 || nu.len() > 3 {
        return Err(CoreError::OutsideP3);
    }
    if !is_minimal_lr(lambda, mu, nu) {
        return Err(CoreError::NoCase);
    }
    let nu3 = nu.part(3);
    let mu3 = mu.part(3);
    let l = lambda.minus_columns(3, nu3)?.minus_columns(3, mu3)?;
    let n = nu.minus_columns(3, nu3)?;
    let m = mu.minus_columns(3, mu3)?;
    let tabs = lr_tableaux(&l, &m, &n);
    if tabs.len() != 1 {
        return Err(CoreError::NoCase);
    }
    let t = &tabs[0];
    let d = |x: u32, y: u32| x.saturating_sub(y);
    let o1 = d(l.part(2), m.part(1));
    let g1 = d(m.part(1), l.part(2));
    let o2 = d(l.part(3), m.part(2));
    let g2 = d(m.part(2), l.part(3));
    let a1 = t.count_in_row(1, 1) - o1;
    let b2 = t.count_in_row(2, 2) - o1;
    let b1 = t.count_in_row(2, 1) - o2;
    let c2 = t.count_in_row(3, 2) - o2;
    let c1 = t.count_in_row(3, 1);
    let letter = if b2 == 0 {
        TypeLetter::B
    } else if c1 == 0 {
        TypeLetter::C
    } else {
        return Err(CoreError::NoCase);
    };
    let roman = if c2 == 0 {
        TypeRoman::I
    } else if b1 == 0 {
        TypeRoman::II
    } else if a1 == b2 {
        TypeRoman::III
    } else if a1 + b1 == b2 + c2 {
        TypeRoman::IV
    } else {
        return Err(CoreError::NoCase);
    };
    let overlap = match (o1 > 0, o2 > 0) {
        (false, false) => Overlap::G1G2,
        (false, true) => Overlap::G1O2,
        (true, false) => Overlap::O1G2,
        (true, true) => Overlap::O1O2,
    };
    Ok(FillingProfile {
        a1,
        b1,
        b2,
        c1,
        c2,
        o1,
        o2,
        g1,
        g2,
        mu3,
        nu3,
        letter,
        roman,
        overlap,
    })
}

pub type Triple = (Partition, Partition, Partition);

/// Every triple in P3 with `|λ| ≤ max_weight` and `|μ| + |ν| = |λ|`, in lex
/// order on `(λ, μ, ν)`.
pub fn all_triples(max_weight: u32) -> Vec<Triple> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for lambda in partitions_of(w, 3) {
            for wm in 0..=w {
                for mu in partitions_of(wm, 3) {
                    for nu in partitions_of(w - wm, 3) {
                        out.push((lambda.clone(), mu.clone(), nu.clone()));
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Minimal triples (unique LR tableau) in P3 up to `max_weight`.
pub fn enumerate_minimal(max_weight: u32) -> Vec<Triple> {
    all_triples(max_weight)
        .into_iter()
        .filter(|(l, m, n)| m.is_contained_in(l) && n.is_contained_in(l) && is_minimal_lr(l, m, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn facet_examples() {
        let f = horn_facets(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap();
        assert!(f.satisfied);
        assert!(f.equalities.contains(&4));
        let f = horn_facets(&p(&[2, 1]), &p(&[1, 1]), &p(&[1])).unwrap();
        for k in [7, 8, 13] {
            assert!(f.equalities.contains(&k));
        }
        assert!(!horn_facets(&p(&[3]), &p(&[1]), &p(&[1])).unwrap().satisfied);
        assert_eq!(
            horn_facets(&p(&[1, 1, 1, 1]), &p(&[]), &p(&[])).unwrap_err(),
            CoreError::OutsideP3
        );
    }

    #[test]
    fn minimality_examples() {
        let ex = (p(&[4, 2, 2]), p(&[3, 2, 1]), p(&[1, 1]));
        assert!(is_minimal_lr(&ex.0, &ex.1, &ex.2));
        assert!(is_minimal_horn(&ex.0, &ex.1, &ex.2).unwrap());
        assert!(!is_minimal_lr(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])));
        assert!(!is_minimal_horn(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap());
        assert!(is_minimal_lr(&p(&[]), &p(&[]), &p(&[])));
    }

    #[test]
    fn case_examples() {
        assert_eq!(
            classify_cases(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap(),
            vec![4, 5, 7, 12, 14, 15]
        );
        assert!(classify_cases(&p(&[8, 7, 4]), &p(&[6, 3]), &p(&[5, 5]))
            .unwrap()
            .contains(&4));
        // ν = (1,1) puts the triple on ν1 = ν2; ν3 = 0 < ν2 so facet 3 is absent
        let c = classify_cases(&p(&[2, 1, 1]), &p(&[1, 1]), &p(&[1, 1])).unwrap();
        assert!(c.contains(&4));
        assert!(!c.contains(&3));
        assert_eq!(
            classify_cases(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap_err(),
            CoreError::NoCase
        );
    }

    #[test]
    fn filling_examples() {
        let f = classify_filling(&p(&[5, 1]), &p(&[3, 1]), &p(&[2])).unwrap();
        assert_eq!((f.b2, f.c2, f.o1, f.o2), (0, 0, 0, 0));
        assert_eq!(f.letter, TypeLetter::B);
        let cases = classify_cases(&p(&[5, 1]), &p(&[3, 1]), &p(&[2])).unwrap();
        assert!(cases.contains(&f.filling_facet()));

        let f = classify_filling(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap();
        assert!(classify_cases(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1]))
            .unwrap()
            .contains(&f.filling_facet()));

        let f = classify_filling(&p(&[3, 1]), &p(&[3, 1]), &p(&[])).unwrap();
        assert_eq!(
            (f.a1, f.b1, f.b2, f.c1, f.c2, f.o1, f.o2),
            (0, 0, 0, 0, 0, 0, 0)
        );
    }

    #[test]
    fn small_enumeration() {
        assert_eq!(enumerate_minimal(0), vec![(p(&[]), p(&[]), p(&[]))]);
        let two = enumerate_minimal(2);
        for t in [
            (p(&[1]), p(&[1]), p(&[])),
            (p(&[2]), p(&[1]), p(&[1])),
            (p(&[1, 1]), p(&[1]), p(&[1])),
            (p(&[2]), p(&[2]), p(&[])),
        ] {
            assert!(two.contains(&t));
        }
    }
}
