use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{CoreError, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so equality ignores them.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A box of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

/// `ω_i`: the rectangle of all columns of height `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub height: u32,
    pub width: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    Horizontal,
    Vertical,
    Both,
    Neither,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Panics on invalid input; for literals.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i`, 1-based, zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `self ⊆ outer`, comparing diagrams.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.part(c.row as usize) >= c.col
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
    }

    /// `(arm, leg, hook)` of a cell.
    pub fn arm_leg_hook(&self, c: Cell) -> Result<(u32, u32, u32)> {
        if !self.contains_cell(c) {
            return Err(CoreError::CellOutside);
        }
        Ok(self.arm_leg_unchecked(c))
    }

    pub(crate) fn arm_leg_unchecked(&self, c: Cell) -> (u32, u32, u32) {
        let a = self.part(c.row as usize) - c.col;
        let col_len = self.parts.iter().take_while(|&&p| p >= c.col).count() as u32;
        let l = col_len - c.row;
        (a, l, a + l + 1)
    }

    /// Blocks `ω_1, …, ω_ℓ`; widths may be zero.
    pub fn blocks(&self) -> Vec<Block> {
        (1..=self.len())
            .map(|i| Block {
                height: i as u32,
                width: self.part(i) - self.part(i + 1),
            })
            .collect()
    }

    /// `b(λ) = Σ (i−1) λ_i`.
    pub fn n_statistic(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Removes `k` from every one of the first `n` parts.
    pub fn minus_columns(&self, n: usize, k: u32) -> Result<Partition> {
        let v = self.padded(n);
        if v.len() > n || v.iter().any(|&p| p < k) {
            return Err(CoreError::InvalidSubtraction);
        }
        Partition::new(v.into_iter().map(|p| p - k).collect())
    }

    pub fn plus_columns(&self, n: usize, k: u32) -> Result<Partition> {
        let v = self.padded(n);
        if v.len() > n {
            return Err(CoreError::TooManyParts(n));
        }
        Partition::new(v.into_iter().map(|p| p + k).collect())
    }
}

/// `μ ≤ λ` in dominance order.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(CoreError::DominanceWeights);
    }
    Ok(dominance_leq_same_weight(mu, lambda))
}

pub(crate) fn dominance_leq_same_weight(mu: &Partition, lambda: &Partition) -> bool {
    let n = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0u32, 0u32);
    for i in 1..=n {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return false;
        }
    }
    true
}

/// Dominance comparison; `None` for incomparable pairs.
pub fn dominance_cmp(mu: &Partition, lambda: &Partition) -> Result<Option<Ordering>> {
    let le = dominance_leq(mu, lambda)?;
    let ge = dominance_leq_same_weight(lambda, mu);
    Ok(match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    })
}

pub fn strip_kind(outer: &Partition, inner: &Partition) -> Result<StripKind> {
    if !inner.is_contained_in(outer) {
        return Err(CoreError::NotContained);
    }
    let horizontal = {
        let (oc, ic) = (outer.conjugate(), inner.conjugate());
        (1..=oc.len()).all(|j| oc.part(j) - ic.part(j) <= 1)
    };
    let vertical = (1..=outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1);
    Ok(match (horizontal, vertical) {
        (true, true) => StripKind::Both,
        (true, false) => StripKind::Horizontal,
        (false, true) => StripKind::Vertical,
        (false, false) => StripKind::Neither,
    })
}

pub fn is_vertical_strip(outer: &Partition, inner: &Partition) -> bool {
    matches!(
        strip_kind(outer, inner),
        Ok(StripKind::Vertical | StripKind::Both)
    )
}

pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    matches!(
        strip_kind(outer, inner),
        Ok(StripKind::Horizontal | StripKind::Both)
    )
}

/// All partitions of `n` with at most `max_len` parts, in descending lex
/// order (a linear extension of dominance, largest first).
pub fn partitions_of(n: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            // remaining slots must be able to hold what is left
            if (p as u64) * (slots as u64) < rem as u64 {
                break;
            }
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions with weight at most `max_weight` and at most `max_len` parts,
/// by weight then descending lex.
pub fn partitions_up_to(max_weight: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_weight)
        .flat_map(|w| partitions_of(w, max_len))
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = CoreError;

    /// Comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| CoreError::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[5, 2, 2, 1]).conjugate(), p(&[4, 3, 1, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[3, 3]).conjugate(), p(&[2, 2, 2]));
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[3])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert_eq!(dominance_cmp(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap(), None);
        assert_eq!(
            dominance_leq(&p(&[2]), &p(&[1])).unwrap_err().to_string(),
            "dominance undefined across weights"
        );
    }

    #[test]
    fn hooks() {
        assert_eq!(
            p(&[5, 2, 2, 1]).arm_leg_hook(Cell::new(1, 2)).unwrap(),
            (3, 2, 6)
        );
        assert_eq!(p(&[1]).arm_leg_hook(Cell::new(1, 1)).unwrap(), (0, 0, 1));
        assert_eq!(
            p(&[4, 2, 2]).arm_leg_hook(Cell::new(2, 2)).unwrap(),
            (0, 1, 2)
        );
        assert_eq!(
            p(&[1])
                .arm_leg_hook(Cell::new(2, 1))
                .unwrap_err()
                .to_string(),
            "cell outside diagram"
        );
    }

    #[test]
    fn block_widths() {
        let w = |v: &[u32]| p(v).blocks().iter().map(|b| b.width).collect::<Vec<_>>();
        assert_eq!(w(&[6, 4, 2]), vec![2, 2, 2]);
        assert_eq!(w(&[8, 7, 4]), vec![1, 3, 4]);
        assert_eq!(
            p(&[5]).blocks(),
            vec![Block {
                height: 1,
                width: 5
            }]
        );
    }

    #[test]
    fn strips() {
        assert_eq!(
            strip_kind(&p(&[5, 2, 2, 1]), &p(&[3, 2, 1])).unwrap(),
            StripKind::Horizontal
        );
        assert_eq!(
            strip_kind(&p(&[3, 1]), &p(&[3, 1])).unwrap(),
            StripKind::Both
        );
        assert_eq!(
            strip_kind(&p(&[2, 2]), &p(&[1])).unwrap(),
            StripKind::Neither
        );
        assert!(strip_kind(&p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("8,7,4".parse::<Partition>().unwrap(), p(&[8, 7, 4]));
        assert_eq!("".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("2,1,0".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[8, 7, 4]).to_string(), "8,7,4");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n, 99).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions_of(14, 3).len(), 24);
        let four = partitions_of(4, 99);
        assert_eq!(four[0], p(&[4]));
        assert_eq!(four[4], p(&[1, 1, 1, 1]));
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(0u32..8, 0..7).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().weight(), l.weight());
        }

        #[test]
        fn hook_lengths_via_conjugate(l in arb_partition()) {
            let c = l.conjugate();
            for cell in l.cells() {
                let (a, lg, h) = l.arm_leg_hook(cell).unwrap();
                let (a2, lg2, h2) = c.arm_leg_hook(Cell::new(cell.col, cell.row)).unwrap();
                prop_assert_eq!((a, lg, h), (lg2, a2, h2));
            }
        }

        #[test]
        fn blocks_reconstitute(l in arb_partition()) {
            let mut rebuilt = vec![0u32; l.len()];
            for b in l.blocks() {
                for r in rebuilt.iter_mut().take(b.height as usize) {
                    *r += b.width;
                }
            }
            prop_assert_eq!(Partition::new(rebuilt).unwrap(), l);
        }
    }
}
