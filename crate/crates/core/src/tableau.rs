use std::fmt;

use crate::error::{CoreError, Result};
use crate::partition::{Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(CoreError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> u32 {
        self.outer.weight() - self.inner.weight()
    }

    /// Column range `(first, last)` of row `i` (1-based), empty when
    /// `first > last`.
    pub fn row_span(&self, i: usize) -> (u32, u32) {
        (self.inner.part(i) + 1, self.outer.part(i))
    }
}

/// A filling of a skew shape. `rows[i]` holds the entries of row `i+1`
/// from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LRTableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<u32>>,
}

impl LRTableau {
    pub fn get(&self, c: Cell) -> Option<u32> {
        let (first, last) = self.shape.row_span(c.row as usize);
        if c.col < first || c.col > last {
            return None;
        }
        Some(self.rows[c.row as usize - 1][(c.col - first) as usize])
    }

    /// Reading word: rows top to bottom, each right to left.
    pub fn word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Number of entries equal to `v` in row `i` (1-based).
    pub fn count_in_row(&self, i: usize, v: u32) -> u32 {
        self.rows
            .get(i - 1)
            .map_or(0, |r| r.iter().filter(|&&x| x == v).count() as u32)
    }

    /// Content vector `θ(T)`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for &v in self.rows.iter().flatten() {
            if w.len() < v as usize {
                w.resize(v as usize, 0);
            }
            w[v as usize - 1] += 1;
        }
        w
    }
}

impl fmt::Display for LRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut s = "·".repeat(self.shape.inner.part(i + 1) as usize);
                s.extend(r.iter().map(|v| char::from_digit(*v, 36).unwrap_or('?')));
                s
            })
            .collect();
        write!(f, "{}", lines.join(" / "))
    }
}

struct Filler<'a, F: FnMut(&[Vec<u32>]) -> bool> {
    shape: &'a SkewShape,
    max_entry: u32,
    content: Option<&'a [u32]>,
    yamanouchi: bool,
    rows: Vec<Vec<u32>>,
    counts: Vec<u32>,
    visit: F,
}

impl<F: FnMut(&[Vec<u32>]) -> bool> Filler<'_, F> {
    /// Fills rows top to bottom, each right to left, so the reading word is
    /// produced in order. Returns false once the visitor asks to stop.
    fn go(&mut self, row: usize, col: u32) -> bool {
        let nrows = self.shape.outer.len();
        if row > nrows {
            if let Some(c) = self.content {
                if self.counts[1..=c.len()] != *c {
                    return true;
                }
            }
            return (self.visit)(&self.rows);
        }
        let (first, last) = self.shape.row_span(row);
        if col < first || first > last {
            return self.go(row + 1, self.shape.outer.part(row + 1));
        }
        let right = if col < last {
            Some(self.rows[row - 1][(col + 1 - first) as usize])
        } else {
            None
        };
        let above = if row > 1 && col > self.shape.inner.part(row - 1) {
            let (f0, _) = self.shape.row_span(row - 1);
            Some(self.rows[row - 2][(col - f0) as usize])
        } else {
            None
        };
        let lo = above.map_or(1, |a| a + 1);
        let hi = right.map_or(self.max_entry, |r| r.min(self.max_entry));
        for v in lo..=hi {
            let vi = v as usize;
            if let Some(c) = self.content {
                if self.counts[vi] >= c[vi - 1] {
                    continue;
                }
            }
            if self.yamanouchi && v > 1 && self.counts[vi] + 1 > self.counts[vi - 1] {
                continue;
            }
            self.counts[vi] += 1;
            self.rows[row - 1][(col - first) as usize] = v;
            let keep_going = self.go(row, col - 1);
            self.counts[vi] -= 1;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Visits every semistandard filling of `shape` with entries in
/// `1..=max_entry`, optionally with fixed content and the lattice-word
/// condition. The visitor returns false to stop early.
pub fn for_each_filling<F: FnMut(&[Vec<u32>]) -> bool>(
    shape: &SkewShape,
    max_entry: u32,
    content: Option<&[u32]>,
    yamanouchi: bool,
    visit: F,
) {
    let rows = (1..=shape.outer.len())
        .map(|i| {
            let (f, l) = shape.row_span(i);
            vec![0; (l + 1).saturating_sub(f) as usize]
        })
        .collect();
    let mut filler = Filler {
        shape,
        max_entry,
        content,
        yamanouchi,
        rows,
        counts: vec![0; max_entry as usize + 2],
        visit,
    };
    filler.go(1, shape.outer.part(1));
}

fn lr_shape(lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<SkewShape> {
    if lambda.weight() != mu.weight() + nu.weight()
        || !mu.is_contained_in(lambda)
        || !nu.is_contained_in(lambda)
    {
        return None;
    }
    SkewShape::new(lambda.clone(), mu.clone()).ok()
}

/// All LR tableaux of shape `λ/μ` and weight `ν`.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<LRTableau> {
    let Some(shape) = lr_shape(lambda, mu, nu) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for_each_filling(&shape, nu.len() as u32, Some(nu.parts()), true, |rows| {
        out.push(LRTableau {
            shape: shape.clone(),
            rows: rows.to_vec(),
        });
        true
    });
    out
}

/// `c^λ_{μν}(1)`.
pub fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    lr_count_capped(lambda, mu, nu, u64::MAX)
}

/// Counts LR tableaux, stopping once `cap` have been seen.
pub fn lr_count_capped(lambda: &Partition, mu: &Partition, nu: &Partition, cap: u64) -> u64 {
    let Some(shape) = lr_shape(lambda, mu, nu) else {
        return 0;
    };
    let mut n = 0u64;
    for_each_filling(&shape, nu.len() as u32, Some(nu.parts()), true, |_| {
        n += 1;
        n < cap
    });
    n
}

/// Semistandard tableaux of straight shape `λ` with entries at most `n`.
pub fn ssyt(lambda: &Partition, n: u32) -> Vec<Vec<Vec<u32>>> {
    let shape = SkewShape::new(lambda.clone(), Partition::empty()).expect("empty inner");
    let mut out = Vec::new();
    if lambda.len() > n as usize {
        return out;
    }
    for_each_filling(&shape, n, None, false, |rows| {
        out.push(rows.to_vec());
        true
    });
    out
}
