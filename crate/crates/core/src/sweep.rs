//! Exhaustive verification over all minimal triples up to a weight, sharded
//! across worker threads and merged in enumeration order.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::error::{CoreError, Result};
use crate::horn::{enumerate_minimal, Triple};
use crate::macdonald::{verify_triple_qt_with, TripleReportQT};
use crate::stanley::{verify_triple_with, Convention, Reading, TableVersion, TripleReport};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_weight: u32,
    pub workers: usize,
    pub convention: Convention,
    pub table: TableVersion,
}

impl SweepConfig {
    pub fn reading(&self) -> Reading {
        Reading {
            convention: self.convention,
            table: self.table,
        }
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_weight: 14,
            workers: 1,
            convention: Convention::Minus,
            table: TableVersion::Printed,
        }
    }
}

/// Runs `f` on every item with `workers` threads; results come back in
/// input order.
pub fn parallel_map<T: Sync, R: Send>(
    items: &[T],
    workers: usize,
    f: impl Fn(&T) -> R + Sync,
) -> Vec<R> {
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let mut shards: Vec<Vec<(usize, R)>> = Vec::new();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                s.spawn(move || {
                    items
                        .iter()
                        .enumerate()
                        .skip(w)
                        .step_by(workers)
                        .map(|(i, t)| (i, f(t)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        shards = handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect();
    });
    let mut all: Vec<(usize, R)> = shards.into_iter().flatten().collect();
    all.sort_by_key(|(i, _)| *i);
    all.into_iter().map(|(_, r)| r).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseStats {
    /// Triples whose smallest facet is this case.
    pub canonical: u64,
    pub canonical_mismatches: u64,
    /// Triples lying on this facet at all.
    pub on_facet: u64,
    /// Of those, how many the row fails to reproduce.
    pub facet_mismatches: u64,
    pub unbalanced: u64,
    pub out_of_range: u64,
}

#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub max_weight: u32,
    pub reading: Reading,
    pub triples: u64,
    pub per_case: BTreeMap<u8, CaseStats>,
    pub c_mismatches: Vec<Triple>,
    pub g_mismatches: Vec<Triple>,
    pub path_disagreements: Vec<Triple>,
    pub balance_violations: Vec<Triple>,
    /// Canonical rows whose counts left their strips.
    pub range_violations: Vec<Triple>,
    /// Triples where some facet row disagrees with the oracle.
    pub facet_disagreements: Vec<(Triple, Vec<u8>)>,
    /// `d(1) ≠ 1` among matched triples.
    pub alpha_one_failures: Vec<Triple>,
    pub elapsed: Duration,
}

impl SweepSummary {
    pub fn mismatches(&self) -> usize {
        self.c_mismatches.len() + self.g_mismatches.len() + self.path_disagreements.len()
    }

    pub fn passed(&self) -> bool {
        self.mismatches() == 0
    }
}

fn triple_of(r: &TripleReport) -> Triple {
    (r.lambda.clone(), r.mu.clone(), r.nu.clone())
}

pub fn summarize(
    max_weight: u32,
    reading: Reading,
    reports: &[TripleReport],
    elapsed: Duration,
) -> SweepSummary {
    let mut s = SweepSummary {
        max_weight,
        reading,
        triples: reports.len() as u64,
        per_case: (1..=18).map(|k| (k, CaseStats::default())).collect(),
        c_mismatches: vec![],
        g_mismatches: vec![],
        path_disagreements: vec![],
        balance_violations: vec![],
        range_violations: vec![],
        facet_disagreements: vec![],
        alpha_one_failures: vec![],
        elapsed,
    };
    let one = jlk_algebra::int(1);
    for r in reports {
        let t = triple_of(r);
        let case = r.case.expect("minimal triples have a case");
        let st = s.per_case.get_mut(&case).expect("case id in range");
        st.canonical += 1;
        if !r.match_c {
            st.canonical_mismatches += 1;
            s.c_mismatches.push(t.clone());
        }
        if !r.match_g {
            s.g_mismatches.push(t.clone());
        }
        if r.path_disagreement {
            s.path_disagreements.push(t.clone());
        }
        if matches!(r.error, Some(CoreError::ConventionViolation(_))) {
            s.range_violations.push(t.clone());
        }
        if r.balance == Some(false) {
            s.balance_violations.push(t.clone());
        }
        if let Some(d) = &r.d {
            if r.match_c && d.eval(&one).ok() != Some(one.clone()) {
                s.alpha_one_failures.push(t.clone());
            }
        }
        let mut bad = vec![];
        for c in &r.all_cases {
            let st = s.per_case.get_mut(&c.case_id).expect("case id in range");
            st.on_facet += 1;
            if !c.match_c {
                st.facet_mismatches += 1;
                bad.push(c.case_id);
            }
            if c.division_numbers.as_ref().is_some_and(|d| !d.balanced()) {
                st.unbalanced += 1;
            }
            if matches!(c.error, Some(CoreError::ConventionViolation(_))) {
                st.out_of_range += 1;
            }
        }
        if !bad.is_empty() {
            s.facet_disagreements.push((t, bad));
        }
    }
    s
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepSummary> {
    let start = Instant::now();
    let triples = enumerate_minimal(cfg.max_weight);
    let reports = parallel_map(&triples, cfg.workers, |(l, m, n)| {
        verify_triple_with(l, m, n, cfg.reading())
    });
    let reports: Vec<TripleReport> = reports.into_iter().collect::<Result<_>>()?;
    Ok(summarize(
        cfg.max_weight,
        cfg.reading(),
        &reports,
        start.elapsed(),
    ))
}

#[derive(Clone, Debug)]
pub struct SweepSummaryQT {
    pub max_weight: u32,
    pub triples: u64,
    pub per_case: BTreeMap<u8, (u64, u64)>,
    pub mismatches: Vec<Triple>,
    pub elapsed: Duration,
}

pub fn run_sweep_qt(cfg: &SweepConfig) -> Result<SweepSummaryQT> {
    let start = Instant::now();
    let triples = enumerate_minimal(cfg.max_weight);
    let reports = parallel_map(&triples, cfg.workers, |(l, m, n)| {
        verify_triple_qt_with(l, m, n, cfg.reading(), false)
    });
    let reports: Vec<TripleReportQT> = reports.into_iter().collect::<Result<_>>()?;
    let mut s = SweepSummaryQT {
        max_weight: cfg.max_weight,
        triples: reports.len() as u64,
        per_case: BTreeMap::new(),
        mismatches: vec![],
        elapsed: Duration::ZERO,
    };
    for r in &reports {
        let e = s.per_case.entry(r.case.expect("minimal")).or_default();
        e.0 += 1;
        if !r.match_c {
            e.1 += 1;
            s.mismatches
                .push((r.lambda.clone(), r.mu.clone(), r.nu.clone()));
        }
    }
    s.elapsed = start.elapsed();
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_map_keeps_order() {
        let v: Vec<u32> = (0..37).collect();
        for w in [1, 2, 5, 64] {
            assert_eq!(
                parallel_map(&v, w, |x| x * 2),
                v.iter().map(|x| x * 2).collect::<Vec<_>>()
            );
        }
        assert!(parallel_map(&Vec::<u32>::new(), 3, |x| *x).is_empty());
    }

    #[test]
    fn tiny_sweeps() {
        let s = run_sweep(&SweepConfig {
            max_weight: 0,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(s.triples, 1);
        assert!(s.passed());
        let s = run_sweep(&SweepConfig {
            max_weight: 4,
            workers: 2,
            ..Default::default()
        })
        .unwrap();
        assert!(s.passed());
        assert!(s.balance_violations.is_empty());
    }
}
