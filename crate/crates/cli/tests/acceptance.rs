//! End-to-end acceptance run. Prints one line per criterion and fails if any
//! criterion fails. Budgets are wall-clock limits on this machine class.

use std::time::{Duration, Instant};

use jlk_algebra::{int, rat, BigRational, Coeff, RatFunc1, UniPoly, X};
use jlk_core::horn::{all_triples, enumerate_minimal, is_minimal_horn};
use jlk_core::jack::{
    apply_d_alpha, eigenvalue, g_coeff, jack_p, lr_coeff, lr_coeff_n, pieri_c, pieri_row_c,
    product_coeffs, RF,
};
use jlk_core::macdonald::{at_q_equals_t, jack_limit, lr_coeff_qt};
use jlk_core::monomial::{schur_poly, MonomialPoly};
use jlk_core::partition::{
    dominance_leq, is_vertical_strip, partitions_of, partitions_up_to, Cell, Partition,
};
use jlk_core::phi::{angle, beta_row, check_mod_identities, phi_col, phi_row, LinExpr};
use jlk_core::stanley::{verify_triple_with, Convention, Reading, TableVersion};
use jlk_core::sweep::{run_sweep, run_sweep_qt, SweepConfig};
use jlk_core::tableau::{lr_count, lr_count_capped};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET_1: Duration = Duration::from_secs(10);
const BUDGET_2: Duration = Duration::from_secs(30 * 60);
const BUDGET_3: Duration = Duration::from_secs(5 * 60);
const BUDGET_4: Duration = Duration::from_secs(10 * 60);
const BUDGET_5: Duration = Duration::from_secs(5 * 60);
const BUDGET_6: Duration = Duration::from_secs(10 * 60);
const BUDGET_7: Duration = Duration::from_secs(30 * 60);
const BUDGET_8: Duration = Duration::from_secs(5 * 60);

const SWEEP_WEIGHT: u32 = 14;
const QT_WEIGHT: u32 = 8;
const HORN_WEIGHT: u32 = 12;
const PIERI_WEIGHT: u32 = 10;
const IDENTITY_TRIALS: usize = 500;
const SYMMETRY_TRIALS: usize = 100;
const SEED: u64 = 0x6a6c6b;

type RX = RatFunc1<X>;

fn p(v: &[u32]) -> Partition {
    Partition::of(v)
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

struct Outcome {
    ok: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
            notes: vec![],
        }
    }
}

fn run(n: u32, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let el = t.elapsed();
    let ok = o.ok && el <= budget;
    println!(
        "criterion {n}: {} {} [{:.1}s of {}s]",
        if ok { "PASS" } else { "FAIL" },
        o.detail,
        el.as_secs_f64(),
        budget.as_secs()
    );
    for note in o.notes {
        println!("    {note}");
    }
    ok
}

fn lin(c: i64, a: i64) -> UniPoly<jlk_algebra::Alpha> {
    UniPoly::from_ints(&[c, a])
}

fn golden_examples() -> Outcome {
    let mut failed = vec![];
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failed.push(name.to_string());
        }
    };
    let mono = |k: i64, d: usize| UniPoly::monomial(int(k), d);
    let g422 =
        &(&(&(&mono(32, 5) * &lin(3, 2)) * &lin(1, 2).pow(2)) * &lin(2, 1).pow(2)) * &lin(2, 3);

    let c = lr_coeff(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap();
    check("c (4,2,2)", c == RF::new(lin(0, 2), lin(1, 1)).unwrap());
    check(
        "g (4,2,2)",
        g_coeff(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap() == g422,
    );

    let (l, m, n) = (p(&[3, 3, 1, 1]), p(&[3, 2, 1]), p(&[2]));
    let c = lr_coeff_n(&l, &m, &n, 4).unwrap();
    let expected = RF::new(
        &mono(16, 2) * &lin(1, 2),
        &UniPoly::from_ints(&[3]) * &lin(1, 1).pow(4),
    )
    .unwrap();
    check("c (3,3,1,1)", c == expected);
    check("g (3,3,1,1)", g_coeff(&l, &m, &n).unwrap() == g422);

    let g = g_coeff(&p(&[4, 2, 1]), &p(&[3, 1]), &p(&[2, 1])).unwrap();
    check(
        "g (4,2,1)",
        g == &mono(8, 5) * &UniPoly::from_ints(&[9, 97, 294, 321, 131, 12]),
    );

    for (l, m, n) in [
        (p(&[3, 2, 1]), p(&[2, 1]), p(&[2, 1])),
        (p(&[5, 3, 2, 1]), p(&[3, 2, 1]), p(&[2, 2, 1])),
        (p(&[4, 3, 2, 1]), p(&[3, 2, 1]), p(&[2, 2])),
    ] {
        check(&format!("lr_count {l:?}"), lr_count(&l, &m, &n) == 2);
    }

    let one = int(1);
    let schur: Vec<Partition> = product_coeffs(&p(&[3, 1]), &p(&[2]), 3)
        .unwrap()
        .iter()
        .filter(|(_, c)| c.eval(&one).unwrap() == one)
        .map(|(k, _)| k.clone())
        .collect();
    let mut want = vec![
        p(&[5, 1]),
        p(&[4, 2]),
        p(&[4, 1, 1]),
        p(&[3, 3]),
        p(&[3, 2, 1]),
    ];
    want.sort();
    check("s31 s2", schur == want);

    check(
        "conjugate",
        p(&[5, 2, 2, 1]).conjugate() == p(&[4, 3, 1, 1, 1]),
    );
    check(
        "hook",
        p(&[5, 2, 2, 1]).arm_leg_hook(Cell::new(1, 2)).unwrap() == (3, 2, 6),
    );

    let ok = failed.is_empty();
    Outcome::new(
        ok,
        if ok {
            "all golden examples equal".into()
        } else {
            format!("failed: {failed:?}")
        },
    )
}

fn sweep_line(table: TableVersion) -> (bool, String) {
    let s = run_sweep(&SweepConfig {
        max_weight: SWEEP_WEIGHT,
        workers: workers(),
        convention: Convention::Minus,
        table,
    })
    .unwrap();
    let bad: Vec<String> = s
        .per_case
        .iter()
        .filter(|(_, st)| st.canonical_mismatches > 0)
        .map(|(k, st)| format!("{k}:{}/{}", st.canonical_mismatches, st.canonical))
        .collect();
    (
        s.passed(),
        format!(
            "{table} table, W={SWEEP_WEIGHT}: {} triples, c mismatches {}, g mismatches {}, path disagreements {}, failing cases [{}]",
            s.triples,
            s.c_mismatches.len(),
            s.g_mismatches.len(),
            s.path_disagreements.len(),
            bad.join(" ")
        ),
    )
}

fn main_sweep() -> Outcome {
    let (ok, detail) = sweep_line(TableVersion::Printed);
    let mut o = Outcome::new(ok, detail);
    o.notes
        .push(format!("info: {}", sweep_line(TableVersion::Corrected).1));
    o
}

fn horn_equivalence() -> Outcome {
    let (mut total, mut exceptions) = (0usize, vec![]);
    for (l, m, n) in all_triples(HORN_WEIGHT) {
        total += 1;
        let lr = lr_count_capped(&l, &m, &n, 2) == 1;
        if lr != is_minimal_horn(&l, &m, &n).unwrap() {
            exceptions.push((l, m, n));
        }
    }
    Outcome::new(
        exceptions.is_empty(),
        format!(
            "{total} triples with |λ| ≤ {HORN_WEIGHT}, {} exceptions",
            exceptions.len()
        ),
    )
}

fn pieri() -> Outcome {
    let (mut pairs, mut bad_col, mut bad_row) = (0usize, vec![], vec![]);
    for lambda in partitions_up_to(PIERI_WEIGHT, PIERI_WEIGHT as usize) {
        for mu in partitions_up_to(lambda.weight(), lambda.len()) {
            if !mu.is_contained_in(&lambda) || !is_vertical_strip(&lambda, &mu) {
                continue;
            }
            pairs += 1;
            let r = (lambda.weight() - mu.weight()) as usize;
            let col = p(&vec![1; r]);
            if pieri_c(&lambda, &mu).unwrap() != lr_coeff(&lambda, &mu, &col).unwrap() {
                bad_col.push((lambda.clone(), mu.clone()));
            }
            let (lc, mc) = (lambda.conjugate(), mu.conjugate());
            let row = if r == 0 {
                Partition::empty()
            } else {
                p(&[r as u32])
            };
            if pieri_row_c(&lc, &mc).unwrap() != lr_coeff(&lc, &mc, &row).unwrap() {
                bad_row.push((lc, mc));
            }
        }
    }
    Outcome::new(
        bad_col.is_empty() && bad_row.is_empty(),
        format!(
            "{pairs} vertical-strip pairs with |λ| ≤ {PIERI_WEIGHT}: column failures {}, transposed row failures {}",
            bad_col.len(),
            bad_row.len()
        ),
    )
}

fn draw(rng: &mut ChaCha8Rng) -> RX {
    RX::constant(rat(rng.gen_range(-24..24), rng.gen_range(1..7)))
}

fn identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let x = RX::var();
    let mut failures = vec![];

    for _ in 0..IDENTITY_TRIALS {
        let a = draw(&mut rng);
        let (j1, j2) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let lhs = angle(&x, &a, j1)
            .unwrap()
            .mul(&angle(&x, &a.add(&RX::from_int(j1)), j2).unwrap());
        if lhs != angle(&x, &a, j1 + j2).unwrap() {
            failures.push(format!("run concatenation a={a} j={j1},{j2}"));
        }
    }

    let mut done = 0;
    while done < IDENTITY_TRIALS {
        let a = draw(&mut rng);
        let j = rng.gen_range(0..=6);
        if (0..j).any(|k| a.add(&RX::from_int(k)).is_zero()) {
            continue;
        }
        done += 1;
        let b = x.sub(&a).add(&RX::from_int(1 - j));
        if !angle(&x, &a, j)
            .unwrap()
            .mul(&angle(&x, &b, j).unwrap())
            .is_one()
        {
            failures.push(format!("complementary runs a={a} j={j}"));
        }
    }

    for _ in 0..IDENTITY_TRIALS {
        let h = LinExpr::ints(rng.gen_range(-12..12), rng.gen_range(0..=3));
        let n = rng.gen_range(0..=6);
        let t = rng.gen_range(0..=n);
        if !check_mod_identities(&h, n, t).unwrap() {
            failures.push(format!("anchor shifts h={h} n={n} t={t}"));
        }
    }

    let distinct = |v: &[RX]| (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]));
    for n in 1..=4 {
        let mut done = 0;
        while done < SYMMETRY_TRIALS {
            let s: Vec<RX> = (0..n).map(|_| draw(&mut rng)).collect();
            let t: Vec<RX> = (0..n).map(|_| draw(&mut rng)).collect();
            if !distinct(&s)
                || !distinct(&t)
                || s.iter().any(|a| t.iter().any(|b| a.add(b).is_zero()))
            {
                continue;
            }
            done += 1;
            if phi_col(&x, &s, &t).unwrap() != phi_col(&x, &t, &s).unwrap() {
                failures.push(format!("column symmetry n={n}"));
            }
        }
    }

    for n in 0..=4u32 {
        let mut done = 0;
        while done < SYMMETRY_TRIALS {
            let s = [draw(&mut rng), draw(&mut rng)];
            let t = [draw(&mut rng), draw(&mut rng)];
            let degenerate = (0..=n).any(|k| {
                (0..2).any(|j| {
                    [beta_row(n, k, j, &s, &t), beta_row(n, k, j, &t, &s)]
                        .iter()
                        .any(|beta| beta.chunks(4).any(|c| c[1..].iter().any(|b| b.is_zero())))
                })
            });
            if degenerate {
                continue;
            }
            done += 1;
            if phi_row(n, &x, &s, &t).unwrap() != phi_row(n, &x, &t, &s).unwrap() {
                failures.push(format!("row symmetry n={n}"));
            }
        }
    }

    let mut o = Outcome::new(
        failures.is_empty(),
        format!(
            "{IDENTITY_TRIALS} trials each for the three run identities, {SYMMETRY_TRIALS} per n for both symmetries, {} failures",
            failures.len()
        ),
    );
    o.notes.extend(failures.into_iter().take(5));
    o
}

fn oracle_self_checks() -> Outcome {
    let mut failures = vec![];
    for n in 1..=4 {
        for lambda in partitions_up_to(6, n) {
            let pl = jack_p(&lambda, n).unwrap();
            let tri = pl.coeff(&lambda) == RF::one()
                && pl.iter().all(|(k, _)| dominance_leq(k, &lambda).unwrap());
            if !tri {
                failures.push(format!("unitriangular {lambda:?} n={n}"));
            }
            let poly = MonomialPoly::from_m_expansion(&pl, n);
            let e = RF::from_poly(eigenvalue(&lambda, n));
            if apply_d_alpha(&poly).unwrap() != poly.scale(&e) {
                failures.push(format!("eigen {lambda:?} n={n}"));
            }
            let big = MonomialPoly::from_m_expansion(&jack_p(&lambda, n + 1).unwrap(), n + 1);
            if big.drop_last_var() != poly {
                failures.push(format!("stability {lambda:?} n={n}"));
            }
        }
    }
    let one = int(1);
    for lambda in partitions_up_to(6, 6) {
        let n = lambda.len().max(1);
        let s = schur_poly::<BigRational>(&lambda, n)
            .to_m_expansion()
            .unwrap();
        let pl = jack_p(&lambda, n).unwrap();
        if partitions_of(lambda.weight(), n)
            .iter()
            .any(|k| pl.coeff(k).eval(&one).unwrap() != s.coeff(k))
        {
            failures.push(format!("schur {lambda:?}"));
        }
    }
    let mut pairs = 0;
    for wm in 0..=8 {
        for mu in partitions_of(wm, 8) {
            for nu in partitions_up_to(8 - wm, 8) {
                pairs += 1;
                let n = (mu.len() + nu.len()).max(1);
                let c = product_coeffs(&mu, &nu, n).unwrap();
                for lambda in partitions_of(wm + nu.weight(), n) {
                    if c.coeff(&lambda).eval(&one).unwrap()
                        != int(lr_count(&lambda, &mu, &nu) as i64)
                    {
                        failures.push(format!("α=1 {lambda:?} {mu:?} {nu:?}"));
                    }
                }
            }
        }
    }
    let mut o = Outcome::new(
        failures.is_empty(),
        format!(
            "|λ| ≤ 6 in up to 5 variables, {pairs} products with |μ|+|ν| ≤ 8, {} failures",
            failures.len()
        ),
    );
    o.notes.extend(failures.into_iter().take(5));
    o
}

fn qt_sweep_line(table: TableVersion) -> (bool, String) {
    let s = run_sweep_qt(&SweepConfig {
        max_weight: QT_WEIGHT,
        workers: workers(),
        convention: Convention::Minus,
        table,
    })
    .unwrap();
    (
        s.mismatches.is_empty(),
        format!(
            "{table} table, W={QT_WEIGHT}: {} triples, {} mismatches",
            s.triples,
            s.mismatches.len()
        ),
    )
}

fn macdonald() -> Outcome {
    let (sweep_ok, sweep) = qt_sweep_line(TableVersion::Printed);
    let mut q_eq_t = 0;
    for (l, m, n) in enumerate_minimal(QT_WEIGHT) {
        let c = lr_coeff_qt(&l, &m, &n, 3).unwrap();
        if at_q_equals_t(&c).unwrap() != int(lr_count(&l, &m, &n) as i64) {
            q_eq_t += 1;
        }
    }
    let mut limits = 0;
    let mut checked = 0;
    for (l, m, n) in all_triples(6) {
        if !m.is_contained_in(&l) || !n.is_contained_in(&l) {
            continue;
        }
        let c = lr_coeff_qt(&l, &m, &n, 3).unwrap();
        let cj = lr_coeff_n(&l, &m, &n, 3).unwrap();
        for a in [2u32, 3] {
            checked += 1;
            if jack_limit(&c, a).unwrap() != cj.eval(&int(a as i64)).unwrap() {
                limits += 1;
            }
        }
    }
    let mut o = Outcome::new(
        sweep_ok && q_eq_t == 0 && limits == 0,
        format!("{sweep}; q=t failures {q_eq_t}; t→1 limit failures {limits} of {checked}"),
    );
    o.notes.push(format!(
        "info: {}",
        qt_sweep_line(TableVersion::Corrected).1
    ));
    o
}

fn negative() -> Outcome {
    let s = run_sweep(&SweepConfig {
        max_weight: 6,
        workers: workers(),
        convention: Convention::Plus,
        table: TableVersion::Printed,
    })
    .unwrap();
    let mut boundary_ok = true;
    for (l, m, n) in [
        (p(&[5, 3, 2, 1]), p(&[3, 2, 1]), p(&[2, 2, 1])),
        (p(&[4, 3, 2, 1]), p(&[3, 2, 1]), p(&[2, 2])),
    ] {
        let r = verify_triple_with(&l, &m, &n, Reading::default()).unwrap();
        boundary_ok &= !r.minimal && r.lr_count == 2 && r.case.is_none();
    }
    Outcome::new(
        s.mismatches() > 0 && boundary_ok,
        format!(
            "plus convention W=6: {} c mismatches of {} triples; boundary triples non-minimal with count 2: {boundary_ok}",
            s.c_mismatches.len(),
            s.triples
        ),
    )
}

#[test]
fn acceptance() {
    let results = [
        run(1, BUDGET_1, golden_examples),
        run(2, BUDGET_2, main_sweep),
        run(3, BUDGET_3, horn_equivalence),
        run(4, BUDGET_4, pieri),
        run(5, BUDGET_5, identities),
        run(6, BUDGET_6, oracle_self_checks),
        run(7, BUDGET_7, macdonald),
        run(8, BUDGET_8, negative),
    ];
    let failed: Vec<usize> = (1..=8).filter(|&k| !results[k - 1]).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
