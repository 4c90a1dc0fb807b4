use jlk_algebra::{rat, Coeff, RatFunc1, X};
use jlk_core::phi::*;
use proptest::prelude::*;

type RX = RatFunc1<X>;

fn q() -> impl Strategy<Value = RX> {
    (-24i64..24, 1i64..7).prop_map(|(n, d)| RX::constant(rat(n, d)))
}

fn pair() -> impl Strategy<Value = [RX; 2]> {
    [q(), q()]
}

fn has_zero(v: &[RX]) -> bool {
    v.iter().any(|b| b.is_zero())
}

fn distinct(v: &[RX]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

fn col_degenerate(s: &[RX], t: &[RX]) -> bool {
    !distinct(s) || !distinct(t) || s.iter().any(|a| t.iter().any(|b| a.add(b).is_zero()))
}

fn row_degenerate(n: u32, s: &[RX; 2], t: &[RX; 2]) -> bool {
    (0..=n).any(|k| {
        (0..2).any(|j| {
            [beta_row(n, k, j, s, t), beta_row(n, k, j, t, s)]
                .iter()
                .any(|beta| beta.chunks(4).any(|c| has_zero(&c[1..])))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn runs_concatenate(a in q(), j1 in 0i64..=6, j2 in 0i64..=6) {
        let x = RX::var();
        let lhs = angle(&x, &a, j1).unwrap().mul(&angle(&x, &a.add(&RX::from_int(j1)), j2).unwrap());
        prop_assert_eq!(lhs, angle(&x, &a, j1 + j2).unwrap());
    }

    #[test]
    fn complementary_runs_cancel(a in q(), j in 0i64..=6) {
        prop_assume!((0..j).all(|k| !a.add(&RX::from_int(k)).is_zero()));
        let x = RX::var();
        let b = x.sub(&a);
        let shifted = b.add(&RX::from_int(1 - j));
        let v = angle(&x, &a, j).unwrap().mul(&angle(&x, &shifted, j).unwrap());
        prop_assert!(v.is_one(), "{}", v);
    }

    #[test]
    fn anchor_shifts(c in -12i64..12, d in 0i64..=3, n in 0u32..=6, t in 0u32..=6) {
        prop_assume!(t <= n);
        prop_assert!(check_mod_identities(&LinExpr::ints(c, d), n, t).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn column_sum_is_symmetric(
        n in 1usize..=4,
        s in proptest::collection::vec(q(), 4),
        t in proptest::collection::vec(q(), 4),
    ) {
        let (s, t) = (&s[..n], &t[..n]);
        prop_assume!(!col_degenerate(s, t));
        let x = RX::var();
        prop_assert_eq!(phi_col(&x, s, t).unwrap(), phi_col(&x, t, s).unwrap());
    }

    #[test]
    fn row_sum_is_symmetric(n in 0u32..=4, s in pair(), t in pair()) {
        prop_assume!(!row_degenerate(n, &s, &t));
        let x = RX::var();
        let lhs = phi_row(n, &x, &s, &t).unwrap();
        prop_assert_eq!(&lhs, &phi_row(n, &x, &t, &s).unwrap());
        for k in 0..=n {
            let term = phi_row_term(n, k, &x, &s, &t).unwrap();
            prop_assert!(term.num().degree().unwrap_or(0) <= 4 * n as usize);
        }
    }
}

#[test]
fn column_sum_base_case() {
    let x = RX::var();
    let (s, t) = (RX::constant(rat(2, 3)), RX::constant(rat(5, 1)));
    let sum = s.add(&t);
    let expected = sum.sub(&x).try_div(&sum).unwrap();
    assert_eq!(phi_col(&x, std::slice::from_ref(&s), std::slice::from_ref(&t)).unwrap(), expected);
    assert_eq!(phi_col(&x, &[t], &[s]).unwrap(), expected);
}

#[test]
fn strip_term_is_a_product_of_flip_ratios() {
    let x = one_minus_r();
    for c in -4..5 {
        for d in 0..4 {
            for n in 0..5 {
                let b = LinExpr::ints(c, d);
                let mut prod = RatFunc1::one();
                for k in 1..=n as i64 {
                    let h = b.add_int(k);
                    if !h.is_zero() {
                        prod = prod.mul(&flip_ratio(&x, &h.to_ratfunc()).unwrap());
                    }
                }
                assert_eq!(strip_term(&b, n), prod);
            }
        }
    }
}
