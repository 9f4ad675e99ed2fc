use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::scalar::{q, qi};
use crate::{ComplexRational, Rational};

fn iv(e: &[u32]) -> ExponentVector {
    ExponentVector::from_integers(e).unwrap()
}

fn real(x: Rational) -> ComplexRational {
    ComplexRational::new(x, qi(0))
}

#[test]
fn spec_values() {
    assert_eq!(f_recursive(&iv(&[1, 2])), real(q(-4, 3)));
    assert_eq!(f_closed(&iv(&[1, 2])), real(q(-4, 3)));
    assert!(f_recursive(&iv(&[1, 3])).re.is_zero());
    assert!(f_recursive(&iv(&[2, 4])).re.is_zero());
    assert!(f_closed(&iv(&[1, 3])).re.is_zero());
    assert_eq!(epsilon_n(2), -1);
}

#[test]
fn epsilon_is_eight_periodic() {
    let seq: Vec<i64> = (1..=40).map(epsilon_n).collect();
    for k in 0..32 {
        assert_eq!(seq[k], seq[k + 8]);
    }
    assert_eq!(&seq[..8], &[1, -1, -1, -1, -1, 1, 1, 1]);
}

#[test]
fn delta_recurrences_match_table() {
    for n in 0..=10 {
        for m in 0..=n {
            assert_eq!(delta_n(n, m), delta_table(n, m), "n={n} m={m}");
            if m < n && n >= 1 {
                // second recurrence: delta_n(m) = (-1)^m delta_{n-1}(m) (1 - (-1)^n i)
                let s = if n % 2 == 0 { qi(-1) } else { qi(1) };
                let mut v = delta_n(n - 1, m) * ComplexRational::new(qi(1), s);
                if m % 2 == 1 {
                    v = -v;
                }
                assert_eq!(delta_n(n, m), v, "n={n} m={m}");
            }
        }
    }
}

#[test]
fn half_integer_routes_agree() {
    // every strict half-integer vector with doubled entries <= 11, n <= 3
    let vals = [1u32, 3, 5, 7, 9, 11];
    let mut checked = 0;
    for n in 1..=3usize {
        let mut idx = vec![0usize; n];
        loop {
            let d: Vec<u32> = idx.iter().map(|&i| vals[i]).collect();
            let e = ExponentVector::from_doubled(d).unwrap();
            let o = f_oracle(&e, Domain::Full).unwrap();
            assert_eq!(o, f_recursive(&e), "{e}");
            assert_eq!(o, f_closed(&e), "{e}");
            checked += 1;
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < vals.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    assert!(checked > 200);
}

#[test]
fn half_integer_larger_n() {
    for d in [
        vec![1u32, 3, 5, 7],
        vec![3, 1, 9, 5, 7],
        vec![1, 3, 5, 7, 9, 11],
        vec![5, 9, 1, 13, 3, 7],
    ] {
        let e = ExponentVector::from_doubled(d).unwrap();
        let o = f_oracle(&e, Domain::Full).unwrap();
        assert_eq!(o, f_recursive(&e), "{e}");
        assert_eq!(o, f_closed(&e), "{e}");
    }
}

#[test]
fn recursion_matches_closed_up_to_eight() {
    for e in [
        vec![1u32, 2, 3, 4, 5, 6, 7],
        vec![2, 1, 4, 3, 6, 5, 8, 7],
        vec![1, 3, 5, 7, 2, 4, 6, 8],
        vec![9, 2, 7, 4, 5, 6, 3, 8],
    ] {
        let v = iv(&e);
        assert_eq!(f_recursive(&v), f_closed(&v), "{v}");
    }
    let h = ExponentVector::from_doubled(vec![1, 3, 5, 7, 9, 11, 13, 15]).unwrap();
    assert_eq!(f_recursive(&h), f_closed(&h));
}

#[test]
fn chamber_sums_match_closed_forms() {
    let abs = |_: usize| 1;
    let sgn = |b: usize| if b.is_multiple_of(2) { 1 } else { -1 };
    let cos = |b: usize| [1, 0, -1, 0][b % 4];
    let sin = |b: usize| [0, 1, 0, -1][b % 4];
    for n in 1..=5 {
        assert_eq!(vandermonde_chamber_ratfun(n, &abs).unwrap(), selberg_abs(n), "abs n={n}");
        assert_eq!(vandermonde_chamber_ratfun(n, &sgn).unwrap(), selberg_sgn(n), "sgn n={n}");
        let (c, s) = selberg_mixed(n);
        assert_eq!(vandermonde_chamber_ratfun(n, &cos).unwrap(), c, "cos n={n}");
        assert_eq!(vandermonde_chamber_ratfun(n, &sin).unwrap(), s, "sin n={n}");
    }
}

#[test]
fn selberg_spec_examples() {
    assert_eq!(selberg_abs(1).to_string(), "2/(s+1)");
    assert_eq!(selberg_abs(2).to_string(), "4/((s+1)(2s+3))");
    assert_eq!(selberg_abs(2).eval(&qi(0)).unwrap(), q(4, 3));
    assert_eq!(selberg_abs(2).eval(&qi(2)).unwrap(), q(4, 21));
    assert_eq!(f_oracle(&iv(&[3, 4]), Domain::Full).unwrap().re, q(-4, 21));
}

#[test]
fn residue_examples() {
    assert_eq!(residue_identity_check(&[qi(1), qi(2)], 1).unwrap(), (qi(-3), qi(-3)));
    assert_eq!(residue_identity_check(&[q(5, 7)], 1).unwrap(), (q(5, 7), q(5, 7)));
    let a: Vec<_> = (1..=4).map(qi).collect();
    assert_eq!(residue_identity_check(&a, 2).unwrap(), (qi(10), qi(10)));
    assert!(matches!(
        residue_identity_check(&[qi(1), qi(1)], 1),
        Err(SelbergError::DegenerateInput)
    ));
    assert!(residue_identity_check(&[qi(1), qi(2)], 3).is_err());
}

fn distinct_rationals(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-40i64..40, 1i64..9), 1..=max_len).prop_filter_map("distinct", |v| {
        let r: Vec<Rational> = v.into_iter().map(|(a, b)| q(a, b)).collect();
        for i in 0..r.len() {
            for j in i + 1..r.len() {
                if r[i] == r[j] {
                    return None;
                }
            }
        }
        Some(r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn identity_one(a in distinct_rationals(8)) {
        let (l, r) = residue_identity_check(&a, 1).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn identity_two(a in distinct_rationals(8).prop_filter("even", |v| v.len() % 2 == 0)) {
        let (l, r) = residue_identity_check(&a, 2).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn identity_three(a in distinct_rationals(7).prop_filter("odd", |v| v.len() % 2 == 1)) {
        let (l, r) = residue_identity_check(&a, 3).unwrap();
        prop_assert_eq!(l, r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn antisymmetry(e in prop::collection::vec(1u32..=8, 1..=4), seed in 0usize..1000) {
        let v = iv(&e);
        let n = e.len();
        let perms = permutations_with_sign(n);
        let (p, s) = &perms[seed % perms.len()];
        let w = v.permuted(p);
        let fv = f_oracle(&v, Domain::Full).unwrap();
        let fw = f_oracle(&w, Domain::Full).unwrap();
        prop_assert_eq!(fw.re, fv.re * qi(*s));
    }
}
