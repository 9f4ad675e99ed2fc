use proptest::prelude::*;

use crofton_core::grassmann::{haar_sample, SignatureTriple};
use crofton_core::matintegrals::{d_closed, EpsilonKind};
use crofton_core::ratfun::Polynomial;
use crofton_core::selberg::{f_closed, f_oracle, selberg_abs, Domain, ExponentVector};
use crofton_core::{qi, RatFun, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(3), poly(3)).prop_filter_map("nonzero denominator", |(n, d)| RatFun::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ratfun_ops_commute_with_evaluation(f in ratfun(), g in ratfun(), x in rational()) {
        let (Ok(fx), Ok(gx)) = (f.eval(&x), g.eval(&x)) else { return Ok(()); };
        prop_assert_eq!((&f + &g).eval(&x).unwrap(), &fx + &gx);
        prop_assert_eq!((&f - &g).eval(&x).unwrap(), &fx - &gx);
        prop_assert_eq!((&f * &g).eval(&x).unwrap(), &fx * &gx);
        if gx != qi(0) && !g.is_zero() {
            prop_assert_eq!((&f / &g).eval(&x).unwrap(), fx / gx);
        }
    }

    #[test]
    fn simple_pole_residue(a in rational(), b in rational()) {
        prop_assume!(a != b);
        // 1/((s - a)(s - b)) has residue 1/(a - b) at a.
        let f = &RatFun::inv_linear(qi(1), -a.clone()) * &RatFun::inv_linear(qi(1), -b.clone());
        let l = f.laurent(&a, 2).unwrap();
        prop_assert_eq!(l.order, -1);
        prop_assert_eq!(l.residue(), qi(1) / (a - b));
    }

    #[test]
    fn chambers_partition_the_cube(e in prop::collection::vec(1u32..=6, 1..=4)) {
        let v = ExponentVector::from_integers(&e).unwrap();
        let n = e.len();
        let full = f_oracle(&v, Domain::Full).unwrap();
        let mut sum = f_oracle(&v, Domain::Chamber { positive: n, negative: 0 }).unwrap();
        for b in 1..=n {
            sum += f_oracle(&v, Domain::Chamber { positive: n - b, negative: b }).unwrap();
        }
        prop_assert_eq!(full.clone(), sum);
        prop_assert_eq!(f_closed(&v), full);
    }

    #[test]
    fn spectrum_is_ordered_in_unit_interval(p in 1usize..=4, dq in 0usize..=3, dk in 0usize..=4, seed in 0u64..10_000) {
        let q = p.saturating_sub(dq).max(1).min(p);
        let k = (1 + dk).min(p + q - 1);
        let sig = SignatureTriple::new(p, q, k).unwrap();
        let e = haar_sample(sig, seed);
        let l = e.spectrum();
        prop_assert_eq!(l.len(), sig.big_n());
        prop_assert!(l.windows(2).all(|w| w[0] >= w[1] - 1e-12));
        prop_assert!(l.iter().all(|x| (-1.0 - 1e-12..=1.0 + 1e-12).contains(x)));
        prop_assert!(e.orthonormality_defect() < 1e-12);
        let back = e.complement().complement_spectrum();
        for (x, y) in back.iter().zip(l) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }
}

#[test]
fn haar_sample_is_deterministic_in_the_seed() {
    let sig = SignatureTriple::new(3, 2, 2).unwrap();
    assert_eq!(haar_sample(sig, 5).spectrum(), haar_sample(sig, 5).spectrum());
    assert_ne!(haar_sample(sig, 5).spectrum(), haar_sample(sig, 6).spectrum());
}

#[test]
fn d_abs_is_selberg_abs_times_constant() {
    for n in 1..=6 {
        let d = d_closed(n, EpsilonKind::Abs).unwrap();
        assert_eq!(d.exact, selberg_abs(n));
        let c = d.constant_exact();
        let v = d.eval_exact(&qi(1)).unwrap();
        assert_eq!(v.rational, c.rational * selberg_abs(n).eval(&qi(1)).unwrap());
    }
}
