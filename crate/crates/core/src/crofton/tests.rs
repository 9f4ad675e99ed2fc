use super::*;
use crate::scalar::q;
use crate::special::u_eval;

fn rat(s: &str) -> crate::Rational {
    s.parse().unwrap()
}

#[test]
fn abs_pairing_m1_is_minus_two() {
    let r = universal_pairing(UniversalCase::Abs2m { m: 1 }).unwrap();
    assert_eq!(r.exact_value, "-2");
    assert_eq!(r.inputs.s0, "-2");
    assert!(r.certified);
}

#[test]
fn abs_pairing_m2_matches_selberg_abs() {
    let r = universal_pairing(UniversalCase::Abs2m { m: 2 }).unwrap();
    let v = crate::selberg::selberg_abs(3).eval(&rat("-4")).unwrap();
    assert_eq!(rat(&r.exact_value), v);
    assert!(r.certified);
}

#[test]
fn universal_families_nonzero() {
    for m in 1..=4 {
        assert!(universal_pairing(UniversalCase::Abs2m { m }).unwrap().certified);
        assert!(universal_pairing(UniversalCase::Sgn2m1 { m }).unwrap().certified);
    }
    for p in 2..=8 {
        let cos = universal_pairing(UniversalCase::CosPp { p });
        let sin = universal_pairing(UniversalCase::SinPp { p });
        match p % 4 {
            3 => {
                assert!(matches!(cos, Err(CroftonError::InadmissibleCase(_))));
                assert!(sin.unwrap().certified);
            }
            1 => {
                assert!(cos.unwrap().certified);
                assert!(matches!(sin, Err(CroftonError::InadmissibleCase(_))));
            }
            _ => {
                assert!(cos.unwrap().certified);
                assert!(sin.unwrap().certified);
            }
        }
    }
}

#[test]
fn sin_family_p1_out_of_range() {
    assert!(matches!(
        universal_pairing(UniversalCase::SinPp { p: 1 }),
        Err(CroftonError::OutOfRange(_))
    ));
    assert!(matches!(
        universal_pairing(UniversalCase::Abs2m { m: 0 }),
        Err(CroftonError::OutOfRange(_))
    ));
}

#[test]
fn pairing_value_includes_constant() {
    let r = universal_pairing(UniversalCase::CosPp { p: 2 }).unwrap();
    // D^cos_1(s) = 1/(s+1), c(1) = 1.
    assert_eq!(r.exact_value, "-2/3");
    assert!((r.value + 2.0 / 3.0).abs() < 1e-14);
}

#[test]
fn centroaffine_p2() {
    let r = centroaffine_pairing(2).unwrap();
    assert_eq!(r.cos_value, "-2/3");
    assert_eq!(r.sin_value.as_deref(), Some("-2/3"));
    assert_eq!(r.sin_coefficient, 1);
    assert_eq!(r.exact_value, "-4/3");
    assert!(r.certified);
}

#[test]
fn centroaffine_admissible_cases() {
    for p in [2, 4, 5, 6, 8, 9, 10] {
        let r = centroaffine_pairing(p).unwrap();
        assert!(r.certified, "p = {p}");
        assert_eq!(r.sin_value.is_some(), p % 2 == 0);
    }
    for p in [3, 7, 11] {
        assert!(matches!(centroaffine_pairing(p), Err(CroftonError::InadmissibleCase(_))));
    }
}

#[test]
fn centroaffine_opposite_sign_cancels_for_even_p() {
    // The combination with the opposite sign vanishes identically.
    for p in [2u32, 4, 6, 8] {
        let r = centroaffine_pairing(p).unwrap();
        let c = rat(&r.cos_value);
        let s = rat(r.sin_value.as_deref().unwrap());
        assert_eq!(c - crate::scalar::qi(r.sin_coefficient) * s, crate::scalar::qi(0), "p = {p}");
    }
}

#[test]
fn mu_c_examples() {
    let r = mu_c_vanishing(2).unwrap();
    assert_eq!(r.n, 3);
    assert_eq!(r.s0, "-4");
    assert_eq!(r.laurent_order, 2);
    let find = |k: &[u32]| r.pole_orders.iter().find(|x| x.kappa == k).unwrap().clone();
    let z = find(&[0, 0, 0]);
    assert_eq!((z.numerator, z.denominator, z.net), (2, 1, 1));
    assert!(find(&[1, 0, 0]).net <= 1);
    assert!(find(&[2, 1, 1]).net <= 1);
    assert!(r.certified);
}

#[test]
fn mu_c_certified_and_stable() {
    for m in 2..=5 {
        let r = mu_c_vanishing_up_to(m, 3 * m).unwrap();
        assert!(r.certified, "m = {m}");
        assert!(r.max_net <= 1);
        for row in &r.pole_orders {
            if row.kappa[0] > m + 1 {
                let mut base = row.kappa.clone();
                base[0] = m + 1;
                let b = r.pole_orders.iter().find(|x| x.kappa == base).unwrap();
                assert_eq!((row.numerator, row.denominator), (b.numerator, b.denominator));
            }
        }
    }
    assert!(mu_c_vanishing(1).is_err());
    assert!(mu_c_vanishing(6).is_err());
}

#[test]
fn restriction_table_examples() {
    let t0 = restriction_table(4, 3, Angle::Zero).unwrap();
    assert_eq!(t0[0].value, RestrictionValue::StructuralZero);
    assert_eq!(t0[1].value.params(), Some((q(1, 2), q(0, 1))));
    assert_eq!(t0[1].value.to_string(), "u(s, 1/2, 0)");
    let t1 = restriction_table(4, 3, Angle::HalfPi).unwrap();
    assert_eq!(t1[2].value, RestrictionValue::StructuralZero);
    assert_eq!(t1[0].value.params(), Some((q(0, 1), q(1, 2))));
    assert!(restriction_table(4, 1, Angle::Zero).is_err());
    assert!(restriction_table(4, 5, Angle::Zero).is_err());
}

#[test]
fn restriction_parameters_sum_to_pole_offset() {
    // Every nonzero entry has a + b = (p - 3)/2, so s0 = -a - b - 3.
    for p in 2..=8u32 {
        for k in 2..=p {
            for alpha in [Angle::Zero, Angle::HalfPi] {
                for row in restriction_table(p, k, alpha).unwrap() {
                    if let Some((a, b)) = row.value.params() {
                        assert_eq!(a + b, q(p as i64 - 3, 2));
                    }
                }
            }
        }
    }
}

const SINGULAR: [(u32, u32); 4] = [(3, 2), (3, 3), (7, 4), (7, 5)];

#[test]
fn q2_pattern() {
    for p in 2..=8u32 {
        for k in 2..=p {
            let c = q2_report(p, k).unwrap();
            let expected_row = match (p % 4, k % 2) {
                (0 | 2, 0) => 1,
                (0 | 2, _) => 2,
                (1, _) => 3,
                _ => 4,
            };
            assert_eq!(c.row, expected_row);
            let singular = SINGULAR.contains(&(p, k));
            assert_eq!(c.certified, !singular, "(p, k) = ({p}, {k})");
            let res = q2_basis_certificate(p, k);
            if singular {
                match res {
                    Err(CroftonError::NumericallyAmbiguous { value, .. }) => assert_eq!(value, 0.0),
                    other => panic!("expected NumericallyAmbiguous, got {other:?}"),
                }
            } else {
                assert!(res.is_ok());
            }
        }
    }
}

#[test]
fn q2_examples() {
    let c = q2_basis_certificate(5, 3).unwrap();
    assert_eq!(c.strategy, Q2Strategy::LZeroColumn);
    assert_eq!(c.functionals[0], "|sigma|");
    assert!(matches!(c.entries[0].method, EntryMethod::OddPTotal { .. }));
    assert_eq!(c.entries[0].angle, Angle::Zero);

    let c = q2_basis_certificate(4, 2).unwrap();
    assert!(matches!(c.entries[0].method, EntryMethod::Diag3 { .. }));
    assert_eq!(c.entries[1].method, EntryMethod::StructuralZero);

    let c = q2_basis_certificate(5, 4).unwrap();
    assert_eq!(c.strategy, Q2Strategy::Dual { k: 3 });
    assert_eq!(c.k, 4);

    let c = q2_basis_certificate(7, 3).unwrap();
    assert_eq!(c.strategy, Q2Strategy::Matrix);
    assert!(c.determinant.unwrap().abs() > 1e-8);
}

#[test]
fn q2_p7_k4_sign_entry_vanishes() {
    let c = q2_report(7, 4).unwrap();
    let e = &c.entries[0];
    assert_eq!(e.functional, "sign(sigma)|sigma|");
    assert_eq!(e.angle, Angle::HalfPi);
    assert_eq!(e.value, 0.0);
    assert_eq!(c.determinant, Some(0.0));
}

fn u_near(s0: f64, a: f64, b: f64, d: f64) -> f64 {
    u_eval(s0 + d, a, b).unwrap()
}

#[test]
fn q2_entries_match_series_continuation() {
    // Limits and residues checked against u_eval on both sides of s0.
    let d = 1e-6;
    for p in 2..=8u32 {
        for k in 2..=p {
            let c = q2_report(p, k).unwrap();
            let s0 = -(p as f64 + 3.0) / 2.0;
            for e in &c.entries {
                let num = |x: &str| rat(x).to_f64();
                let got = match &e.method {
                    EntryMethod::StructuralZero => continue,
                    EntryMethod::Residue { a, b } => {
                        let (a, b) = (num(a), num(b));
                        0.5 * d * (u_near(s0, a, b, d) - u_near(s0, a, b, -d))
                    }
                    EntryMethod::OddPTotal { a, b, weights } => {
                        let (a, b) = (num(a), num(b));
                        let f = |x| weights.0 as f64 * u_near(s0, a, b, x) + weights.1 as f64 * u_near(s0, b, a, x);
                        0.5 * (f(d) + f(-d))
                    }
                    EntryMethod::Diag3 { a, b, sign } => *sign as f64 * u_eval(s0, num(a), num(b)).unwrap(),
                };
                let tol = 1e-4 * e.value.abs().max(1e-3);
                assert!((got - e.value).abs() < tol, "(p,k)=({p},{k}) {e:?}: {got}");
            }
        }
    }
}

trait ToF64 {
    fn to_f64(&self) -> f64;
}

impl ToF64 for crate::Rational {
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap()
    }
}

#[test]
fn ellipsoid_routes_agree() {
    for m in 1..=2 {
        let r = degenerate_ellipsoid_route(m).unwrap();
        assert!(r.max_rel_err < 1e-6, "{r:?}");
        assert!(r.limit_gap < 1e-6);
        assert!(r.certified);
    }
    let r = degenerate_ellipsoid_route(1).unwrap();
    assert_eq!(r.exact_value, "-2");
}

#[test]
fn reports_serialize_with_common_fields() {
    let values = [
        serde_json::to_value(universal_pairing(UniversalCase::Sgn2m1 { m: 1 }).unwrap()).unwrap(),
        serde_json::to_value(centroaffine_pairing(4).unwrap()).unwrap(),
        serde_json::to_value(mu_c_vanishing(2).unwrap()).unwrap(),
        serde_json::to_value(q2_report(6, 3).unwrap()).unwrap(),
    ];
    for v in &values {
        assert!(v.get("case").is_some());
        assert!(v.get("certified").is_some());
        assert!(v.get("exact_value").is_some() || v.get("pole_orders").is_some() || v.get("entries").is_some());
    }
    assert_eq!(values[0]["case"]["family"], "sgn2m1");
}
