use approx::assert_relative_eq;
use nalgebra::DMatrix;
use proptest::prelude::*;

use super::*;
use crate::special::quad::integrate;

fn sig(p: usize, q: usize, k: usize) -> SignatureTriple {
    SignatureTriple::new(p, q, k).unwrap()
}

#[test]
fn triple_bookkeeping() {
    let s = sig(3, 2, 4);
    assert_eq!((s.big_n(), s.n_q(), s.n_p()), (1, 2, 1));
    for p in 1..6 {
        for q in 0..=p {
            for k in 0..=p + q {
                let s = sig(p, q, k);
                assert_eq!(s.big_n() + s.n_q() + s.n_p(), k);
            }
        }
    }
    assert!(SignatureTriple::new(1, 2, 1).is_err());
    assert!(SignatureTriple::new(2, 1, 4).is_err());
}

#[test]
fn line_in_plane() {
    let t = 0.3f64;
    let e = SubspaceSample::from_rows(sig(1, 1, 1), &[vec![t.cos(), t.sin()]]).unwrap();
    assert_relative_eq!(e.spectrum()[0], (2.0 * t).cos(), epsilon = 1e-14);
    assert_relative_eq!(e.angles()[0], t, epsilon = 1e-14);
}

#[test]
fn sampling_is_deterministic() {
    let s = sig(3, 2, 2);
    assert_eq!(haar_sample(s, 42), haar_sample(s, 42));
    assert_ne!(haar_sample(s, 42), haar_sample(s, 43));
    let run = |t| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .unwrap()
            .install(|| haar_spectra(s, 500, 9))
    };
    assert_eq!(run(1), run(3));
}

#[test]
fn samples_are_orthonormal() {
    for s in [sig(2, 1, 1), sig(3, 2, 2), sig(4, 3, 5)] {
        for e in haar_batch(s, 50, 3) {
            assert!(e.orthonormality_defect() < 1e-12);
            assert_eq!(e.spectrum().len(), s.big_n());
            assert!(e.spectrum().iter().all(|l| l.abs() <= 1.0 + 1e-10));
            assert!(e.spectrum().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

#[test]
fn positive_subspace() {
    let e = SubspaceSample::from_rows(
        sig(3, 2, 2),
        &[vec![1.0, 1.0, 0.0, 0.0, 0.0], vec![0.0, 1.0, 2.0, 0.0, 0.0]],
    )
    .unwrap();
    for l in e.spectrum() {
        assert_relative_eq!(*l, 1.0, epsilon = 1e-12);
    }
    let o = e.orbit_signature();
    assert_eq!((o.a, o.b, o.near_degenerate), (2, 0, false));
}

#[test]
fn axis_complement() {
    let e = SubspaceSample::from_rows(sig(1, 1, 1), &[vec![1.0, 0.0]]).unwrap();
    assert_relative_eq!(e.spectrum()[0], 1.0, epsilon = 1e-14);
    assert_relative_eq!(e.complement_spectrum()[0], -1.0, epsilon = 1e-14);
}

#[test]
fn null_line() {
    let e = SubspaceSample::from_rows(sig(1, 1, 1), &[vec![1.0, 1.0]]).unwrap();
    assert!(e.spectrum()[0].abs() < 1e-14);
    assert!(e.complement_spectrum()[0].abs() < 1e-14);
    assert!(e.orbit_signature().near_degenerate);
}

#[test]
fn complement_reverses_and_negates() {
    for s in [sig(1, 1, 1), sig(2, 1, 1), sig(2, 2, 2), sig(3, 2, 2), sig(3, 1, 2), sig(4, 3, 3), sig(4, 2, 5)] {
        for e in haar_batch(s, 200, 17) {
            let c = e.complement_spectrum();
            let n = c.len();
            assert_eq!(n, e.spectrum().len());
            for j in 0..n {
                assert!((c[j] + e.spectrum()[n - 1 - j]).abs() < 1e-10, "{s:?}");
            }
        }
    }
}

#[test]
fn rank_deficient_basis() {
    let r = SubspaceSample::from_rows(sig(2, 1, 2), &[vec![1.0, 0.0, 0.0], vec![2.0, 0.0, 0.0]]);
    assert_eq!(r, Err(GrassmannError::RankDeficient));
}

#[test]
fn arcsine_law() {
    let s = sig(1, 1, 1);
    let d = |l: f64| angle_density(&s, &[l]).unwrap();
    for l in [-0.9f64, -0.2, 0.0, 0.5, 0.99] {
        let expect = 1.0 / (std::f64::consts::PI * ((1.0 - l) * (1.0 + l)).sqrt());
        assert_relative_eq!(d(l), expect, max_relative = 1e-12);
    }
    let total = integrate(|t: f64| d(-t.cos()) * t.sin(), 0.0, std::f64::consts::PI, 1e-12).0;
    assert_relative_eq!(total, 1.0, epsilon = 1e-8);
}

#[test]
fn one_angle_normalization() {
    // sig (2,1,1): (1 - l)^{-1/2}, integral over [-1, 1] is 2 sqrt 2.
    let s = sig(2, 1, 1);
    let expect = 1.0 / (2.0 * 2f64.sqrt());
    assert_relative_eq!(angle_density(&s, &[0.3]).unwrap(), expect / 0.7f64.sqrt(), max_relative = 1e-12);
}

#[test]
fn densities_integrate_to_one() {
    for s in [sig(2, 1, 1), sig(2, 2, 2), sig(3, 2, 2), sig(3, 3, 3), sig(5, 3, 3)] {
        let total: f64 = (0..=s.big_n()).map(|b| chamber_probability(&s, b).unwrap()).sum();
        assert_relative_eq!(total, 1.0, epsilon = 1e-8);
    }
}

#[test]
fn density_domain_errors() {
    let s = sig(2, 2, 2);
    assert!(angle_density(&s, &[0.1, 0.5]).is_err());
    assert!(angle_density(&s, &[1.5, 0.5]).is_err());
    assert!(angle_density(&s, &[0.5]).is_err());
    assert!(angle_density(&s, &[0.5, 0.1]).unwrap() > 0.0);
}

#[test]
fn cdf_grid_is_monotone() {
    let g = lambda1_cdf_grid(&sig(2, 2, 2), 100).unwrap();
    assert!(g.windows(2).all(|w| w[1].1 >= w[0].1 && w[1].0 >= w[0].0));
    assert_relative_eq!(g.last().unwrap().1, 1.0, epsilon = 1e-8);
}

#[test]
fn lambda_sum_is_centered() {
    let spectra = haar_spectra(sig(2, 2, 2), 20_000, 5);
    let v: Vec<f64> = spectra.iter().map(|s| s.iter().sum()).collect();
    let m = v.iter().sum::<f64>() / v.len() as f64;
    let var = v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (v.len() - 1) as f64;
    assert!(m.abs() <= 3.0 * (var / v.len() as f64).sqrt());
}

#[test]
fn full_space_projection() {
    let s = sig(2, 1, 3);
    let e = haar_sample(s, 1);
    let v = ellipsoid_projection_volume(&e, 2.0, 0.5).unwrap();
    assert_relative_eq!(v, unit_ball_volume(3) * 4.0 * 0.5, max_relative = 1e-12);
}

#[test]
fn sphere_projection() {
    for s in [sig(2, 1, 1), sig(3, 2, 2), sig(4, 2, 3)] {
        let e = haar_sample(s, 2);
        assert_relative_eq!(
            ellipsoid_projection_volume(&e, 1.0, 1.0).unwrap(),
            unit_ball_volume(s.k),
            max_relative = 1e-12
        );
    }
}

#[test]
fn tilted_line_shadow() {
    let (t, a, b) = (0.7f64, 1.3, 0.4);
    let e = SubspaceSample::from_rows(sig(2, 1, 1), &[vec![t.cos(), 0.0, t.sin()]]).unwrap();
    let expect = 2.0 * (a * a * t.cos().powi(2) + b * b * t.sin().powi(2)).sqrt();
    assert_relative_eq!(ellipsoid_projection_volume(&e, a, b).unwrap(), expect, max_relative = 1e-12);
    let (mc, _) = projection_mc_oracle(&e, a, b, 1000, 0).unwrap();
    assert_relative_eq!(mc, expect, max_relative = 1e-12);
}

#[test]
fn closed_form_matches_gram_determinant() {
    for s in [sig(2, 1, 1), sig(2, 2, 2), sig(3, 2, 2), sig(4, 3, 5), sig(5, 2, 3)] {
        for e in haar_batch(s, 50, 23) {
            let (a, b) = (1.7, 0.6);
            assert_relative_eq!(
                ellipsoid_projection_volume(&e, a, b).unwrap(),
                ellipsoid_projection_gram(&e, a, b).unwrap(),
                max_relative = 1e-10
            );
        }
    }
}

#[test]
fn mc_oracle_unit_disc_and_random() {
    let e = haar_sample(sig(2, 2, 2), 4);
    let (v, se) = projection_mc_oracle(&e, 1.0, 1.0, 1000, 0).unwrap();
    assert_relative_eq!(v, std::f64::consts::PI, max_relative = 1e-12);
    assert!(se < 1e-12);
    for s in [sig(2, 1, 2), sig(3, 2, 3), sig(4, 3, 4)] {
        let e = haar_sample(s, 8);
        let exact = ellipsoid_projection_volume(&e, 1.5, 0.7).unwrap();
        let (v, se) = projection_mc_oracle(&e, 1.5, 0.7, 200_000, 1).unwrap();
        assert!((v - exact).abs() < 0.01 * exact && (v - exact).abs() < 5.0 * se, "{s:?}");
    }
}

#[test]
fn swap_symmetry() {
    // Swapping the two blocks (p = q) sends lambda to -lambda and exchanges a and b.
    for s in [sig(2, 2, 2), sig(3, 3, 2), sig(3, 3, 4)] {
        for e in haar_batch(s, 20, 31) {
            let p = s.p;
            let u = e.basis();
            let swapped = DMatrix::from_fn(u.nrows(), u.ncols(), |i, j| u[(i, (j + p) % (2 * p))]);
            let f = SubspaceSample::from_basis(s, &swapped).unwrap();
            assert_relative_eq!(
                ellipsoid_projection_volume(&e, 1.4, 0.3).unwrap(),
                ellipsoid_projection_volume(&f, 0.3, 1.4).unwrap(),
                max_relative = 1e-10
            );
        }
    }
}

#[test]
fn degenerate_limits() {
    // vol / limit = prod (1 + x_i)^{1/2} with x_i = eps^2 (1 +- lambda_i)/(1 -+ lambda_i).
    let within = |ratio: f64, xs: f64| ratio - 1.0 >= -1e-12 && ratio - 1.0 <= (xs / 2.0).exp_m1() + 1e-12;
    let eps = 1e-4;
    for m in 1..=3 {
        let s = sig(2 * m, 2 * m - 1, 2 * m);
        for e in haar_batch(s, 10, 77) {
            let lam = e.spectrum();
            let lim_pos = degenerate_limit(&e, ShortAxis::Positive);
            let short_pos = ellipsoid_projection_volume(&e, eps, 1.0).unwrap() / eps;
            let xs: f64 = lam.iter().map(|l| eps * eps * (1.0 + l) / (1.0 - l)).sum();
            assert!(within(short_pos / lim_pos, xs));
            let lim_neg = degenerate_limit(&e, ShortAxis::Negative);
            let short_neg = ellipsoid_projection_volume(&e, 1.0, eps).unwrap();
            let xs: f64 = lam.iter().map(|l| eps * eps * (1.0 - l) / (1.0 + l)).sum();
            assert!(within(short_neg / lim_neg, xs));
            // Through the (2m-1)-dimensional complement the first limit is
            // prod (1 + lambda_i(E^P))^{1/2}.
            let alt: f64 = e.complement().spectrum().iter().map(|l| (1.0 + l).sqrt()).product::<f64>()
                * unit_ball_volume(2 * m)
                * 2f64.powf(0.5 - m as f64);
            assert_relative_eq!(lim_pos, alt, max_relative = 1e-6);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn volume_monotone(seed in 0u64..1000, a in 0.1f64..3.0, b in 0.1f64..3.0, da in 0.0f64..1.0, db in 0.0f64..1.0) {
        let e = haar_sample(sig(3, 2, 2), seed);
        let v = ellipsoid_projection_volume(&e, a, b).unwrap();
        prop_assert!(ellipsoid_projection_volume(&e, a + da, b).unwrap() >= v * (1.0 - 1e-12));
        prop_assert!(ellipsoid_projection_volume(&e, a, b + db).unwrap() >= v * (1.0 - 1e-12));
    }
}

#[test]
fn complement_of_axis_aligned_plane() {
    // Sparse bases once tripped the eigenvector route to the complement.
    let sig = SignatureTriple::new(4, 3, 3).unwrap();
    let lam = [0.9041172563704749, 0.8865618991068005, 0.06141123804990767];
    let rows: Vec<Vec<f64>> = (0..3)
        .map(|i| {
            let t = 0.5 * f64::acos(lam[i]);
            let mut r = vec![0.0; 7];
            r[i] = t.cos();
            r[4 + i] = t.sin();
            r
        })
        .collect();
    let e = SubspaceSample::from_rows(sig, &rows).unwrap();
    let f = e.complement();
    let cross = e.basis() * f.basis().transpose();
    assert!(cross.iter().all(|x| x.abs() < 1e-13));
    let expected: Vec<f64> = lam.iter().rev().map(|l| -l).collect();
    for (a, b) in f.spectrum().iter().zip(&expected) {
        assert!((a - b).abs() < 1e-12, "{:?}", f.spectrum());
    }
}
