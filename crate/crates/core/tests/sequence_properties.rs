use proptest::prelude::*;
use univalent_core::catalog::list_catalog;
use univalent_core::criteria::{criterion_terms, criterion_terms_composed, prawitz_sum_s, univalence_criterion};
use univalent_core::sequences::{aharonov_phi, phi_capital_combinatorial, phi_capital_direct};
use univalent_core::transforms::{koebe_transform, lemma2_coefficients, MobiusShift};
use univalent_core::{CatalogFunction, Complex64, Error, PowerSeries};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn disk_point(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn catalog_entry() -> impl Strategy<Value = CatalogFunction> {
    let all = list_catalog();
    (0..all.len()).prop_map(move |i| all[i])
}

fn univalent_entry() -> impl Strategy<Value = CatalogFunction> {
    let all: Vec<_> = list_catalog().into_iter().filter(|f| f.flags().univalent_on_disk).collect();
    (0..all.len()).prop_map(move |i| all[i])
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

/// f(e^{iθ}z) up to a constant factor, which no coefficient sequence sees.
fn rotated(f: &CatalogFunction, theta: f64) -> Option<CatalogFunction> {
    let e = Complex64::from_polar(1.0, theta);
    use univalent_core::FunctionKind::*;
    match f.kind() {
        Identity => Some(CatalogFunction::identity()),
        Koebe => CatalogFunction::rotated_koebe(theta).ok(),
        RotatedKoebe { theta: t } => CatalogFunction::rotated_koebe(t + theta).ok(),
        Bounded { b } => CatalogFunction::bounded(b * e).ok(),
        ExpScale { k } => CatalogFunction::exp_scale(k * e).ok(),
        QuadPoly { a } => CatalogFunction::quad_poly(a * e).ok(),
        _ => None,
    }
}

#[test]
fn three_way_agreement_on_grid() {
    let axis = [-0.4, -0.2, 0.0, 0.2, 0.4];
    for f in list_catalog() {
        for &x in &axis {
            for &y in &axis {
                let z = c(x, y);
                let series = f.series_at(z, 12).unwrap();
                let phi = match aharonov_phi(&series, 10) {
                    Ok(p) => p,
                    Err(Error::NotLocallyUnivalent(_)) => continue,
                    Err(e) => panic!("{e}"),
                };
                for lambda in [0.5, 1.0, 1.7] {
                    let direct = phi_capital_direct(&series, lambda, 10).unwrap();
                    let comb = phi_capital_combinatorial(&phi, lambda, 10).unwrap();
                    for n in 0..=10 {
                        assert!((direct.values[n] - comb.values[n]).norm() <= 1e-9, "{} {z} {lambda} {n}", f.id());
                        if lambda == 1.0 && n >= 1 {
                            assert!((direct.values[n] - phi.values[n - 1]).norm() <= 1e-9);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sum_rule_for_normalized_univalent_entries() {
    for f in list_catalog().into_iter().filter(|f| f.is_normalized() && f.flags().univalent_on_disk) {
        for lambda in [0.25, 0.5, 1.0] {
            let mut prev = 0.0;
            for n in [1, 2, 4, 8, 16, 64] {
                let s = prawitz_sum_s(&f, lambda, n).unwrap();
                assert!(s <= lambda + 1e-9, "{} {lambda} {n}: {s}", f.id());
                assert!(s >= prev - 1e-15);
                prev = s;
            }
        }
    }
}

#[test]
fn koebe_transform_is_normalized() {
    for f in list_catalog().into_iter().filter(|f| f.flags().univalent_on_disk) {
        for z in [c(0.0, 0.0), c(0.3, -0.2), c(-0.5, 0.1)] {
            let k = koebe_transform(&f, z, 8).unwrap();
            assert_eq!(k.coeff(0), c(0.0, 0.0));
            assert_eq!(k.coeff(1), c(1.0, 0.0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn phi_is_mobius_invariant(f in univalent_entry(), z in disk_point(0.5),
                               a in disk_point(2.0), b in disk_point(1.0), g in disk_point(0.1)) {
        // τ(u) = (a·u + b)/(g·u + 1) with a ≠ b·g
        prop_assume!((a - b * g).norm() > 0.1);
        let s = f.series_at(z, 14).unwrap();
        prop_assume!((g * s.coeff(0) + 1.0).norm() > 0.3);
        let one = PowerSeries::one(z, 14);
        let num = s.scale(a).add(&one.scale(b)).unwrap();
        let den = s.scale(g).add(&one).unwrap();
        let t = num.mul(&den.recip().unwrap()).unwrap();
        let p = aharonov_phi(&s, 10).unwrap();
        let q = aharonov_phi(&t, 10).unwrap();
        for n in 1..=10 {
            prop_assert!(close(p.values[n], q.values[n], 1e-9), "{n}: {} vs {}", p.values[n], q.values[n]);
        }
    }

    #[test]
    fn capital_phi_is_affine_invariant(f in catalog_entry(), z in disk_point(0.5),
                                       a in disk_point(3.0), b in disk_point(3.0), lambda in 0.1..3.0f64) {
        prop_assume!(a.norm() > 1e-3);
        let s = f.series_at(z, 12).unwrap();
        let t = s.scale(a).add(&PowerSeries::one(z, 12).scale(b)).unwrap();
        let (Ok(p), Ok(q)) = (phi_capital_direct(&s, lambda, 10), phi_capital_direct(&t, lambda, 10)) else {
            return Ok(());
        };
        // Φₙ sums terms of size up to ρⁿ, ρ the growth rate of c_k/c₁; only
        // roundoff at that scale separates the two sides.
        let c1 = s.coeff(1);
        let rho = (2..=11)
            .map(|k| (s.coeff(k) / c1).norm().powf(1.0 / (k as f64 - 1.0)))
            .fold(1.0, f64::max);
        for n in 0..=10 {
            let tol = 64.0 * f64::EPSILON * (1.0 + rho).powi(n as i32);
            prop_assert!(close(p.values[n], q.values[n], tol), "{n}: {} vs {}", p.values[n], q.values[n]);
        }
    }

    #[test]
    fn coefficient_shift_matches_composition(f in catalog_entry(), zeta in disk_point(0.5), w in disk_point(0.5),
                                             lambda in prop::sample::select(vec![0.5, 1.0, 1.7])) {
        let z = MobiusShift::new(zeta).unwrap().eval(w);
        let Ok(at_z) = f.series_at(z, 9).and_then(|s| phi_capital_direct(&s, lambda, 8)) else {
            return Ok(());
        };
        let shifted = lemma2_coefficients(&at_z, zeta, w, 8).unwrap();
        let composed = phi_capital_direct(&f.automorphism_series(zeta, w, 9).unwrap(), lambda, 8).unwrap();
        for n in 0..=8 {
            prop_assert!((shifted[n] - composed.values[n]).norm() <= 1e-8);
        }
    }

    #[test]
    fn criterion_term_routes_agree(f in catalog_entry(), zeta in disk_point(0.6), lambda in 0.1..3.0f64) {
        let Ok(literal) = criterion_terms(&f, lambda, zeta, 12) else { return Ok(()) };
        let composed = criterion_terms_composed(&f, lambda, zeta, 12).unwrap();
        for n in 0..=12 {
            prop_assert!((literal[n] - composed[n]).norm() <= 1e-9, "{n}: {} vs {}", literal[n], composed[n]);
        }
    }

    #[test]
    fn criterion_terms_are_rotation_covariant(f in catalog_entry(), zeta in disk_point(0.6),
                                              theta in 0.0..std::f64::consts::TAU, lambda in 0.1..3.0f64) {
        let Some(g) = rotated(&f, theta) else { return Ok(()) };
        let Ok(a) = criterion_terms_composed(&f, lambda, zeta, 24) else { return Ok(()) };
        let b = criterion_terms_composed(&g, lambda, zeta * Complex64::from_polar(1.0, -theta), 24).unwrap();
        for n in 0..=24 {
            prop_assert!((a[n].norm() - b[n].norm()).abs() <= 1e-10 * a[n].norm().max(1.0));
        }
    }

    #[test]
    fn unit_lambda_reduces_to_aharonov_sum(f in catalog_entry(), zeta in disk_point(0.6)) {
        let Ok(r) = univalence_criterion(&f, 1.0, zeta, 40, 1e-9) else { return Ok(()) };
        let composed = f.automorphism_series(zeta, c(0.0, 0.0), 41).unwrap();
        let phi = aharonov_phi(&composed, 39).unwrap();
        let sum: f64 = (2..=40).map(|n| (n as f64 - 1.0) * phi.values[n - 1].norm_sqr()).sum();
        prop_assert!((r.partial_sum - sum).abs() <= 1e-10 * sum.max(1.0));
    }

    #[test]
    fn partial_sums_are_monotone_below_one(f in catalog_entry(), zeta in disk_point(0.6), lambda in 0.05..1.0f64) {
        let mut prev = f64::NEG_INFINITY;
        for n in [1, 2, 3, 5, 8, 13, 21] {
            let Ok(r) = univalence_criterion(&f, lambda, zeta, n, 1e-9) else { return Ok(()) };
            prop_assert!(r.partial_sum >= prev);
            prev = r.partial_sum;
        }
    }

    #[test]
    fn expansion_at_origin_matches_closed_form(f in catalog_entry(), w in disk_point(0.5)) {
        let s = f.series_at(c(0.0, 0.0), 48).unwrap();
        prop_assert!(close(s.eval(w), f.eval(w), 1e-8));
    }

    #[test]
    fn expansions_agree_under_recentering(f in catalog_entry(), z in disk_point(0.5), d in disk_point(0.1)) {
        // coefficient k about z+d is Σ_m binom(m,k) c_m d^{m−k}
        let here = f.series_at(z, 64).unwrap();
        let there = f.series_at(z + d, 8).unwrap();
        for k in 0..=8 {
            let mut sum = c(0.0, 0.0);
            let mut binom = 1.0;
            for m in k..=64 {
                if m > k {
                    binom *= m as f64 / (m - k) as f64;
                }
                sum += here.coeff(m) * binom * d.powu((m - k) as u32);
            }
            prop_assert!(close(sum, there.coeff(k), 1e-8), "{k}: {sum} vs {}", there.coeff(k));
        }
    }
}
