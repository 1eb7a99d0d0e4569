//! Independent oracles: criterion terms from contour integrals of pointwise
//! closed-form evaluations, and the frozen non-univalence witness for e^{4z}.

use std::f64::consts::TAU;

use univalent_core::acceptance::{WITNESS_N, WITNESS_ZETA};
use univalent_core::criteria::{criterion_terms_composed, scan, univalence_criterion, Verdict, ZetaGrid};
use univalent_core::{CatalogFunction, Complex64, Exec};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Aₙ = Φₙ(f∘σ_ζ; 0) for n ≤ count, from the Fourier coefficients of
/// [F′(0)x/(F(x) − F(0))]^λ on |x| = ρ. The log is continued from x = 0
/// and unwrapped around the circle; its mean must vanish (it equals log 1).
fn contour_terms(f: &CatalogFunction, lambda: f64, zeta: Complex64, count: usize) -> Vec<Complex64> {
    let rho = 0.7;
    let m = 512;
    let sigma = |x: Complex64| (x + zeta) / (1.0 + zeta.conj() * x);
    let f0 = f.eval(zeta);
    let d0 = f.derivative(zeta) * (1.0 - zeta.norm_sqr());
    let h = |x: Complex64| d0 * x / (f.eval(sigma(x)) - f0);

    // radially from 1e-3 to ρ along θ = 0
    let mut prev = h(c(1e-3, 0.0));
    let mut log = prev.ln();
    for k in 1..=200 {
        let x = c(1e-3 + (rho - 1e-3) * k as f64 / 200.0, 0.0);
        let next = h(x);
        log += (next / prev).ln();
        prev = next;
    }
    let mut logs = Vec::with_capacity(m);
    logs.push(log);
    for j in 1..m {
        let next = h(Complex64::from_polar(rho, TAU * j as f64 / m as f64));
        log += (next / prev).ln();
        prev = next;
        logs.push(log);
    }
    let mean: Complex64 = logs.iter().sum::<Complex64>() / m as f64;
    assert!(mean.norm() < 1e-10, "log mean {mean}");

    (0..=count)
        .map(|n| {
            let s: Complex64 = logs
                .iter()
                .enumerate()
                .map(|(j, l)| (l * lambda).exp() * Complex64::from_polar(1.0, -TAU * (j * n) as f64 / m as f64))
                .sum();
            s / m as f64 / rho.powi(n as i32)
        })
        .collect()
}

#[test]
fn criterion_terms_match_contour_integrals() {
    let cases = [
        (CatalogFunction::koebe(), c(0.4, 0.3)),
        (CatalogFunction::rotated_koebe(1.0).unwrap(), c(-0.2, 0.5)),
        (CatalogFunction::bounded(c(0.0, 1.0)).unwrap(), c(0.3, -0.3)),
        (CatalogFunction::exp_scale(c(1.0, 0.0)).unwrap(), c(0.5, 0.1)),
        (CatalogFunction::quad_poly(c(0.25, 0.0)).unwrap(), c(-0.3, -0.2)),
        (CatalogFunction::disk_automorphism(c(0.3, 0.2)).unwrap(), c(0.1, 0.6)),
    ];
    for (f, zeta) in cases {
        for lambda in [0.3, 0.5, 1.0, 1.7] {
            let oracle = contour_terms(&f, lambda, zeta, 24);
            let terms = criterion_terms_composed(&f, lambda, zeta, 24).unwrap();
            for n in 0..=24 {
                assert!(
                    (oracle[n] - terms[n]).norm() <= 1e-9 * terms[n].norm().max(1.0),
                    "{} lambda={lambda} zeta={zeta} n={n}: {} vs {}",
                    f.id(),
                    oracle[n],
                    terms[n]
                );
            }
        }
    }
}

#[test]
fn exp_witness_closed_form() {
    // [4t/(e^{4t} − 1)]^{1/2} = 1 − t + t²/6 + …, so T₁ = 1/2 and T₂ = 1/2 + (3/2)/36 = 13/24
    let f = CatalogFunction::exp_scale(c(4.0, 0.0)).unwrap();
    let a = criterion_terms_composed(&f, 0.5, c(0.0, 0.0), 2).unwrap();
    assert!((a[1] - c(-1.0, 0.0)).norm() < 1e-14);
    assert!((a[2] - c(1.0 / 6.0, 0.0)).norm() < 1e-14);

    let r = univalence_criterion(&f, 0.5, WITNESS_ZETA, WITNESS_N, 1e-9).unwrap();
    assert!((r.partial_sum - 13.0 / 24.0).abs() < 1e-14);
    assert_eq!(r.verdict, Verdict::Violated);

    // ζ* is the first grid point; at N = 1 it sits exactly on the budget
    let grid = ZetaGrid::default().points();
    assert_eq!(grid[0], WITNESS_ZETA);
    let r = univalence_criterion(&f, 0.5, WITNESS_ZETA, 1, 1e-9).unwrap();
    assert!((r.partial_sum - 0.5).abs() < 1e-15);
    assert_eq!(r.verdict, Verdict::Consistent);
}

#[test]
fn exp_scan_on_default_grid_finds_violations() {
    let f = CatalogFunction::exp_scale(c(4.0, 0.0)).unwrap();
    let grid = ZetaGrid::default().points();
    let rows = scan(&f, 0.5, &grid, 96, 1e-9, Exec::default()).unwrap();
    assert!(rows.iter().any(|r| r.verdict == Verdict::Violated));
    // a univalent neighbour at the threshold stays consistent on the same grid
    let g = CatalogFunction::exp_scale(c(std::f64::consts::PI, 0.0)).unwrap();
    let rows = scan(&g, 0.5, &grid, 96, 1e-9, Exec::default()).unwrap();
    assert!(rows.iter().all(|r| r.verdict == Verdict::Consistent));
}
