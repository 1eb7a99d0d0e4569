use proptest::prelude::*;
use univalent_core::{Complex64, PowerSeries};

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn coeffs(order: std::ops::RangeInclusive<usize>, bound: f64) -> impl Strategy<Value = Vec<Complex64>> {
    order.prop_flat_map(move |n| {
        prop::collection::vec((-bound..bound, -bound..bound).prop_map(|(a, b)| Complex64::new(a, b)), n + 1)
    })
}

fn series(order: std::ops::RangeInclusive<usize>, bound: f64) -> impl Strategy<Value = PowerSeries> {
    coeffs(order, bound).prop_map(|c| PowerSeries::new(zero(), c).unwrap())
}

/// Series with constant term 1, as required by real powers.
fn unit_series(order: std::ops::RangeInclusive<usize>, bound: f64) -> impl Strategy<Value = PowerSeries> {
    coeffs(order, bound).prop_map(|mut c| {
        c[0] = Complex64::new(1.0, 0.0);
        PowerSeries::new(zero(), c).unwrap()
    })
}

/// Constant term 1 and Σ|aₖ| < 1 for k ≥ 1, so a has no zero on the closed disk
/// and the coefficients of 1/a and a^λ stay bounded.
fn contractive_series(order: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PowerSeries> {
    coeffs(order, 0.5).prop_map(|mut c| {
        c[0] = Complex64::new(1.0, 0.0);
        for (k, v) in c.iter_mut().enumerate().skip(1) {
            *v *= 0.5f64.powi(k as i32);
        }
        PowerSeries::new(zero(), c).unwrap()
    })
}

fn max_rel_diff(a: &PowerSeries, b: &PowerSeries) -> f64 {
    let scale = a
        .coeffs()
        .iter()
        .chain(b.coeffs())
        .map(|c| c.norm())
        .fold(1.0, f64::max);
    (0..=a.order().max(b.order()))
        .map(|k| (a.coeff(k) - b.coeff(k)).norm())
        .fold(0.0, f64::max)
        / scale
}

proptest! {
    #[test]
    fn mul_commutes(a in series(0..=64, 1.0), b in series(0..=64, 1.0)) {
        prop_assert!(max_rel_diff(&a.mul(&b).unwrap(), &b.mul(&a).unwrap()) <= 1e-13);
    }

    #[test]
    fn mul_associates(a in series(0..=64, 1.0), b in series(0..=64, 1.0), c in series(0..=64, 1.0)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(max_rel_diff(&left, &right) <= 1e-13);
    }

    #[test]
    fn recip_inverts(a in contractive_series(0..=64)) {
        let product = a.mul(&a.recip().unwrap()).unwrap();
        prop_assert!(max_rel_diff(&product, &PowerSeries::one(zero(), a.order())) <= 1e-12);
    }

    #[test]
    fn pow_adds_exponents(a in unit_series(0..=32, 2.0), l1 in -2.0..2.0f64, l2 in -2.0..2.0f64) {
        let lhs = a.pow_real(l1 + l2).unwrap();
        let rhs = a.pow_real(l1).unwrap().mul(&a.pow_real(l2).unwrap()).unwrap();
        prop_assert!(max_rel_diff(&lhs, &rhs) <= 1e-10, "{}", max_rel_diff(&lhs, &rhs));
    }

    #[test]
    fn pow_one_is_identity(a in contractive_series(0..=64)) {
        let d = max_rel_diff(&a.pow_real(1.0).unwrap(), &a);
        prop_assert!(d <= 1e-14, "{d}");
    }

    #[test]
    fn pow_satisfies_ode(a in unit_series(1..=32, 1.0), lambda in -3.0..3.0f64) {
        let p = a.pow_real(lambda).unwrap();
        let lhs = p.derivative().unwrap().mul(&a).unwrap();
        let rhs = a.derivative().unwrap().mul(&p).unwrap().scale(Complex64::new(lambda, 0.0));
        prop_assert!(max_rel_diff(&lhs, &rhs) <= 1e-11);
    }

    #[test]
    fn exp_satisfies_ode(a in series(1..=32, 1.0)) {
        let mut c = a.coeffs().to_vec();
        c[0] = zero();
        let a = PowerSeries::new(zero(), c).unwrap();
        let e = a.exp().unwrap();
        let lhs = e.derivative().unwrap();
        let rhs = a.derivative().unwrap().mul(&e).unwrap();
        prop_assert!(max_rel_diff(&lhs, &rhs) <= 1e-11);
    }

    #[test]
    fn compose_with_variable_is_identity(a in series(1..=32, 1.0)) {
        let x = PowerSeries::variable(zero(), a.order());
        prop_assert!(max_rel_diff(&a.compose(&x).unwrap(), &a) <= 1e-15);
    }
}
