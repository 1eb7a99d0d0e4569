//! Disk automorphisms, the Koebe transform, and the coefficient shift of Φ
//! under pre-composition with an automorphism.

use num_complex::Complex64;

use crate::catalog::CatalogFunction;
use crate::error::{check_in_disk, Error, Result};
use crate::sequences::{SequenceKind, SequenceSet};
use crate::series::{gen_binomial, PowerSeries};

/// σ_ζ(w) = (w+ζ)/(1+ζ̄w), an automorphism of the unit disk with σ_ζ(0) = ζ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusShift {
    zeta: Complex64,
}

impl MobiusShift {
    pub fn new(zeta: Complex64) -> Result<Self> {
        check_in_disk("zeta", zeta)?;
        Ok(MobiusShift { zeta })
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        (w + self.zeta) / (1.0 + self.zeta.conj() * w)
    }

    /// σ_ζ′(w) = (1−|ζ|²)/(1+ζ̄w)²
    pub fn derivative(&self, w: Complex64) -> Complex64 {
        let d = 1.0 + self.zeta.conj() * w;
        (1.0 - self.zeta.norm_sqr()) / (d * d)
    }

    /// Series in t of σ_ζ(w+t) − σ_ζ(w), about `w`. The constant term is exactly 0.
    ///
    /// σ_ζ(w+t) − σ_ζ(w) = A·t/(1 − q·t) with A = σ_ζ′(w), q = −ζ̄/(1+ζ̄w).
    pub fn increment_series(&self, w: Complex64, order: usize) -> Result<PowerSeries> {
        check_in_disk("w", w)?;
        let a = self.derivative(w);
        let q = -self.zeta.conj() / (1.0 + self.zeta.conj() * w);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        let mut term = a;
        for coeff in coeffs.iter_mut().skip(1) {
            *coeff = term;
            term *= q;
        }
        PowerSeries::new(w, coeffs)
    }

    /// Series at 0 of σ_ζ(w) − ζ; coefficient k ≥ 1 is (1−|ζ|²)(−ζ̄)^{k−1}.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.increment_series(Complex64::new(0.0, 0.0), order)
    }
}

/// Series at 0 of σ_ζ(w) − ζ, ready to feed [`PowerSeries::compose`].
pub fn mobius_sigma_series(zeta: Complex64, order: usize) -> Result<PowerSeries> {
    MobiusShift::new(zeta)?.series(order)
}

/// Series at 0 of F(w) = f(σ_ζ(w)), by composing the expansion of f at ζ with
/// the σ_ζ series.
///
/// Accurate at moderate orders. For long expansions near the boundary prefer
/// [`CatalogFunction::automorphism_series`], which avoids the cancellation in
/// the composition.
pub fn compose_with_automorphism(
    f: &CatalogFunction,
    zeta: Complex64,
    order: usize,
) -> Result<PowerSeries> {
    compose_with_automorphism_at(f, zeta, Complex64::new(0.0, 0.0), order)
}

/// Series about `w` of F = f∘σ_ζ, by composition of truncated series.
pub fn compose_with_automorphism_at(
    f: &CatalogFunction,
    zeta: Complex64,
    w: Complex64,
    order: usize,
) -> Result<PowerSeries> {
    let shift = MobiusShift::new(zeta)?;
    let outer = f.series_at(shift.eval(w), order)?;
    outer.compose(&shift.increment_series(w, order)?)
}

/// Series at 0 of the Koebe transform K_f(z;·) = (f∘σ_z − f(z))/((1−|z|²)f′(z)).
///
/// The result is normalized so that c₀ = 0 and c₁ = 1 exactly.
pub fn koebe_transform(f: &CatalogFunction, z: Complex64, order: usize) -> Result<PowerSeries> {
    crate::sequences::leading_coefficient(&f.series_at(z, 2)?)?;
    let composed = compose_with_automorphism(f, z, order.max(1))?;
    let scale = composed.coeff(1);
    let mut coeffs: Vec<Complex64> = composed.coeffs().iter().map(|c| c / scale).collect();
    coeffs[0] = Complex64::new(0.0, 0.0);
    coeffs[1] = Complex64::new(1.0, 0.0);
    PowerSeries::new(Complex64::new(0.0, 0.0), coeffs)
}

/// Φₙ(F; w) for F = f∘σ_ζ from the values Φₖ(f; z) at z = σ_ζ(w), n = 0..=count,
/// evaluated term by term from the double sum
///
/// Σ_{j=0}^{n} (−1)^{n−j} binom(λ, n−j) Σ_{k=0}^{j} binom(j−1, j−k)
///     (−ζ̄)^{n−k} (1−|ζ|²)^k (1+ζ̄w)^{−(n+k)} Φₖ(f; z).
pub fn lemma2_coefficients(
    phi_at_z: &SequenceSet,
    zeta: Complex64,
    w: Complex64,
    count: usize,
) -> Result<Vec<Complex64>> {
    if phi_at_z.kind != SequenceKind::Phi {
        return Err(Error::InvalidParameter(
            "coefficient shift needs a Φ sequence".into(),
        ));
    }
    let lambda = phi_at_z.lambda.unwrap_or(1.0);
    check_in_disk("zeta", zeta)?;
    check_in_disk("w", w)?;
    if count >= phi_at_z.values.len() {
        return Err(Error::OrderTooLow {
            have: phi_at_z.values.len().saturating_sub(1),
            need: count,
        });
    }
    Ok(shift_double_sum(
        &phi_at_z.values,
        lambda,
        zeta,
        1.0 + zeta.conj() * w,
        count,
    ))
}

/// The double sum shared by the coefficient shift and the criterion terms
/// (the latter is the w = 0 case, `denom` = 1).
pub(crate) fn shift_double_sum(
    phi: &[Complex64],
    lambda: f64,
    zeta: Complex64,
    denom: Complex64,
    count: usize,
) -> Vec<Complex64> {
    let neg_zbar = -zeta.conj();
    let damp = 1.0 - zeta.norm_sqr();
    let inv_denom = denom.inv();
    let lam_binom: Vec<f64> = (0..=count).map(|m| gen_binomial(lambda, m)).collect();
    let pow = |base: Complex64, e: usize| base.powu(e as u32);
    (0..=count)
        .map(|n| {
            let mut total = Complex64::new(0.0, 0.0);
            for j in 0..=n {
                let sign = if (n - j) % 2 == 0 { 1.0 } else { -1.0 };
                let mut inner = Complex64::new(0.0, 0.0);
                for (k, &phi_k) in phi.iter().enumerate().take(j + 1) {
                    let b = gen_binomial(j as f64 - 1.0, j - k);
                    if b == 0.0 {
                        continue;
                    }
                    inner += pow(neg_zbar, n - k)
                        * damp.powi(k as i32)
                        * pow(inv_denom, n + k)
                        * phi_k
                        * b;
                }
                total += inner * (sign * lam_binom[n - j]);
            }
            total
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::phi_capital_direct;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn sigma_series_examples() {
        let s = mobius_sigma_series(c(0.0), 3).unwrap();
        assert_eq!(s.coeffs(), &[c(0.0), c(1.0), c(0.0), c(0.0)]);
        let s = mobius_sigma_series(c(0.5), 2).unwrap();
        assert_eq!(s.coeffs(), &[c(0.0), c(0.75), c(-0.375)]);
        let zeta = Complex64::new(0.2, 0.6);
        let s = mobius_sigma_series(zeta, 6).unwrap();
        for k in 1..=6 {
            let want = (1.0 - zeta.norm_sqr()) * (-zeta.conj()).powu(k as u32 - 1);
            assert!((s.coeff(k) - want).norm() < 1e-15);
        }
        assert!(mobius_sigma_series(c(1.0), 3).is_err());
    }

    #[test]
    fn sigma_maps_zero_to_zeta_and_circle_to_circle() {
        let m = MobiusShift::new(Complex64::new(-0.3, 0.5)).unwrap();
        assert_eq!(m.eval(c(0.0)), m.zeta());
        for k in 0..12 {
            let w = Complex64::from_polar(1.0, k as f64 * 0.5);
            assert!((m.eval(w).norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn compose_examples() {
        let zeta = Complex64::new(0.3, -0.1);
        let s = compose_with_automorphism(&CatalogFunction::identity(), zeta, 5).unwrap();
        let sigma = mobius_sigma_series(zeta, 5).unwrap();
        assert!((s.coeff(0) - zeta).norm() < 1e-15);
        for k in 1..=5 {
            assert!((s.coeff(k) - sigma.coeff(k)).norm() < 1e-15);
        }
        let k = compose_with_automorphism(&CatalogFunction::koebe(), c(0.0), 6).unwrap();
        for n in 0..=6 {
            assert!((k.coeff(n) - c(n as f64)).norm() < 1e-14);
        }
        // Möbius∘Möbius: Schwarzian vanishes.
        let s = compose_with_automorphism(&CatalogFunction::cayley(), c(0.3), 6).unwrap();
        let inv = crate::sequences::local_invariants(&s).unwrap();
        assert!(inv.schwarzian.norm() < 1e-12);
    }

    #[test]
    fn koebe_transform_examples() {
        let z = Complex64::new(0.4, 0.2);
        let k = koebe_transform(&CatalogFunction::identity(), z, 8).unwrap();
        assert_eq!(k.coeff(0), c(0.0));
        assert_eq!(k.coeff(1), c(1.0));
        for n in 2..=8 {
            let want = (-z.conj()).powu(n as u32 - 1);
            assert!((k.coeff(n) - want).norm() < 1e-14, "n={n}");
        }
        let k = koebe_transform(&CatalogFunction::koebe(), c(0.0), 8).unwrap();
        for n in 0..=8 {
            assert!((k.coeff(n) - c(n as f64)).norm() < 1e-14);
        }
        let q = CatalogFunction::quad_poly(c(0.6)).unwrap();
        assert!(matches!(
            koebe_transform(&q, c(-5.0 / 6.0), 6),
            Err(Error::NotLocallyUnivalent(_))
        ));
    }

    #[test]
    fn lemma_identity_closed_form() {
        let lambda = 0.7;
        let zeta = Complex64::new(0.3, 0.4);
        let phi = SequenceSet {
            kind: SequenceKind::Phi,
            lambda: Some(lambda),
            center: zeta,
            values: {
                let mut v = vec![c(0.0); 11];
                v[0] = c(1.0);
                v
            },
        };
        let out = lemma2_coefficients(&phi, zeta, c(0.0), 10).unwrap();
        for (n, a) in out.iter().enumerate() {
            let want = gen_binomial(lambda, n) * zeta.conj().powu(n as u32);
            assert!((a - want).norm() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn lemma_zero_shift_is_identity() {
        let f = CatalogFunction::koebe();
        let w = Complex64::new(0.2, -0.1);
        let phi = phi_capital_direct(&f.series_at(w, 12).unwrap(), 0.5, 10).unwrap();
        let out = lemma2_coefficients(&phi, c(0.0), w, 10).unwrap();
        for n in 0..=10 {
            assert!((out[n] - phi.values[n]).norm() < 1e-13);
        }
    }

    #[test]
    fn lemma_koebe_matches_direct_route() {
        let f = CatalogFunction::koebe();
        let (lambda, zeta, w) = (0.5, c(0.4), c(0.1));
        let z = MobiusShift::new(zeta).unwrap().eval(w);
        let phi = phi_capital_direct(&f.series_at(z, 12).unwrap(), lambda, 10).unwrap();
        let via_lemma = lemma2_coefficients(&phi, zeta, w, 8).unwrap();
        let composed = compose_with_automorphism_at(&f, zeta, w, 12).unwrap();
        let direct = phi_capital_direct(&composed, lambda, 8).unwrap();
        for n in 0..=8 {
            assert!((via_lemma[n] - direct.values[n]).norm() < 1e-9, "n={n}");
        }
    }
}
