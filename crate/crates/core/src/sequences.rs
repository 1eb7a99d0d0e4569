//! The Aharonov sequence φₙ, the generalized sequence Φ_{λ,n}, the exterior
//! coefficients Ψₙ, and the local invariants N_f, S_f.
//!
//! With t = w − z and g(t) = (f(z+t) − f(z))/(f′(z)·t):
//!
//! * f′(z)/(f(w) − f(z)) = 1/t + Σ φₙ tⁿ, so φₙ is coefficient n+1 of 1/g;
//! * [f′(z)·t/(f(w) − f(z))]^λ = Σ Φ_{λ,n} tⁿ, i.e. Φ is (1/g)^λ.

use num_complex::Complex64;

use crate::catalog::CatalogFunction;
use crate::error::{check_in_disk, Error, Result};
use crate::series::{gen_binomial, PowerSeries};

/// |c₁| at or below this (relative to max(1, |c₂|)) counts as f′(z) = 0.
pub const CRITICAL_TOL: f64 = 1e-12;
/// Largest count accepted by the enumeration route.
pub const COMBINATORIAL_LIMIT: usize = 12;
/// Central-difference step for the recurrence check.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Pre-Schwarzian N_f = f″/f′ and Schwarzian S_f at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalInvariants {
    pub center: Complex64,
    pub pre_schwarzian: Complex64,
    pub schwarzian: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// φₙ
    Aharonov,
    /// Φ_{λ,n}
    Phi,
    /// Ψₙ
    Psi,
}

impl SequenceKind {
    pub fn label(self) -> &'static str {
        match self {
            SequenceKind::Aharonov => "phi",
            SequenceKind::Phi => "Phi",
            SequenceKind::Psi => "Psi",
        }
    }
}

/// Values of one sequence at a center, indexed from 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSet {
    pub kind: SequenceKind,
    /// Present only for [`SequenceKind::Phi`].
    pub lambda: Option<f64>,
    pub center: Complex64,
    pub values: Vec<Complex64>,
}

/// Returns c₁ = f′(center), or the "not locally univalent" error.
pub(crate) fn leading_coefficient(series: &PowerSeries) -> Result<Complex64> {
    let c1 = series.coeff(1);
    if c1.norm() <= CRITICAL_TOL * series.coeff(2).norm().max(1.0) {
        return Err(Error::NotLocallyUnivalent(series.center()));
    }
    Ok(c1)
}

fn require_order(series: &PowerSeries, need: usize) -> Result<()> {
    if series.order() < need {
        return Err(Error::OrderTooLow {
            have: series.order(),
            need,
        });
    }
    Ok(())
}

/// g(t) = (f(z+t) − f(z))/(c₁t) = 1 + (c₂/c₁)t + …, of order `series.order() − 1`.
fn difference_quotient(series: &PowerSeries) -> Result<PowerSeries> {
    let c1 = leading_coefficient(series)?;
    let coeffs = series.coeffs()[1..].iter().map(|c| c / c1).collect();
    PowerSeries::new(series.center(), coeffs)
}

/// Series of f′(z)·t/(f(z+t) − f(z)) = Σ Φ_{1,n} tⁿ, of order `series.order() − 1`.
pub fn normalized_reciprocal(series: &PowerSeries) -> Result<PowerSeries> {
    difference_quotient(series)?.recip()
}

pub fn local_invariants(series: &PowerSeries) -> Result<LocalInvariants> {
    require_order(series, 3)?;
    let c1 = leading_coefficient(series)?;
    let r2 = series.coeff(2) / c1;
    let r3 = series.coeff(3) / c1;
    Ok(LocalInvariants {
        center: series.center(),
        pre_schwarzian: 2.0 * r2,
        schwarzian: 6.0 * r3 - 6.0 * r2 * r2,
    })
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

/// φ₀..φ_count at the series center. Needs order ≥ count + 2.
pub fn aharonov_phi(series: &PowerSeries, count: usize) -> Result<SequenceSet> {
    require_order(series, count + 2)?;
    let recip = normalized_reciprocal(series)?;
    let values: Vec<Complex64> = recip.coeffs()[1..=count + 1].to_vec();
    if series.order() >= 3 {
        let inv = local_invariants(series)?;
        debug_assert!(close(values[0], -inv.pre_schwarzian / 2.0, 1e-11));
        debug_assert!(count < 1 || close(values[1], -inv.schwarzian / 6.0, 1e-11));
    }
    Ok(SequenceSet {
        kind: SequenceKind::Aharonov,
        lambda: None,
        center: series.center(),
        values,
    })
}

/// Relative residual of φ_{n+1} = [φₙ′ − Σ_{k=1}^{n−1} φₖ φ_{n−k}]/(n+3), with φₙ′ taken
/// by central differences of step `h`.
///
/// The residual is |lhs − rhs| / max(|lhs|, |rhs|, 1), so both-sides-zero cases
/// report absolute roundoff.
pub fn check_phi_recurrence(f: &CatalogFunction, z: Complex64, n: usize, h: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter("recurrence check needs n >= 1".into()));
    }
    if !(h > 0.0) {
        return Err(Error::InvalidParameter("step h must be positive".into()));
    }
    let step = Complex64::new(h, 0.0);
    check_in_disk("z+h", z + step)?;
    check_in_disk("z-h", z - step)?;
    let phi_at = |p: Complex64| -> Result<Vec<Complex64>> {
        Ok(aharonov_phi(&f.series_at(p, n + 3)?, n + 1)?.values)
    };
    let here = phi_at(z)?;
    let plus = phi_at(z + step)?;
    let minus = phi_at(z - step)?;
    let derivative = (plus[n] - minus[n]) / (2.0 * h);
    let products: Complex64 = (1..n).map(|k| here[k] * here[n - k]).sum();
    let rhs = (derivative - products) / (n as f64 + 3.0);
    let lhs = here[n + 1];
    Ok((lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1.0))
}

/// Φ_{λ,0..=count} as the coefficients of (1/g)^λ. Needs order ≥ count + 1.
pub fn phi_capital_direct(series: &PowerSeries, lambda: f64, count: usize) -> Result<SequenceSet> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")));
    }
    require_order(series, count + 1)?;
    let trimmed = series.truncated(count + 1);
    let powered = normalized_reciprocal(&trimmed)?.pow_real(lambda)?;
    let mut values = powered.into_coeffs();
    values[0] = Complex64::new(1.0, 0.0);
    if count >= 2 && series.order() >= 3 {
        let inv = local_invariants(series)?;
        let (nf, sf) = (inv.pre_schwarzian, inv.schwarzian);
        debug_assert!(close(values[1], -lambda * nf / 2.0, 1e-11));
        debug_assert!(close(
            values[2],
            -lambda * sf / 6.0 + lambda * (lambda - 1.0) * nf * nf / 8.0,
            1e-11
        ));
    }
    Ok(SequenceSet {
        kind: SequenceKind::Phi,
        lambda: Some(lambda),
        center: series.center(),
        values,
    })
}

/// Φ_{λ,0..=count} from φ by summing products over weak compositions:
/// Φₙ = Σ_{j=1}^{n} binom(λ, j) Σ_{k₁+…+k_j = n−j} φ_{k₁}⋯φ_{k_j}.
pub fn phi_capital_combinatorial(
    phi: &SequenceSet,
    lambda: f64,
    count: usize,
) -> Result<SequenceSet> {
    if phi.kind != SequenceKind::Aharonov {
        return Err(Error::InvalidParameter("expected a φ sequence".into()));
    }
    if count > COMBINATORIAL_LIMIT {
        return Err(Error::EnumerationLimit {
            count,
            limit: COMBINATORIAL_LIMIT,
        });
    }
    if count > 0 && phi.values.len() < count {
        return Err(Error::OrderTooLow {
            have: phi.values.len(),
            need: count,
        });
    }
    let mut values = vec![Complex64::new(1.0, 0.0)];
    for n in 1..=count {
        let mut total = Complex64::new(0.0, 0.0);
        for j in 1..=n {
            let mut tuple = vec![0usize; j];
            let mut sum = Complex64::new(0.0, 0.0);
            weak_compositions(n - j, 0, &mut tuple, &mut |parts| {
                sum += parts.iter().map(|&k| phi.values[k]).product::<Complex64>();
            });
            total += sum * gen_binomial(lambda, j);
        }
        values.push(total);
    }
    Ok(SequenceSet {
        kind: SequenceKind::Phi,
        lambda: Some(lambda),
        center: phi.center,
        values,
    })
}

/// Calls `visit` on every tuple of non-negative integers of length `tuple.len()`
/// summing to `remaining` (positions before `pos` already fixed).
fn weak_compositions(
    remaining: usize,
    pos: usize,
    tuple: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if pos + 1 == tuple.len() {
        tuple[pos] = remaining;
        visit(tuple);
        return;
    }
    for k in 0..=remaining {
        tuple[pos] = k;
        weak_compositions(remaining - k, pos + 1, tuple, visit);
    }
}

/// Ψ₀..Ψ_count at the series center z:
/// Ψ₀ = z̄ − (1−|z|²)N_f/2 and
/// Ψₙ = Σ_{k=1}^{n} binom(n−1, n−k)(−z̄)^{n−k}(1−|z|²)^{k+1} φₖ for n ≥ 1.
pub fn psi_sequence(series: &PowerSeries, count: usize) -> Result<SequenceSet> {
    let z = series.center();
    check_in_disk("z", z)?;
    let phi = aharonov_phi(series, count.max(1))?.values;
    let damp = 1.0 - z.norm_sqr();
    let neg_zbar = -z.conj();
    let mut values = Vec::with_capacity(count + 1);
    values.push(z.conj() + damp * phi[0]);
    for n in 1..=count {
        let v: Complex64 = (1..=n)
            .map(|k| {
                phi[k]
                    * neg_zbar.powu((n - k) as u32)
                    * damp.powi(k as i32 + 1)
                    * gen_binomial(n as f64 - 1.0, n - k)
            })
            .sum();
        values.push(v);
    }
    Ok(SequenceSet {
        kind: SequenceKind::Psi,
        lambda: None,
        center: z,
        values,
    })
}

/// Ψ₀..Ψ_count as φₙ(f∘σ_z; 0), read off the closed-form expansion of f∘σ_z.
///
/// Agrees with [`psi_sequence`] but avoids the alternating binomial sum, which
/// loses all accuracy once count reaches a few dozen away from z = 0.
pub fn psi_sequence_composed(f: &CatalogFunction, z: Complex64, count: usize) -> Result<SequenceSet> {
    check_in_disk("z", z)?;
    let composed = f.automorphism_series(z, Complex64::new(0.0, 0.0), count + 2)?;
    let values = match aharonov_phi(&composed, count) {
        Err(Error::NotLocallyUnivalent(_)) => return Err(Error::NotLocallyUnivalent(z)),
        other => other?.values,
    };
    Ok(SequenceSet {
        kind: SequenceKind::Psi,
        lambda: None,
        center: z,
        values,
    })
}
