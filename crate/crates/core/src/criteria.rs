//! Prawitz sums, the criterion sums T_N = Σ (n−λ)|Aₙ|², full-mapping scans,
//! the boundedness probe and the decay bounds for φₙ and Φₙ.
//!
//! Aₙ(λ, f, ζ) equals Φₙ(f∘σ_ζ; 0). Reports compute it from the closed-form
//! expansion of f∘σ_ζ, which stays accurate at large N; the literal double sum
//! over Φₖ(f; ζ) is available as [`criterion_terms`] and is cross-checked on the
//! first [`ROUTE_CHECK_TERMS`] terms of every report.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::catalog::CatalogFunction;
use crate::error::{check_in_disk, Error, Result};
use crate::exec::{compensated_sum, Exec};
use crate::sequences::{aharonov_phi, phi_capital_direct};
use crate::series::gen_binomial;
use crate::transforms::shift_double_sum;

pub const DEFAULT_TOL: f64 = 1e-9;
/// Accepted gap λ − T_N for the full-mapping scan at N = 128.
pub const DEFAULT_SCAN_EPS: f64 = 0.05;
/// Terms compared between the literal double sum and the composed route.
pub const ROUTE_CHECK_TERMS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Violated,
    Indeterminate,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Violated => "violated",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub lambda: f64,
    pub zeta: Complex64,
    pub truncation: usize,
    /// A₁..A_N.
    pub terms: Vec<Complex64>,
    /// T_N
    pub partial_sum: f64,
    pub budget: f64,
    /// λ − T_N
    pub margin: f64,
    pub sup_abs_term: f64,
    pub verdict: Verdict,
    /// max |literal − composed| over the first terms.
    pub route_deviation: f64,
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")))
    }
}

/// Σ_{n=1}^{N} (n−λ)|aₙ|² for a₀..a_N.
pub fn weighted_area_sum(coeffs: &[Complex64], lambda: f64) -> f64 {
    let terms: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, a)| (n as f64 - lambda) * a.norm_sqr())
        .collect();
    compensated_sum(&terms)
}

/// Σ_{n=1}^{N} (n−λ)|aₙ(λ)|² where [z/f(z)]^λ = 1 + Σ aₙ(λ)zⁿ, for f with f(0)=0, f′(0)=1.
pub fn prawitz_sum_s(f: &CatalogFunction, lambda: f64, n_max: usize) -> Result<f64> {
    check_lambda(lambda)?;
    if !f.is_normalized() {
        return Err(Error::NotNormalized(f.id()));
    }
    let series = f.series_at(Complex64::new(0.0, 0.0), n_max + 1)?;
    let a = phi_capital_direct(&series, lambda, n_max)?;
    Ok(weighted_area_sum(&a.values, lambda))
}

/// A₀..A_N from the literal double sum over Φₖ(f; ζ).
///
/// Loses accuracy quickly with N when |ζ| is large; fine for N ≲ 20.
pub fn criterion_terms(
    f: &CatalogFunction,
    lambda: f64,
    zeta: Complex64,
    n_max: usize,
) -> Result<Vec<Complex64>> {
    check_lambda(lambda)?;
    check_in_disk("zeta", zeta)?;
    let phi = phi_capital_direct(&f.series_at(zeta, n_max + 1)?, lambda, n_max)?;
    Ok(shift_double_sum(
        &phi.values,
        lambda,
        zeta,
        Complex64::new(1.0, 0.0),
        n_max,
    ))
}

/// A₀..A_N as Φₙ(f∘σ_ζ; 0), from the closed-form expansion of f∘σ_ζ.
pub fn criterion_terms_composed(
    f: &CatalogFunction,
    lambda: f64,
    zeta: Complex64,
    n_max: usize,
) -> Result<Vec<Complex64>> {
    check_lambda(lambda)?;
    let composed = f.automorphism_series(zeta, Complex64::new(0.0, 0.0), n_max + 1)?;
    match phi_capital_direct(&composed, lambda, n_max) {
        Err(Error::NotLocallyUnivalent(_)) => Err(Error::NotLocallyUnivalent(zeta)),
        other => Ok(other?.values),
    }
}

/// Verdict for a truncated sum. For λ ≤ 1 every weight n−λ is non-negative, so
/// T_N only grows with N. For λ > 1 the omitted tail is non-negative once
/// N ≥ λ − 1; before that nothing can be certified.
pub fn verdict(lambda: f64, n_max: usize, partial_sum: f64, tol: f64) -> Verdict {
    if partial_sum <= lambda + tol {
        Verdict::Consistent
    } else if lambda <= 1.0 || n_max as f64 >= lambda - 1.0 {
        Verdict::Violated
    } else {
        Verdict::Indeterminate
    }
}

pub fn univalence_criterion(
    f: &CatalogFunction,
    lambda: f64,
    zeta: Complex64,
    n_max: usize,
    tol: f64,
) -> Result<CriterionReport> {
    check_in_disk("zeta", zeta)?;
    let a = criterion_terms_composed(f, lambda, zeta, n_max)?;
    let check = n_max.min(ROUTE_CHECK_TERMS);
    let literal = criterion_terms(f, lambda, zeta, check)?;
    let route_deviation = (0..=check)
        .map(|n| (literal[n] - a[n]).norm())
        .fold(0.0, f64::max);
    let partial_sum = weighted_area_sum(&a, lambda);
    let sup_abs_term = a[1..].iter().map(|v| v.norm()).fold(0.0, f64::max);
    Ok(CriterionReport {
        lambda,
        zeta,
        truncation: n_max,
        terms: a[1..].to_vec(),
        partial_sum,
        budget: lambda,
        margin: lambda - partial_sum,
        sup_abs_term,
        verdict: verdict(lambda, n_max, partial_sum, tol),
        route_deviation,
    })
}

/// max_{1≤n≤N} |Aₙ|.
pub fn boundedness_probe(
    f: &CatalogFunction,
    lambda: f64,
    zeta: Complex64,
    n_max: usize,
) -> Result<f64> {
    let a = criterion_terms_composed(f, lambda, zeta, n_max)?;
    Ok(a[1..].iter().map(|v| v.norm()).fold(0.0, f64::max))
}

/// Polar grid of ζ values: every radius times `angles` equally spaced angles,
/// with radius 0 contributing a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaGrid {
    pub radii: Vec<f64>,
    pub angles: usize,
}

impl Default for ZetaGrid {
    /// |ζ| ∈ {0, 0.2, 0.4, 0.6} × 16 angles.
    fn default() -> Self {
        ZetaGrid {
            radii: vec![0.0, 0.2, 0.4, 0.6],
            angles: 16,
        }
    }
}

impl ZetaGrid {
    pub fn new(radii: Vec<f64>, angles: usize) -> Result<Self> {
        if angles == 0 {
            return Err(Error::InvalidParameter("grid needs at least one angle".into()));
        }
        if let Some(r) = radii.iter().find(|r| !(**r >= 0.0 && **r < 1.0)) {
            return Err(Error::InvalidParameter(format!(
                "grid radius {r} outside [0, 1)"
            )));
        }
        Ok(ZetaGrid { radii, angles })
    }

    /// Points in stable order: radius-major, then angle index.
    pub fn points(&self) -> Vec<Complex64> {
        let mut out = Vec::new();
        for &r in &self.radii {
            if r == 0.0 {
                out.push(Complex64::new(0.0, 0.0));
                continue;
            }
            for a in 0..self.angles {
                out.push(Complex64::from_polar(r, 2.0 * PI * a as f64 / self.angles as f64));
            }
        }
        out
    }
}

/// One criterion report per grid point, in grid order.
pub fn scan(
    f: &CatalogFunction,
    lambda: f64,
    grid: &[Complex64],
    n_max: usize,
    tol: f64,
    exec: Exec,
) -> Result<Vec<CriterionReport>> {
    exec.try_map(grid.len(), |i| univalence_criterion(f, lambda, grid[i], n_max, tol))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub zeta: Complex64,
    pub partial_sum: f64,
    /// λ − T_N
    pub gap: f64,
    pub verdict: Verdict,
    /// T_1 ≤ T_2 ≤ … ≤ T_N.
    pub monotone: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FullMapScan {
    pub lambda: f64,
    pub truncation: usize,
    pub eps: f64,
    pub rows: Vec<ScanRow>,
    /// Every gap lies in [−tol, eps].
    pub full_mapping_consistent: bool,
}

/// Gap table over a ζ-grid for λ ≤ 1, where truncated sums converge from below.
pub fn fullmap_scan(
    f: &CatalogFunction,
    lambda: f64,
    grid: &[Complex64],
    n_max: usize,
    tol: f64,
    eps: f64,
    exec: Exec,
) -> Result<FullMapScan> {
    check_lambda(lambda)?;
    if lambda > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "full-mapping scan needs lambda <= 1, got {lambda}"
        )));
    }
    let rows = exec.try_map(grid.len(), |i| -> Result<ScanRow> {
        let zeta = grid[i];
        let a = criterion_terms_composed(f, lambda, zeta, n_max)?;
        let mut running = 0.0;
        let mut monotone = true;
        for (n, v) in a.iter().enumerate().skip(1) {
            let next = running + (n as f64 - lambda) * v.norm_sqr();
            monotone &= next >= running;
            running = next;
        }
        let partial_sum = weighted_area_sum(&a, lambda);
        Ok(ScanRow {
            zeta,
            partial_sum,
            gap: lambda - partial_sum,
            verdict: verdict(lambda, n_max, partial_sum, tol),
            monotone,
        })
    })?;
    let full_mapping_consistent = rows.iter().all(|r| r.gap >= -tol && r.gap <= eps);
    Ok(FullMapScan {
        lambda,
        truncation: n_max,
        eps,
        rows,
        full_mapping_consistent,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub n: usize,
    /// (1−|z|²)^{n+1}|φₙ|
    pub phi_lhs: f64,
    /// Σ_{k=1}^{n} binom(n−1,k−1)|z|^{n−k}/√k
    pub phi_rhs: f64,
    /// (1−|z|²)ⁿ|Φ_{λ,n}|
    pub capital_lhs: f64,
    /// Σ_j binom(λ,n−j) Σ_k binom(j−1,j−k)·√λ/√|k−λ|·|z|^{n−k}
    pub capital_rhs: f64,
}

impl DecayRow {
    pub fn phi_slack(&self) -> f64 {
        self.phi_rhs - self.phi_lhs
    }

    pub fn capital_slack(&self) -> f64 {
        self.capital_rhs - self.capital_lhs
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport {
    pub z: Complex64,
    pub lambda: f64,
    pub rows: Vec<DecayRow>,
    /// Smallest slack over both bounds and all n.
    pub worst_slack: f64,
}

/// Evaluates both decay bounds for n = 1..=N at z.
pub fn decay_bound_checks(
    f: &CatalogFunction,
    z: Complex64,
    n_max: usize,
    lambda: f64,
) -> Result<DecayReport> {
    if !f.flags().univalent_on_disk {
        return Err(Error::NotUnivalent(f.id()));
    }
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "decay bound needs 0 < lambda < 1, got {lambda}"
        )));
    }
    check_in_disk("z", z)?;
    let series = f.series_at(z, n_max + 2)?;
    let phi = aharonov_phi(&series, n_max)?.values;
    let capital = phi_capital_direct(&series, lambda, n_max)?.values;
    let r = z.norm();
    let damp = 1.0 - r * r;
    let rows: Vec<DecayRow> = (1..=n_max)
        .map(|n| {
            let nf = n as f64;
            let phi_rhs = (1..=n)
                .map(|k| gen_binomial(nf - 1.0, k - 1) * r.powi((n - k) as i32) / (k as f64).sqrt())
                .sum();
            let capital_rhs = (0..=n)
                .map(|j| {
                    let inner: f64 = (0..=j)
                        .map(|k| {
                            gen_binomial(j as f64 - 1.0, j - k) * lambda.sqrt()
                                / (k as f64 - lambda).abs().sqrt()
                                * r.powi((n - k) as i32)
                        })
                        .sum();
                    gen_binomial(lambda, n - j) * inner
                })
                .sum();
            DecayRow {
                n,
                phi_lhs: damp.powi(n as i32 + 1) * phi[n].norm(),
                phi_rhs,
                capital_lhs: damp.powi(n as i32) * capital[n].norm(),
                capital_rhs,
            }
        })
        .collect();
    let worst_slack = rows
        .iter()
        .map(|r| r.phi_slack().min(r.capital_slack()))
        .fold(f64::INFINITY, f64::min);
    Ok(DecayReport {
        z,
        lambda,
        rows,
        worst_slack,
    })
}
