//! Polar quadrature on the unit disk and the disk integrals built on it: the
//! weighted Prawitz integral, the Grunsky kernel and norm, and the Ψ/Grunsky
//! identity check.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::catalog::CatalogFunction;
use crate::error::{check_in_disk, Error, Result};
use crate::exec::{compensated_sum, Exec};
use crate::sequences::{aharonov_phi, leading_coefficient, normalized_reciprocal, psi_sequence_composed};
use crate::series::PowerSeries;

/// Truncation order of the near-diagonal series.
pub const NEAR_ORDER: usize = 32;
/// δ = DELTA_FACTOR·(1−|z|).
pub const DELTA_FACTOR: f64 = 0.15;
const AUDIT_SAMPLES: usize = 64;

pub fn default_delta(z: Complex64) -> f64 {
    DELTA_FACTOR * (1.0 - z.norm())
}

/// Gauss–Legendre nodes and weights on [0, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let p = p1;
            dp = nf * (x * p - p0) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSpec {
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    pub grading: f64,
    pub center: Complex64,
}

impl MeshSpec {
    pub fn new(radial_nodes: usize, angular_nodes: usize, grading: f64, center: Complex64) -> Result<Self> {
        if radial_nodes < 8 || angular_nodes < 8 {
            return Err(Error::InvalidParameter(format!(
                "mesh needs at least 8 nodes per direction, got {radial_nodes}x{angular_nodes}"
            )));
        }
        if !(grading >= 1.0 && grading.is_finite()) {
            return Err(Error::InvalidParameter(format!("mesh grading must be >= 1, got {grading}")));
        }
        check_in_disk("mesh center", center)?;
        Ok(MeshSpec {
            radial_nodes,
            angular_nodes,
            grading,
            center,
        })
    }

    /// 256 × 256 nodes, grading 2.
    pub fn default_at(center: Complex64) -> Self {
        MeshSpec {
            radial_nodes: 256,
            angular_nodes: 256,
            grading: 2.0,
            center,
        }
    }

    pub fn recentered(self, center: Complex64) -> Self {
        MeshSpec { center, ..self }
    }

    pub fn refined(self) -> Self {
        MeshSpec {
            radial_nodes: 2 * self.radial_nodes,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub mesh: MeshSpec,
}

/// Distance from c to the unit circle along direction θ.
pub fn chord_length(c: Complex64, theta: f64) -> f64 {
    let b = (c.conj() * Complex64::from_polar(1.0, theta)).re;
    -b + (1.0 - c.norm_sqr() + b * b).sqrt()
}

/// Angular nodes and weights. Without breaks this is the uniform trapezoid
/// rule; with breaks the circle is split into panels at those angles, each
/// carrying Gauss–Legendre nodes graded toward both panel ends.
fn angular_rule(n: usize, breaks: &[f64]) -> Vec<(f64, f64)> {
    if breaks.is_empty() {
        let h = 2.0 * PI / n as f64;
        return (0..n).map(|j| (j as f64 * h, h)).collect();
    }
    let mut b: Vec<f64> = breaks.iter().map(|t| t.rem_euclid(2.0 * PI)).collect();
    b.sort_by(f64::total_cmp);
    b.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
    let mut rule = Vec::with_capacity(n + 8 * b.len());
    for (i, &start) in b.iter().enumerate() {
        let end = if i + 1 < b.len() { b[i + 1] } else { b[0] + 2.0 * PI };
        let len = end - start;
        let m = ((n as f64 * len / (2.0 * PI)).round() as usize).max(8);
        let (u, v) = gauss_legendre(m);
        for (uk, vk) in u.iter().zip(&v) {
            // ψ(u) = u²/(u² + (1−u)²)
            let d = uk * uk + (1.0 - uk) * (1.0 - uk);
            let psi = uk * uk / d;
            let dpsi = 2.0 * uk * (1.0 - uk) / (d * d);
            rule.push((start + len * psi, len * dpsi * vk));
        }
    }
    rule
}

fn integrate_once<F>(integrand: &F, mesh: &MeshSpec, breaks: &[f64], exec: Exec) -> Result<f64>
where
    F: Fn(Complex64) -> f64 + Sync + ?Sized,
{
    let (s, ws) = gauss_legendre(mesh.radial_nodes);
    let g = mesh.grading;
    let angles = angular_rule(mesh.angular_nodes, breaks);
    let rays = exec.try_map(angles.len(), |j| -> Result<f64> {
        let (theta, weight) = angles[j];
        let dir = Complex64::from_polar(1.0, theta);
        let rmax = chord_length(mesh.center, theta);
        let mut terms = Vec::with_capacity(s.len());
        for (sk, wk) in s.iter().zip(&ws) {
            // r = rmax·s^g, dr = g·rmax·s^{g−1} ds
            let r = rmax * sk.powf(g);
            let jac = g * rmax * sk.powf(g - 1.0);
            let w = mesh.center + dir * r;
            let v = integrand(w);
            if !v.is_finite() {
                return Err(Error::SingularSample(w));
            }
            terms.push(wk * v * r * jac);
        }
        Ok(weight * compensated_sum(&terms))
    })?;
    Ok(compensated_sum(&rays) / PI)
}

/// (1/π)∬_D integrand dA; the error estimate compares against a mesh with
/// doubled radial nodes, whose value is reported.
pub fn integrate_disk<F>(integrand: &F, mesh: MeshSpec, exec: Exec) -> Result<QuadratureResult>
where
    F: Fn(Complex64) -> f64 + Sync + ?Sized,
{
    integrate_disk_with_breaks(integrand, mesh, &[], exec)
}

/// As [`integrate_disk`], with the angular rule split at the directions of
/// the boundary points `singular` as seen from the mesh center.
pub fn integrate_disk_with_breaks<F>(
    integrand: &F,
    mesh: MeshSpec,
    singular: &[Complex64],
    exec: Exec,
) -> Result<QuadratureResult>
where
    F: Fn(Complex64) -> f64 + Sync + ?Sized,
{
    let mesh = MeshSpec::new(mesh.radial_nodes, mesh.angular_nodes, mesh.grading, mesh.center)?;
    let breaks: Vec<f64> = singular.iter().map(|p| (p - mesh.center).arg()).collect();
    let coarse = integrate_once(integrand, &mesh, &breaks, exec)?;
    let fine = integrate_once(integrand, &mesh.refined(), &breaks, exec)?;
    Ok(QuadratureResult {
        value: fine,
        error_estimate: (coarse - fine).abs(),
        mesh,
    })
}

fn check_univalent(f: &CatalogFunction) -> Result<()> {
    if f.flags().univalent_on_disk {
        Ok(())
    } else {
        Err(Error::NotUnivalent(f.id()))
    }
}

/// Integrand of the weighted Prawitz integral about z.
///
/// For |w−z| < δ it uses P(t)/t as a series in t = w−z, built from the
/// Koebe-transform expansion, so the removable zero of P is never evaluated
/// by cancellation.
pub struct PrawitzIntegrand<'a> {
    f: &'a CatalogFunction,
    lambda: f64,
    z: Complex64,
    delta: f64,
    fz: Complex64,
    c1: Complex64,
    weight: f64,
    near: PowerSeries,
}

impl<'a> PrawitzIntegrand<'a> {
    pub fn new(f: &'a CatalogFunction, lambda: f64, z: Complex64, delta: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "integral form needs 0 < lambda <= 1, got {lambda}"
            )));
        }
        check_in_disk("z", z)?;
        let series = f.series_at(z, NEAR_ORDER + 2)?;
        let c1 = leading_coefficient(&series)?;
        let recip = normalized_reciprocal(&series)?;
        let derivative = series.derivative()?.scale(c1.inv());
        let first = derivative.mul(&recip)?.mul(&recip.pow_real(lambda)?)?;
        let damp = 1.0 - z.norm_sqr();
        let mut base = vec![Complex64::new(0.0, 0.0); NEAR_ORDER + 1];
        base[0] = Complex64::new(1.0, 0.0);
        base[1] = -z.conj() / damp;
        let second = PowerSeries::new(z, base)?.pow_real(-(1.0 - lambda))?;
        let p = first.truncated(NEAR_ORDER).sub(&second)?;
        let near = PowerSeries::new(z, p.coeffs()[1..].to_vec())?;
        Ok(PrawitzIntegrand {
            f,
            lambda,
            z,
            delta,
            fz: f.eval(z),
            c1,
            weight: damp.powf(2.0 * lambda),
            near,
        })
    }

    /// q(w) = f′(z)(w−z)/(f(w)−f(z)).
    pub fn q(&self, w: Complex64) -> Complex64 {
        self.c1 * (w - self.z) / (self.f.eval(w) - self.fz)
    }

    /// log q(w) on the branch with log q(z) = 0, continued along the segment
    /// from z. Steps halve until arg q turns by less than π/2 per step; NaN if
    /// that fails, which the integrator reports as a singular sample.
    pub fn log_q(&self, w: Complex64) -> Complex64 {
        let t = w - self.z;
        let r = t.norm();
        let dir = t / r;
        let mut cur = r.min(0.5 * default_delta(self.z));
        let mut prev = self.q(self.z + dir * cur);
        let mut log = prev.ln();
        while cur < r {
            let mut next = (1.25 * cur).min(r);
            loop {
                let qn = self.q(self.z + dir * next);
                let step = (qn / prev).ln();
                if step.im.abs() <= FRAC_PI_2 {
                    log += step;
                    prev = qn;
                    cur = next;
                    break;
                }
                next = cur + 0.5 * (next - cur);
                if next - cur < 1e-12 {
                    return Complex64::new(f64::NAN, f64::NAN);
                }
            }
        }
        log
    }

    pub fn eval(&self, w: Complex64) -> f64 {
        let t = w - self.z;
        let r = t.norm();
        if r < self.delta {
            return self.weight * self.near.eval_increment(t).norm_sqr() / r.powf(2.0 * self.lambda);
        }
        let log_q = self.log_q(w);
        // f′(w)(w−z)/(f(w)−f(z)) = q·f′(w)/f′(z)
        let first = self.f.derivative(w) / self.c1 * (log_q * (1.0 + self.lambda)).exp();
        // Re(1 − z̄w) > 0 on the disk, so the principal power is the continued one
        let damp = 1.0 - self.z.norm_sqr();
        let second = (damp / (1.0 - self.z.conj() * w)).powf(1.0 - self.lambda);
        self.weight * (first - second).norm_sqr() / r.powf(2.0 + 2.0 * self.lambda)
    }
}

/// Samples arg q along every mesh ray beyond δ and returns the first point
/// where the principal argument jumps by more than π, if any. Past such a
/// point the principal power q^λ is not the continued branch.
pub fn branch_audit(f: &CatalogFunction, z: Complex64, mesh: &MeshSpec, delta: f64) -> Result<Option<Complex64>> {
    let series = f.series_at(z, 2)?;
    let c1 = leading_coefficient(&series)?;
    let fz = f.eval(z);
    let dtheta = 2.0 * PI / mesh.angular_nodes as f64;
    for j in 0..mesh.angular_nodes {
        let theta = j as f64 * dtheta;
        let dir = Complex64::from_polar(1.0, theta);
        let rmax = chord_length(z, theta);
        if rmax <= delta {
            continue;
        }
        let mut prev: Option<f64> = None;
        for k in 0..=AUDIT_SAMPLES {
            let r = delta + (rmax - delta) * k as f64 / AUDIT_SAMPLES as f64 * (1.0 - 1e-9);
            let w = z + dir * r;
            let arg = (c1 * (w - z) / (f.eval(w) - fz)).arg();
            if let Some(p) = prev {
                if (arg - p).abs() > PI {
                    return Ok(Some(w));
                }
            }
            prev = Some(arg);
        }
    }
    Ok(None)
}

/// (1−|z|²)^{2λ}/π ∬_D |P(f;z,w)|²/|w−z|^{2(1+λ)} dA(w).
///
/// `delta` defaults to 0.15(1−|z|). The λ-power of q is the branch continued
/// from q(z) = 1, which can differ from the principal power near boundary
/// poles; see [`branch_audit`].
pub fn prawitz_integral(
    f: &CatalogFunction,
    lambda: f64,
    z: Complex64,
    mesh: MeshSpec,
    delta: Option<f64>,
    exec: Exec,
) -> Result<QuadratureResult> {
    check_univalent(f)?;
    check_in_disk("z", z)?;
    let mesh = mesh.recentered(z);
    let integrand = PrawitzIntegrand::new(f, lambda, z, delta.unwrap_or_else(|| default_delta(z)))?;
    integrate_disk_with_breaks(&|w| integrand.eval(w), mesh, &f.boundary_singularities(), exec)
}

/// U(f;z,·) with the series route −Σ n·φₙ tⁿ⁻¹ for |t| < δ.
pub struct GrunskyKernel<'a> {
    f: &'a CatalogFunction,
    z: Complex64,
    delta: f64,
    fz: Complex64,
    fpz: Complex64,
    near: PowerSeries,
}

impl<'a> GrunskyKernel<'a> {
    pub fn new(f: &'a CatalogFunction, z: Complex64, delta: f64) -> Result<Self> {
        check_in_disk("z", z)?;
        let series = f.series_at(z, NEAR_ORDER + 2)?;
        let phi = aharonov_phi(&series, NEAR_ORDER)?;
        let coeffs = (1..=NEAR_ORDER)
            .map(|n| -(n as f64) * phi.values[n])
            .collect();
        Ok(GrunskyKernel {
            f,
            z,
            delta,
            fz: f.eval(z),
            fpz: leading_coefficient(&series)?,
            near: PowerSeries::new(z, coeffs)?,
        })
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        let t = w - self.z;
        if t.norm() < self.delta {
            return self.near.eval_increment(t);
        }
        self.direct(w)
    }

    /// f′(z)f′(w)/(f(w)−f(z))² − 1/(z−w)².
    pub fn direct(&self, w: Complex64) -> Complex64 {
        let d = self.f.eval(w) - self.fz;
        self.fpz * self.f.derivative(w) / (d * d) - (self.z - w).powi(-2)
    }

    pub fn series_route(&self, w: Complex64) -> Complex64 {
        self.near.eval_increment(w - self.z)
    }
}

pub fn grunsky_kernel_point(f: &CatalogFunction, z: Complex64, w: Complex64, delta: f64) -> Result<Complex64> {
    Ok(GrunskyKernel::new(f, z, delta)?.eval(w))
}

/// U_f(z) = ((1/π)∬_D |U(f;z,w)|² dA)^{1/2}.
pub fn grunsky_norm(
    f: &CatalogFunction,
    z: Complex64,
    mesh: MeshSpec,
    delta: Option<f64>,
    exec: Exec,
) -> Result<QuadratureResult> {
    check_univalent(f)?;
    let kernel = GrunskyKernel::new(f, z, delta.unwrap_or_else(|| default_delta(z)))?;
    let squared = integrate_disk_with_breaks(
        &|w| kernel.eval(w).norm_sqr(),
        mesh.recentered(z),
        &f.boundary_singularities(),
        exec,
    )?;
    let value = squared.value.max(0.0).sqrt();
    let coarse = (squared.value + squared.error_estimate).sqrt();
    Ok(QuadratureResult {
        value,
        error_estimate: (coarse - value).abs(),
        mesh: squared.mesh,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrunskyIdentity {
    /// Σ_{n=1}^{N} n|Ψₙ|²
    pub psi_sum: f64,
    /// (1−|z|²)²·U_f(z)²
    pub grunsky_side: f64,
    pub norm: QuadratureResult,
    pub residual: f64,
}

/// Compares Σ n|Ψₙ(f;z)|² against (1−|z|²)²·U_f(z)².
pub fn psi_grunsky_identity_check(
    f: &CatalogFunction,
    z: Complex64,
    n_max: usize,
    mesh: MeshSpec,
    delta: Option<f64>,
    exec: Exec,
) -> Result<GrunskyIdentity> {
    if n_max < 32 {
        return Err(Error::OrderTooLow { have: n_max, need: 32 });
    }
    check_univalent(f)?;
    let psi = psi_sequence_composed(f, z, n_max)?;
    let terms: Vec<f64> = (1..=n_max)
        .map(|n| n as f64 * psi.values[n].norm_sqr())
        .collect();
    let psi_sum = compensated_sum(&terms);
    let norm = grunsky_norm(f, z, mesh, delta, exec)?;
    let grunsky_side = (1.0 - z.norm_sqr()).powi(2) * norm.value * norm.value;
    let residual = (psi_sum - grunsky_side).abs() / psi_sum.max(grunsky_side).max(1e-12);
    Ok(GrunskyIdentity {
        psi_sum,
        grunsky_side,
        norm,
        residual,
    })
}
