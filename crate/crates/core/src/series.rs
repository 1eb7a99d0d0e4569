//! Truncated power series Σ cₖ (w − z₀)ᵏ with complex coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default truncation order used by the higher-level modules.
pub const DEFAULT_ORDER: usize = 32;
/// Largest order the command line accepts.
pub const MAX_ORDER: usize = 4096;

const CENTER_TOL: f64 = 1e-14;
const UNIT_TOL: f64 = 1e-12;

/// Generalized binomial coefficient α(α−1)⋯(α−m+1)/m!, with value 1 at m = 0.
///
/// The running product is divided as it goes, so large `m` does not overflow
/// a factorial. For integer α ≥ 0 and m > α a factor is exactly zero.
pub fn gen_binomial(alpha: f64, m: usize) -> f64 {
    let mut value = 1.0;
    for i in 0..m {
        value *= (alpha - i as f64) / (i + 1) as f64;
    }
    value
}

/// Truncated Taylor expansion about `center`; `coeffs[k]` multiplies (w − center)ᵏ.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    center: Complex64,
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds a series of order `coeffs.len() - 1`. Fails on an empty or non-finite input.
    pub fn new(center: Complex64, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a power series needs at least one coefficient".into(),
            ));
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if !center.is_finite() {
            return Err(Error::InvalidParameter("non-finite series center".into()));
        }
        Ok(PowerSeries { center, coeffs })
    }

    pub fn from_real(center: Complex64, coeffs: &[f64]) -> Result<Self> {
        Self::new(center, coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(center: Complex64, order: usize) -> Self {
        PowerSeries {
            center,
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
        }
    }

    pub fn one(center: Complex64, order: usize) -> Self {
        let mut s = Self::zero(center, order);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// The indeterminate t = w − center itself (requires order ≥ 1 to be non-trivial).
    pub fn variable(center: Complex64, order: usize) -> Self {
        let mut s = Self::zero(center, order);
        if order >= 1 {
            s.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        s
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient k, or zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::new(0.0, 0.0));
        PowerSeries {
            center: self.center,
            coeffs,
        }
    }

    /// Same coefficients, reinterpreted about another center.
    pub fn with_center(mut self, center: Complex64) -> Self {
        self.center = center;
        self
    }

    /// Copy with the constant term set to exactly zero.
    pub fn without_constant(&self) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = Complex64::new(0.0, 0.0);
        s
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        PowerSeries {
            center: self.center,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn check_center(&self, other: &PowerSeries) -> Result<()> {
        if (self.center - other.center).norm() > CENTER_TOL {
            Err(Error::CenterMismatch(self.center, other.center))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &PowerSeries) -> Result<Self> {
        self.check_center(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| self.coeffs[k] + other.coeffs[k]).collect();
        Ok(PowerSeries {
            center: self.center,
            coeffs,
        })
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &PowerSeries) -> Result<Self> {
        self.check_center(other)?;
        let order = self.order().min(other.order());
        Ok(PowerSeries {
            center: self.center,
            coeffs: cauchy(&self.coeffs, &other.coeffs, order),
        })
    }

    /// Multiplicative inverse by long division.
    pub fn recip(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == Complex64::new(0.0, 0.0) {
            return Err(Error::NonInvertible);
        }
        let inv0 = a0.inv();
        let mut b = Vec::with_capacity(self.coeffs.len());
        b.push(inv0);
        for n in 1..self.coeffs.len() {
            let acc: Complex64 = (1..=n).map(|k| self.coeffs[k] * b[n - k]).sum();
            b.push(-acc * inv0);
        }
        Self::new(self.center, b)
    }

    /// Term-wise derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderTooLow { have: 0, need: 1 });
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| self.coeffs[k] * k as f64)
            .collect();
        Ok(PowerSeries {
            center: self.center,
            coeffs,
        })
    }

    /// Real power of a series whose constant term is 1, on the branch with constant term 1.
    ///
    /// Uses n·a₀·bₙ = Σ_{k=1}^{n} ((λ+1)k − n)·aₖ·b_{n−k}, which is the coefficient form
    /// of b′·a = λ·a′·b.
    pub fn pow_real(&self, lambda: f64) -> Result<Self> {
        let a = &self.coeffs;
        if (a[0] - 1.0).norm() > UNIT_TOL {
            return Err(Error::UnnormalizedBase(a[0]));
        }
        let mut b = Vec::with_capacity(a.len());
        b.push(a[0].powf(lambda));
        for n in 1..a.len() {
            let nf = n as f64;
            let acc: Complex64 = (1..=n)
                .map(|k| a[k] * b[n - k] * ((lambda + 1.0) * k as f64 - nf))
                .sum();
            b.push(acc / (a[0] * nf));
        }
        Self::new(self.center, b)
    }

    /// Series exponential, via n·bₙ = Σ k·aₖ·b_{n−k}.
    pub fn exp(&self) -> Result<Self> {
        let a = &self.coeffs;
        let mut b = Vec::with_capacity(a.len());
        b.push(a[0].exp());
        for n in 1..a.len() {
            let acc: Complex64 = (1..=n).map(|k| a[k] * b[n - k] * k as f64).sum();
            b.push(acc / n as f64);
        }
        Self::new(self.center, b)
    }

    /// `self ∘ inner`, where `inner` maps t (about its own center) to increments
    /// about `self.center`. The result lives at `inner.center()`.
    pub fn compose(&self, inner: &PowerSeries) -> Result<Self> {
        let c0 = inner.coeffs[0];
        if c0 != Complex64::new(0.0, 0.0) {
            return Err(Error::NonzeroInnerConstant(c0));
        }
        let order = self.order().min(inner.order());
        let mut acc = vec![Complex64::new(0.0, 0.0); order + 1];
        acc[0] = self.coeffs[order];
        for k in (0..order).rev() {
            acc = cauchy(&acc, &inner.coeffs, order);
            acc[0] += self.coeffs[k];
        }
        Self::new(inner.center, acc)
    }

    /// Horner evaluation at w. Meaningful only inside the radius of convergence.
    pub fn eval(&self, w: Complex64) -> Complex64 {
        let t = w - self.center;
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * t + c)
    }

    /// Evaluation at the increment t = w − center.
    pub fn eval_increment(&self, t: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * t + c)
    }
}

fn cauchy(a: &[Complex64], b: &[Complex64], order: usize) -> Vec<Complex64> {
    (0..=order)
        .map(|n| (0..=n).map(|k| a[k] * b[n - k]).sum())
        .collect()
}
