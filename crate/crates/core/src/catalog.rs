//! Closed-form test functions on the unit disk with ground-truth flags.
//!
//! Every entry except the exponential is a rational function N(z)/D(z) of low
//! degree; expansions about any center come from an exact Taylor shift of the
//! two polynomials followed by series division. Nothing is differentiated
//! numerically.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{check_in_disk, Error, Result};
use crate::series::PowerSeries;
use crate::transforms::MobiusShift;

/// Ground truth about the function on the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnivalenceFlags {
    pub locally_univalent_on_disk: bool,
    pub univalent_on_disk: bool,
    /// The image misses only a set of zero area.
    pub full_mapping: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionKind {
    /// z
    Identity,
    /// z/(1−z)²
    Koebe,
    /// e^{−iθ}·k(e^{iθ}z)
    RotatedKoebe { theta: f64 },
    /// z/(1−bz) with |b| ≤ 1
    Bounded { b: Complex64 },
    /// σ_ζ(z) = (z+ζ)/(1+ζ̄z) with |ζ| < 1
    DiskAutomorphism { zeta: Complex64 },
    /// 1/(1−z)
    Cayley,
    /// e^{kz}
    ExpScale { k: Complex64 },
    /// z + a·z²
    QuadPoly { a: Complex64 },
}

/// A catalog entry: the closed form plus its flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogFunction {
    kind: FunctionKind,
    flags: UnivalenceFlags,
}

enum Form {
    Rational {
        num: Vec<Complex64>,
        den: Vec<Complex64>,
    },
    Exp {
        k: Complex64,
    },
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl CatalogFunction {
    pub fn new(kind: FunctionKind) -> Result<Self> {
        let flags = match kind {
            FunctionKind::Identity | FunctionKind::Cayley => flags(true, true, false),
            FunctionKind::Koebe => flags(true, true, true),
            FunctionKind::RotatedKoebe { theta } => {
                if !theta.is_finite() {
                    return Err(Error::InvalidParameter("koebe_rot: theta must be finite".into()));
                }
                flags(true, true, true)
            }
            FunctionKind::Bounded { b } => {
                if !b.is_finite() || b.norm() > 1.0 {
                    return Err(Error::InvalidParameter(format!(
                        "bounded: need |b| <= 1, got |b| = {}",
                        b.norm()
                    )));
                }
                flags(true, true, false)
            }
            FunctionKind::DiskAutomorphism { zeta } => {
                check_in_disk("disk_auto zeta", zeta)?;
                flags(true, true, false)
            }
            FunctionKind::ExpScale { k } => {
                if !k.is_finite() {
                    return Err(Error::InvalidParameter("exp_scale: k must be finite".into()));
                }
                let nonzero = k.norm() > 0.0;
                flags(nonzero, nonzero && k.norm() <= PI, false)
            }
            FunctionKind::QuadPoly { a } => {
                if !a.is_finite() {
                    return Err(Error::InvalidParameter("quad_poly: a must be finite".into()));
                }
                let ok = a.norm() <= 0.5;
                flags(ok, ok, false)
            }
        };
        Ok(CatalogFunction { kind, flags })
    }

    pub fn identity() -> Self {
        Self::new(FunctionKind::Identity).unwrap()
    }

    pub fn koebe() -> Self {
        Self::new(FunctionKind::Koebe).unwrap()
    }

    pub fn cayley() -> Self {
        Self::new(FunctionKind::Cayley).unwrap()
    }

    pub fn rotated_koebe(theta: f64) -> Result<Self> {
        Self::new(FunctionKind::RotatedKoebe { theta })
    }

    pub fn bounded(b: Complex64) -> Result<Self> {
        Self::new(FunctionKind::Bounded { b })
    }

    pub fn disk_automorphism(zeta: Complex64) -> Result<Self> {
        Self::new(FunctionKind::DiskAutomorphism { zeta })
    }

    pub fn exp_scale(k: Complex64) -> Result<Self> {
        Self::new(FunctionKind::ExpScale { k })
    }

    pub fn quad_poly(a: Complex64) -> Result<Self> {
        Self::new(FunctionKind::QuadPoly { a })
    }

    pub fn kind(&self) -> FunctionKind {
        self.kind
    }

    pub fn flags(&self) -> UnivalenceFlags {
        self.flags
    }

    /// Stable identifier, parseable by [`FromStr`].
    pub fn id(&self) -> String {
        match self.kind {
            FunctionKind::Identity => "identity".into(),
            FunctionKind::Koebe => "koebe".into(),
            FunctionKind::RotatedKoebe { theta } => format!("koebe_rot:theta={theta}"),
            FunctionKind::Bounded { b } => format!("bounded:b={}", format_complex(b)),
            FunctionKind::DiskAutomorphism { zeta } => {
                format!("disk_auto:zeta={}", format_complex(zeta))
            }
            FunctionKind::Cayley => "cayley".into(),
            FunctionKind::ExpScale { k } => format!("exp_scale:k={}", format_complex(k)),
            FunctionKind::QuadPoly { a } => format!("quad_poly:a={}", format_complex(a)),
        }
    }

    /// One-line justification of the flags.
    pub fn note(&self) -> &'static str {
        match self.kind {
            FunctionKind::Identity => "injective; image is the disk itself, not the plane",
            FunctionKind::Koebe | FunctionKind::RotatedKoebe { .. } => {
                "maps onto the plane minus a ray, which has zero area"
            }
            FunctionKind::Bounded { .. } => {
                "Möbius map with pole 1/b outside the open disk; image is a disk or half-plane"
            }
            FunctionKind::DiskAutomorphism { .. } => "Möbius self-map of the disk",
            FunctionKind::Cayley => "Möbius map onto the half-plane Re w > 1/2",
            FunctionKind::ExpScale { .. } => {
                "exp is injective on a disk iff its diameter 2|k| stays below 2π; image omits 0"
            }
            FunctionKind::QuadPoly { .. } => {
                "f' = 1+2az vanishes at −1/(2a), inside the disk iff |a| > 1/2; bounded image"
            }
        }
    }

    /// Poles on the unit circle. Integrands built from f can be unbounded
    /// near these points even when integrable.
    pub fn boundary_singularities(&self) -> Vec<Complex64> {
        let Form::Rational { den, .. } = self.form() else {
            return Vec::new();
        };
        let roots = match den.len() {
            2 => vec![-den[0] / den[1]],
            3 => {
                let disc = (den[1] * den[1] - 4.0 * den[0] * den[2]).sqrt();
                if disc.norm() <= 1e-6 * den[1].norm() {
                    // double root; the formula above is only √ε-accurate there
                    vec![-den[1] / (2.0 * den[2])]
                } else {
                    vec![(-den[1] + disc) / (2.0 * den[2]), (-den[1] - disc) / (2.0 * den[2])]
                }
            }
            _ => Vec::new(),
        };
        let mut out: Vec<Complex64> = Vec::new();
        for r in roots.into_iter().filter(|r| (r.norm() - 1.0).abs() < 1e-9) {
            if out.iter().all(|q| (q - r).norm() > 1e-6) {
                out.push(r);
            }
        }
        out
    }

    /// f(0) = 0 and f′(0) = 1.
    pub fn is_normalized(&self) -> bool {
        let zero = c(0.0);
        (self.eval(zero)).norm() <= 1e-14 && (self.derivative(zero) - 1.0).norm() <= 1e-14
    }

    fn form(&self) -> Form {
        let rational = |num: Vec<Complex64>, den: Vec<Complex64>| Form::Rational { num, den };
        match self.kind {
            FunctionKind::Identity => rational(vec![c(0.0), c(1.0)], vec![c(1.0)]),
            FunctionKind::Koebe => rational(vec![c(0.0), c(1.0)], vec![c(1.0), c(-2.0), c(1.0)]),
            FunctionKind::RotatedKoebe { theta } => {
                let e = Complex64::from_polar(1.0, theta);
                rational(vec![c(0.0), c(1.0)], vec![c(1.0), -2.0 * e, e * e])
            }
            FunctionKind::Bounded { b } => rational(vec![c(0.0), c(1.0)], vec![c(1.0), -b]),
            FunctionKind::DiskAutomorphism { zeta } => {
                rational(vec![zeta, c(1.0)], vec![c(1.0), zeta.conj()])
            }
            FunctionKind::Cayley => rational(vec![c(1.0)], vec![c(1.0), c(-1.0)]),
            FunctionKind::ExpScale { k } => Form::Exp { k },
            FunctionKind::QuadPoly { a } => rational(vec![c(0.0), c(1.0), a], vec![c(1.0)]),
        }
    }

    /// Closed-form value f(w).
    pub fn eval(&self, w: Complex64) -> Complex64 {
        match self.form() {
            Form::Rational { num, den } => poly_eval(&num, w) / poly_eval(&den, w),
            Form::Exp { k } => (k * w).exp(),
        }
    }

    /// Closed-form derivative f′(w).
    pub fn derivative(&self, w: Complex64) -> Complex64 {
        match self.form() {
            Form::Rational { num, den } => {
                let n = poly_eval(&num, w);
                let d = poly_eval(&den, w);
                let dn = poly_eval(&poly_derivative(&num), w);
                let dd = poly_eval(&poly_derivative(&den), w);
                (dn * d - n * dd) / (d * d)
            }
            Form::Exp { k } => k * (k * w).exp(),
        }
    }

    /// Taylor coefficients cₖ = f⁽ᵏ⁾(center)/k!, k = 0..=order.
    pub fn series_at(&self, center: Complex64, order: usize) -> Result<PowerSeries> {
        check_in_disk("center", center)?;
        if order < 1 {
            return Err(Error::OrderTooLow { have: order, need: 1 });
        }
        match self.form() {
            Form::Rational { num, den } => rational_series(&num, &den, center, order),
            Form::Exp { k } => {
                let mut coeffs = Vec::with_capacity(order + 1);
                let mut term = (k * center).exp();
                for m in 0..=order {
                    coeffs.push(term);
                    term *= k / (m + 1) as f64;
                }
                PowerSeries::new(center, coeffs)
            }
        }
    }

    /// Taylor coefficients of F = f∘σ_ζ about `w`.
    ///
    /// Built from the closed form of the composition rather than by composing two
    /// truncated series, so high orders keep full accuracy even when f has a
    /// singularity close to σ_ζ(w).
    pub fn automorphism_series(
        &self,
        zeta: Complex64,
        w: Complex64,
        order: usize,
    ) -> Result<PowerSeries> {
        let shift = MobiusShift::new(zeta)?;
        check_in_disk("w", w)?;
        match self.form() {
            Form::Rational { num, den } => {
                // Clear denominators: p(σ) = Σ pᵢ (x+ζ)ⁱ (1+ζ̄x)^{m−i} / (1+ζ̄x)^m.
                let m = (num.len().max(den.len())) - 1;
                let lin_num = [zeta, c(1.0)];
                let lin_den = [c(1.0), zeta.conj()];
                let homogenize = |p: &[Complex64]| {
                    let mut out = vec![c(0.0); m + 1];
                    for (i, &pi) in p.iter().enumerate() {
                        let mut term = vec![pi];
                        for _ in 0..i {
                            term = poly_mul(&term, &lin_num);
                        }
                        for _ in i..m {
                            term = poly_mul(&term, &lin_den);
                        }
                        for (o, t) in out.iter_mut().zip(term) {
                            *o += t;
                        }
                    }
                    out
                };
                rational_series(&homogenize(&num), &homogenize(&den), w, order)
            }
            Form::Exp { k } => {
                let inc = shift.increment_series(w, order)?;
                let mut exponent = inc.scale(k).into_coeffs();
                exponent[0] = k * shift.eval(w);
                PowerSeries::new(w, exponent)?.exp()
            }
        }
    }
}

fn flags(local: bool, univalent: bool, full: bool) -> UnivalenceFlags {
    UnivalenceFlags {
        locally_univalent_on_disk: local,
        univalent_on_disk: univalent,
        full_mapping: full,
    }
}

fn poly_eval(p: &[Complex64], w: Complex64) -> Complex64 {
    p.iter().rev().fold(c(0.0), |acc, &a| acc * w + a)
}

fn poly_derivative(p: &[Complex64]) -> Vec<Complex64> {
    if p.len() <= 1 {
        return vec![c(0.0)];
    }
    (1..p.len()).map(|k| p[k] * k as f64).collect()
}

fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![c(0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact Taylor shift p(center + t) of a polynomial, by repeated synthetic division.
fn poly_shift(p: &[Complex64], center: Complex64) -> Vec<Complex64> {
    let mut q = p.to_vec();
    let n = q.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let next = q[j + 1];
            q[j] += center * next;
        }
    }
    q
}

fn rational_series(
    num: &[Complex64],
    den: &[Complex64],
    center: Complex64,
    order: usize,
) -> Result<PowerSeries> {
    let pad = |p: Vec<Complex64>| {
        let mut p = p;
        p.resize(p.len().max(order + 1), c(0.0));
        p.truncate(order + 1);
        p
    };
    let n = PowerSeries::new(center, pad(poly_shift(num, center)))?;
    let d = PowerSeries::new(center, pad(poly_shift(den, center)))?;
    n.mul(&d.recip()?)
}

impl fmt::Display for CatalogFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Formats a complex number as `re+imi`, the form [`parse_complex`] reads back.
pub fn format_complex(z: Complex64) -> String {
    if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parses `0.4`, `-1e-3`, `0.3+0.2i`, `0.5-2i`, `-0.7i` or `i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
    let bad = || Error::InvalidParameter(format!("cannot parse complex number `{s}`"));
    let real = |t: &str| t.parse::<f64>().map_err(|_| bad());
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return Ok(Complex64::new(real(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() { 0.0 } else { real(re_part)? };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => real(t)?,
    };
    Ok(Complex64::new(re, im))
}

impl FromStr for CatalogFunction {
    type Err = Error;

    /// `name` or `name:key=value[,key=value]`, e.g. `exp_scale:k=4`, `quad_poly:a=0.4+0i`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), p.trim()),
            None => (s.trim(), ""),
        };
        let mut pairs: Vec<(String, String)> = Vec::new();
        for item in params.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("expected key=value in `{item}`"))
            })?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        let allowed: &[&str] = match name {
            "identity" | "koebe" | "cayley" => &[],
            "koebe_rot" => &["theta"],
            "bounded" => &["b"],
            "disk_auto" => &["zeta"],
            "exp_scale" => &["k"],
            "quad_poly" => &["a"],
            _ => return Err(Error::UnknownFunction(name.to_string())),
        };
        if let Some((k, _)) = pairs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!(
                "unknown parameter `{k}` for `{name}`"
            )));
        }
        let get = |key: &str| -> Result<Complex64> {
            match pairs.iter().find(|(k, _)| k == key) {
                Some((_, v)) => parse_complex(v),
                None => Err(Error::InvalidParameter(format!(
                    "`{name}` needs parameter `{key}`"
                ))),
            }
        };
        let kind = match name {
            "identity" => FunctionKind::Identity,
            "koebe" => FunctionKind::Koebe,
            "cayley" => FunctionKind::Cayley,
            "koebe_rot" => {
                let t = get("theta")?;
                if t.im != 0.0 {
                    return Err(Error::InvalidParameter("koebe_rot: theta must be real".into()));
                }
                FunctionKind::RotatedKoebe { theta: t.re }
            }
            "bounded" => FunctionKind::Bounded { b: get("b")? },
            "disk_auto" => FunctionKind::DiskAutomorphism { zeta: get("zeta")? },
            "exp_scale" => FunctionKind::ExpScale { k: get("k")? },
            "quad_poly" => FunctionKind::QuadPoly { a: get("a")? },
            _ => unreachable!(),
        };
        CatalogFunction::new(kind)
    }
}

/// The registry of test functions used by the checks and scans.
pub fn list_catalog() -> Vec<CatalogFunction> {
    let kinds = [
        FunctionKind::Identity,
        FunctionKind::Koebe,
        FunctionKind::RotatedKoebe { theta: PI / 3.0 },
        FunctionKind::Bounded { b: c(0.5) },
        FunctionKind::Bounded { b: Complex64::new(0.0, 1.0) },
        FunctionKind::DiskAutomorphism { zeta: Complex64::new(0.3, 0.2) },
        FunctionKind::Cayley,
        FunctionKind::ExpScale { k: c(1.0) },
        FunctionKind::ExpScale { k: c(PI) },
        FunctionKind::ExpScale { k: c(4.0) },
        FunctionKind::QuadPoly { a: c(0.25) },
        FunctionKind::QuadPoly { a: Complex64::new(0.0, 0.5) },
        FunctionKind::QuadPoly { a: c(0.6) },
    ];
    kinds
        .into_iter()
        .map(|k| CatalogFunction::new(k).expect("registry entries are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} vs {b}");
    }

    #[test]
    fn koebe_at_zero_is_n() {
        let s = CatalogFunction::koebe().series_at(c(0.0), 3).unwrap();
        // z/(1−z)² = z·d/dz(1/(1−z)) = Σ n zⁿ
        for (n, coeff) in s.coeffs().iter().enumerate() {
            assert_close(*coeff, c(n as f64), 1e-15);
        }
    }

    #[test]
    fn identity_at_point() {
        let s = CatalogFunction::identity().series_at(c(0.3), 4).unwrap();
        assert_eq!(s.coeffs(), &[c(0.3), c(1.0), c(0.0), c(0.0), c(0.0)]);
    }

    #[test]
    fn exp_scale_taylor() {
        let s = CatalogFunction::exp_scale(c(4.0)).unwrap().series_at(c(0.0), 2).unwrap();
        assert_close(s.coeff(0), c(1.0), 1e-15);
        assert_close(s.coeff(1), c(4.0), 1e-15);
        assert_close(s.coeff(2), c(8.0), 1e-14);
    }

    #[test]
    fn koebe_off_center_matches_geometric_formula() {
        // (c+t)/(u−t)², u = 1−c: coefficient k = c(k+1)/u^{k+2} + k/u^{k+1}
        let center = Complex64::new(0.3, -0.4);
        let u = 1.0 - center;
        let s = CatalogFunction::koebe().series_at(center, 12).unwrap();
        for k in 0..=12 {
            let kf = k as f64;
            let want = center * (kf + 1.0) / u.powi(k as i32 + 2) + kf / u.powi(k as i32 + 1);
            assert!((s.coeff(k) - want).norm() <= 1e-12 * want.norm().max(1.0));
        }
    }

    #[test]
    fn flags_follow_rules() {
        let k = CatalogFunction::koebe().flags();
        assert!(k.locally_univalent_on_disk && k.univalent_on_disk && k.full_mapping);
        let e4 = CatalogFunction::exp_scale(c(4.0)).unwrap().flags();
        assert!(e4.locally_univalent_on_disk && !e4.univalent_on_disk);
        let epi = CatalogFunction::exp_scale(c(PI)).unwrap().flags();
        assert!(epi.univalent_on_disk);
        let q = CatalogFunction::quad_poly(c(0.6)).unwrap().flags();
        assert!(!q.locally_univalent_on_disk);
        assert!(CatalogFunction::quad_poly(c(0.5)).unwrap().flags().univalent_on_disk);
        for f in list_catalog() {
            let fl = f.flags();
            assert!(!fl.univalent_on_disk || fl.locally_univalent_on_disk, "{f}");
            assert!(!fl.full_mapping || fl.univalent_on_disk, "{f}");
        }
    }

    #[test]
    fn quad_poly_critical_point() {
        let f = CatalogFunction::quad_poly(c(0.6)).unwrap();
        assert_close(f.derivative(c(-5.0 / 6.0)), c(0.0), 1e-15);
    }

    #[test]
    fn normalization() {
        assert!(CatalogFunction::koebe().is_normalized());
        assert!(CatalogFunction::quad_poly(c(0.3)).unwrap().is_normalized());
        assert!(!CatalogFunction::cayley().is_normalized());
        assert!(!CatalogFunction::exp_scale(c(1.0)).unwrap().is_normalized());
    }

    #[test]
    fn outside_disk_rejected() {
        let r = CatalogFunction::koebe().series_at(c(1.0), 4);
        assert!(matches!(r, Err(Error::OutsideDisk { .. })));
        assert!(CatalogFunction::bounded(c(1.5)).is_err());
        assert!(CatalogFunction::disk_automorphism(c(1.0)).is_err());
    }

    #[test]
    fn parse_ids() {
        let f: CatalogFunction = "exp_scale:k=4".parse().unwrap();
        assert_eq!(f.kind(), FunctionKind::ExpScale { k: c(4.0) });
        let f: CatalogFunction = "quad_poly:a=0.4+0i".parse().unwrap();
        assert_eq!(f.kind(), FunctionKind::QuadPoly { a: c(0.4) });
        let f: CatalogFunction = "disk_auto:zeta=0.3-0.2i".parse().unwrap();
        assert_eq!(f.kind(), FunctionKind::DiskAutomorphism { zeta: Complex64::new(0.3, -0.2) });
        assert!(matches!("nope".parse::<CatalogFunction>(), Err(Error::UnknownFunction(_))));
        assert!("koebe:x=1".parse::<CatalogFunction>().is_err());
        assert!("exp_scale".parse::<CatalogFunction>().is_err());
        for f in list_catalog() {
            assert_eq!(f.id().parse::<CatalogFunction>().unwrap(), f);
        }
    }

    #[test]
    fn parse_complex_forms() {
        assert_eq!(parse_complex("0.4").unwrap(), c(0.4));
        assert_eq!(parse_complex("0.3+0.2i").unwrap(), Complex64::new(0.3, 0.2));
        assert_eq!(parse_complex("-1e-3-2i").unwrap(), Complex64::new(-1e-3, -2.0));
        assert_eq!(parse_complex("-0.7i").unwrap(), Complex64::new(0.0, -0.7));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("2e-1+1E+0i").unwrap(), Complex64::new(0.2, 1.0));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn poly_shift_exact() {
        // (1 + t)^2 shifted by 2 → (3 + t)^2 = 9 + 6t + t²
        let p = poly_shift(&[c(1.0), c(2.0), c(1.0)], c(2.0));
        assert_eq!(p, vec![c(9.0), c(6.0), c(1.0)]);
    }

    #[test]
    fn automorphism_series_matches_pointwise_composition() {
        let zeta = Complex64::new(0.4, -0.3);
        let w = Complex64::new(-0.2, 0.1);
        let shift = MobiusShift::new(zeta).unwrap();
        for f in list_catalog() {
            let s = f.automorphism_series(zeta, w, 40).unwrap();
            let probe = w + Complex64::new(0.05, 0.03);
            let direct = f.eval(shift.eval(probe));
            assert!((s.eval(probe) - direct).norm() <= 1e-10 * direct.norm().max(1.0), "{f}");
        }
    }

    #[test]
    fn boundary_poles() {
        assert_eq!(CatalogFunction::koebe().boundary_singularities().len(), 1);
        assert!((CatalogFunction::koebe().boundary_singularities()[0] - c(1.0)).norm() < 1e-7);
        let r = CatalogFunction::rotated_koebe(1.0).unwrap().boundary_singularities();
        assert!((r[0] - Complex64::from_polar(1.0, -1.0)).norm() < 1e-7);
        assert!(CatalogFunction::bounded(c(0.5)).unwrap().boundary_singularities().is_empty());
        let b = CatalogFunction::bounded(Complex64::new(0.0, 1.0)).unwrap().boundary_singularities();
        assert!((b[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!(CatalogFunction::exp_scale(c(1.0)).unwrap().boundary_singularities().is_empty());
    }
}
