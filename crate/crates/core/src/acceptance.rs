//! End-to-end acceptance checks. Each check returns an [`Outcome`]; failures
//! are reported, never panicked, so a full run always produces every line.

use std::fmt;
use std::time::Instant;

use num_complex::Complex64;

use crate::catalog::{list_catalog, CatalogFunction};
use crate::criteria::{
    criterion_terms, decay_bound_checks, fullmap_scan, prawitz_sum_s, univalence_criterion,
    Verdict, ZetaGrid, DEFAULT_SCAN_EPS, DEFAULT_TOL,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::quadrature::{prawitz_integral, psi_grunsky_identity_check, MeshSpec};
use crate::sequences::{aharonov_phi, check_phi_recurrence, phi_capital_combinatorial, phi_capital_direct};
use crate::series::gen_binomial;
use crate::transforms::{lemma2_coefficients, MobiusShift};

/// Non-univalence witness for e^{4z} at λ = 1/2: the first point of the
/// default search grid that violates the criterion, with the smallest N there.
pub const WITNESS_ZETA: Complex64 = Complex64::new(0.0, 0.0);
pub const WITNESS_N: usize = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

fn timed(
    id: &'static str,
    name: &'static str,
    limit: Option<f64>,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> Outcome {
    let start = Instant::now();
    let result = body();
    let seconds = start.elapsed().as_secs_f64();
    let (mut passed, mut detail) = match result {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(limit) = limit {
        if seconds >= limit {
            passed = false;
            detail.push_str(&format!("; runtime {seconds:.2} s over {limit} s"));
        }
    }
    Outcome {
        id,
        name,
        passed,
        detail,
        seconds,
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn prawitz_equality() -> Outcome {
    timed("1", "Prawitz equality, coefficient route", Some(1.0), || {
        let k = CatalogFunction::koebe();
        let half = prawitz_sum_s(&k, 0.5, 2)?;
        let one = prawitz_sum_s(&k, 1.0, 2)?;
        let quarter = prawitz_sum_s(&k, 0.25, 4096)?;
        let passed =
            (half - 0.5).abs() <= 1e-12 && (one - 1.0).abs() <= 1e-12 && (quarter - 0.25).abs() <= 1e-4;
        Ok((
            passed,
            format!("S(1/2,2)={half:.15}, S(1,2)={one:.15}, S(1/4,4096)={quarter:.8}"),
        ))
    })
}

pub const TEST_CENTERS: [Complex64; 5] = [
    Complex64::new(0.0, 0.0),
    Complex64::new(0.3, 0.0),
    Complex64::new(-0.2, 0.4),
    Complex64::new(0.0, 0.5),
    Complex64::new(-0.45, -0.1),
];

pub fn three_way_agreement() -> Outcome {
    timed("2", "three-way Phi agreement", Some(5.0), || {
        let mut worst_routes = 0.0f64;
        let mut worst_shift = 0.0f64;
        let mut cases = 0;
        for f in list_catalog() {
            for &z in &TEST_CENTERS {
                let series = match f.series_at(z, 12) {
                    Ok(s) => s,
                    Err(Error::NotLocallyUnivalent(_)) => continue,
                    Err(e) => return Err(e),
                };
                let phi = match aharonov_phi(&series, 10) {
                    Ok(p) => p,
                    Err(Error::NotLocallyUnivalent(_)) => continue,
                    Err(e) => return Err(e),
                };
                for lambda in [0.5, 1.0, 1.7] {
                    let direct = phi_capital_direct(&series, lambda, 10)?;
                    let comb = phi_capital_combinatorial(&phi, lambda, 10)?;
                    for n in 0..=10 {
                        worst_routes = worst_routes.max((direct.values[n] - comb.values[n]).norm());
                    }
                    if lambda == 1.0 {
                        for n in 1..=10 {
                            worst_shift = worst_shift.max((direct.values[n] - phi.values[n - 1]).norm());
                        }
                    }
                    cases += 1;
                }
            }
        }
        Ok((
            worst_routes <= 1e-9 && worst_shift <= 1e-9,
            format!("{cases} cases, direct vs combinatorial {worst_routes:.2e}, lambda=1 vs shifted phi {worst_shift:.2e}"),
        ))
    })
}

pub fn coefficient_shift_identity() -> Outcome {
    timed("3", "coefficient shift identity", None, || {
        let zetas = [c(0.0, 0.0), c(0.3, 0.0), c(-0.2, 0.25), c(0.1, -0.4)];
        let ws = [c(0.0, 0.0), c(0.0, 0.25), c(-0.3, 0.1)];
        let mut worst = 0.0f64;
        let mut cases = 0;
        let mut skipped = 0;
        for f in list_catalog() {
            for &zeta in &zetas {
                for &w in &ws {
                    let z = MobiusShift::new(zeta)?.eval(w);
                    for lambda in [0.5, 1.0, 1.7] {
                        let at_z = match f.series_at(z, 9).and_then(|s| phi_capital_direct(&s, lambda, 8)) {
                            Ok(v) => v,
                            Err(Error::NotLocallyUnivalent(_)) => {
                                skipped += 1;
                                continue;
                            }
                            Err(e) => return Err(e),
                        };
                        let shifted = lemma2_coefficients(&at_z, zeta, w, 8)?;
                        let composed = phi_capital_direct(&f.automorphism_series(zeta, w, 9)?, lambda, 8)?;
                        for n in 0..=8 {
                            worst = worst.max((shifted[n] - composed.values[n]).norm());
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok((
            worst <= 1e-8,
            format!("{cases} cases ({skipped} not locally univalent), max deviation {worst:.2e}"),
        ))
    })
}

pub fn identity_closed_form() -> Outcome {
    timed("4", "identity-map closed form", None, || {
        let id = CatalogFunction::identity();
        let mut worst = 0.0f64;
        for lambda in [0.3, 1.0, 2.5] {
            for zeta in [c(0.5, 0.0), c(0.3, 0.4)] {
                let a = criterion_terms(&id, lambda, zeta, 20)?;
                for (n, v) in a.iter().enumerate() {
                    let want = gen_binomial(lambda, n) * zeta.conj().powu(n as u32);
                    worst = worst.max((v - want).norm());
                }
            }
        }
        Ok((worst <= 1e-12, format!("max deviation {worst:.2e}")))
    })
}

pub fn phi_recurrence() -> Outcome {
    timed("5", "phi recurrence, finite differences", None, || {
        let mut worst = 0.0f64;
        for f in [CatalogFunction::koebe(), CatalogFunction::cayley()] {
            for z in [c(0.0, 0.0), c(0.2, 0.0), c(0.1, 0.3)] {
                for n in 1..=4 {
                    worst = worst.max(check_phi_recurrence(&f, z, n, 1e-4)?);
                }
            }
        }
        Ok((worst <= 1e-5, format!("max residual {worst:.2e}")))
    })
}

fn duality(scale_power: i32, id: &'static str, name: &'static str) -> Outcome {
    timed(id, name, Some(30.0), || {
        let k = CatalogFunction::koebe();
        let mut passed = true;
        let mut parts = Vec::new();
        for lambda in [0.5, 1.0] {
            let scale = f64::powi(lambda, scale_power);
            let integral = prawitz_integral(
                &k,
                lambda,
                c(0.0, 0.0),
                MeshSpec::default_at(c(0.0, 0.0)),
                None,
                Exec::default(),
            )?;
            let sum = prawitz_sum_s(&k, lambda, 4096)?;
            let lhs = scale * integral.value;
            let allowed = 5e-3 + scale * integral.error_estimate;
            let ok = (lhs - sum).abs() <= allowed;
            passed &= ok;
            parts.push(format!(
                "lambda={lambda}: I={:.6} (err {:.1e}), scaled {lhs:.6} vs S={sum:.6}{}",
                integral.value,
                integral.error_estimate,
                if ok { "" } else { " MISMATCH" }
            ));
        }
        Ok((passed, parts.join("; ")))
    })
}

/// λ·I = S_λ as stated. For the Koebe function I = 1/λ and S = λ, so this
/// holds only at λ = 1.
pub fn coefficient_integral_duality() -> Outcome {
    duality(1, "6", "coefficient/integral duality, lambda*I = S")
}

/// λ²·I = S_λ, the form consistent with I = 1/λ for full mappings.
pub fn coefficient_integral_duality_squared() -> Outcome {
    duality(2, "6b", "coefficient/integral duality, lambda^2*I = S")
}

pub fn grunsky_equality() -> Outcome {
    timed("7", "Grunsky equality case", None, || {
        let z = c(0.0, 0.0);
        let mesh = MeshSpec::default_at(z);
        let k = prawitz_integral(&CatalogFunction::koebe(), 1.0, z, mesh, None, Exec::default())?;
        let id = prawitz_integral(&CatalogFunction::identity(), 1.0, z, mesh, None, Exec::default())?;
        Ok((
            (k.value - 1.0).abs() <= 5e-3 && id.value.abs() <= 1e-8,
            format!("koebe {:.6} (err {:.1e}), identity {:.1e}", k.value, k.error_estimate, id.value),
        ))
    })
}

pub fn psi_grunsky_identity() -> Outcome {
    timed("8", "Psi/Grunsky identity", None, || {
        let mut passed = true;
        let mut parts = Vec::new();
        for z in [c(0.0, 0.0), c(0.3, 0.0)] {
            let r = psi_grunsky_identity_check(
                &CatalogFunction::koebe(),
                z,
                64,
                MeshSpec::default_at(z),
                None,
                Exec::default(),
            )?;
            passed &= r.residual <= 2e-2;
            parts.push(format!(
                "koebe z={}: {:.6} vs {:.6}, residual {:.1e}",
                z.re, r.psi_sum, r.grunsky_side, r.residual
            ));
        }
        let z = c(0.2, 0.1);
        let r = psi_grunsky_identity_check(
            &CatalogFunction::cayley(),
            z,
            64,
            MeshSpec::default_at(z),
            None,
            Exec::default(),
        )?;
        passed &= r.psi_sum.abs() <= 1e-8 && r.grunsky_side.abs() <= 1e-8;
        parts.push(format!("cayley: {:.1e} vs {:.1e}", r.psi_sum, r.grunsky_side));
        Ok((passed, parts.join("; ")))
    })
}

/// 0 plus radii 0.3 and 0.6 at four angles each.
pub fn soundness_grid() -> Vec<Complex64> {
    ZetaGrid::new(vec![0.0, 0.3, 0.6], 4)
        .expect("valid grid")
        .points()
}

pub fn criterion_soundness() -> Outcome {
    timed("9", "criterion soundness", None, || {
        let grid = soundness_grid();
        let mut false_positives = Vec::new();
        let mut cases = 0;
        for f in list_catalog().into_iter().filter(|f| f.flags().univalent_on_disk) {
            for lambda in [0.25, 0.5, 1.0] {
                for &zeta in &grid {
                    let r = univalence_criterion(&f, lambda, zeta, 64, DEFAULT_TOL)?;
                    if r.verdict == Verdict::Violated {
                        false_positives.push(format!("{} lambda={lambda} zeta={zeta}", f.id()));
                    }
                    cases += 1;
                }
            }
        }
        let e4 = CatalogFunction::exp_scale(c(4.0, 0.0))?;
        let witness = univalence_criterion(&e4, 0.5, WITNESS_ZETA, WITNESS_N, DEFAULT_TOL)?;
        let quad = CatalogFunction::quad_poly(c(0.6, 0.0))?;
        let critical = c(-1.0 / 1.2, 0.0);
        let rejection = univalence_criterion(&quad, 0.5, critical, 8, DEFAULT_TOL);
        let rejected = matches!(&rejection, Err(e @ Error::NotLocallyUnivalent(_)) if e.to_string().contains("f'(z)=0"));
        Ok((
            false_positives.is_empty() && witness.verdict == Verdict::Violated && rejected,
            format!(
                "{cases} univalent cases, {} violated{}; exp_scale(4) at witness T_{}={:.6} {}; quad_poly(0.6) at -5/6: {}",
                false_positives.len(),
                if false_positives.is_empty() { String::new() } else { format!(" ({})", false_positives.join(", ")) },
                WITNESS_N,
                witness.partial_sum,
                witness.verdict.label(),
                match rejection {
                    Ok(_) => "accepted".to_string(),
                    Err(e) => e.to_string(),
                }
            ),
        ))
    })
}

pub const DECAY_CENTERS: [Complex64; 5] = [
    Complex64::new(0.0, 0.0),
    Complex64::new(0.3, 0.0),
    Complex64::new(-0.6, 0.0),
    Complex64::new(0.0, 0.4),
    Complex64::new(0.3, -0.45),
];

pub fn decay_bounds() -> Outcome {
    timed("10", "decay bounds for phi and Phi", None, || {
        let mut worst = f64::INFINITY;
        let mut where_ = String::new();
        for f in list_catalog().into_iter().filter(|f| f.flags().univalent_on_disk) {
            for &z in &DECAY_CENTERS {
                for lambda in [0.3, 0.7] {
                    let r = decay_bound_checks(&f, z, 10, lambda)?;
                    if r.worst_slack < worst {
                        worst = r.worst_slack;
                        where_ = format!("{} z={z} lambda={lambda}", f.id());
                    }
                }
            }
        }
        Ok((worst >= -1e-10, format!("worst slack {worst:.3e} at {where_}")))
    })
}

pub fn full_mapping_scan() -> Outcome {
    timed("11", "full-mapping scan", None, || {
        let grid = ZetaGrid::new(vec![0.0, 0.1, 0.2, 0.3, 0.4, 0.5], 16)?.points();
        let koebe = fullmap_scan(
            &CatalogFunction::koebe(),
            0.5,
            &grid,
            128,
            DEFAULT_TOL,
            DEFAULT_SCAN_EPS,
            Exec::default(),
        )?;
        let monotone = koebe.rows.iter().all(|r| r.monotone);
        let (lo, hi) = koebe
            .rows
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r.gap), hi.max(r.gap)));
        let id = fullmap_scan(
            &CatalogFunction::identity(),
            0.5,
            &[c(0.0, 0.0)],
            128,
            DEFAULT_TOL,
            DEFAULT_SCAN_EPS,
            Exec::default(),
        )?;
        let id_gap = id.rows[0].gap;
        Ok((
            koebe.full_mapping_consistent && monotone && id_gap >= 0.4,
            format!(
                "koebe gaps in [{lo:.2e}, {hi:.2e}] over {} points, monotone {monotone}; identity gap {id_gap}",
                grid.len()
            ),
        ))
    })
}

/// Every check in order, including the λ² duality companion after check 6.
pub fn run_all() -> Vec<Outcome> {
    vec![
        prawitz_equality(),
        three_way_agreement(),
        coefficient_shift_identity(),
        identity_closed_form(),
        phi_recurrence(),
        coefficient_integral_duality(),
        coefficient_integral_duality_squared(),
        grunsky_equality(),
        psi_grunsky_identity(),
        criterion_soundness(),
        decay_bounds(),
        full_mapping_scan(),
    ]
}
