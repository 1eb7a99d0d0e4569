//! One function per subcommand. Each returns the rendered text and the exit
//! status to use after writing it.

use serde_json::{json, Value};
use univalent_core::acceptance;
use univalent_core::catalog::CatalogFunction;
use univalent_core::criteria::{decay_bound_checks, scan, univalence_criterion, CriterionReport};
use univalent_core::quadrature::{branch_audit, default_delta, prawitz_integral, psi_grunsky_identity_check, MeshSpec};
use univalent_core::sequences::{aharonov_phi, phi_capital_direct, psi_sequence_composed, SequenceKind};
use univalent_core::{Complex64, Exec};

use crate::config::{self, ConfigError, Format, OutputArgs};
use crate::output::{complex, complex_list, document, float_text, real, render_csv, render_json};
use crate::CliError;

pub struct Rendered {
    pub text: String,
    pub exit: i32,
}

fn ok(text: String) -> Result<Rendered, CliError> {
    Ok(Rendered { text, exit: 0 })
}

fn format_of(output: &OutputArgs, default: Format) -> Format {
    output.format.unwrap_or(default)
}

fn require_univalent(f: &CatalogFunction) -> Result<(), ConfigError> {
    if f.flags().univalent_on_disk {
        Ok(())
    } else {
        Err(ConfigError::new("fn", format!("{} is not univalent on the disk", f.id())))
    }
}

fn mesh_json(mesh: &MeshSpec) -> Value {
    json!({
        "radial_nodes": mesh.radial_nodes,
        "angular_nodes": mesh.angular_nodes,
        "grading": real(mesh.grading),
        "center": complex(mesh.center),
    })
}

fn indexed_csv(label: &str, values: &[Complex64]) -> String {
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(i, v)| vec![i.to_string(), float_text(v.re), float_text(v.im)])
        .collect();
    render_csv(&[label, "re", "im"], &rows)
}

pub fn series(args: &config::SeriesArgs) -> Result<Rendered, CliError> {
    let f = config::function(&args.function)?;
    let z = config::point("z", &args.z)?;
    let order = config::truncation("order", args.order, 0)?;
    let s = f.series_at(z, order)?;
    match format_of(&args.output, Format::Json) {
        Format::Csv => ok(indexed_csv("k", s.coeffs())),
        Format::Json => {
            let mut doc = document("series");
            doc.insert("function".into(), json!(f.id()));
            doc.insert("center".into(), complex(z));
            doc.insert("order".into(), json!(order));
            doc.insert("coefficients".into(), complex_list(s.coeffs()));
            ok(render_json(doc))
        }
    }
}

pub fn sequence(args: &config::SequenceArgs) -> Result<Rendered, CliError> {
    let f = config::function(&args.function)?;
    let kind = config::kind(&args.kind)?;
    let z = config::point("z", &args.z)?;
    let count = config::truncation("count", args.count, 0)?;
    let lambda = match (kind, args.lambda) {
        (SequenceKind::Phi, Some(l)) => Some(config::lambda(l)?),
        (SequenceKind::Phi, None) => return Err(ConfigError::new("lambda", "required for kind Phi").into()),
        (_, _) => None,
    };
    let set = match kind {
        SequenceKind::Aharonov => aharonov_phi(&f.series_at(z, count + 2)?, count)?,
        SequenceKind::Phi => phi_capital_direct(&f.series_at(z, count + 1)?, lambda.unwrap_or(1.0), count)?,
        SequenceKind::Psi => psi_sequence_composed(&f, z, count)?,
    };
    match format_of(&args.output, Format::Json) {
        Format::Csv => ok(indexed_csv("n", &set.values)),
        Format::Json => {
            let mut doc = document("sequence");
            doc.insert("function".into(), json!(f.id()));
            doc.insert("kind".into(), json!(kind.label()));
            if let Some(l) = lambda {
                doc.insert("lambda".into(), real(l));
            }
            doc.insert("z".into(), complex(z));
            doc.insert("count".into(), json!(count));
            doc.insert("values".into(), complex_list(&set.values));
            ok(render_json(doc))
        }
    }
}

const SCAN_HEADER: [&str; 5] = ["zeta_re", "zeta_im", "T_N", "margin", "verdict"];

fn scan_row(r: &CriterionReport) -> Vec<String> {
    vec![
        float_text(r.zeta.re),
        float_text(r.zeta.im),
        float_text(r.partial_sum),
        float_text(r.margin),
        r.verdict.label().to_string(),
    ]
}

pub fn criterion(args: &config::CriterionArgs) -> Result<Rendered, CliError> {
    let f = config::function(&args.function)?;
    let lambda = config::lambda(args.lambda)?;
    let zeta = config::point("zeta", &args.zeta)?;
    let n = config::truncation("N", args.n, 1)?;
    let tol = config::tolerance(args.tol)?;
    let r = univalence_criterion(&f, lambda, zeta, n, tol)?;
    match format_of(&args.output, Format::Json) {
        Format::Csv => ok(render_csv(&SCAN_HEADER, &[scan_row(&r)])),
        Format::Json => {
            let mut doc = document("criterion");
            doc.insert("function".into(), json!(f.id()));
            doc.insert("lambda".into(), real(lambda));
            doc.insert("zeta".into(), complex(zeta));
            doc.insert("N".into(), json!(n));
            doc.insert("tol".into(), real(tol));
            doc.insert("T_N".into(), real(r.partial_sum));
            doc.insert("budget".into(), real(r.budget));
            doc.insert("margin".into(), real(r.margin));
            doc.insert("sup_abs_A_n".into(), real(r.sup_abs_term));
            doc.insert("verdict".into(), json!(r.verdict.label()));
            doc.insert("route_deviation".into(), real(r.route_deviation));
            doc.insert("A_n".into(), complex_list(&r.terms));
            ok(render_json(doc))
        }
    }
}

pub fn scan_grid(args: &config::ScanArgs) -> Result<Rendered, CliError> {
    let f = config::function(&args.function)?;
    let lambda = config::lambda(args.lambda)?;
    let grid = config::grid(&args.grid)?;
    let n = config::truncation("N", args.n, 1)?;
    let tol = config::tolerance(args.tol)?;
    let rows = scan(&f, lambda, &grid.points(), n, tol, Exec::default())?;
    match format_of(&args.output, Format::Csv) {
        Format::Csv => ok(render_csv(&SCAN_HEADER, &rows.iter().map(scan_row).collect::<Vec<_>>())),
        Format::Json => {
            let mut doc = document("scan");
            doc.insert("function".into(), json!(f.id()));
            doc.insert("lambda".into(), real(lambda));
            doc.insert("N".into(), json!(n));
            doc.insert("tol".into(), real(tol));
            doc.insert(
                "grid".into(),
                json!({ "radii": grid.radii.iter().map(|&r| real(r)).collect::<Vec<_>>(), "angles": grid.angles }),
            );
            let table: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "zeta": complex(r.zeta),
                        "T_N": real(r.partial_sum),
                        "margin": real(r.margin),
                        "verdict": r.verdict.label(),
                    })
                })
                .collect();
            doc.insert("rows".into(), Value::Array(table));
            ok(render_json(doc))
        }
    }
}

pub fn bounds(args: &config::BoundsArgs) -> Result<Rendered, CliError> {
    let f = config::function(&args.function)?;
    require_univalent(&f)?;
    let z = config::point("z", &args.z)?;
    let n = config::truncation("N", args.n, 1)?;
    if !(args.lambda > 0.0 && args.lambda < 1.0) {
        return Err(ConfigError::new("lambda", format!("must lie in (0, 1), got {}", args.lambda)).into());
    }
    let report = decay_bound_checks(&f, z, n, args.lambda)?;
    let header = ["n", "phi_lhs", "phi_rhs", "phi_slack", "Phi_lhs", "Phi_rhs", "Phi_slack"];
    match format_of(&args.output, Format::Json) {
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        float_text(r.phi_lhs),
                        float_text(r.phi_rhs),
                        float_text(r.phi_slack()),
                        float_text(r.capital_lhs),
                        float_text(r.capital_rhs),
                        float_text(r.capital_slack()),
                    ]
                })
                .collect();
            ok(render_csv(&header, &rows))
        }
        Format::Json => {
            let mut doc = document("bounds");
            doc.insert("function".into(), json!(f.id()));
            doc.insert("z".into(), complex(z));
            doc.insert("lambda".into(), real(args.lambda));
            doc.insert("N".into(), json!(n));
            doc.insert("worst_slack".into(), real(report.worst_slack));
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "phi_lhs": real(r.phi_lhs),
                        "phi_rhs": real(r.phi_rhs),
                        "phi_slack": real(r.phi_slack()),
                        "Phi_lhs": real(r.capital_lhs),
                        "Phi_rhs": real(r.capital_rhs),
                        "Phi_slack": real(r.capital_slack()),
                    })
                })
                .collect();
            doc.insert("rows".into(), Value::Array(rows));
            ok(render_json(doc))
        }
    }
}

pub fn area(args: &config::AreaArgs) -> Result<Rendered, CliError> {
    let f = config::function(&args.function)?;
    require_univalent(&f)?;
    if !(args.lambda > 0.0 && args.lambda <= 1.0) {
        return Err(ConfigError::new("lambda", format!("must lie in (0, 1], got {}", args.lambda)).into());
    }
    let z = config::point("z", &args.z)?;
    let mesh = config::mesh(&args.mesh, z)?;
    let r = prawitz_integral(&f, args.lambda, z, mesh, None, Exec::default())?;
    let crossing = branch_audit(&f, z, &mesh, default_delta(z))?;
    match format_of(&args.output, Format::Json) {
        Format::Csv => ok(render_csv(
            &["value", "error_estimate", "bound"],
            &[vec![float_text(r.value), float_text(r.error_estimate), float_text(1.0 / args.lambda)]],
        )),
        Format::Json => {
            let mut doc = document("area");
            doc.insert("function".into(), json!(f.id()));
            doc.insert("lambda".into(), real(args.lambda));
            doc.insert("z".into(), complex(z));
            doc.insert("value".into(), real(r.value));
            doc.insert("error_estimate".into(), real(r.error_estimate));
            doc.insert("bound".into(), real(1.0 / args.lambda));
            doc.insert("mesh".into(), mesh_json(&r.mesh));
            doc.insert(
                "principal_branch_crossing".into(),
                crossing.map(complex).unwrap_or(Value::Null),
            );
            ok(render_json(doc))
        }
    }
}

pub fn grunsky(args: &config::GrunskyArgs) -> Result<Rendered, CliError> {
    let f = config::function(&args.function)?;
    require_univalent(&f)?;
    let z = config::point("z", &args.z)?;
    let n = config::truncation("N", args.n, 32)?;
    let mesh = config::mesh(&args.mesh, z)?;
    let r = psi_grunsky_identity_check(&f, z, n, mesh, None, Exec::default())?;
    match format_of(&args.output, Format::Json) {
        Format::Csv => ok(render_csv(
            &["U_f", "error_estimate", "psi_sum", "grunsky_side", "residual"],
            &[vec![
                float_text(r.norm.value),
                float_text(r.norm.error_estimate),
                float_text(r.psi_sum),
                float_text(r.grunsky_side),
                float_text(r.residual),
            ]],
        )),
        Format::Json => {
            let mut doc = document("grunsky");
            doc.insert("function".into(), json!(f.id()));
            doc.insert("z".into(), complex(z));
            doc.insert("N".into(), json!(n));
            doc.insert("U_f".into(), real(r.norm.value));
            doc.insert("error_estimate".into(), real(r.norm.error_estimate));
            doc.insert("psi_sum".into(), real(r.psi_sum));
            doc.insert("grunsky_side".into(), real(r.grunsky_side));
            doc.insert("residual".into(), real(r.residual));
            doc.insert("mesh".into(), mesh_json(&r.norm.mesh));
            ok(render_json(doc))
        }
    }
}

pub fn selftest(args: &config::SelftestArgs) -> Result<Rendered, CliError> {
    let outcomes = acceptance::run_all();
    let exit = if outcomes.iter().all(|o| o.passed) { 0 } else { 1 };
    let text = match args.output.format {
        None => {
            let mut t: String = outcomes.iter().map(|o| format!("{o}\n")).collect();
            let passed = outcomes.iter().filter(|o| o.passed).count();
            t.push_str(&format!("{passed}/{} checks passed\n", outcomes.len()));
            t
        }
        Some(Format::Csv) => render_csv(
            &["id", "name", "passed", "seconds", "detail"],
            &outcomes
                .iter()
                .map(|o| vec![o.id.into(), o.name.into(), o.passed.to_string(), format!("{:.3}", o.seconds), o.detail.clone()])
                .collect::<Vec<_>>(),
        ),
        Some(Format::Json) => {
            let mut doc = document("selftest");
            doc.insert("passed".into(), json!(exit == 0));
            let list: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "seconds": real(o.seconds), "detail": o.detail }))
                .collect();
            doc.insert("checks".into(), Value::Array(list));
            render_json(doc)
        }
    };
    Ok(Rendered { text, exit })
}
