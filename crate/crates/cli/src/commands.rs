//! One function per subcommand. Each returns the assembled report plus
//! whether the run's assertions held (exit 0) or not (exit 1).

use serde_json::{json, Value};

use sesqui_core::cases::{
    derive_sol_ode, nil_systems, verify_classification, verify_family, DeltaSpec, FamilyCheck,
    FamilySample, FamilyStatus, NilFamily,
};
use sesqui_core::engine::{
    check, energy_density, same_sign_scan, variation_test, DeltaPair, ScanOutcome,
};
use sesqui_core::{Frame, FrameAlgebra, Symbols, VectorFieldExpr};

use crate::manifest::{numeric_field, parse_direction, LoadedManifest};
use crate::report::Report;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    VectorField,
    Map,
}

impl Expectation {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text {
            "vector-field" | "vector_field" => Ok(Expectation::VectorField),
            "map" => Ok(Expectation::Map),
            other => Err(CliError::input(format!(
                "unknown expectation `{other}` (expected vector-field or map)"
            ))),
        }
    }
}

fn core_err(e: sesqui_core::Error) -> CliError {
    match e {
        sesqui_core::Error::ResidualShape(_) | sesqui_core::Error::NonFinite => {
            CliError::assertion(e.to_string())
        }
        other => CliError::input(other.to_string()),
    }
}

fn field_json(field: &VectorFieldExpr) -> Value {
    Value::Array(
        field
            .coeffs()
            .iter()
            .map(|p| Value::String(p.to_string()))
            .collect(),
    )
}

fn manifest_inputs(loaded: &LoadedManifest) -> Value {
    json!({
        "manifest": crate::manifest::print_manifest(&loaded.manifest),
        "field": field_json(&loaded.field),
        "delta1": loaded.deltas.delta1().to_string(),
        "delta2": loaded.deltas.delta2().to_string(),
    })
}

pub fn cmd_check(
    loaded: &LoadedManifest,
    expect: Option<Expectation>,
) -> Result<(Report, bool), CliError> {
    let report = check(&loaded.frame, &loaded.field, &loaded.deltas).map_err(core_err)?;

    let breakdown: Value = report
        .term_breakdown
        .iter()
        .map(|(name, value)| (name.to_string(), field_json(value)))
        .collect::<serde_json::Map<_, _>>()
        .into();

    let density = if loaded.frame.is_left_invariant() {
        Some(
            energy_density(&loaded.frame, &loaded.field, &loaded.deltas)
                .map_err(core_err)?
                .to_string(),
        )
    } else {
        None
    };

    let ok = match expect {
        None => true,
        Some(Expectation::VectorField) => report.is_sesqui_vector_field,
        Some(Expectation::Map) => report.is_sesqui_map,
    };

    let mut human = vec![
        format!(
            "vertical residual:   {}",
            join_field(&report.vertical_residual)
        ),
        format!(
            "horizontal residual: {}",
            join_field(&report.horizontal_residual)
        ),
        format!(
            "interpolating sesqui-harmonic vector field: {}",
            report.is_sesqui_vector_field
        ),
        format!(
            "interpolating sesqui-harmonic map:          {}",
            report.is_sesqui_map
        ),
    ];
    if let Some(d) = &density {
        human.push(format!("energy density: {d}"));
    }
    human.push("term breakdown:".to_string());
    for (name, value) in &report.term_breakdown {
        human.push(format!("  {name}: {}", join_field(value)));
    }
    if let Some(e) = expect {
        human.push(format!(
            "expectation {:?}: {}",
            e,
            if ok { "satisfied" } else { "NOT satisfied" }
        ));
    }

    Ok((
        Report {
            command: "check",
            inputs: manifest_inputs(loaded),
            results: json!({
                "vertical_residual": field_json(&report.vertical_residual),
                "horizontal_residual": field_json(&report.horizontal_residual),
                "is_sesqui_vector_field": report.is_sesqui_vector_field,
                "is_sesqui_map": report.is_sesqui_map,
                "energy_density": density,
                "term_breakdown": breakdown,
                "expectation_satisfied": expect.map(|_| ok),
            }),
            human_lines: human,
        },
        ok,
    ))
}

fn join_field(field: &VectorFieldExpr) -> String {
    let parts: Vec<String> = field.coeffs().iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn cmd_derive_ode(preset: &str, deltas: Option<DeltaPair>) -> Result<(Report, bool), CliError> {
    if preset != "sol" {
        return Err(CliError::input(format!(
            "derive-ode ships the `sol` profile derivation; got preset `{preset}`"
        )));
    }
    let spec = match &deltas {
        None => DeltaSpec::Symbolic,
        Some(d) => DeltaSpec::Numeric(d.delta1().clone(), d.delta2().clone()),
    };
    let ode = derive_sol_ode(&spec).map_err(core_err)?;
    let names = ["f", "f'", "f''", "f'''", "f''''"];
    let coeffs: Vec<String> = ode.operator.coeffs.iter().map(|p| p.to_string()).collect();

    let mut human = vec![format!("orientation: {}", ode.orientation)];
    for (name, c) in names.iter().zip(&coeffs) {
        human.push(format!("coefficient of {name:6}: {c}"));
    }
    human.push(format!(
        "operator: ({})*f'''' + ({})*f''' + ({})*f'' + ({})*f' + ({})*f = 0",
        coeffs[4], coeffs[3], coeffs[2], coeffs[1], coeffs[0]
    ));

    Ok((
        Report {
            command: "derive-ode",
            inputs: json!({
                "preset": preset,
                "delta1": deltas.as_ref().map(|d| d.delta1().to_string()),
                "delta2": deltas.as_ref().map(|d| d.delta2().to_string()),
                "profile_field": "f(z) along the third frame leg",
            }),
            results: json!({
                "coefficients": coeffs,
                "coefficient_order": ["f", "f'", "f''", "f'''", "f''''"],
                "orientation": ode.orientation,
            }),
            human_lines: human,
        },
        true,
    ))
}

fn sample_json(sample: &FamilySample) -> Value {
    json!({
        "field": sample.field.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "vector_field_system": sample.vector_field_system.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "map_system": sample.map_system.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "vector_field_ok": sample.vector_field_ok,
        "map_ok": sample.map_ok,
    })
}

fn family_json(check: &FamilyCheck) -> Value {
    let status = match &check.status {
        FamilyStatus::Applicable => "applicable".to_string(),
        FamilyStatus::Degenerate => "degenerate (zero field)".to_string(),
        FamilyStatus::NotApplicable { requirement } => {
            format!("not applicable (requires {requirement})")
        }
    };
    json!({
        "family": check.family.name(),
        "status": status,
        "stated_map_relation": check.stated_map_relation,
        "stated_map_relation_holds": check.stated_map_relation_holds,
        "all_vector_field_ok": check.all_vector_field_ok(),
        "all_map_ok": check.all_map_ok(),
        "samples": check.samples.iter().map(sample_json).collect::<Vec<_>>(),
    })
}

fn family_human(lines: &mut Vec<String>, check: &FamilyCheck) {
    let status = match &check.status {
        FamilyStatus::Applicable => "applicable".to_string(),
        FamilyStatus::Degenerate => "degenerate (zero field)".to_string(),
        FamilyStatus::NotApplicable { requirement } => {
            format!("not applicable; requires {requirement}")
        }
    };
    lines.push(format!("family {}: {status}", check.family.name()));
    for s in &check.samples {
        lines.push(format!(
            "  X = ({}, {}, {}): vector-field system ({}, {}, {}) -> {}; map system ({}, {}) -> {}",
            s.field[0],
            s.field[1],
            s.field[2],
            s.vector_field_system[0],
            s.vector_field_system[1],
            s.vector_field_system[2],
            if s.vector_field_ok { "pass" } else { "fail" },
            s.map_system[0],
            s.map_system[1],
            if s.map_ok { "pass" } else { "fail" },
        ));
    }
    if check.status == FamilyStatus::Applicable {
        if check.stated_map_relation_holds && !check.all_map_ok() {
            lines.push(format!(
                "  note: the stated map relation ({}) holds but the computed map residual \
                 does not vanish; with the term-by-term aggregate the residual factor on \
                 this family is 4*(delta2 - delta1), so the members are critical vector \
                 fields without being critical maps",
                check.stated_map_relation
            ));
        } else if !check.stated_map_relation_holds && check.all_vector_field_ok() {
            lines.push(format!(
                "  note: members solve the vector-field system; the map system needs {}",
                check.stated_map_relation
            ));
        }
    }
}

pub fn cmd_classify_nil(d: &DeltaPair) -> Result<(Report, bool), CliError> {
    let report = verify_classification(d).map_err(core_err)?;
    let systems = nil_systems(&DeltaSpec::Numeric(d.delta1().clone(), d.delta2().clone()))
        .map_err(core_err)?;

    let mut ok = true;
    let mut human = vec![
        format!(
            "t^2 = -(2*delta1 + delta2)/delta2 = {}",
            report
                .t_squared
                .as_ref()
                .map(|t| t.to_string())
                .unwrap_or_else(|| "undefined (delta2 = 0)".to_string())
        ),
        format!(
            "t = {}",
            report
                .t
                .as_ref()
                .map(|t| t.to_string())
                .unwrap_or_else(|| "-".to_string())
        ),
        format!(
            "vector-field system: ({}, {}, {})",
            systems.vector_field_system[0],
            systems.vector_field_system[1],
            systems.vector_field_system[2]
        ),
        format!(
            "map system: ({}, {})",
            systems.map_system[0], systems.map_system[1]
        ),
    ];
    for check in &report.families {
        family_human(&mut human, check);
        match check.status {
            FamilyStatus::Applicable | FamilyStatus::Degenerate => {
                if !check.all_vector_field_ok() {
                    ok = false;
                }
            }
            FamilyStatus::NotApplicable { .. } => {}
        }
    }
    for ctl in &report.controls {
        human.push(format!(
            "control ({}): X = ({}, {}, {}) -> vector-field system {}",
            ctl.label,
            ctl.sample.field[0],
            ctl.sample.field[1],
            ctl.sample.field[2],
            if ctl.sample.vector_field_ok {
                "unexpectedly passes"
            } else {
                "fails as expected"
            }
        ));
        if ctl.sample.vector_field_ok {
            ok = false;
        }
    }
    human.push(format!(
        "classification {}",
        if ok { "verified" } else { "NOT verified" }
    ));

    Ok((
        Report {
            command: "classify-nil",
            inputs: json!({
                "preset": "nil",
                "delta1": d.delta1().to_string(),
                "delta2": d.delta2().to_string(),
            }),
            results: json!({
                "t_squared": report.t_squared.as_ref().map(|t| t.to_string()),
                "t": report.t.as_ref().map(|t| t.to_string()),
                "vector_field_system": systems.vector_field_system.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "map_system": systems.map_system.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "families": report.families.iter().map(family_json).collect::<Vec<_>>(),
                "controls": report.controls.iter().map(|c| json!({
                    "label": c.label,
                    "sample": sample_json(&c.sample),
                })).collect::<Vec<_>>(),
                "verified": ok,
            }),
            human_lines: human,
        },
        ok,
    ))
}

pub fn cmd_verify_family(name: &str, d: &DeltaPair) -> Result<(Report, bool), CliError> {
    let family = NilFamily::parse(name).ok_or_else(|| {
        CliError::input(format!(
            "unknown family `{name}` (available: {})",
            NilFamily::ALL
                .iter()
                .map(|f| f.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })?;
    let check = verify_family(family, d).map_err(core_err)?;
    let ok = match check.status {
        FamilyStatus::Applicable | FamilyStatus::Degenerate => check.all_vector_field_ok(),
        FamilyStatus::NotApplicable { .. } => false,
    };
    let mut human = Vec::new();
    family_human(&mut human, &check);
    human.push(format!(
        "family {}",
        if ok {
            "verified"
        } else {
            "NOT verified at these deltas"
        }
    ));
    Ok((
        Report {
            command: "verify-family",
            inputs: json!({
                "preset": "nil",
                "family": family.name(),
                "delta1": d.delta1().to_string(),
                "delta2": d.delta2().to_string(),
            }),
            results: json!({
                "family": family_json(&check),
                "verified": ok,
            }),
            human_lines: human,
        },
        ok,
    ))
}

pub fn cmd_variation_test(loaded: &LoadedManifest) -> Result<(Report, bool), CliError> {
    let x = numeric_field(loaded)?;
    let v: Vec<f64> = parse_direction(&loaded.manifest, loaded.frame.dim())?
        .iter()
        .map(|r| r.to_f64())
        .collect();
    let step = loaded.manifest.step.unwrap_or(1e-4);
    let tolerance = loaded.manifest.tolerance.unwrap_or(1e-6);
    let out = variation_test(
        &loaded.frame,
        &x,
        &v,
        loaded.deltas.delta1().to_f64(),
        loaded.deltas.delta2().to_f64(),
        step,
    )
    .map_err(core_err)?;
    let ok = out.rel_err < tolerance;
    let human = vec![
        format!("step: {step:e}   tolerance: {tolerance:e}"),
        format!("lhs (central difference of the density): {:.12e}", out.lhs),
        format!("rhs (<2 * vertical condition, V>):        {:.12e}", out.rhs),
        format!(
            "relative error: {:.3e} -> {}",
            out.rel_err,
            if ok { "pass" } else { "FAIL" }
        ),
    ];
    Ok((
        Report {
            command: "variation-test",
            inputs: json!({
                "manifest": crate::manifest::print_manifest(&loaded.manifest),
                "x": x,
                "v": v,
                "step": step,
                "tolerance": tolerance,
            }),
            results: json!({
                "lhs": out.lhs,
                "rhs": out.rhs,
                "rel_err": out.rel_err,
                "within_tolerance": ok,
            }),
            human_lines: human,
        },
        ok,
    ))
}

pub fn cmd_scan_same_sign(
    preset: &str,
    loaded: Option<&LoadedManifest>,
    d: &DeltaPair,
) -> Result<(Report, bool), CliError> {
    let frame = match loaded {
        Some(l) => l.frame.clone(),
        None => {
            let algebra = match preset {
                "nil" => FrameAlgebra::nil(),
                "sol" => FrameAlgebra::sol(),
                other => {
                    return Err(CliError::input(format!(
                        "unknown preset `{other}` (available: nil, sol)"
                    )))
                }
            };
            Frame::left_invariant(algebra, Symbols::new(vec!["a", "b", "g"])).map_err(core_err)?
        }
    };
    let outcome = same_sign_scan(&frame, d).map_err(core_err)?;
    let (results, mut human) = match &outcome {
        ScanOutcome::ZeroFieldOnly { factors } => {
            let mut lines = vec!["solution set: only the zero field".to_string()];
            for (var, cofactor) in factors {
                lines.push(format!(
                    "  component forces {var} = 0 (sign-definite cofactor {cofactor})"
                ));
            }
            (
                json!({
                    "solution_set": "zero field only",
                    "factors": factors.iter().map(|(v, p)| json!({
                        "variable": v,
                        "cofactor": p.to_string(),
                    })).collect::<Vec<_>>(),
                }),
                lines,
            )
        }
        ScanOutcome::Unresolved { system } => {
            let mut lines = vec![
                "solution set: not resolved to the zero field; raw system follows".to_string(),
            ];
            for p in system {
                lines.push(format!("  {p} = 0"));
            }
            (
                json!({
                    "solution_set": "unresolved",
                    "system": system.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }),
                lines,
            )
        }
    };
    human.insert(
        0,
        format!(
            "deltas: ({}, {}), same sign: {}",
            d.delta1(),
            d.delta2(),
            d.same_sign()
        ),
    );
    Ok((
        Report {
            command: "scan-same-sign",
            inputs: json!({
                "preset": if loaded.is_some() { "(manifest algebra)" } else { preset },
                "delta1": d.delta1().to_string(),
                "delta2": d.delta2().to_string(),
            }),
            results,
            human_lines: human,
        },
        true,
    ))
}
