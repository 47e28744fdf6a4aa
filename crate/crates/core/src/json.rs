//! JSON forms of roots, root sets, shadows, functionals and reports.
//!
//! Field order is fixed and rationals are `"p/q"` strings, so equal inputs
//! serialize to identical bytes.

use serde_json::{json, Map, Value};

use crate::affine::{build_affine_with, AffineRootSystem, AffineTypeId};
use crate::error::{Error, Result};
use crate::finite::{AxiomReport, FiniteRootSet};
use crate::functional::LinearFunctional;
use crate::root::{Ambient, Root};
use crate::scalar::{parse_rational, rational_to_string, LambdaMode};
use crate::shadow::{Action, ClassConfig, ClosureViolation, Direction, Shadow};
use crate::subsystems::{
    CompatibleBase, ComponentData, FunctionalReport, ParabolicSet, RootSubset, SubsetWitness, ZetaConstruction,
};
use crate::tables::GoldenReport;

/// `{"coords": {...}, "k": k, "sigma": s}` with every ambient symbol.
pub fn root_to_json(r: &Root) -> Value {
    let ambient = r.ambient();
    let coords: Map<String, Value> = r
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| (ambient.symbol(i), Value::String(rational_to_string(c))))
        .collect();
    json!({"coords": coords, "k": r.delta(), "sigma": r.sigma()})
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

/// Inverse of [`root_to_json`]; absent symbols read as zero.
pub fn root_from_json(ambient: Ambient, v: &Value) -> Result<Root> {
    let coords = v
        .get("coords")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("root without coords"))?;
    let mut r = Root::zero(ambient);
    for (sym, c) in coords {
        let i = ambient
            .index_of(sym)
            .ok_or_else(|| bad(&format!("unknown symbol {sym}")))?;
        let c = parse_rational(c.as_str().ok_or_else(|| bad("coordinate is not a string"))?)?;
        r = &r + &Root::basis(ambient, i).scale_rational(c).expect("basis vectors scale");
    }
    let k = v.get("k").map_or(Some(0), Value::as_i64).ok_or_else(|| bad("k"))?;
    let sigma = v
        .get("sigma")
        .map_or(Some(0), Value::as_i64)
        .ok_or_else(|| bad("sigma"))?;
    Ok(r.with_delta(k).with_sigma(sigma))
}

pub fn system_header(system: &AffineRootSystem) -> Value {
    json!({
        "type": system.type_id().to_string(),
        "ranks": system.type_id().ranks(),
        "lambda_mode": system.form().lambda_mode().label(),
    })
}

/// Rebuilds the system named by a [`system_header`].
pub fn system_from_header(v: &Value) -> Result<AffineRootSystem> {
    let ty = v
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("system without type"))?;
    let mode = match v.get("lambda_mode").and_then(Value::as_str) {
        Some(m) => LambdaMode::parse(m)?,
        None => LambdaMode::Symbolic,
    };
    build_affine_with(AffineTypeId::parse(ty)?, mode)
}

fn classified(r: &Root, kind: &str, parity: &str) -> Value {
    let mut v = root_to_json(r);
    let obj = v.as_object_mut().expect("roots are objects");
    obj.insert("kind".into(), kind.into());
    obj.insert("parity".into(), parity.into());
    v
}

pub fn finite_set_to_json(set: &FiniteRootSet) -> Result<Value> {
    let roots = set
        .entries()
        .map(|(r, p)| Ok(classified(r, set.kind_of(r)?.label(), p.label())))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "type": set.type_id().to_string(),
        "ranks": set.type_id().ranks(),
        "lambda_mode": set.form().lambda_mode().label(),
        "roots": roots,
    }))
}

/// All roots with `|k| ≤ window`, classified.
pub fn affine_window_to_json(system: &AffineRootSystem, window: i64) -> Result<Value> {
    let roots = system
        .window(window)
        .iter()
        .map(|r| Ok(classified(r, system.classify(r)?.label(), system.parity(r)?.label())))
        .collect::<Result<Vec<_>>>()?;
    let mut v = system_header(system);
    let obj = v.as_object_mut().expect("header is an object");
    obj.insert("window".into(), window.into());
    obj.insert("roots".into(), roots.into());
    Ok(v)
}

pub fn config_to_json(c: &ClassConfig) -> Value {
    match c {
        ClassConfig::Hybrid { direction, m, t } => {
            let family = match direction {
                Direction::Up => "UpHybrid",
                Direction::Down => "DownHybrid",
            };
            json!({"family": family, "m": m, "t": t})
        }
        ClassConfig::Tight { plus, minus } => {
            json!({"family": "Tight", "plus": plus.full_label(), "minus": minus.full_label()})
        }
    }
}

fn action_from_label(s: &str) -> Result<Action> {
    match s {
        "FullLN" | "ln" => Ok(Action::Ln),
        "FullIN" | "in" => Ok(Action::In),
        other => Err(bad(&format!("unknown action {other}"))),
    }
}

pub fn config_from_json(v: &Value) -> Result<ClassConfig> {
    let family = v
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("config without family"))?;
    let int = |key: &str| v.get(key).and_then(Value::as_i64).ok_or_else(|| bad(key));
    let action = |key: &str| action_from_label(v.get(key).and_then(Value::as_str).ok_or_else(|| bad(key))?);
    match family {
        "UpHybrid" => Ok(ClassConfig::up(int("m")?, int("t")?)),
        "DownHybrid" => Ok(ClassConfig::down(int("m")?, int("t")?)),
        "Tight" => Ok(ClassConfig::tight(action("plus")?, action("minus")?)),
        other => Err(bad(&format!("unknown family {other}"))),
    }
}

pub fn shadow_to_json(shadow: &Shadow) -> Value {
    let classes: Vec<Value> = shadow
        .classes()
        .map(|(rep, c)| json!({"rep": root_to_json(rep), "config": config_to_json(c)}))
        .collect();
    json!({"system": system_header(shadow.system()), "classes": classes})
}

pub fn shadow_from_json(v: &Value) -> Result<Shadow> {
    let system = system_from_header(v.get("system").ok_or_else(|| bad("shadow without system"))?)?;
    let classes = v
        .get("classes")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("shadow without classes"))?
        .iter()
        .map(|c| {
            let rep = root_from_json(system.ambient(), c.get("rep").ok_or_else(|| bad("class without rep"))?)?;
            let config = config_from_json(c.get("config").ok_or_else(|| bad("class without config"))?)?;
            Ok((rep, config))
        })
        .collect::<Result<Vec<_>>>()?;
    Shadow::new(&system, classes)
}

pub fn violations_to_json(violations: &[ClosureViolation]) -> Value {
    violations
        .iter()
        .map(|v| {
            json!({
                "alpha": root_to_json(&v.alpha),
                "beta": root_to_json(&v.beta),
                "sum": root_to_json(&v.sum),
                "expected": "ln",
                "found": "in",
                "rule": v.rule.label(),
            })
        })
        .collect()
}

pub fn functional_to_json(zeta: &LinearFunctional) -> Result<Value> {
    Ok(json!({
        "basis": zeta.basis().iter().map(root_to_json).collect::<Vec<_>>(),
        "values": zeta.values().iter().map(rational_to_string).collect::<Vec<_>>(),
        "zeta_delta": rational_to_string(&zeta.delta_value()?),
    }))
}

pub fn zeta_to_json(z: &ZetaConstruction) -> Result<Value> {
    let mut v = functional_to_json(&z.zeta)?;
    let obj = v.as_object_mut().expect("functionals are objects");
    obj.insert("case".into(), z.case.number().into());
    obj.insert("direction".into(), z.direction.label().into());
    obj.insert("order".into(), z.order.iter().map(|i| i + 1).collect::<Vec<_>>().into());
    Ok(v)
}

fn witness_to_json(w: &SubsetWitness) -> Value {
    match w {
        SubsetWitness::NotSymmetric { root } => json!({"failure": "not symmetric", "root": root_to_json(root)}),
        SubsetWitness::NotClosed { alpha, beta, sum } => json!({
            "failure": "not closed",
            "alpha": root_to_json(alpha),
            "beta": root_to_json(beta),
            "sum": root_to_json(sum),
        }),
        SubsetWitness::NotContained { root } => json!({"failure": "not contained", "root": root_to_json(root)}),
        SubsetWitness::NotCovering { root } => json!({"failure": "not covering", "root": root_to_json(root)}),
    }
}

pub fn functional_report_to_json(report: &FunctionalReport) -> Value {
    use crate::subsystems::FunctionalViolation as V;
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| match v {
            V::Membership { root, in_p, value } => json!({
                "check": "P = {zeta >= 0}",
                "root": root_to_json(root),
                "in_p": in_p,
                "value": rational_to_string(value),
            }),
            V::Shadow { root, value, action } => json!({
                "check": "shadow sign",
                "root": root_to_json(root),
                "value": rational_to_string(value),
                "found": action.label(),
            }),
            V::NotParabolic { component, witness } => json!({
                "check": "P_i parabolic",
                "component": component + 1,
                "witness": witness_to_json(witness),
            }),
            V::NotProper { component } => json!({"check": "P_i proper", "component": component + 1}),
        })
        .collect();
    json!({
        "window": report.window,
        "zeta_delta": rational_to_string(&report.zeta_delta),
        "roots_checked": report.roots_checked,
        "violations": violations,
    })
}

pub fn subset_to_json(s: &RootSubset) -> Value {
    let lines: Vec<Value> = s
        .describe()
        .into_iter()
        .map(|(l, d)| json!({"layer": root_to_json(&l), "k": d}))
        .collect();
    Value::Array(lines)
}

pub fn components_to_json(components: &[ComponentData]) -> Value {
    components
        .iter()
        .map(|c| {
            json!({
                "index": c.index + 1,
                "pure_type": c.pure_type.map(|p| p.to_string()),
                "roots": c.finite_roots().map(root_to_json).collect::<Vec<_>>(),
                "base": c.base.iter().map(root_to_json).collect::<Vec<_>>(),
                "theta": root_to_json(&c.theta),
                "theta_coeffs": c.coeffs,
            })
        })
        .collect()
}

pub fn parabolic_to_json(p: &ParabolicSet) -> Value {
    json!({
        "component": p.component + 1,
        "direction": p.direction.label(),
        "lines": subset_to_json(&p.set),
    })
}

pub fn compatible_base_to_json(b: &CompatibleBase) -> Value {
    json!({
        "component": b.component + 1,
        "simple": b.simple.iter().map(root_to_json).collect::<Vec<_>>(),
        "simple_classes": b.simple_classes.iter().map(|c| c.label()).collect::<Vec<_>>(),
        "affine_simple": root_to_json(&b.affine_simple),
        "affine_class": b.affine_class.label(),
        "strict_count": b.strict_count,
        "searched": b.searched,
    })
}

pub fn axiom_report_to_json(report: &AxiomReport) -> Value {
    let outcomes: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "axiom": o.axiom.label(),
                "passed": o.passed,
                "checked": o.checked,
                "witness": o.witness,
            })
        })
        .collect();
    json!({"type": report.type_label, "all_passed": report.all_passed(), "outcomes": outcomes})
}

pub fn golden_report_to_json(report: &GoldenReport) -> Value {
    let mismatches: Vec<Value> = report
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "root": root_to_json(&m.root),
                "computed_kind": m.computed_kind.label(),
                "table_kind": m.table_kind.map(|k| k.label()),
                "computed_parity": m.computed_parity.label(),
                "table_parity": m.table_parity.map(|p| p.label()),
            })
        })
        .collect();
    json!({
        "type": report.type_id.to_string(),
        "window": report.window,
        "roots_checked": report.roots_checked,
        "mismatches": mismatches,
        "printed_non_roots": report.printed_non_roots.iter().map(root_to_json).collect::<Vec<_>>(),
        "notes": report.notes,
    })
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::build_affine;

    #[test]
    fn roots_and_shadows_read_back() {
        let s = build_affine(AffineTypeId::D21).unwrap();
        let r = s.parse_root("2g1-g2+3delta").unwrap();
        assert_eq!(root_from_json(s.ambient(), &root_to_json(&r)).unwrap(), r);
        let sh = Shadow::uniform(&s, ClassConfig::down(-2, 1))
            .unwrap()
            .with_class(&s.real_classes()[0], ClassConfig::tight(Action::In, Action::Ln))
            .unwrap();
        assert_eq!(shadow_from_json(&shadow_to_json(&sh)).unwrap(), sh);
    }

    #[test]
    fn header_uses_fixed_field_order() {
        let s = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        let text = render(&system_header(&s));
        assert_eq!(
            text,
            "{\n  \"type\": \"B(1,1)^(1)\",\n  \"ranks\": [\n    1,\n    1\n  ],\n  \"lambda_mode\": \"symbolic\"\n}\n"
        );
    }
}
