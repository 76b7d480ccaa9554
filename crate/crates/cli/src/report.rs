//! Serialization of suite reports and search summaries.

use serde_json::{json, Map, Value};
use weightsieve_core::localization::ChernTable;
use weightsieve_core::restriction::{RestrictionFailure, RestrictionOutcome};
use weightsieve_core::search::{SearchCounters, SearchSpec};
use weightsieve_core::structural::{PairingObstruction, PairingOutcome, Pm1Verdict};
use weightsieve_core::suite::{CheckDetail, CheckKind, CheckResult};
use weightsieve_core::{BigInt, BigSuiteReport, ExactRational, Partition, Suite, WeightData};

use crate::document::int_number;

pub const TOOL: &str = "weightsieve";

/// Rationals are written `p/q` (or `p` when integral), never as floats.
pub fn rational(v: &ExactRational) -> Value {
    Value::String(v.to_string())
}

fn int(v: &BigInt) -> Value {
    Value::Number(int_number(v))
}

fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn suite_echo(suite: &Suite) -> Value {
    json!({
        "filters": suite.checks().map(CheckKind::name).collect::<Vec<_>>(),
        "kosniowski": suite.contains(CheckKind::Kosniowski),
    })
}

fn chern_entries<'a>(items: impl Iterator<Item = &'a (Partition, ExactRational)>) -> Value {
    Value::Array(
        items
            .map(|(p, v)| json!({ "partition": partition(p), "value": rational(v) }))
            .collect(),
    )
}

fn table_json(t: &ChernTable<BigInt>) -> Value {
    json!({
        "chern_numbers": chern_entries(t.chern_numbers()),
        "sub_top": chern_entries(t.sub_top()),
    })
}

fn restriction_json(o: &RestrictionOutcome<BigInt>) -> Value {
    let signatures: Vec<Value> = o
        .signatures
        .iter()
        .map(|s| {
            json!({
                "divisible": s.divisible,
                "residues": s.residues.iter().map(int).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut obj = json!({ "m": int(&o.m), "feasible": o.is_feasible(), "signatures": signatures });
    match &o.result {
        Ok(grouping) => {
            obj["grouping"] = Value::Array(
                grouping
                    .groups
                    .iter()
                    .map(|g| json!({ "points": g.points, "dimension": g.dimension }))
                    .collect(),
            );
        }
        Err(RestrictionFailure::ForcedSingleton { point, dimension }) => {
            obj["explanation"] = json!(format!(
                "point {point} is alone in its residue class mod {} yet has {dimension} divisible weight(s); \
                 its component would have a single fixed point",
                o.m
            ));
        }
        Err(RestrictionFailure::NoAdmissibleGrouping { points, dimension }) => {
            obj["explanation"] = json!(format!(
                "no split of points {points:?} into components of dimension {dimension} with at least \
                 two fixed points each passes the suite mod {}",
                o.m
            ));
        }
    }
    obj
}

fn witness(detail: &CheckDetail<BigInt>) -> Value {
    match detail {
        CheckDetail::Validate => Value::Null,
        CheckDetail::Parity {
            points,
            complex_dimension,
            ..
        } => {
            json!({ "points": points, "complex_dimension": complex_dimension })
        }
        CheckDetail::Pm1(v) => json!({
            "all_weights_unit": *v != Pm1Verdict::Vacuous,
        }),
        CheckDetail::EqualSums(r) => json!({
            "applicable": r.applicable,
            "classes": r.classes.iter().map(|c| json!({ "sum": int(&c.sum), "points": c.points })).collect::<Vec<_>>(),
            "unmatched_points": r.lonely_points(),
        }),
        CheckDetail::Pairing(PairingOutcome::Feasible(w)) => json!({
            "pairs": w.pairs.iter().map(|(a, b)| json!([
                { "point": a.point, "weight": int(&a.weight) },
                { "point": b.point, "weight": int(&b.weight) },
            ])).collect::<Vec<_>>(),
        }),
        CheckDetail::Pairing(PairingOutcome::Infeasible(obstruction)) => match obstruction {
            PairingObstruction::OddWeightCount(count) => json!({
                "reason": "odd-weight-count",
                "weight_count": count,
            }),
            PairingObstruction::Unbalanced {
                value,
                positive,
                negative,
            } => json!({
                "reason": "unbalanced",
                "absolute_value": int(value),
                "positive": positive,
                "negative": negative,
            }),
            PairingObstruction::NoCrossMatching { value, matched, needed } => json!({
                "reason": "no-cross-point-matching",
                "absolute_value": int(value),
                "matched": matched,
                "needed": needed,
            }),
        },
        CheckDetail::Vanishing(r) => json!({ "violations": chern_entries(r.violations.iter()) }),
        CheckDetail::Integrality(r) => {
            let mut v = table_json(&r.table);
            v["non_integral"] = Value::Array(r.non_integral.iter().map(partition).collect());
            v
        }
        CheckDetail::Restrictions(r) => json!({
            "first_failing_modulus": r.first_failing.as_ref().map(int),
            "moduli": r.outcomes.iter().map(restriction_json).collect::<Vec<_>>(),
        }),
        CheckDetail::Kosniowski(p) => json!({ "profile": p.0 }),
    }
}

fn check_json(r: &CheckResult<BigInt>) -> Value {
    json!({
        "name": r.kind.name(),
        "status": r.status.name(),
        "witness": witness(&r.detail),
    })
}

pub fn report_document(data: &WeightData, suite: &Suite, report: &BigSuiteReport) -> Value {
    json!({
        "tool": TOOL,
        "version": env!("CARGO_PKG_VERSION"),
        "suite": suite_echo(suite),
        "input": {
            "complex_dimension": data.complex_dimension(),
            "points": data.num_points(),
        },
        "checks": report.results.iter().map(check_json).collect::<Vec<_>>(),
        "overall": if report.passed() { "pass" } else { "fail" },
    })
}

pub fn counters_json(c: &SearchCounters) -> Map<String, Value> {
    let mut pruned = Map::new();
    for kind in CheckKind::STAGED {
        if let Some(v) = c.pruned.get(&kind) {
            pruned.insert(kind.name().to_string(), json!(v));
        }
    }
    let mut m = Map::new();
    m.insert("generated".into(), json!(c.generated));
    m.insert("duplicates".into(), json!(c.duplicates));
    m.insert("gcd_rejected".into(), json!(c.gcd_rejected));
    m.insert("pruned".into(), Value::Object(pruned));
    m.insert("survivors".into(), json!(c.survivors));
    m
}

pub fn summary_line(spec: &SearchSpec, counters: &SearchCounters, truncated: bool) -> Value {
    let mut m = counters_json(counters);
    m.insert("complex_dimension".into(), json!(spec.complex_dimension));
    m.insert("points".into(), json!(spec.num_points));
    m.insert("max_weight".into(), json!(spec.max_weight));
    m.insert("suite".into(), suite_echo(&spec.suite));
    m.insert("gcd_normalize".into(), json!(spec.gcd_normalize));
    m.insert("staged".into(), json!(spec.staged));
    m.insert("candidate_cap".into(), json!(spec.candidate_cap));
    m.insert("truncated".into(), json!(truncated));
    json!({ "summary": Value::Object(m) })
}
