use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use sscat_core::colim_adj::{AdjunctionCertificate, Cocone, CoconeSummary};
use sscat_core::fincat::{FinCategory, Functor};
use sscat_core::simpset::{FibrationReport, SegalReport, SimpMap};
use sscat_core::sspace::{CompletenessReport, SegalVerdict};

pub const SCHEMA_VERSION: u32 = 1;

/// A report with its verdict; `verdict` decides the exit code.
pub struct Report {
    pub verdict: bool,
    pub body: Value,
}

impl Report {
    pub fn new(command: &str, verdict: bool, fields: Value) -> Self {
        let mut body = Map::new();
        body.insert("schema_version".into(), json!(SCHEMA_VERSION));
        body.insert("command".into(), json!(command));
        body.insert("verdict".into(), json!(verdict));
        if let Value::Object(extra) = fields {
            body.extend(extra);
        }
        Report {
            verdict,
            body: Value::Object(body),
        }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.body).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn segal(r: &SegalReport) -> Value {
    let counts: BTreeMap<String, [u128; 2]> = r
        .levels
        .iter()
        .map(|l| (format!("level{}", l.level), [l.simplices as u128, l.fiber_product]))
        .collect();
    json!({ "counts": counts, "first_failure": r.first_failure(), "levels": r.levels })
}

pub fn segal_space(v: &SegalVerdict) -> Value {
    let counts: BTreeMap<String, [u128; 2]> = v
        .levels
        .iter()
        .map(|l| (format!("level{}", l.level), [l.simplices as u128, l.fiber_product]))
        .collect();
    json!({ "counts": counts, "equivalence_only": v.equivalence_only(), "levels": v.levels })
}

pub fn completeness(r: &CompletenessReport) -> Value {
    json!({
        "counts": { "level0": [r.objects, r.hoequivs] },
        "components": r.components,
        "strategy": r.strategy,
    })
}

/// Names of the nondegenerate simplices of the domain and their images.
pub fn simp_map(m: &SimpMap) -> Value {
    let (a, b) = (m.domain(), m.codomain());
    let levels: BTreeMap<String, BTreeMap<String, String>> = (0..=a.truncation())
        .filter_map(|n| {
            let table: BTreeMap<String, String> = a
                .nondegenerate(n)
                .into_iter()
                .map(|x| (a.name(n, x).to_string(), b.name(n, m.at(n, x)).to_string()))
                .collect();
            (!table.is_empty()).then(|| (n.to_string(), table))
        })
        .collect();
    json!(levels)
}

pub fn fibration(r: &FibrationReport) -> Value {
    let failure = |f: &Option<sscat_core::simpset::LiftFailure>| {
        f.as_ref().map(|f| {
            json!({
                "shape": f.shape,
                "top": simp_map(&f.problem.top),
                "bottom": simp_map(&f.problem.bottom),
            })
        })
    };
    json!({
        "up_to": r.up_to,
        "kan": r.kan_fibration,
        "trivial": r.trivial_fibration,
        "kan_witness": failure(&r.kan_failure),
        "trivial_witness": failure(&r.trivial_failure),
    })
}

pub fn tables(f: &Functor) -> Value {
    let (c, d) = (f.domain(), f.codomain());
    let ob: BTreeMap<&str, &str> = c.objects().map(|x| (c.object_name(x), d.object_name(f.ob(x)))).collect();
    let mor: BTreeMap<&str, &str> = c.morphisms().map(|m| (c.morphism_name(m), d.morphism_name(f.mor(m)))).collect();
    json!({ "obMap": ob, "morMap": mor })
}

fn components(c: &FinCategory, objects: &FinCategory, comps: &[usize]) -> Value {
    let table: BTreeMap<&str, &str> = objects
        .objects()
        .map(|x| (objects.object_name(x), c.morphism_name(comps[x])))
        .collect();
    json!(table)
}

/// `found` names which side was searched for.
pub fn adjunction(cert: &AdjunctionCertificate, found: &str) -> Value {
    let (a, b) = (cert.left.domain(), cert.left.codomain());
    let adjoint = if found == "left" { &cert.left } else { &cert.right };
    let homs: Vec<Value> = cert
        .hom_bijections
        .iter()
        .map(|(x, y, pairs)| {
            let pairs: Vec<[&str; 2]> = pairs
                .iter()
                .map(|&(h, k)| [b.morphism_name(h), a.morphism_name(k)])
                .collect();
            json!({ "a": a.object_name(*x), "b": b.object_name(*y), "pairs": pairs })
        })
        .collect();
    json!({
        "found": found,
        "adjoint": tables(adjoint),
        "unit": components(a, a, &cert.unit),
        "counit": components(b, b, &cert.counit),
        "hom_bijections": homs,
        "naturality_checks": cert.naturality_checks,
    })
}

pub fn cocone(k: &Cocone) -> Value {
    json!(CoconeSummary::from(k))
}
