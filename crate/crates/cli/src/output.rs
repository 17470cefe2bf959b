use serde_json::{Map, Value};
use verbalis::{FiniteGroup, GroupSpec, SubgroupSet, SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Rebuilds objects with sorted keys, whatever map backing serde_json uses.
fn canonical(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, canonical(v))).collect::<Map<_, _>>())
        }
        Value::Array(xs) => Value::Array(xs.into_iter().map(canonical).collect()),
        other => other,
    }
}

fn with_schema(v: Value) -> Value {
    let mut m = match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    m.insert("schema".into(), Value::String(SCHEMA.into()));
    canonical(Value::Object(m))
}

pub fn render(v: Value, format: Format) -> String {
    let v = with_schema(v);
    match format {
        Format::Json => serde_json::to_string(&v).expect("values serialize") + "\n",
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(m) = &v {
                for (k, x) in m {
                    if k == "schema" {
                        continue;
                    }
                    let shown = match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("{k}: {shown}\n"));
                }
            }
            out
        }
    }
}

pub fn error_report(name: &str, message: &str) -> Value {
    serde_json::json!({ "error": { "kind": name, "message": message } })
}

pub fn subgroup(h: &SubgroupSet) -> Value {
    serde_json::json!({
        "order": h.order(),
        "index": h.index(),
        "normal": h.is_normal(),
        "elements": h.elements(),
    })
}

pub fn subgroups(hs: &[SubgroupSet]) -> Value {
    Value::Array(hs.iter().map(subgroup).collect())
}

/// Re-consumable group description in table form.
pub fn group_spec(g: &FiniteGroup) -> Value {
    serde_json::to_value(GroupSpec::from_group(g)).expect("specs serialize")
}

pub fn group_label(g: &FiniteGroup) -> Value {
    g.label().map_or(Value::Null, |l| Value::String(l.into()))
}
