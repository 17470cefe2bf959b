//! Resolving command-line arguments into library values.
//!
//! Every structured argument may be a path to a file, inline JSON, or a
//! shorthand (`S3xC5`, `Z2`, `[x1,x2]`). JSON reports written by this tool
//! are accepted back where the shapes match: a report carrying a `group`,
//! `tower`, `word` or `formula` field is unwrapped to that field.

use std::collections::HashMap;
use std::path::Path;

use serde_json::Value;
use verbalis::folog::Formula;
use verbalis::group::is_prime;
use verbalis::towers::{tower_from_family, FamilyFile, FamilySpec, SupportFactor, Tower, TowerFile};
use verbalis::{Caps, Elem, Error, FiniteGroup, GroupSpec, Word};

/// Why a command failed, which decides the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

pub fn usage<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Usage(msg.into()))
}

fn looks_like_path(v: &str) -> bool {
    v.ends_with(".json") || v.ends_with(".txt") || v.contains('/') || v.contains('\\')
}

/// The argument text, or the contents of the file it names.
pub fn read_arg(flag: &str, value: &str) -> Outcome<String> {
    let path = Path::new(value);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("--{flag}: cannot read `{value}`: {e}")));
    }
    let inline = value.trim_start().starts_with(['{', '[']);
    if !inline && looks_like_path(value) {
        return usage(format!("--{flag}: no such file `{value}`"));
    }
    Ok(value.to_string())
}

fn json(text: &str) -> Outcome<Option<Value>> {
    let t = text.trim();
    if !(t.starts_with('{') || t.starts_with('[')) {
        return Ok(None);
    }
    Ok(Some(serde_json::from_str(t).map_err(Error::from)?))
}

/// Follows `key` through report wrappers such as `{"schema":..., "group": {...}}`.
fn unwrap_field(mut v: Value, key: &str, marker: &str) -> Value {
    while v.get(marker).is_none() {
        match v.get_mut(key).map(Value::take) {
            Some(inner) if inner.is_object() => v = inner,
            Some(inner) => return inner,
            None => break,
        }
    }
    v
}

pub fn group(flag: &str, value: &str, caps: &Caps) -> Outcome<FiniteGroup> {
    let text = read_arg(flag, value)?;
    match json(&text)? {
        Some(v) => {
            let v = unwrap_field(v, "group", "kind");
            let spec: GroupSpec = serde_json::from_value(v).map_err(Error::from)?;
            Ok(spec.build(caps)?)
        }
        None => Ok(GroupSpec::parse(&text, caps)?),
    }
}

pub fn word(flag: &str, value: &str) -> Outcome<Word> {
    let text = read_arg(flag, value)?;
    if text.trim_start().starts_with('{') {
        let v = unwrap_field(json(&text)?.unwrap_or(Value::Null), "word", "");
        match v.as_str() {
            Some(s) => Ok(Word::parse(s)?),
            None => Err(Error::Input("expected {\"word\": \"...\"}".into()).into()),
        }
    } else {
        Ok(Word::parse(text.trim())?)
    }
}

pub fn formula(flag: &str, value: &str) -> Outcome<Formula> {
    let text = read_arg(flag, value)?;
    if text.trim_start().starts_with('{') {
        let v = unwrap_field(json(&text)?.unwrap_or(Value::Null), "formula", "");
        match v.as_str() {
            Some(s) => Ok(Formula::parse(s)?),
            None => Err(Error::Input("expected {\"formula\": \"...\"}".into()).into()),
        }
    } else {
        Ok(Formula::parse(text.trim())?)
    }
}

/// `3`, `1,2,5` or `[1,2,5]`.
pub fn elements(flag: &str, value: &str) -> Outcome<Vec<Elem>> {
    let text = read_arg(flag, value)?;
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    t.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Elem>().map_err(|_| Failure::Usage(format!("--{flag}: `{s}` is not an element index"))))
        .collect()
}

/// `x=1,y=3` (also accepted as repeated flags).
pub fn assignment(flag: &str, pairs: &[String]) -> Outcome<HashMap<String, Elem>> {
    let mut out = HashMap::new();
    for p in pairs {
        let Some((name, val)) = p.split_once('=') else {
            return usage(format!("--{flag}: expected NAME=ELEMENT, got `{p}`"));
        };
        let val = val
            .trim()
            .parse::<Elem>()
            .map_err(|_| Failure::Usage(format!("--{flag}: `{val}` is not an element index")))?;
        out.insert(name.trim().to_string(), val);
    }
    Ok(out)
}

/// `Z<p>` or `Z<p>^<p>` shorthand for the standard families.
fn family_shorthand(text: &str) -> Option<FamilySpec> {
    let rest = text.strip_prefix('Z')?;
    let (p, power) = match rest.split_once('^') {
        Some((a, b)) => (a, Some(b)),
        None => (rest, None),
    };
    let p: u64 = p.parse().ok()?;
    if !is_prime(p) {
        return None;
    }
    match power {
        None => Some(FamilySpec::Zp { p }),
        Some(b) if b.parse::<u64>().ok() == Some(p) => Some(FamilySpec::PowerZp { p }),
        Some(_) => None,
    }
}

fn need_depth(flag: &str, depth: Option<usize>) -> Outcome<usize> {
    depth.ok_or_else(|| Failure::Usage(format!("--depth is required when --{flag} is a family or group")))
}

/// A tower file, a family description, a family shorthand, or a group
/// (read as a constant tower).
pub fn tower(flag: &str, value: &str, depth: Option<usize>, caps: &Caps) -> Outcome<Tower> {
    let text = read_arg(flag, value)?;
    let t = text.trim();
    let built = match json(t)? {
        Some(v) => {
            let v = unwrap_field(v, "tower", "levels");
            if v.get("levels").is_some() {
                let file: TowerFile = serde_json::from_value(v).map_err(Error::from)?;
                let t = file.build(caps)?;
                return Ok(match depth {
                    Some(d) => t.truncate(d)?,
                    None => t,
                });
            } else if v.get("family").is_some() {
                let file: FamilyFile = serde_json::from_value(v).map_err(Error::from)?;
                let d = depth.or(file.depth);
                tower_from_family(&file.family, need_depth(flag, d)?, caps)?
            } else {
                let g = group(flag, t, caps)?;
                Tower::constant(&g, need_depth(flag, depth)?)?
            }
        }
        None => match family_shorthand(t) {
            Some(f) => tower_from_family(&f, need_depth(flag, depth)?, caps)?,
            None => Tower::constant(&GroupSpec::parse(t, caps)?, need_depth(flag, depth)?)?,
        },
    };
    Ok(built)
}

pub fn support_factors(flag: &str, value: &str) -> Outcome<Vec<SupportFactor>> {
    let text = read_arg(flag, value)?;
    let v = match json(&text)? {
        Some(v) => unwrap_field(v, "factors", ""),
        None => return usage(format!("--{flag}: expected a JSON array of factors")),
    };
    Ok(serde_json::from_value(v).map_err(Error::from)?)
}
