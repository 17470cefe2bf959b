//! JSON group descriptions.

use serde::{Deserialize, Serialize};

use super::named::{direct_product_all, named_group, parse_group_name};
use super::perm::{group_from_permutations, parse_cycles, Permutation};
use super::FiniteGroup;
use crate::caps::Caps;
use crate::error::Result;

/// One permutation generator: explicit cycles or cycle text.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PermInput {
    Cycles(Vec<Vec<usize>>),
    Text(String),
}

/// A group description as read from a group file.
///
/// ```json
/// {"kind":"named","name":"S","n":3}
/// {"kind":"perm","degree":4,"generators":[[[1,2],[3,4]], "(1 2 3)"]}
/// {"kind":"table","order":2,"table":[[0,1],[1,0]]}
/// {"kind":"product","factors":[{"kind":"named","name":"C","n":2}, ...]}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Named {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
    },
    Perm {
        degree: usize,
        generators: Vec<PermInput>,
    },
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
}

impl GroupSpec {
    pub fn named(name: &str, n: usize) -> Self {
        GroupSpec::Named { name: name.into(), n: Some(n), p: None, k: None }
    }

    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named { name, n, p, k } => named_group(name, *n, *p, *k, caps),
            GroupSpec::Perm { degree, generators } => {
                let perms = generators
                    .iter()
                    .map(|g| {
                        let cycles = match g {
                            PermInput::Cycles(c) => c.clone(),
                            PermInput::Text(t) => parse_cycles(t)?,
                        };
                        Permutation::from_cycles(*degree, &cycles)
                    })
                    .collect::<Result<Vec<_>>>()?;
                group_from_permutations(*degree, &perms, caps)
            }
            GroupSpec::Table { order, table } => {
                if table.len() != *order {
                    return Err(crate::Error::InvalidTable(format!("declared order {order}, table has {} rows", table.len())));
                }
                let g = FiniteGroup::from_table(table)?;
                caps.check_group_order(g.order() as u128)?;
                Ok(g)
            }
            GroupSpec::Product { factors } => {
                let fs = factors.iter().map(|f| f.build(caps)).collect::<Result<Vec<_>>>()?;
                let g = direct_product_all(&fs, caps)?;
                let labels: Option<Vec<&str>> = fs.iter().map(|f| f.label()).collect();
                Ok(match labels {
                    Some(ls) if !ls.is_empty() => g.with_label(ls.join("x")),
                    _ => g,
                })
            }
        }
    }

    /// Table form of an arbitrary group.
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupSpec::Table { order: g.order(), table: g.table_rows() }
    }

    /// Parses inline JSON, or shorthand such as `S3xC5`.
    pub fn parse(text: &str, caps: &Caps) -> Result<FiniteGroup> {
        let t = text.trim();
        if t.starts_with('{') {
            let spec: GroupSpec = serde_json::from_str(t)?;
            spec.build(caps)
        } else {
            parse_group_name(t, caps)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_kinds() {
        let caps = Caps::default();
        let named = GroupSpec::parse(r#"{"kind":"named","name":"S","n":3}"#, &caps).unwrap();
        assert_eq!(named.order(), 6);
        let perm = GroupSpec::parse(r#"{"kind":"perm","degree":4,"generators":[[[1,2],[3,4]]]}"#, &caps).unwrap();
        assert_eq!(perm.order(), 2);
        let perm = GroupSpec::parse(r#"{"kind":"perm","degree":3,"generators":["(1 2)","(1 2 3)"]}"#, &caps).unwrap();
        assert_eq!(perm.order(), 6);
        let table = GroupSpec::parse(r#"{"kind":"table","order":2,"table":[[0,1],[1,0]]}"#, &caps).unwrap();
        assert_eq!(table.order(), 2);
        let prod = GroupSpec::parse(
            r#"{"kind":"product","factors":[{"kind":"named","name":"S","n":3},{"kind":"named","name":"C","n":5}]}"#,
            &caps,
        )
        .unwrap();
        assert_eq!(prod.order(), 30);
        assert_eq!(prod.label(), Some("S3xC5"));
        let e = GroupSpec::parse(r#"{"kind":"named","name":"E","p":3,"k":2}"#, &caps).unwrap();
        assert_eq!(e.order(), 9);
    }

    #[test]
    fn table_round_trip() {
        let caps = Caps::default();
        let g = GroupSpec::parse("Q8", &caps).unwrap();
        let spec = GroupSpec::from_group(&g);
        let json = serde_json::to_string(&spec).unwrap();
        let back = GroupSpec::parse(&json, &caps).unwrap();
        assert_eq!(back.table_rows(), g.table_rows());
    }

    #[test]
    fn malformed() {
        let caps = Caps::default();
        assert!(GroupSpec::parse(r#"{"kind":"blob"}"#, &caps).is_err());
        assert!(GroupSpec::parse(r#"{"kind":"table","order":3,"table":[[0,1],[1,0]]}"#, &caps).is_err());
    }
}
