use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};
use verbalis::group::{
    composition_series_with, core, count_subgroups_of_index, generated_subgroup, is_isomorphic_witness, is_simple,
    min_generators, normal_subgroups, subgroups,
};
use verbalis::{Caps, FiniteGroup, SeriesChoice, SubgroupSet};

use crate::input::{self, Outcome};
use crate::output;

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    /// Order, exponent, element orders and generators.
    Info {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        /// Include the multiplication table as a re-consumable group spec.
        #[arg(long)]
        table: bool,
    },
    /// All subgroups in canonical order.
    Subgroups {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
    },
    /// All normal subgroups in canonical order.
    Normal {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
    },
    /// A composition series and its factors, bottom-up.
    Series {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        /// Which maximal normal subgroup to descend into.
        #[arg(long, value_enum, default_value_t = Choice::First)]
        choice: Choice,
    },
    /// Isomorphism test with an explicit witness.
    Iso {
        #[arg(long = "a", value_name = "GROUP")]
        a: String,
        #[arg(long = "b", value_name = "GROUP")]
        b: String,
    },
    /// Normal core of a subgroup.
    Core {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        #[command(flatten)]
        h: SubgroupArg,
    },
    /// Minimal number of generators.
    Mingen {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
    },
    /// Number of subgroups of a given index.
    CountIndex {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        #[arg(long = "n")]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Choice {
    First,
    Last,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SubgroupArg {
    /// Elements of the subgroup, e.g. `0,3`.
    #[arg(long = "h", value_name = "ELEMENTS")]
    elements: Option<String>,
    /// Generators of the subgroup.
    #[arg(long, value_name = "ELEMENTS")]
    gens: Option<String>,
}

impl SubgroupArg {
    pub fn resolve(&self, g: &FiniteGroup) -> Outcome<SubgroupSet> {
        match (&self.elements, &self.gens) {
            (Some(e), _) => Ok(SubgroupSet::new(g, input::elements("h", e)?)?),
            (None, Some(gens)) => {
                let gens = input::elements("gens", gens)?;
                if let Some(&bad) = gens.iter().find(|&&x| x >= g.order()) {
                    return input::usage(format!("--gens: {bad} is not an element of a group of order {}", g.order()));
                }
                Ok(generated_subgroup(g, &gens))
            }
            (None, None) => input::usage("one of --h or --gens is required"),
        }
    }
}

fn order_counts(g: &FiniteGroup) -> Value {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for o in g.order_profile() {
        match pairs.last_mut() {
            Some((k, c)) if *k == o => *c += 1,
            _ => pairs.push((o, 1)),
        }
    }
    json!(pairs)
}

pub fn run(cmd: &GroupCmd, caps: &Caps) -> Outcome<Value> {
    match cmd {
        GroupCmd::Info { g, table } => {
            let g = input::group("g", g, caps)?;
            let mut v = json!({
                "order": g.order(),
                "label": output::group_label(&g),
                "abelian": g.is_abelian(),
                "exponent": g.exponent(),
                "simple": is_simple(&g),
                "element_orders": order_counts(&g),
                "generators": g.generators(),
            });
            if g.order() <= caps.generation {
                v["min_generators"] = json!(min_generators(&g, caps)?);
            }
            if *table {
                v["group"] = output::group_spec(&g);
            }
            Ok(v)
        }
        GroupCmd::Subgroups { g } => {
            let g = input::group("g", g, caps)?;
            let hs = subgroups(&g, caps)?;
            Ok(json!({ "count": hs.len(), "subgroups": output::subgroups(&hs) }))
        }
        GroupCmd::Normal { g } => {
            let g = input::group("g", g, caps)?;
            let hs = normal_subgroups(&g, caps)?;
            Ok(json!({ "count": hs.len(), "subgroups": output::subgroups(&hs) }))
        }
        GroupCmd::Series { g, choice } => {
            let g = input::group("g", g, caps)?;
            let choice = match choice {
                Choice::First => SeriesChoice::First,
                Choice::Last => SeriesChoice::Last,
            };
            let s = composition_series_with(&g, caps, choice)?;
            let factors: Vec<Value> = s
                .factors
                .iter()
                .map(|f| json!({ "order": f.order(), "abelian": f.is_abelian(), "label": output::group_label(f) }))
                .collect();
            Ok(json!({
                "length": s.length(),
                "chain": s.chain.iter().map(|h| json!(h.elements())).collect::<Vec<_>>(),
                "factors": factors,
            }))
        }
        GroupCmd::Iso { a, b } => {
            let a = input::group("a", a, caps)?;
            let b = input::group("b", b, caps)?;
            Ok(match is_isomorphic_witness(&a, &b, caps)? {
                Some(w) => json!({ "isomorphic": true, "witness": w.map() }),
                None => json!({ "isomorphic": false }),
            })
        }
        GroupCmd::Core { g, h } => {
            let g = input::group("g", g, caps)?;
            let h = h.resolve(&g)?;
            Ok(json!({ "subgroup": output::subgroup(&h), "core": output::subgroup(&core(&g, &h)) }))
        }
        GroupCmd::Mingen { g } => {
            let g = input::group("g", g, caps)?;
            Ok(json!({ "min_generators": min_generators(&g, caps)? }))
        }
        GroupCmd::CountIndex { g, n } => {
            let g = input::group("g", g, caps)?;
            Ok(json!({ "index": n, "count": count_subgroups_of_index(&g, *n, caps)? }))
        }
    }
}
