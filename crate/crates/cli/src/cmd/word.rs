use clap::Subcommand;
use serde_json::{json, Value};
use verbalis::words::{
    birkhoff_verbal_subgroup, combine_words, enumerate_laws, eval_word, variety_verbal_subgroup, verbal_subgroup,
};
use verbalis::Caps;

use crate::input::{self, Outcome};
use crate::output;

#[derive(Subcommand, Debug)]
pub enum WordCmd {
    /// Value of a word under an assignment.
    Eval {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        #[arg(long = "w", value_name = "WORD")]
        w: String,
        /// `NAME=ELEMENT` pairs, comma separated or repeated.
        #[arg(long, value_delimiter = ',')]
        assign: Vec<String>,
    },
    /// Verbal subgroup, width and value set.
    Verbal {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        #[arg(long = "w", value_name = "WORD")]
        w: String,
    },
    /// Width of the verbal subgroup.
    Width {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        #[arg(long = "w", value_name = "WORD")]
        w: String,
    },
    /// Reduced words within the bounds that are laws of a group.
    Laws {
        #[arg(long = "a", value_name = "GROUP")]
        a: String,
        #[arg(long, default_value_t = 2)]
        max_vars: usize,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
    },
    /// Product of words over disjoint variables.
    Combine {
        /// A word; repeat for each factor.
        #[arg(long = "w", value_name = "WORD", required = true)]
        w: Vec<String>,
    },
    /// Verbal subgroup of the variety generated by a group, from bounded laws.
    VarietyVerbal {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        #[arg(long = "a", value_name = "GROUP")]
        a: String,
        #[arg(long, default_value_t = 2)]
        max_vars: usize,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        /// Also compute the law-free answer from sections of A^k, k up to this power.
        #[arg(long, value_name = "K")]
        oracle_power: Option<usize>,
    },
}

pub fn run(cmd: &WordCmd, caps: &Caps) -> Outcome<Value> {
    match cmd {
        WordCmd::Eval { g, w, assign } => {
            let g = input::group("g", g, caps)?;
            let w = input::word("w", w)?;
            let asg = input::assignment("assign", assign)?;
            Ok(json!({ "word": w.to_string(), "value": eval_word(&w, &g, &asg)? }))
        }
        WordCmd::Verbal { g, w } => {
            let g = input::group("g", g, caps)?;
            let w = input::word("w", w)?;
            let r = verbal_subgroup(&w, &g, caps)?;
            Ok(json!({
                "word": w.to_string(),
                "subgroup": output::subgroup(&r.subgroup),
                "width": r.width,
                "value_set": r.value_set,
            }))
        }
        WordCmd::Width { g, w } => {
            let g = input::group("g", g, caps)?;
            let w = input::word("w", w)?;
            let r = verbal_subgroup(&w, &g, caps)?;
            Ok(json!({ "width": r.width, "subgroup_order": r.subgroup.order() }))
        }
        WordCmd::Laws { a, max_vars, max_length } => {
            let a = input::group("a", a, caps)?;
            let laws = enumerate_laws(&a, *max_vars, *max_length, caps)?;
            let laws: Vec<String> = laws.iter().map(ToString::to_string).collect();
            Ok(json!({ "count": laws.len(), "laws": laws }))
        }
        WordCmd::Combine { w } => {
            let ws = w.iter().map(|x| input::word("w", x)).collect::<Outcome<Vec<_>>>()?;
            let c = combine_words(&ws)?;
            Ok(json!({ "word": c.to_string(), "arity": c.arity() }))
        }
        WordCmd::VarietyVerbal { g, a, max_vars, max_length, oracle_power } => {
            let g = input::group("g", g, caps)?;
            let a = input::group("a", a, caps)?;
            let v = variety_verbal_subgroup(&g, &a, *max_vars, *max_length, caps)?;
            let mut out = json!({ "subgroup": output::subgroup(&v) });
            if let Some(k) = oracle_power {
                let o = birkhoff_verbal_subgroup(&g, &a, *k, caps)?;
                out["oracle"] = output::subgroup(&o);
                out["contained"] = json!(v.is_subset(&o));
                out["agree"] = json!(v.elements() == o.elements());
            }
            Ok(out)
        }
    }
}
