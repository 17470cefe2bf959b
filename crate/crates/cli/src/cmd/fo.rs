use clap::Subcommand;
use serde_json::{json, Value};
use verbalis::folog::{
    bounded_elementary_equivalence, length_bound_sentence, membership_formula, relativize, sentence_family_agrees,
    Model,
};
use verbalis::words::verbal_subgroup;
use verbalis::{Caps, Word};

use crate::input::{self, Outcome};
use crate::output;

/// Largest depth at which `equiv` also runs the fixed sentence family.
const FAMILY_DEPTH: usize = 2;

#[derive(Subcommand, Debug)]
pub enum FoCmd {
    /// Truth of a formula in a group under an assignment.
    Eval {
        #[arg(long = "g", value_name = "GROUP")]
        g: String,
        /// Formula text, or a file holding {"formula": "..."}.
        #[arg(long, value_name = "FORMULA")]
        phi: String,
        /// `NAME=ELEMENT` pairs for the free variables.
        #[arg(long, value_delimiter = ',')]
        assign: Vec<String>,
        /// Report the set defined by a formula in one free variable instead.
        #[arg(long, conflicts_with = "assign")]
        defined_set: bool,
    },
    /// Relativize a formula to a verbal subgroup of width at most r.
    Relativize {
        #[arg(long, value_name = "FORMULA")]
        phi: String,
        #[arg(long = "w", value_name = "WORD")]
        w: String,
        #[arg(long = "r", required_unless_present = "g")]
        r: Option<usize>,
        /// Take r from the width of the word in this group.
        #[arg(long = "g", value_name = "GROUP")]
        g: Option<String>,
    },
    /// Formula in x defining membership in w(G) for width at most r.
    Membership {
        #[arg(long = "w", value_name = "WORD")]
        w: String,
        #[arg(long = "r")]
        r: usize,
        /// Compare the defined set with w(G) in this group.
        #[arg(long = "g", value_name = "GROUP")]
        g: Option<String>,
    },
    /// Sentence saying products of s values lie within r values.
    LengthSentence {
        #[arg(long = "w", value_name = "WORD")]
        w: String,
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "s")]
        s: usize,
        /// Signs as a string of `+` and `-`, one per factor.
        #[arg(long, required_unless_present = "g")]
        delta: Option<String>,
        /// Evaluate in this group; without --delta, every sign vector is checked.
        #[arg(long = "g", value_name = "GROUP")]
        g: Option<String>,
    },
    /// Elementary equivalence up to a quantifier depth.
    Equiv {
        #[arg(long = "a", value_name = "GROUP")]
        a: String,
        #[arg(long = "b", value_name = "GROUP")]
        b: String,
        #[arg(long)]
        depth: usize,
    },
}

fn signs(text: &str) -> Outcome<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '+' => Ok(true),
            '-' => Ok(false),
            other => input::usage(format!("--delta: expected `+` or `-`, got `{other}`")),
        })
        .collect()
}

fn sign_text(delta: &[bool]) -> String {
    delta.iter().map(|&p| if p { '+' } else { '-' }).collect()
}

fn length_sentence(w: &Word, r: usize, s: usize, delta: Option<&str>, g: Option<&str>, caps: &Caps) -> Outcome<Value> {
    let g = g.map(|g| input::group("g", g, caps)).transpose()?;
    match (delta, g) {
        (Some(d), g) => {
            let delta = signs(d)?;
            let sentence = length_bound_sentence(w, r, s, &delta)?;
            let mut out = json!({ "sentence": sentence.to_string(), "delta": sign_text(&delta) });
            if let Some(g) = g {
                out["holds"] = json!(Model::new(sentence.formula(), &g, caps)?.holds(&[]));
            }
            Ok(out)
        }
        (None, Some(g)) => {
            if s >= usize::BITS as usize {
                return input::usage("--s: too many sign vectors to enumerate");
            }
            let mut failing = Vec::new();
            for mask in 0..1usize << s {
                let delta: Vec<bool> = (0..s).map(|j| mask >> (s - 1 - j) & 1 == 0).collect();
                let sentence = length_bound_sentence(w, r, s, &delta)?;
                if !Model::new(sentence.formula(), &g, caps)?.holds(&[]) {
                    failing.push(sign_text(&delta));
                }
            }
            Ok(json!({ "checked": 1usize << s, "all_hold": failing.is_empty(), "failing": failing }))
        }
        (None, None) => input::usage("--delta is required unless --g is given"),
    }
}

pub fn run(cmd: &FoCmd, caps: &Caps) -> Outcome<Value> {
    match cmd {
        FoCmd::Eval { g, phi, assign, defined_set } => {
            let g = input::group("g", g, caps)?;
            let phi = input::formula("phi", phi)?;
            let model = Model::new(&phi, &g, caps)?;
            if *defined_set {
                Ok(json!({ "formula": phi.to_string(), "defined_set": model.defined_set()?.to_vec() }))
            } else {
                let asg = input::assignment("assign", assign)?;
                Ok(json!({ "formula": phi.to_string(), "holds": model.holds_named(&asg)? }))
            }
        }
        FoCmd::Relativize { phi, w, r, g } => {
            let phi = input::formula("phi", phi)?;
            let w = input::word("w", w)?;
            let r = match (r, g) {
                (Some(r), _) => *r,
                (None, Some(g)) => verbal_subgroup(&w, &input::group("g", g, caps)?, caps)?.width.max(1),
                (None, None) => return input::usage("one of --r or --g is required"),
            };
            Ok(json!({ "formula": relativize(&phi, &w, r)?.to_string(), "r": r }))
        }
        FoCmd::Membership { w, r, g } => {
            let w = input::word("w", w)?;
            let f = membership_formula(&w, *r)?;
            let mut out = json!({ "formula": f.to_string(), "r": r });
            if let Some(g) = g {
                let g = input::group("g", g, caps)?;
                let defined = Model::new(&f, &g, caps)?.defined_set()?.to_vec();
                let verbal = verbal_subgroup(&w, &g, caps)?;
                out["defined_set"] = json!(defined);
                out["verbal_subgroup"] = output::subgroup(&verbal.subgroup);
                out["width"] = json!(verbal.width);
                out["defines_verbal_subgroup"] = json!(defined == verbal.subgroup.elements());
            }
            Ok(out)
        }
        FoCmd::LengthSentence { w, r, s, delta, g } => {
            let w = input::word("w", w)?;
            length_sentence(&w, *r, *s, delta.as_deref(), g.as_deref(), caps)
        }
        FoCmd::Equiv { a, b, depth } => {
            let a = input::group("a", a, caps)?;
            let b = input::group("b", b, caps)?;
            let mut out = json!({ "depth": depth, "equivalent": bounded_elementary_equivalence(&a, &b, *depth, caps)? });
            if *depth <= FAMILY_DEPTH {
                out["family_agrees"] = json!(sentence_family_agrees(&a, &b, *depth, caps)?);
            }
            Ok(out)
        }
    }
}
