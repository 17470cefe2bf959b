//! First-order logic over the language of groups.
//!
//! Atoms compare word terms (`t1 = t2`, constant `e`); connectives are
//! `!`, `&`, `|`, `->`; quantifiers are `forall v.` and `exists v.`, whose
//! scope runs to the end of the enclosing parentheses.

mod build;
mod ef;
mod eval;
mod family;
mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use build::{length_bound_sentence, membership_formula, relativize, relativize_for};
pub use ef::{bounded_elementary_equivalence, sentence_family, sentence_family_agrees};
pub use eval::{evaluate, evaluate_exhaustive, Model};
pub use family::formula_family;

use crate::error::{Error, Result};
use crate::words::Expr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    fn keyword(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Expr, Expr),
    Not(Box<Formula>),
    /// At least two conjuncts.
    And(Vec<Formula>),
    /// At least two disjuncts.
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Quant(Quantifier, String, Box<Formula>),
}

impl Formula {
    pub fn parse(text: &str) -> Result<Formula> {
        parse::parse_formula(text)
    }

    pub fn eq(a: Expr, b: Expr) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn forall(v: &str, body: Formula) -> Formula {
        Formula::Quant(Quantifier::Forall, v.to_string(), Box::new(body))
    }

    pub fn exists(v: &str, body: Formula) -> Formula {
        Formula::Quant(Quantifier::Exists, v.to_string(), Box::new(body))
    }

    pub fn and(mut fs: Vec<Formula>) -> Formula {
        if fs.len() == 1 {
            fs.pop().unwrap()
        } else {
            Formula::And(fs)
        }
    }

    pub fn or(mut fs: Vec<Formula>) -> Formula {
        if fs.len() == 1 {
            fs.pop().unwrap()
        } else {
            Formula::Or(fs)
        }
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        match self {
            Formula::Eq(a, b) => {
                for v in a.variables().into_iter().chain(b.variables()) {
                    if !bound.contains(&v) && !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_free(bound, out)),
            Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Quant(_, v, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.visit_names(&mut |v| {
            if !out.iter().any(|x: &String| x == v) {
                out.push(v.to_string());
            }
        });
        out
    }

    fn visit_names(&self, f: &mut impl FnMut(&str)) {
        match self {
            Formula::Eq(a, b) => {
                for v in a.variables().iter().chain(&b.variables()) {
                    f(v);
                }
            }
            Formula::Not(x) => x.visit_names(f),
            Formula::And(xs) | Formula::Or(xs) => xs.iter().for_each(|x| x.visit_names(f)),
            Formula::Implies(a, b) => {
                a.visit_names(f);
                b.visit_names(f);
            }
            Formula::Quant(_, v, body) => {
                f(v);
                body.visit_names(f);
            }
        }
    }

    /// Nesting depth of quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Eq(..) => 0,
            Formula::Not(f) => f.quantifier_depth(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().map(Formula::quantifier_depth).max().unwrap_or(0),
            Formula::Implies(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            Formula::Quant(_, _, body) => 1 + body.quantifier_depth(),
        }
    }

    /// Replaces free occurrences of `name` by `with`. Callers must make sure
    /// the variables of `with` are not captured.
    pub fn substitute(&self, name: &str, with: &Expr) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(a.substitute(name, with), b.substitute(name, with)),
            Formula::Not(f) => Formula::not(f.substitute(name, with)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.substitute(name, with)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.substitute(name, with)).collect()),
            Formula::Implies(a, b) => Formula::implies(a.substitute(name, with), b.substitute(name, with)),
            Formula::Quant(q, v, body) if v == name => Formula::Quant(*q, v.clone(), body.clone()),
            Formula::Quant(q, v, body) => Formula::Quant(*q, v.clone(), Box::new(body.substitute(name, with))),
        }
    }

    /// Renames bound variables to `prefix0, prefix1, ...` in binding order.
    pub fn rename_bound(&self, prefix: &str) -> Formula {
        let mut counter = 0;
        self.rename_bound_inner(prefix, &mut counter)
    }

    fn rename_bound_inner(&self, prefix: &str, counter: &mut usize) -> Formula {
        match self {
            Formula::Eq(..) => self.clone(),
            Formula::Not(f) => Formula::not(f.rename_bound_inner(prefix, counter)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.rename_bound_inner(prefix, counter)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.rename_bound_inner(prefix, counter)).collect()),
            Formula::Implies(a, b) => {
                let a = a.rename_bound_inner(prefix, counter);
                Formula::implies(a, b.rename_bound_inner(prefix, counter))
            }
            Formula::Quant(q, v, body) => {
                let fresh = format!("{prefix}{counter}");
                *counter += 1;
                let body = body.substitute(v, &Expr::var(&fresh)).rename_bound_inner(prefix, counter);
                Formula::Quant(*q, fresh, Box::new(body))
            }
        }
    }

    /// Maps every atom through `f`.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Expr, &Expr) -> Formula) -> Formula {
        match self {
            Formula::Eq(a, b) => f(a, b),
            Formula::Not(x) => Formula::not(x.map_atoms(f)),
            Formula::And(xs) => Formula::And(xs.iter().map(|x| x.map_atoms(f)).collect()),
            Formula::Or(xs) => Formula::Or(xs.iter().map(|x| x.map_atoms(f)).collect()),
            Formula::Implies(a, b) => {
                let a = a.map_atoms(f);
                Formula::implies(a, b.map_atoms(f))
            }
            Formula::Quant(q, v, body) => Formula::Quant(*q, v.clone(), Box::new(body.map_atoms(f))),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(_) => 2,
            Formula::And(_) => 3,
            _ => 4,
        }
    }

    /// Its scope runs to the right edge when printed bare.
    fn open_ended(&self) -> bool {
        match self {
            Formula::Quant(..) => true,
            Formula::Not(f) => f.open_ended(),
            _ => false,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, child: &Formula, parent_prec: u8) -> fmt::Result {
    if child.precedence() <= parent_prec || child.open_ended() {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Not(x) => {
                if x.precedence() < 4 {
                    write!(f, "!({x})")
                } else {
                    write!(f, "!{x}")
                }
            }
            Formula::And(xs) | Formula::Or(xs) => {
                let (sep, prec) = if matches!(self, Formula::And(_)) { (" & ", 3) } else { (" | ", 2) };
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    write_operand(f, x, prec)?;
                }
                Ok(())
            }
            Formula::Implies(a, b) => {
                write_operand(f, a, 1)?;
                f.write_str(" -> ")?;
                write_operand(f, b, 1)
            }
            Formula::Quant(q, v, body) => write!(f, "{} {v}. {body}", q.keyword()),
        }
    }
}

/// A formula without free variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sentence(Formula);

impl Sentence {
    pub fn new(f: Formula) -> Result<Sentence> {
        let free = f.free_vars();
        if !free.is_empty() {
            return Err(Error::InvalidParameter(format!("sentence has free variables {free:?}")));
        }
        Ok(Sentence(f))
    }

    pub fn formula(&self) -> &Formula {
        &self.0
    }

    pub fn into_formula(self) -> Formula {
        self.0
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// JSON wrapper `{"formula": "<text>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaFile {
    pub formula: String,
}

impl FormulaFile {
    pub fn load(&self) -> Result<Formula> {
        Formula::parse(&self.formula)
    }
}
