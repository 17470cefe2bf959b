//! Group words: parsing, evaluation, verbal subgroups, width and laws.

mod laws;
pub(crate) mod parse;
pub(crate) mod verbal;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use laws::{birkhoff_verbal_subgroup, combine_words, enumerate_laws, variety_verbal_subgroup};
pub use verbal::{
    expressible_within, is_law, value_set, verbal_subgroup, width_from_values, VerbalResult,
};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

/// Syntax tree of a word term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Identity,
    Var(String),
    /// At least two factors.
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    /// `[a, b] = a⁻¹ b⁻¹ a b`
    Commutator(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    pub fn inverse(self) -> Self {
        Expr::Power(Box::new(self), -1)
    }

    /// Product that collapses the zero- and one-factor cases.
    pub fn product(mut factors: Vec<Expr>) -> Self {
        match factors.len() {
            0 => Expr::Identity,
            1 => factors.pop().unwrap(),
            _ => Expr::Product(factors),
        }
    }

    /// Variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Identity => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Product(fs) => fs.iter().for_each(|f| f.collect_vars(out)),
            Expr::Power(b, _) => b.collect_vars(out),
            Expr::Commutator(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Expr {
        match self {
            Expr::Identity => Expr::Identity,
            Expr::Var(v) => Expr::Var(f(v)),
            Expr::Product(fs) => Expr::Product(fs.iter().map(|x| x.rename(f)).collect()),
            Expr::Power(b, k) => Expr::Power(Box::new(b.rename(f)), *k),
            Expr::Commutator(a, b) => Expr::Commutator(Box::new(a.rename(f)), Box::new(b.rename(f))),
        }
    }

    /// Replaces variable `name` by `with`.
    pub fn substitute(&self, name: &str, with: &Expr) -> Expr {
        match self {
            Expr::Identity => Expr::Identity,
            Expr::Var(v) if v == name => with.clone(),
            Expr::Var(v) => Expr::Var(v.clone()),
            Expr::Product(fs) => Expr::Product(fs.iter().map(|x| x.substitute(name, with)).collect()),
            Expr::Power(b, k) => Expr::Power(Box::new(b.substitute(name, with)), *k),
            Expr::Commutator(a, b) => {
                Expr::Commutator(Box::new(a.substitute(name, with)), Box::new(b.substitute(name, with)))
            }
        }
    }

    /// Freely reduced letter sequence, with commutators and powers expanded.
    pub fn letters<'a>(&'a self, index: &impl Fn(&'a str) -> Option<usize>) -> Result<Vec<Letter>> {
        let mut raw = Vec::new();
        self.expand(index, false, &mut raw)?;
        Ok(free_reduce(raw))
    }

    fn expand<'a>(&'a self, index: &impl Fn(&'a str) -> Option<usize>, inverted: bool, out: &mut Vec<Letter>) -> Result<()> {
        match self {
            Expr::Identity => {}
            Expr::Var(v) => {
                let var = index(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
                out.push(Letter { var, inverse: inverted });
            }
            Expr::Product(fs) => {
                if inverted {
                    for f in fs.iter().rev() {
                        f.expand(index, true, out)?;
                    }
                } else {
                    for f in fs {
                        f.expand(index, false, out)?;
                    }
                }
            }
            Expr::Power(b, k) => {
                let inv = inverted ^ (*k < 0);
                for _ in 0..k.unsigned_abs() {
                    b.expand(index, inv, out)?;
                }
            }
            Expr::Commutator(a, b) => {
                // [a,b] = a⁻¹ b⁻¹ a b ; [a,b]⁻¹ = b⁻¹ a⁻¹ b a
                let seq: [(&Expr, bool); 4] = if inverted {
                    [(b, true), (a, true), (b, false), (a, false)]
                } else {
                    [(a, true), (b, true), (a, false), (b, false)]
                };
                for (e, inv) in seq {
                    e.expand(index, inv, out)?;
                }
            }
        }
        Ok(())
    }

    fn needs_parens_as_base(&self) -> bool {
        matches!(self, Expr::Product(_) | Expr::Power(..))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Identity => f.write_str("e"),
            Expr::Var(v) => f.write_str(v),
            Expr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    if matches!(x, Expr::Product(_)) {
                        write!(f, "({x})")?;
                    } else {
                        write!(f, "{x}")?;
                    }
                }
                Ok(())
            }
            Expr::Power(b, k) => {
                if b.needs_parens_as_base() {
                    write!(f, "({b})^{k}")
                } else {
                    write!(f, "{b}^{k}")
                }
            }
            Expr::Commutator(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// A generator or inverse generator in a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub var: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn cancels(self, other: Letter) -> bool {
        self.var == other.var && self.inverse != other.inverse
    }
}

pub(crate) fn free_reduce(raw: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
    for l in raw {
        if out.last().is_some_and(|&t| t.cancels(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Evaluates a reduced letter sequence under `assignment` (indexed by var).
#[inline]
pub(crate) fn eval_letters(g: &FiniteGroup, letters: &[Letter], assignment: &[Elem]) -> Elem {
    letters.iter().fold(0, |acc, l| {
        let x = assignment[l.var];
        g.mul(acc, if l.inverse { g.inv(x) } else { x })
    })
}

/// A group word in named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    expr: Expr,
    variables: Vec<String>,
}

impl Word {
    pub fn parse(text: &str) -> Result<Word> {
        Ok(Word::from_expr(parse::parse_expr(text)?))
    }

    /// Variables are ordered by first occurrence.
    pub fn from_expr(expr: Expr) -> Word {
        let variables = expr.variables();
        Word { expr, variables }
    }

    /// Builds the word spelled by `letters` over `names`, grouping runs into powers.
    pub fn from_letters(letters: &[Letter], names: &[String]) -> Word {
        let mut factors = Vec::new();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let base = Expr::Var(names[l.var].clone());
            let k = if l.inverse { -run } else { run };
            factors.push(if k == 1 { base } else { Expr::Power(Box::new(base), k) });
            i = j;
        }
        Word::from_expr(Expr::product(factors))
    }

    pub fn identity() -> Word {
        Word::from_expr(Expr::Identity)
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    /// Free-group normal form, indexed by [`Word::variables`].
    pub fn letters(&self) -> Vec<Letter> {
        let vars = &self.variables;
        self.expr
            .letters(&|v| vars.iter().position(|x| x == v))
            .expect("every variable of a word is listed")
    }

    /// Normal form spelled with variable names; two words are equal in the
    /// free group iff these agree.
    pub fn normal_form(&self) -> Vec<(String, bool)> {
        self.letters().iter().map(|l| (self.variables[l.var].clone(), l.inverse)).collect()
    }

    pub fn equivalent(&self, other: &Word) -> bool {
        self.normal_form() == other.normal_form()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters().is_empty()
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> Word {
        Word::from_expr(self.expr.rename(&f))
    }

    /// Reduced word length.
    pub fn length(&self) -> usize {
        self.letters().len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expr.fmt(f)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

/// JSON wrapper `{"word": "<text>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordFile {
    pub word: String,
}

impl WordFile {
    pub fn load(&self) -> Result<Word> {
        Word::parse(&self.word)
    }
}

/// `w(assignment)` in `g`.
pub fn eval_word(w: &Word, g: &FiniteGroup, assignment: &HashMap<String, Elem>) -> Result<Elem> {
    let values = w
        .variables()
        .iter()
        .map(|v| match assignment.get(v) {
            Some(&x) if x < g.order() => Ok(x),
            Some(&x) => Err(Error::InvalidParameter(format!("element {x} outside group of order {}", g.order()))),
            None => Err(Error::UnboundVariable(v.clone())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(eval_letters(g, &w.letters(), &values))
}
