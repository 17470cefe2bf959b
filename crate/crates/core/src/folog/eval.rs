//! Model checking in a finite group.
//!
//! A formula is compiled once into a plan over numbered slots. Quantifier
//! blocks of one kind are pushed through `|` (for `exists`) and `&` (for
//! `forall`); an existential block that feeds a single equation becomes a
//! membership test in a precomputed image set, and a block whose variables
//! only occur through one fixed term ranges over that term's image instead
//! of over all tuples. Everything else is a plain loop over the group.

use std::collections::HashMap;

use super::{Formula, Quantifier};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{Elem, ElemSet, FiniteGroup};
use crate::words::verbal::{evaluation_cost, values_of_letters};
use crate::words::{eval_letters, free_reduce, Expr, Letter};

type Prog = Vec<Letter>;

#[derive(Clone, Debug)]
enum Node {
    /// `value(prog) = e`
    Atom(Prog),
    /// `value(prog) ∈ images[i]`
    Member(Prog, usize),
    Not(Box<Node>),
    And(Vec<Node>),
    Or(Vec<Node>),
    Implies(Box<Node>, Box<Node>),
    Loop { q: Quantifier, slot: usize, body: Box<Node> },
    OverImage { q: Quantifier, slot: usize, image: usize, body: Box<Node> },
}

fn inverse(p: &[Letter]) -> Prog {
    p.iter().rev().map(|l| Letter { var: l.var, inverse: !l.inverse }).collect()
}

impl Node {
    fn mentions(&self, slot: usize) -> bool {
        match self {
            Node::Atom(p) | Node::Member(p, _) => p.iter().any(|l| l.var == slot),
            Node::Not(x) => x.mentions(slot),
            Node::And(xs) | Node::Or(xs) => xs.iter().any(|x| x.mentions(slot)),
            Node::Implies(a, b) => a.mentions(slot) || b.mentions(slot),
            Node::Loop { body, .. } | Node::OverImage { body, .. } => body.mentions(slot),
        }
    }

    fn progs<'a>(&'a self, out: &mut Vec<&'a Prog>) {
        match self {
            Node::Atom(p) | Node::Member(p, _) => out.push(p),
            Node::Not(x) => x.progs(out),
            Node::And(xs) | Node::Or(xs) => xs.iter().for_each(|x| x.progs(out)),
            Node::Implies(a, b) => {
                a.progs(out);
                b.progs(out);
            }
            Node::Loop { body, .. } | Node::OverImage { body, .. } => body.progs(out),
        }
    }

    fn map_progs(self, f: &impl Fn(Prog) -> Prog) -> Node {
        match self {
            Node::Atom(p) => Node::Atom(f(p)),
            Node::Member(p, i) => Node::Member(f(p), i),
            Node::Not(x) => Node::Not(Box::new(x.map_progs(f))),
            Node::And(xs) => Node::And(xs.into_iter().map(|x| x.map_progs(f)).collect()),
            Node::Or(xs) => Node::Or(xs.into_iter().map(|x| x.map_progs(f)).collect()),
            Node::Implies(a, b) => Node::Implies(Box::new(a.map_progs(f)), Box::new(b.map_progs(f))),
            Node::Loop { q, slot, body } => Node::Loop { q, slot, body: Box::new(body.map_progs(f)) },
            Node::OverImage { q, slot, image, body } => {
                Node::OverImage { q, slot, image, body: Box::new(body.map_progs(f)) }
            }
        }
    }

    /// Upper bound on group operations for one evaluation.
    fn cost(&self, n: u128, images: &[ElemSet]) -> u128 {
        match self {
            Node::Atom(p) | Node::Member(p, _) => p.len() as u128 + 1,
            Node::Not(x) => x.cost(n, images),
            Node::And(xs) | Node::Or(xs) => xs.iter().fold(0u128, |a, x| a.saturating_add(x.cost(n, images))),
            Node::Implies(a, b) => a.cost(n, images).saturating_add(b.cost(n, images)),
            Node::Loop { body, .. } => n.saturating_mul(body.cost(n, images)),
            Node::OverImage { image, body, .. } => (images[*image].len() as u128).saturating_mul(body.cost(n, images)),
        }
    }
}

struct Compiler {
    scope: Vec<(String, usize)>,
    next_slot: usize,
    images: Vec<Prog>,
    image_index: HashMap<Prog, usize>,
}

impl Compiler {
    fn fresh(&mut self) -> usize {
        self.next_slot += 1;
        self.next_slot - 1
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.scope.iter().rev().find(|(n, _)| n == name).map(|&(_, s)| s)
    }

    fn letters(&self, e: &Expr) -> Result<Prog> {
        e.letters(&|v| self.lookup(v))
    }

    /// Interns `prog` up to renumbering of its slots.
    fn intern(&mut self, prog: &[Letter]) -> usize {
        let mut order: Vec<usize> = Vec::new();
        let canon: Prog = prog
            .iter()
            .map(|l| {
                let var = order.iter().position(|&s| s == l.var).unwrap_or_else(|| {
                    order.push(l.var);
                    order.len() - 1
                });
                Letter { var, inverse: l.inverse }
            })
            .collect();
        if let Some(&i) = self.image_index.get(&canon) {
            return i;
        }
        self.images.push(canon.clone());
        self.image_index.insert(canon, self.images.len() - 1);
        self.images.len() - 1
    }

    fn compile(&mut self, f: &Formula) -> Result<Node> {
        Ok(match f {
            Formula::Eq(a, b) => {
                let mut p = self.letters(a)?;
                p.extend(inverse(&self.letters(b)?));
                Node::Atom(free_reduce(p))
            }
            Formula::Not(x) => Node::Not(Box::new(self.compile(x)?)),
            Formula::And(xs) => Node::And(xs.iter().map(|x| self.compile(x)).collect::<Result<_>>()?),
            Formula::Or(xs) => Node::Or(xs.iter().map(|x| self.compile(x)).collect::<Result<_>>()?),
            Formula::Implies(a, b) => Node::Implies(Box::new(self.compile(a)?), Box::new(self.compile(b)?)),
            Formula::Quant(q, _, _) => {
                let mut block = Vec::new();
                let mut cur = f;
                while let Formula::Quant(q2, v, body) = cur {
                    if q2 != q {
                        break;
                    }
                    let s = self.fresh();
                    self.scope.push((v.clone(), s));
                    block.push(s);
                    cur = body;
                }
                let body = self.compile(cur)?;
                self.scope.truncate(self.scope.len() - block.len());
                self.quantify(*q, &block, body)
            }
        })
    }

    fn quantify(&mut self, q: Quantifier, block: &[usize], node: Node) -> Node {
        let used: Vec<usize> = block.iter().copied().filter(|&s| node.mentions(s)).collect();
        if used.is_empty() {
            return node;
        }
        let node = match (q, node) {
            (Quantifier::Exists, Node::Or(xs)) => {
                return Node::Or(xs.into_iter().map(|x| self.quantify(q, &used, x)).collect());
            }
            (Quantifier::Forall, Node::And(xs)) => {
                return Node::And(xs.into_iter().map(|x| self.quantify(q, &used, x)).collect());
            }
            (_, Node::Not(x)) => {
                let dual = match q {
                    Quantifier::Forall => Quantifier::Exists,
                    Quantifier::Exists => Quantifier::Forall,
                };
                return Node::Not(Box::new(self.quantify(dual, &used, *x)));
            }
            (Quantifier::Exists, Node::Atom(p)) => match split_atom(&p, &used) {
                Some((rest, part)) => return Node::Member(rest, self.intern(&inverse(&part))),
                None => Node::Atom(p),
            },
            (_, node) => node,
        };
        if let Some(t) = common_term(&node, &used) {
            let slot = self.fresh();
            let image = self.intern(&t);
            let inv_t = inverse(&t);
            let body = node.map_progs(&|p| replace_span(p, &used, &t, &inv_t, slot));
            return Node::OverImage { q, slot, image, body: Box::new(body) };
        }
        used.iter().rev().fold(node, |body, &slot| Node::Loop { q, slot, body: Box::new(body) })
    }
}

/// Splits `p` as `rest·part` or `part·rest` with `part` over `used` only and
/// `rest` free of `used`. `rest·part = e` and `part·rest = e` are equivalent.
fn split_atom(p: &[Letter], used: &[usize]) -> Option<(Prog, Prog)> {
    let inside: Vec<bool> = p.iter().map(|l| used.contains(&l.var)).collect();
    let k = inside.iter().take_while(|&&b| !b).count();
    if inside[k..].iter().all(|&b| b) {
        return Some((p[..k].to_vec(), p[k..].to_vec()));
    }
    let k = inside.iter().take_while(|&&b| b).count();
    if inside[k..].iter().all(|&b| !b) {
        return Some((p[k..].to_vec(), p[..k].to_vec()));
    }
    None
}

/// Contiguous run of `p` holding every letter over `used`, if the letters
/// outside the run avoid `used` and the run itself uses nothing else.
fn block_span(p: &[Letter], used: &[usize]) -> Option<Option<(usize, usize)>> {
    let hits: Vec<usize> = (0..p.len()).filter(|&i| used.contains(&p[i].var)).collect();
    let (Some(&lo), Some(&hi)) = (hits.first(), hits.last()) else {
        return Some(None);
    };
    if hits.len() != hi - lo + 1 {
        return None;
    }
    Some(Some((lo, hi + 1)))
}

/// The single term through which `used` enters `node`, if any.
fn common_term(node: &Node, used: &[usize]) -> Option<Prog> {
    let mut progs = Vec::new();
    node.progs(&mut progs);
    let mut term: Option<Prog> = None;
    for p in progs {
        let Some((lo, hi)) = block_span(p, used)? else { continue };
        let seg = &p[lo..hi];
        match &term {
            None => term = Some(seg.to_vec()),
            Some(t) if t == seg || inverse(t) == seg => {}
            Some(_) => return None,
        }
    }
    let t = term?;
    used.iter().all(|s| t.iter().any(|l| l.var == *s)).then_some(t)
}

fn replace_span(p: Prog, used: &[usize], t: &[Letter], inv_t: &[Letter], slot: usize) -> Prog {
    match block_span(&p, used) {
        Some(Some((lo, hi))) => {
            let inverse = &p[lo..hi] != t;
            debug_assert!(!inverse || &p[lo..hi] == inv_t);
            let mut out = p[..lo].to_vec();
            out.push(Letter { var: slot, inverse });
            out.extend_from_slice(&p[hi..]);
            out
        }
        _ => p,
    }
}

/// Splits a letter sequence into consecutive runs with pairwise disjoint
/// variable sets.
fn independent_segments(p: &[Letter]) -> Vec<&[Letter]> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let mut end = start + 1;
        let mut i = start;
        while i < end {
            let last = p.iter().rposition(|l| l.var == p[i].var).unwrap();
            end = end.max(last + 1);
            i += 1;
        }
        out.push(&p[start..end]);
        start = end;
    }
    out
}

/// `{ value(prog) }` over all assignments of its variables.
fn image_of(g: &FiniteGroup, prog: &[Letter], caps: &Caps) -> Result<ElemSet> {
    let n = g.order();
    let segments = independent_segments(prog);
    let mut cost: u128 = 0;
    let mut renumbered = Vec::new();
    for seg in &segments {
        let mut order: Vec<usize> = Vec::new();
        let r: Prog = seg
            .iter()
            .map(|l| {
                let var = order.iter().position(|&s| s == l.var).unwrap_or_else(|| {
                    order.push(l.var);
                    order.len() - 1
                });
                Letter { var, inverse: l.inverse }
            })
            .collect();
        cost = cost.saturating_add(evaluation_cost(n, order.len(), r.len()));
        renumbered.push((r, order.len()));
    }
    caps.check_evaluation(cost)?;
    let mut acc = ElemSet::from_elems(n, [g.identity()]);
    for (r, arity) in renumbered {
        let vals = values_of_letters(g, &r, arity);
        let mut next = ElemSet::new(n);
        for a in acc.iter() {
            for b in vals.iter() {
                next.insert(g.mul(a, b));
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// A formula compiled against one group, reusable across assignments.
#[derive(Clone, Debug)]
pub struct Model {
    group: FiniteGroup,
    free: Vec<String>,
    slots: usize,
    root: Node,
    images: Vec<ElemSet>,
}

impl Model {
    pub fn new(phi: &Formula, g: &FiniteGroup, caps: &Caps) -> Result<Model> {
        let free = phi.free_vars();
        let mut c = Compiler { scope: Vec::new(), next_slot: 0, images: Vec::new(), image_index: HashMap::new() };
        for v in &free {
            let s = c.fresh();
            c.scope.push((v.clone(), s));
        }
        let root = c.compile(phi)?;
        let images = c.images.iter().map(|p| image_of(g, p, caps)).collect::<Result<Vec<_>>>()?;
        caps.check_evaluation(root.cost(g.order() as u128, &images))?;
        Ok(Model { group: g.clone(), free, slots: c.next_slot, root, images })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Free variables, in the order `holds` expects their values.
    pub fn free_vars(&self) -> &[String] {
        &self.free
    }

    pub fn holds(&self, assignment: &[Elem]) -> bool {
        assert_eq!(assignment.len(), self.free.len(), "one value per free variable");
        let mut env = vec![0; self.slots];
        env[..assignment.len()].copy_from_slice(assignment);
        self.eval(&self.root, &mut env)
    }

    pub fn holds_named(&self, assignment: &HashMap<String, Elem>) -> Result<bool> {
        let values = ordered_assignment(&self.free, assignment, self.group.order())?;
        Ok(self.holds(&values))
    }

    /// `{ x : φ(x) }` for a formula with exactly one free variable.
    pub fn defined_set(&self) -> Result<ElemSet> {
        if self.free.len() != 1 {
            return Err(Error::InvalidParameter(format!(
                "expected one free variable, found {}",
                self.free.len()
            )));
        }
        let n = self.group.order();
        Ok(ElemSet::from_elems(n, (0..n).filter(|&x| self.holds(&[x]))))
    }

    fn eval(&self, node: &Node, env: &mut Vec<Elem>) -> bool {
        let g = &self.group;
        match node {
            Node::Atom(p) => eval_letters(g, p, env) == g.identity(),
            Node::Member(p, i) => self.images[*i].contains(eval_letters(g, p, env)),
            Node::Not(x) => !self.eval(x, env),
            Node::And(xs) => xs.iter().all(|x| self.eval(x, env)),
            Node::Or(xs) => xs.iter().any(|x| self.eval(x, env)),
            Node::Implies(a, b) => !self.eval(a, env) || self.eval(b, env),
            Node::Loop { q, slot, body } => self.quantified(*q, *slot, 0..g.order(), body, env),
            Node::OverImage { q, slot, image, body } => {
                self.quantified(*q, *slot, self.images[*image].iter(), body, env)
            }
        }
    }

    fn quantified(
        &self,
        q: Quantifier,
        slot: usize,
        domain: impl Iterator<Item = Elem>,
        body: &Node,
        env: &mut Vec<Elem>,
    ) -> bool {
        let want = q == Quantifier::Exists;
        for x in domain {
            env[slot] = x;
            if self.eval(body, env) == want {
                return want;
            }
        }
        !want
    }
}

fn ordered_assignment(free: &[String], assignment: &HashMap<String, Elem>, order: usize) -> Result<Vec<Elem>> {
    free.iter()
        .map(|v| match assignment.get(v) {
            None => Err(Error::UnboundVariable(v.clone())),
            Some(&x) if x >= order => Err(Error::InvalidParameter(format!("{v} = {x} is not an element"))),
            Some(&x) => Ok(x),
        })
        .collect()
}

/// Truth of `phi` in `g` under `assignment` (free variables to elements).
pub fn evaluate(phi: &Formula, g: &FiniteGroup, assignment: &HashMap<String, Elem>, caps: &Caps) -> Result<bool> {
    Model::new(phi, g, caps)?.holds_named(assignment)
}

/// Truth of `phi` by plain recursion over every quantifier, one element at
/// a time. Slow; serves as the reference for [`evaluate`].
pub fn evaluate_exhaustive(
    phi: &Formula,
    g: &FiniteGroup,
    assignment: &HashMap<String, Elem>,
    caps: &Caps,
) -> Result<bool> {
    let free = phi.free_vars();
    let values = ordered_assignment(&free, assignment, g.order())?;
    let depth = phi.quantifier_depth() as u32;
    caps.check_evaluation((g.order() as u128).saturating_pow(depth))?;
    let mut scope: Vec<(String, Elem)> = free.into_iter().zip(values).collect();
    exhaustive(phi, g, &mut scope)
}

fn exhaustive(f: &Formula, g: &FiniteGroup, scope: &mut Vec<(String, Elem)>) -> Result<bool> {
    Ok(match f {
        Formula::Eq(a, b) => {
            let val = |e: &Expr, scope: &Vec<(String, Elem)>| -> Result<Elem> {
                let names: Vec<&str> = scope.iter().map(|(n, _)| n.as_str()).collect();
                let p = e.letters(&|v| names.iter().rposition(|n| *n == v))?;
                let env: Vec<Elem> = scope.iter().map(|&(_, x)| x).collect();
                Ok(eval_letters(g, &p, &env))
            };
            val(a, scope)? == val(b, scope)?
        }
        Formula::Not(x) => !exhaustive(x, g, scope)?,
        Formula::And(xs) => {
            for x in xs {
                if !exhaustive(x, g, scope)? {
                    return Ok(false);
                }
            }
            true
        }
        Formula::Or(xs) => {
            for x in xs {
                if exhaustive(x, g, scope)? {
                    return Ok(true);
                }
            }
            false
        }
        Formula::Implies(a, b) => !exhaustive(a, g, scope)? || exhaustive(b, g, scope)?,
        Formula::Quant(q, v, body) => {
            let want = *q == Quantifier::Exists;
            for x in g.elements() {
                scope.push((v.clone(), x));
                let r = exhaustive(body, g, scope);
                scope.pop();
                if r? == want {
                    return Ok(want);
                }
            }
            !want
        }
    })
}
