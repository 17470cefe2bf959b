use super::{Formula, Quantifier};
use crate::words::Expr;

fn var(name: &str) -> Expr {
    Expr::var(name)
}

fn pow(name: &str, k: i64) -> Expr {
    Expr::Power(Box::new(var(name)), k)
}

fn unary_atoms(u: &str) -> Vec<Formula> {
    vec![
        Formula::Eq(var(u), Expr::Identity),
        Formula::Eq(pow(u, 2), Expr::Identity),
        Formula::Eq(pow(u, 3), Expr::Identity),
    ]
}

fn binary_atoms(u: &str, v: &str) -> Vec<Formula> {
    vec![
        Formula::Eq(Expr::product(vec![var(u), var(v)]), Expr::product(vec![var(v), var(u)])),
        Formula::Eq(var(u), var(v)),
        Formula::Eq(pow(u, 2), var(v)),
        Formula::Eq(Expr::product(vec![var(u), var(v), var(u)]), var(v)),
    ]
}

fn atoms_mentioning(vars: &[&str], must: &[&str]) -> Vec<Formula> {
    let mut out = Vec::new();
    for &u in vars {
        if must.iter().all(|m| *m == u) {
            out.extend(unary_atoms(u));
        }
    }
    for &u in vars {
        for &v in vars {
            if u != v && must.iter().all(|m| *m == u || *m == v) {
                out.extend(binary_atoms(u, v));
            }
        }
    }
    out
}

fn quantify(q: Quantifier, v: &str, body: Formula) -> Formula {
    Formula::Quant(q, v.to_string(), Box::new(body))
}

const QS: [Quantifier; 2] = [Quantifier::Forall, Quantifier::Exists];

/// A fixed, deterministic family of formulas with quantifier depth at most
/// two and free variables among `y1`, `y2`.
///
/// It mixes quantifier-free formulas in `y1, y2`, one-quantifier formulas
/// with atoms, negations, conjunctions and implications, and
/// two-quantifier formulas, for each set of free variables `{}`, `{y1}`,
/// `{y1, y2}`. Duplicates are dropped, keeping first occurrences.
pub fn formula_family() -> Vec<Formula> {
    let mut out = Vec::new();
    for free in [&[][..], &["y1"][..], &["y1", "y2"][..]] {
        if !free.is_empty() {
            for a in atoms_mentioning(free, &[]) {
                out.push(Formula::not(a.clone()));
                out.push(a);
            }
            if free.len() == 2 {
                let xs = atoms_mentioning(free, &[]);
                for w in xs.windows(2) {
                    out.push(Formula::or(w.to_vec()));
                    out.push(Formula::implies(w[0].clone(), w[1].clone()));
                }
            }
        }

        let mut one: Vec<&str> = free.to_vec();
        one.push("z");
        let with_z = atoms_mentioning(&one, &["z"]);
        for q in QS {
            for a in &with_z {
                out.push(quantify(q, "z", a.clone()));
                out.push(quantify(q, "z", Formula::not(a.clone())));
            }
            for pair in with_z.chunks(2).filter(|c| c.len() == 2) {
                out.push(quantify(q, "z", Formula::and(pair.to_vec())));
                out.push(quantify(q, "z", Formula::implies(pair[0].clone(), pair[1].clone())));
            }
        }

        let mut two = one.clone();
        two.push("w");
        let mut with_zw = atoms_mentioning(&two, &["z", "w"]);
        for &y in free {
            with_zw.push(Formula::Eq(Expr::product(vec![var("z"), var("w")]), var(y)));
            with_zw.push(Formula::Eq(Expr::product(vec![pow("z", 2), pow("w", 2)]), var(y)));
        }
        if let [y1, y2] = free {
            with_zw.push(Formula::Eq(Expr::product(vec![var("z"), var(y1), var("w")]), var(y2)));
        }
        for q1 in QS {
            for q2 in QS {
                for a in &with_zw {
                    out.push(quantify(q1, "z", quantify(q2, "w", a.clone())));
                }
            }
        }
        if !free.is_empty() {
            // quantifier inside a connective, with a free atom alongside
            let y = free[0];
            for q in QS {
                for a in with_z.iter().take(6) {
                    let free_atom = Formula::Eq(pow(y, 2), Expr::Identity);
                    out.push(Formula::and(vec![free_atom.clone(), quantify(q, "z", a.clone())]));
                    out.push(Formula::implies(quantify(q, "z", a.clone()), free_atom));
                }
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|f| seen.insert(f.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shape() {
        let fam = formula_family();
        assert!(fam.len() >= 200, "{}", fam.len());
        for f in &fam {
            assert!(f.quantifier_depth() <= 2);
            let free = f.free_vars();
            assert!(free.len() <= 2 && free.iter().all(|v| v == "y1" || v == "y2"), "{f}");
            assert_eq!(&Formula::parse(&f.to_string()).unwrap(), f);
        }
        let distinct: std::collections::HashSet<_> = fam.iter().collect();
        assert_eq!(distinct.len(), fam.len());
        assert!(fam.iter().any(|f| f.free_vars().is_empty()));
        assert!(fam.iter().any(|f| f.free_vars().len() == 2 && f.quantifier_depth() == 2));
    }
}
