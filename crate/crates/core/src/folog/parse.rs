//! ```text
//! formula := disj ('->' formula)?
//! disj    := conj ('|' conj)*
//! conj    := unary ('&' unary)*
//! unary   := '!' unary | ('forall'|'exists') ident '.' formula | atom | '(' formula ')'
//! atom    := term '=' term
//! ```

use super::{Formula, Quantifier};
use crate::error::Result;
use crate::words::parse::{Cursor, KEYWORDS};

pub(crate) fn parse_formula(text: &str) -> Result<Formula> {
    let mut c = Cursor::new(text);
    let f = formula(&mut c)?;
    if !c.at_end() {
        return c.error("trailing input");
    }
    Ok(f)
}

fn formula(c: &mut Cursor) -> Result<Formula> {
    let lhs = disj(c)?;
    if c.eat("->") {
        let rhs = formula(c)?;
        return Ok(Formula::implies(lhs, rhs));
    }
    Ok(lhs)
}

fn disj(c: &mut Cursor) -> Result<Formula> {
    let mut xs = vec![conj(c)?];
    while c.eat("|") {
        xs.push(conj(c)?);
    }
    Ok(Formula::or(xs))
}

fn conj(c: &mut Cursor) -> Result<Formula> {
    let mut xs = vec![unary(c)?];
    while c.eat("&") {
        xs.push(unary(c)?);
    }
    Ok(Formula::and(xs))
}

fn unary(c: &mut Cursor) -> Result<Formula> {
    if c.eat("!") {
        return Ok(Formula::not(unary(c)?));
    }
    if let Some(kw @ ("forall" | "exists")) = c.peek_ident() {
        c.ident()?;
        let q = if kw == "forall" { Quantifier::Forall } else { Quantifier::Exists };
        let v = c.ident()?;
        if KEYWORDS.contains(&v) {
            return c.error(format!("`{v}` cannot be bound"));
        }
        c.expect(".")?;
        let body = formula(c)?;
        return Ok(Formula::Quant(q, v.to_string(), Box::new(body)));
    }
    // `(` opens either a term or a formula; try the atom reading first
    let start = c.pos();
    match atom(c) {
        Ok(f) => Ok(f),
        Err(atom_err) => {
            c.set_pos(start);
            if c.eat("(") {
                let f = formula(c)?;
                c.expect(")")?;
                Ok(f)
            } else {
                Err(atom_err)
            }
        }
    }
}

fn atom(c: &mut Cursor) -> Result<Formula> {
    let a = c.term()?;
    c.expect("=")?;
    let b = c.term()?;
    Ok(Formula::Eq(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn errors() {
        assert!(matches!(parse_formula("forall x x = e"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_formula("x = "), Err(Error::Syntax { .. })));
        assert!(matches!(parse_formula("x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_formula("(x = e"), Err(Error::Syntax { .. })));
        assert!(parse_formula("forall e. e = e").is_err());
    }

    #[test]
    fn precedence() {
        let f = parse_formula("a = e | b = e & c = e -> d = e").unwrap();
        match f {
            Formula::Implies(l, _) => match *l {
                Formula::Or(xs) => assert!(matches!(xs[1], Formula::And(_))),
                _ => panic!(),
            },
            _ => panic!(),
        }
        assert!(matches!(parse_formula("!a = e & b = e").unwrap(), Formula::And(_)));
    }
}
