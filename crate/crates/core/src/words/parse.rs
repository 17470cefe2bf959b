//! Recursive-descent parser for word terms, shared with the formula parser.
//!
//! ```text
//! term    := factor ('*' factor)*
//! factor  := primary ('^' int)*
//! primary := ident | 'e' | '1' | '(' term ')' | '[' term ',' term ']'
//! ```

use super::Expr;
use crate::error::{Error, Result};

pub(crate) const KEYWORDS: [&str; 3] = ["e", "forall", "exists"];

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn set_pos(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub(crate) fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    pub(crate) fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Consumes `tok` if it comes next.
    pub(crate) fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.error(format!("expected `{tok}`"))
        }
    }

    /// Identifier `[A-Za-z][A-Za-z0-9_]*`, without consuming on failure.
    pub(crate) fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        let end = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        Some(&rest[..end])
    }

    pub(crate) fn ident(&mut self) -> Result<&'a str> {
        match self.peek_ident() {
            Some(id) => {
                self.pos += id.len();
                Ok(id)
            }
            None => self.error("expected identifier"),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return self.error("expected integer exponent");
        }
        self.pos += sign + digits;
        self.src[start..self.pos].parse().map_err(|_| Error::Syntax { pos: start, msg: "exponent out of range".into() })
    }

    pub(crate) fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat("*") {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        while self.eat("^") {
            e = Expr::Power(Box::new(e), self.int()?);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.term()?;
                self.expect(")")?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.term()?;
                self.expect(",")?;
                let b = self.term()?;
                self.expect("]")?;
                Ok(Expr::Commutator(Box::new(a), Box::new(b)))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Expr::Identity)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let id = self.ident()?;
                match id {
                    "e" => Ok(Expr::Identity),
                    "forall" | "exists" => {
                        self.pos -= id.len();
                        self.error(format!("keyword `{id}` cannot be a variable"))
                    }
                    _ => Ok(Expr::Var(id.to_string())),
                }
            }
            Some(c) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_expr(text: &str) -> Result<Expr> {
    let mut c = Cursor::new(text);
    let e = c.term()?;
    if !c.at_end() {
        return c.error("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(s: &str) -> Expr {
        Expr::Var(s.into())
    }

    #[test]
    fn grammar_cases() {
        assert_eq!(parse_expr("[x1,x2]").unwrap(), Expr::Commutator(Box::new(var("x1")), Box::new(var("x2"))));
        assert_eq!(parse_expr("x^2").unwrap(), Expr::Power(Box::new(var("x")), 2));
        assert_eq!(
            parse_expr("x1^-1*x2*x1").unwrap(),
            Expr::Product(vec![Expr::Power(Box::new(var("x1")), -1), var("x2"), var("x1")])
        );
        assert_eq!(
            parse_expr("(x*y)^3").unwrap(),
            Expr::Power(Box::new(Expr::Product(vec![var("x"), var("y")])), 3)
        );
        assert_eq!(parse_expr(" e ").unwrap(), Expr::Identity);
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(parse_expr("x*").unwrap_err(), Error::Syntax { pos: 2, msg: "unexpected end of input".into() });
        assert!(matches!(parse_expr("[x,y"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_expr("x^"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expr("x y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(parse_expr("forall").is_err());
    }
}
