//! Concrete syntax for propositional formulas.
//!
//! Grammar (EBNF):
//!
//! ```text
//! formula := imp
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | atom
//! atom    := var | const | "(" formula ")"
//! ```
//!
//! Precedence is `~` > `&` > `|` > `->`, with `->` right-associative.
//! Token map: `~`→neg, `&`→and, `|`→or, `->`→imp, `T`→top, `B`→bot,
//! `0`→zero, `1`→one. Variables are nonempty lowercase identifiers, which
//! keeps them disjoint from the constant tokens.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::Term;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    /// Arity-0 connective, stored under its signature name (top/bot/zero/one).
    Const(String),
    Unary(String, Box<Formula>),
    Binary(String, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn neg(f: Formula) -> Formula {
        Formula::Unary("neg".into(), Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::Binary("and".into(), Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Binary("or".into(), Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::Binary("imp".into(), Box::new(l), Box::new(r))
    }

    /// Variable names, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Const(_) => {}
            Formula::Unary(_, f) => f.collect_vars(out),
            Formula::Binary(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Lowers to a [`Term`], mapping variables to indices via `order`
    /// (position in the slice = variable index).
    pub fn to_term(&self, order: &[String]) -> Result<Term> {
        match self {
            Formula::Var(v) => order
                .iter()
                .position(|o| o == v)
                .map(Term::Var)
                .ok_or_else(|| Error::UnboundVariable(v.clone())),
            Formula::Const(c) => Ok(Term::cnst(c)),
            Formula::Unary(op, f) => Ok(Term::Op(op.clone(), vec![f.to_term(order)?])),
            Formula::Binary(op, l, r) => {
                Ok(Term::Op(op.clone(), vec![l.to_term(order)?, r.to_term(order)?]))
            }
        }
    }
}

const CONSTS: [(char, &str); 4] = [('T', "top"), ('B', "bot"), ('0', "zero"), ('1', "one")];

fn const_token(name: &str) -> Option<char> {
    CONSTS.iter().find(|(_, n)| *n == name).map(|(c, _)| *c)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.or_level()?;
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"->") {
            self.pos += 2;
            let rhs = self.formula()?; // right-associative
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or_level(&mut self) -> Result<Formula> {
        let mut f = self.and_level()?;
        while self.peek() == Some(b'|') {
            self.pos += 1;
            f = Formula::or(f, self.and_level()?);
        }
        Ok(f)
    }

    fn and_level(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.peek() == Some(b'&') {
            self.pos += 1;
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(b'~') {
            return Ok(Formula::neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.formula()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(f)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_lowercase()
                        || self.src[self.pos].is_ascii_digit()
                        || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Formula::var(name))
            }
            Some(c) => {
                if let Some((_, name)) = CONSTS.iter().find(|(t, _)| *t as u8 == c) {
                    self.pos += 1;
                    return Ok(Formula::Const(name.to_string()));
                }
                self.err(format!("unknown token `{}`", c as char))
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a formula; errors carry the byte offset of the failure.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let f = p.formula()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Var(_) | Formula::Const(_) | Formula::Unary(..) => 4,
        Formula::Binary(op, ..) => match op.as_str() {
            "and" => 3,
            "or" => 2,
            _ => 1,
        },
    }
}

fn render_prec(f: &Formula, out: &mut String) {
    match f {
        Formula::Var(v) => out.push_str(v),
        Formula::Const(c) => out.push(const_token(c).unwrap_or('?')),
        Formula::Unary(_, inner) => {
            out.push('~');
            let needs = precedence(inner) < 4;
            wrap(inner, needs, out);
        }
        Formula::Binary(op, l, r) => {
            let (sym, prec) = match op.as_str() {
                "and" => (" & ", 3),
                "or" => (" | ", 2),
                _ => (" -> ", 1),
            };
            // `->` is right-associative: parenthesize a left child at the
            // same level; `&`/`|` are rendered left-nested, so only strictly
            // lower children need parentheses on the left.
            let left_needs = if prec == 1 { precedence(l) <= prec } else { precedence(l) < prec };
            let right_needs = if prec == 1 { precedence(r) < prec } else { precedence(r) <= prec };
            wrap(l, left_needs, out);
            out.push_str(sym);
            wrap(r, right_needs, out);
        }
    }
}

fn wrap(f: &Formula, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        render_prec(f, out);
        out.push(')');
    } else {
        render_prec(f, out);
    }
}

/// Minimal-parentheses rendering; `parse(render(f))` returns `f` unchanged.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    render_prec(f, &mut out);
    out
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

/// Renders a [`Term`] in the formula grammar when its operations fit the
/// token map; variables 0 and 1 print as `p` and `q`.
pub fn term_to_formula(t: &Term) -> Option<Formula> {
    match t {
        Term::Var(0) => Some(Formula::var("p")),
        Term::Var(1) => Some(Formula::var("q")),
        Term::Var(_) => None,
        Term::Op(name, args) => match (name.as_str(), args.len()) {
            ("neg", 1) => Some(Formula::neg(term_to_formula(&args[0])?)),
            ("and", 2) => {
                Some(Formula::and(term_to_formula(&args[0])?, term_to_formula(&args[1])?))
            }
            ("or", 2) => {
                Some(Formula::or(term_to_formula(&args[0])?, term_to_formula(&args[1])?))
            }
            ("imp", 2) => {
                Some(Formula::imp(term_to_formula(&args[0])?, term_to_formula(&args[1])?))
            }
            (c, 0) if const_token(c).is_some() => Some(Formula::Const(c.to_string())),
            _ => None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_aristotle_thesis() {
        let f = parse("~(p -> ~p)").unwrap();
        assert_eq!(
            f,
            Formula::neg(Formula::imp(Formula::var("p"), Formula::neg(Formula::var("p"))))
        );
    }

    #[test]
    fn parses_bare_variable() {
        assert_eq!(parse("p").unwrap(), Formula::var("p"));
        assert_eq!(parse("pq1_x").unwrap(), Formula::var("pq1_x"));
    }

    #[test]
    fn imp_is_right_associative() {
        let f = parse("p -> q -> r").unwrap();
        assert_eq!(
            f,
            Formula::imp(
                Formula::var("p"),
                Formula::imp(Formula::var("q"), Formula::var("r"))
            )
        );
    }

    #[test]
    fn precedence_nesting() {
        let f = parse("~p & q | r -> 1").unwrap();
        assert_eq!(
            f,
            Formula::imp(
                Formula::or(
                    Formula::and(Formula::neg(Formula::var("p")), Formula::var("q")),
                    Formula::var("r")
                ),
                Formula::Const("one".into())
            )
        );
    }

    #[test]
    fn render_minimal_parens() {
        assert_eq!(render(&Formula::neg(Formula::var("p"))), "~p");
        let f = Formula::and(
            Formula::or(Formula::var("p"), Formula::var("q")),
            Formula::var("r"),
        );
        assert_eq!(render(&f), "(p | q) & r");
        let g = Formula::imp(
            Formula::imp(Formula::var("p"), Formula::var("q")),
            Formula::var("r"),
        );
        assert_eq!(render(&g), "(p -> q) -> r");
        assert_eq!(parse(&render(&g)).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse("p -> (q").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 7),
            e => panic!("unexpected error {e:?}"),
        }
        match parse("p @ q").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 2),
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn render_parse_idempotent() {
        for src in ["p&(q|r)", "((p))", "~(p->~p)", "T&~p|p&q", "~~~p"] {
            let f = parse(src).unwrap();
            let once = render(&f);
            assert_eq!(parse(&once).unwrap(), f);
            let twice = render(&parse(&once).unwrap());
            assert_eq!(once, twice);
        }
    }

    mod prop {
        use super::*;
        use proptest::prelude::*;

        fn arb_formula() -> impl Strategy<Value = Formula> {
            let leaf = prop_oneof![
                "[a-z][a-z0-9]{0,3}".prop_map(|s| Formula::var(&s)),
                prop_oneof![
                    Just(Formula::Const("top".into())),
                    Just(Formula::Const("bot".into())),
                    Just(Formula::Const("zero".into())),
                    Just(Formula::Const("one".into())),
                ],
            ];
            leaf.prop_recursive(8, 256, 2, |inner| {
                prop_oneof![
                    inner.clone().prop_map(Formula::neg),
                    (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                    (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                    (inner.clone(), inner).prop_map(|(l, r)| Formula::imp(l, r)),
                ]
            })
        }

        proptest! {
            #[test]
            fn parse_render_round_trip(f in arb_formula()) {
                let text = render(&f);
                let back = parse(&text).unwrap();
                prop_assert_eq!(back, f);
            }
        }
    }
}
