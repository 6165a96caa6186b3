//! Text grammar for field elements, algebra elements, extension descriptors
//! and symbol forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? digits)?
//! atom   := digits | letter | '(' expr ')'
//! ```
//!
//! Integer literals are reduced mod 3. Elements of a quadratic field are
//! written `quad[p, q]` for `p + q s`; elements of a cubic extension
//! `as[e0, e1, e2]`; algebra elements `elem[e00,e01,e02;e10,...;...]`.

mod print;

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactfield::{Gf3, RatFunc, MAX_EXP, MAX_VARS};
use crate::katomilne::SymbolForm;
use crate::symbolalg::SymbolAlgebra;
use crate::towers::{Cubic, CubicModulus, ExtDescriptor, ExtKind, Quad};
use crate::{Algebra, AlgebraE, EElem, Elem, ElemE, LElem};

pub use print::{render_form, render_symbol_form};

/// Ordered single-letter variable names of the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vars {
    names: Vec<char>,
}

impl Default for Vars {
    fn default() -> Self {
        Vars {
            names: vec!['a', 'b'],
        }
    }
}

impl Vars {
    pub fn new(names: &[char]) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS });
        }
        for (i, c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::Format(format!(
                    "variable name {c:?} is not a lowercase letter"
                )));
            }
            if names[..i].contains(c) {
                return Err(Error::Format(format!("variable {c} declared twice")));
            }
        }
        Ok(Vars {
            names: names.to_vec(),
        })
    }

    /// Parses a comma-separated list such as `a,b,x`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut names = Vec::new();
        for part in spec.split(',') {
            let part = part.trim();
            let mut chars = part.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => names.push(c),
                _ => return Err(Error::Format(format!("bad variable name {part:?}"))),
            }
        }
        Vars::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, c: char) -> Option<usize> {
        self.names.iter().position(|&n| n == c)
    }

    pub fn name(&self, i: usize) -> char {
        self.names.get(i).copied().unwrap_or('?')
    }

    pub fn spec(&self) -> String {
        self.names
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn render(&self, f: &RatFunc) -> String {
        print::render_ratfunc(self, f)
    }

    pub fn render_e(&self, e: &EElem) -> String {
        print::render_e(self, e)
    }

    pub fn render_l(&self, l: &LElem) -> String {
        format!(
            "as[{}]",
            l.coords()
                .iter()
                .map(|c| self.render_e(c))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }

    pub fn render_elem(&self, a: &Elem) -> String {
        print::render_grid(a, |c| self.render(c))
    }

    pub fn render_elem_e(&self, a: &ElemE) -> String {
        print::render_grid(a, |c| self.render_e(c))
    }

    pub fn render_descriptor(&self, d: &ExtDescriptor) -> String {
        let own = match d.kind() {
            ExtKind::Trivial => "trivial".to_string(),
            ExtKind::Quadratic(x) => format!("quad(d={})", self.render(x)),
            ExtKind::ArtinSchreier(x) => format!("as(alpha={})", self.render(x)),
            ExtKind::Inseparable(x) => format!("insep(c={})", self.render(x)),
        };
        match d.base() {
            Some(b) => format!("{own} over {}", self.render_descriptor(b)),
            None => own,
        }
    }

    pub fn render_algebra(&self, alg: &Algebra) -> String {
        format!(
            "symbol(alpha={}, beta={})",
            self.render(alg.alpha()),
            self.render(alg.beta())
        )
    }
}

/// A rational function such as `(a^2*b + 2*a + 1)/(b + 2)`.
pub fn parse_ratfunc(text: &str, vars: &Vars) -> Result<RatFunc> {
    let mut p = Parser::new(text, vars);
    let f = p.expr()?;
    p.finish()?;
    Ok(f)
}

/// An element of E: an expression, or `quad[p, q]` when `d` is given.
pub fn parse_e(text: &str, vars: &Vars, d: Option<&Arc<RatFunc>>) -> Result<EElem> {
    let mut p = Parser::new(text, vars);
    let e = p.e_elem(d)?;
    p.finish()?;
    Ok(e)
}

/// An element of `L = E[x]/(x^3 - x - alpha)`.
pub fn parse_l(
    text: &str,
    vars: &Vars,
    modulus: &Arc<CubicModulus<EElem>>,
    d: Option<&Arc<RatFunc>>,
) -> Result<LElem> {
    let mut p = Parser::new(text, vars);
    p.keyword("as")?;
    p.expect('[')?;
    let mut coords = Vec::with_capacity(3);
    for i in 0..3 {
        if i > 0 {
            p.expect(',')?;
        }
        coords.push(p.e_elem(d)?);
    }
    p.expect(']')?;
    p.finish()?;
    let coords: [EElem; 3] = coords.try_into().expect("three coordinates");
    Ok(Cubic::new(coords, modulus.clone()))
}

pub fn parse_elem(text: &str, vars: &Vars, alg: &Algebra) -> Result<Elem> {
    let mut p = Parser::new(text, vars);
    let coords = p.grid(|p| p.expr())?;
    p.finish()?;
    Ok(alg.element(coords))
}

pub fn parse_elem_e(
    text: &str,
    vars: &Vars,
    alg: &AlgebraE,
    d: Option<&Arc<RatFunc>>,
) -> Result<ElemE> {
    let mut p = Parser::new(text, vars);
    let coords = p.grid(|p| p.e_elem(d))?;
    p.finish()?;
    Ok(alg.element(coords))
}

/// `symbol(alpha=<expr>, beta=<expr>)`.
pub fn parse_algebra(text: &str, vars: &Vars) -> Result<Algebra> {
    let mut p = Parser::new(text, vars);
    p.keyword("symbol")?;
    p.expect('(')?;
    let alpha = p.named("alpha")?;
    p.expect(',')?;
    let beta = p.named("beta")?;
    p.expect(')')?;
    p.finish()?;
    SymbolAlgebra::new(alpha, beta)
}

/// `form(a; b1, b2, ...)`.
pub fn parse_symbol_form(text: &str, vars: &Vars) -> Result<SymbolForm> {
    let mut p = Parser::new(text, vars);
    p.keyword("form")?;
    p.expect('(')?;
    let a = p.expr()?;
    let mut bs = Vec::new();
    if p.eat(';') {
        bs.push(p.expr()?);
        while p.eat(',') {
            bs.push(p.expr()?);
        }
    }
    p.expect(')')?;
    p.finish()?;
    SymbolForm::new(a, bs)
}

/// `trivial`, `quad(d=..)`, `as(alpha=..)` or `insep(c=..)`, optionally
/// followed by `over <descriptor>`. Validated.
pub fn parse_descriptor(text: &str, vars: &Vars) -> Result<ExtDescriptor> {
    let raw = parse_raw_descriptor(text, vars)?;
    build_descriptor(&raw)
}

/// A descriptor as written, before validation.
#[derive(Clone, Debug, PartialEq)]
pub struct RawDescriptor {
    pub kind: ExtKind,
    pub base: Option<Box<RawDescriptor>>,
}

pub fn parse_raw_descriptor(text: &str, vars: &Vars) -> Result<RawDescriptor> {
    let mut p = Parser::new(text, vars);
    let raw = p.descriptor()?;
    p.finish()?;
    Ok(raw)
}

pub fn build_descriptor(raw: &RawDescriptor) -> Result<ExtDescriptor> {
    let base = raw.base.as_deref().map(build_descriptor).transpose()?;
    match &raw.kind {
        ExtKind::Trivial => match base {
            None => Ok(ExtDescriptor::trivial()),
            Some(_) => Err(Error::InvalidExtension(
                "trivial extension over a base".into(),
            )),
        },
        ExtKind::Quadratic(d) => match base {
            None => ExtDescriptor::quadratic(d.clone()),
            Some(b) if matches!(b.kind(), ExtKind::Trivial) => ExtDescriptor::quadratic(d.clone()),
            Some(_) => Err(Error::InvalidExtension(
                "quadratic extensions sit directly over F".into(),
            )),
        },
        ExtKind::ArtinSchreier(a) => ExtDescriptor::artin_schreier(a.clone(), base),
        ExtKind::Inseparable(c) => ExtDescriptor::inseparable(c.clone(), base),
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a Vars,
}

fn max_exponent(f: &RatFunc, var: usize) -> u32 {
    f.num().degree_in(var).max(f.den().degree_in(var))
}

impl<'a> Parser<'a> {
    fn new(text: &str, vars: &'a Vars) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            vars,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.error(format!("expected '{c}', found '{got}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}'")),
        }
    }

    fn lookahead_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let w: Vec<char> = word.chars().collect();
        let end = self.pos + w.len();
        end <= self.chars.len()
            && self.chars[self.pos..end] == w[..]
            && !self
                .chars
                .get(end)
                .is_some_and(|c| c.is_ascii_alphanumeric())
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        if self.lookahead_word(word) {
            self.pos += word.chars().count();
            Ok(())
        } else {
            self.error(format!("expected '{word}'"))
        }
    }

    /// `name = <expr>`.
    fn named(&mut self, name: &str) -> Result<RatFunc> {
        self.keyword(name)?;
        self.expect('=')?;
        self.expr()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                self.check_exponents(&acc, &rhs)?;
                acc = &acc + &rhs;
            } else if self.eat('-') {
                let rhs = self.term()?;
                self.check_exponents(&acc, &rhs)?;
                acc = &acc - &rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                self.check_exponents(&acc, &rhs)?;
                acc = &acc * &rhs;
            } else if self.peek() == Some('/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                if rhs.is_zero() {
                    return Err(Error::Syntax {
                        column: at + 1,
                        message: "division by zero".into(),
                    });
                }
                self.check_exponents(&acc, &rhs)?;
                acc = &acc / &rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn check_exponents(&self, f: &RatFunc, g: &RatFunc) -> Result<()> {
        for v in 0..MAX_VARS {
            if max_exponent(f, v) + max_exponent(g, v) > MAX_EXP {
                return Err(Error::ExponentOverflow { max: MAX_EXP });
            }
        }
        Ok(())
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let start = self.pos;
        let Some(k) = self.digits_value(|acc, d| acc.saturating_mul(10).saturating_add(d))? else {
            return self.error("expected an integer exponent");
        };
        if k > MAX_EXP as u64 {
            return Err(Error::Syntax {
                column: start + 1,
                message: format!("exponent exceeds {MAX_EXP}"),
            });
        }
        let k = k as u32;
        for v in 0..MAX_VARS {
            if max_exponent(&base, v) * k > MAX_EXP {
                return Err(Error::ExponentOverflow { max: MAX_EXP });
            }
        }
        if negative && base.is_zero() {
            return Err(Error::Syntax {
                column: start + 1,
                message: "negative power of zero".into(),
            });
        }
        let k = if negative { -(k as i32) } else { k as i32 };
        base.pow(k)
    }

    fn digits_value(&mut self, step: impl Fn(u64, u64) -> u64) -> Result<Option<u64>> {
        self.skip_ws();
        let mut acc = None;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            acc = Some(step(acc.unwrap_or(0), d as u64));
            self.pos += 1;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.digits_value(|acc, d| (acc * 10 + d) % 3)?.unwrap_or(0);
                Ok(RatFunc::constant(Gf3::new(v as i64)))
            }
            Some(c) if c.is_ascii_lowercase() => {
                if self
                    .chars
                    .get(self.pos + 1)
                    .is_some_and(|n| n.is_ascii_alphanumeric())
                {
                    return self.error("variables are single letters");
                }
                let Some(i) = self.vars.index(c) else {
                    return Err(Error::UnknownVariable(c));
                };
                self.pos += 1;
                Ok(RatFunc::var(i))
            }
            Some(c) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }

    fn e_elem(&mut self, d: Option<&Arc<RatFunc>>) -> Result<EElem> {
        if self.lookahead_word("quad") {
            let Some(d) = d else {
                return self.error("quad[..] needs a quadratic field");
            };
            self.pos += 4;
            self.expect('[')?;
            let p = self.expr()?;
            self.expect(',')?;
            let q = self.expr()?;
            self.expect(']')?;
            Ok(Quad::new(p, q, d.clone()))
        } else {
            Ok(Quad::embed(self.expr()?, d))
        }
    }

    fn grid<S>(&mut self, mut entry: impl FnMut(&mut Self) -> Result<S>) -> Result<[S; 9]> {
        self.keyword("elem")?;
        self.expect('[')?;
        let mut out = Vec::with_capacity(9);
        for i in 0..3 {
            if i > 0 {
                self.expect(';')?;
            }
            for j in 0..3 {
                if j > 0 {
                    self.expect(',')?;
                }
                out.push(entry(self)?);
            }
        }
        self.expect(']')?;
        Ok(out.try_into().ok().expect("nine entries"))
    }

    fn descriptor(&mut self) -> Result<RawDescriptor> {
        let kind = if self.lookahead_word("trivial") {
            self.pos += "trivial".len();
            ExtKind::Trivial
        } else {
            let (word, field): (&str, &str) = if self.lookahead_word("quad") {
                ("quad", "d")
            } else if self.lookahead_word("as") {
                ("as", "alpha")
            } else if self.lookahead_word("insep") {
                ("insep", "c")
            } else {
                return self.error("expected an extension descriptor");
            };
            self.pos += word.len();
            self.expect('(')?;
            let datum = self.named(field)?;
            self.expect(')')?;
            match word {
                "quad" => ExtKind::Quadratic(datum),
                "as" => ExtKind::ArtinSchreier(datum),
                _ => ExtKind::Inseparable(datum),
            }
        };
        let base = if self.lookahead_word("over") {
            self.pos += "over".len();
            Some(Box::new(self.descriptor()?))
        } else {
            None
        };
        Ok(RawDescriptor { kind, base })
    }
}

impl RawDescriptor {
    pub fn quadratic_datum(&self) -> Option<&RatFunc> {
        match &self.kind {
            ExtKind::Quadratic(d) => Some(d),
            _ => self.base.as_ref().and_then(|b| b.quadratic_datum()),
        }
    }
}

#[cfg(test)]
mod tests;
