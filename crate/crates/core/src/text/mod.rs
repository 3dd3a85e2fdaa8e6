//! Canonical text grammar for every basis type and for linear combinations
//! and tensors of them. Formatting lives in the `Display` impls; this module
//! parses.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{Coeff, LinComb, Tensor};
use crate::color::{Color, ColorSet};
use crate::forests::{Aroma, AromaticForest, AromaticTree, ClumpedForest, MultiAroma, RootedTree};
use crate::multiindices::{AromaticMI, AromaticMonomial, ClumpedMI, Kind, Letter, MultiIndex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub struct Parser<'a> {
    src: &'a str,
    pos: usize,
    colors: Option<&'a ColorSet>,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser {
            src,
            pos: 0,
            colors: None,
        }
    }

    /// Rejects colour names outside `colors`.
    pub fn with_colors(src: &'a str, colors: &'a ColorSet) -> Self {
        Parser {
            src,
            pos: 0,
            colors: Some(colors),
        }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t' | '\r')) {
            self.pos += 1;
        }
    }

    fn skip_ws(&mut self) -> bool {
        let mut newline = false;
        while let Some(c) = self.peek() {
            if c == '\n' {
                newline = true;
            } else if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
        newline
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn unsigned(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn small(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let neg = self.eat('-');
        let n = self.unsigned()?;
        let v: i64 = n
            .try_into()
            .map_err(|_| self.error_at(start, "number out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a colour name"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn color(&mut self) -> Result<Color, ParseError> {
        let start = self.pos;
        let name = self.ident()?;
        let c = Color::new(&name);
        if let Some(cs) = self.colors {
            if !cs.contains(&c) {
                return Err(self.error_at(start, format!("unknown colour '{name}'")));
            }
        }
        Ok(c)
    }

    fn default_color(&self) -> Result<Color, ParseError> {
        let c = Color::default();
        if let Some(cs) = self.colors {
            if !cs.contains(&c) {
                return Err(self.error("a colour is required (use b:<colour>)"));
            }
        }
        Ok(c)
    }

    pub fn tree(&mut self) -> Result<RootedTree, ParseError> {
        self.skip_spaces();
        if !self.eat('b') {
            return Err(self.error("expected a vertex 'b'"));
        }
        let color = if self.eat(':') {
            self.color()?
        } else {
            self.default_color()?
        };
        let free = if self.eat('!') {
            let start = self.pos;
            let n = self.unsigned()?;
            u32::try_from(n).map_err(|_| self.error_at(start, "free-edge count out of range"))?
        } else {
            0
        };
        let mut children = Vec::new();
        if self.eat('[') {
            loop {
                children.push(self.tree()?);
                self.skip_spaces();
                if self.eat(',') {
                    continue;
                }
                self.expect(']')?;
                break;
            }
        }
        Ok(RootedTree::new(color, free, children))
    }

    pub fn aroma(&mut self) -> Result<Aroma, ParseError> {
        self.skip_spaces();
        self.expect('<')?;
        let mut cycle = Vec::new();
        loop {
            cycle.push(self.tree()?);
            self.skip_spaces();
            if self.eat(',') {
                continue;
            }
            self.expect('>')?;
            break;
        }
        Ok(Aroma::new(cycle))
    }

    pub fn aromatic_forest(&mut self) -> Result<AromaticForest, ParseError> {
        self.skip_spaces();
        if self.eat('1') {
            return Ok(AromaticForest::default());
        }
        let mut aromas = Vec::new();
        let mut trees = Vec::new();
        loop {
            match self.peek() {
                Some('<') => aromas.push(self.aroma()?),
                Some('b') => trees.push(self.tree()?),
                _ if aromas.is_empty() && trees.is_empty() => {
                    return Err(self.error("expected an aroma, a tree or 1"))
                }
                _ => break,
            }
            self.skip_spaces();
        }
        Ok(AromaticForest::new(aromas, trees))
    }

    pub fn aromatic_tree(&mut self) -> Result<AromaticTree, ParseError> {
        let start = self.pos;
        let f = self.aromatic_forest()?;
        f.as_aromatic_tree()
            .ok_or_else(|| self.error_at(start, "expected exactly one tree"))
    }

    pub fn multiaroma(&mut self) -> Result<MultiAroma, ParseError> {
        let start = self.pos;
        let f = self.aromatic_forest()?;
        if f.trees.is_empty() {
            Ok(f.aromas)
        } else {
            Err(self.error_at(start, "expected aromas only"))
        }
    }

    pub fn clumped_forest(&mut self) -> Result<ClumpedForest, ParseError> {
        self.skip_spaces();
        if self.eat('1') {
            return Ok(ClumpedForest::default());
        }
        let mut clumps = Vec::new();
        loop {
            self.skip_spaces();
            self.expect('(')?;
            clumps.push(self.aromatic_tree()?);
            self.skip_spaces();
            self.expect(')')?;
            self.skip_spaces();
            if !self.eat('#') {
                break;
            }
        }
        Ok(ClumpedForest::new(clumps))
    }

    fn letter(&mut self) -> Result<(Letter, u32), ParseError> {
        self.expect('x')?;
        self.expect('(')?;
        self.skip_spaces();
        let start = self.pos;
        let j = self.small()?;
        if j < -1 || j > i32::MAX as i64 {
            return Err(self.error_at(start, "letter index must be at least -1"));
        }
        self.skip_spaces();
        let color = if self.eat(',') {
            self.skip_spaces();
            self.color()?
        } else {
            self.default_color()?
        };
        self.skip_spaces();
        self.expect(')')?;
        let e = if self.eat('^') {
            let start = self.pos;
            let n = self.unsigned()?;
            let e = u32::try_from(n).map_err(|_| self.error_at(start, "exponent out of range"))?;
            if e == 0 {
                return Err(self.error_at(start, "exponent must be positive"));
            }
            e
        } else {
            1
        };
        Ok((Letter::new(j as i32, color), e))
    }

    /// A nonempty monomial; `1` is accepted only where the caller allows it.
    pub fn multi_index(&mut self) -> Result<MultiIndex, ParseError> {
        self.skip_spaces();
        if self.eat('1') {
            return Ok(MultiIndex::new());
        }
        let mut m = MultiIndex::new();
        loop {
            let (l, e) = self.letter()?;
            m.add(&l, e);
            self.skip_spaces();
            if self.peek() != Some('x') {
                break;
            }
        }
        Ok(m)
    }

    fn factor(&mut self) -> Result<(MultiIndex, Kind), ParseError> {
        self.skip_spaces();
        let start = self.pos;
        let (m, kind) = if self.eat('<') {
            let m = self.multi_index()?;
            self.skip_spaces();
            self.expect('>')?;
            (m, Kind::Aroma)
        } else if self.eat('[') {
            let m = self.multi_index()?;
            self.skip_spaces();
            self.expect(']')?;
            (m, Kind::Tree)
        } else {
            let m = self.multi_index()?;
            let k = if m.weight() == 0 {
                Kind::Aroma
            } else {
                Kind::Tree
            };
            (m, k)
        };
        if m.is_empty() {
            return Err(self.error_at(start, "a factor must contain at least one letter"));
        }
        Ok((m, kind))
    }

    pub fn aromatic_mi(&mut self) -> Result<AromaticMI, ParseError> {
        self.skip_spaces();
        if self.peek() == Some('1') {
            self.bump();
            return Ok(AromaticMI::default());
        }
        let mut factors = Vec::new();
        loop {
            factors.push(self.factor()?);
            self.skip_spaces();
            if !self.eat('.') {
                break;
            }
        }
        Ok(AromaticMI::from_factors(factors))
    }

    pub fn aromatic_monomial(&mut self) -> Result<AromaticMonomial, ParseError> {
        let start = self.pos;
        let m = self.aromatic_mi()?;
        m.as_aromatic_monomial()
            .ok_or_else(|| self.error_at(start, "expected exactly one tree factor"))
    }

    pub fn clumped_mi(&mut self) -> Result<ClumpedMI, ParseError> {
        self.skip_spaces();
        if self.eat('1') {
            return Ok(ClumpedMI::default());
        }
        let mut clumps = Vec::new();
        loop {
            self.skip_spaces();
            self.expect('(')?;
            clumps.push(self.aromatic_monomial()?);
            self.skip_spaces();
            self.expect(')')?;
            self.skip_spaces();
            if !self.eat('#') {
                break;
            }
        }
        Ok(ClumpedMI::new(clumps))
    }

    fn coefficient(&mut self) -> Result<Option<Coeff>, ParseError> {
        let save = self.pos;
        if !matches!(self.peek(), Some('0'..='9')) {
            return Ok(None);
        }
        let n = self.unsigned()?;
        self.skip_spaces();
        let c = if self.eat('/') {
            self.skip_spaces();
            let d = self.unsigned()?;
            if d == BigInt::from(0) {
                return Err(self.error("zero denominator"));
            }
            self.skip_spaces();
            Coeff::new(n, d)
        } else {
            Coeff::from_integer(n)
        };
        if self.eat('*') {
            Ok(Some(c))
        } else {
            self.pos = save;
            Ok(None)
        }
    }

    /// Linear combination: signed terms joined by + / -, or one signed term per line.
    pub fn lincomb<T: Ord + Clone>(
        &mut self,
        term: &mut dyn FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<LinComb<T>, ParseError> {
        let mut out = LinComb::zero();
        self.skip_ws();
        if self.peek() == Some('0') && self.src[self.pos + 1..].trim().is_empty() {
            self.pos = self.src.len();
            return Ok(out);
        }
        let mut negative = self.eat('-');
        loop {
            self.skip_spaces();
            let c = self.coefficient()?.unwrap_or_else(Coeff::one);
            let t = term(self)?;
            out.add_term(t, if negative { -c } else { c });
            let newline = self.skip_ws();
            if self.at_end() {
                break;
            }
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else if newline {
                negative = false;
            } else {
                return Err(self.error("expected '+', '-' or end of input"));
            }
        }
        Ok(out)
    }

    pub fn tensor<L, R>(
        &mut self,
        left: &mut dyn FnMut(&mut Self) -> Result<L, ParseError>,
        right: &mut dyn FnMut(&mut Self) -> Result<R, ParseError>,
    ) -> Result<Tensor<L, R>, ParseError> {
        let l = left(self)?;
        self.skip_spaces();
        if !self.eat_str("(x)") {
            return Err(self.error("expected '(x)'"));
        }
        let r = right(self)?;
        Ok(Tensor::new(l, r))
    }
}

/// Types with a canonical text form.
pub trait Parse: Sized {
    fn parse_with(p: &mut Parser<'_>) -> Result<Self, ParseError>;
}

macro_rules! impl_parse {
    ($t:ty, $m:ident) => {
        impl Parse for $t {
            fn parse_with(p: &mut Parser<'_>) -> Result<Self, ParseError> {
                p.$m()
            }
        }
    };
}

impl_parse!(RootedTree, tree);
impl_parse!(Aroma, aroma);
impl_parse!(AromaticForest, aromatic_forest);
impl_parse!(AromaticTree, aromatic_tree);
impl_parse!(MultiAroma, multiaroma);
impl_parse!(ClumpedForest, clumped_forest);
impl_parse!(MultiIndex, multi_index);
impl_parse!(AromaticMI, aromatic_mi);
impl_parse!(AromaticMonomial, aromatic_monomial);
impl_parse!(ClumpedMI, clumped_mi);

impl<L: Parse, R: Parse> Parse for Tensor<L, R> {
    fn parse_with(p: &mut Parser<'_>) -> Result<Self, ParseError> {
        p.tensor(&mut L::parse_with, &mut R::parse_with)
    }
}

/// Parses a whole string as one `T`.
pub fn parse<T: Parse>(s: &str) -> Result<T, ParseError> {
    let mut p = Parser::new(s);
    let v = T::parse_with(&mut p)?;
    p.finish()?;
    Ok(v)
}

pub fn parse_colored<T: Parse>(s: &str, colors: &ColorSet) -> Result<T, ParseError> {
    let mut p = Parser::with_colors(s, colors);
    let v = T::parse_with(&mut p)?;
    p.finish()?;
    Ok(v)
}

pub fn parse_lincomb<T: Parse + Ord + Clone>(s: &str) -> Result<LinComb<T>, ParseError> {
    let mut p = Parser::new(s);
    let v = p.lincomb(&mut T::parse_with)?;
    p.finish()?;
    Ok(v)
}

pub fn parse_lincomb_colored<T: Parse + Ord + Clone>(
    s: &str,
    colors: &ColorSet,
) -> Result<LinComb<T>, ParseError> {
    let mut p = Parser::with_colors(s, colors);
    let v = p.lincomb(&mut T::parse_with)?;
    p.finish()?;
    Ok(v)
}

/// Canonical rendering of a combination, one signed term per line.
pub fn render_lines<T: Ord + Clone + fmt::Display>(x: &LinComb<T>) -> String {
    if x.is_zero() {
        return "0\n".to_string();
    }
    let mut s = x.term_lines().join("\n");
    s.push('\n');
    s
}
