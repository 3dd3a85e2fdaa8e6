use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::{factorial, multiset_sigma, Basis, Monoid};
use crate::color::Color;

/// Variable x_j of a given colour, j >= -1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub j: i32,
    pub color: Color,
}

impl Letter {
    pub fn new(j: i32, color: Color) -> Self {
        Letter { j, color }
    }

    pub fn plain(j: i32) -> Self {
        Letter {
            j,
            color: Color::default(),
        }
    }

    pub fn shifted(&self, by: i32) -> Letter {
        Letter {
            j: self.j + by,
            color: self.color.clone(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.color.is_default() {
            write!(f, "x({})", self.j)
        } else {
            write!(f, "x({},{})", self.j, self.color)
        }
    }
}

/// Commutative monomial x^k in the letters; exponents are positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(BTreeMap<Letter, u32>);

impl MultiIndex {
    pub fn new() -> Self {
        MultiIndex(BTreeMap::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (Letter, u32)>) -> Self {
        let mut m = MultiIndex::new();
        for (l, e) in letters {
            m.add(&l, e);
        }
        m
    }

    /// Default-coloured monomial from (j, exponent) pairs.
    pub fn plain(pairs: &[(i32, u32)]) -> Self {
        MultiIndex::from_letters(pairs.iter().map(|&(j, e)| (Letter::plain(j), e)))
    }

    pub fn letter(l: Letter) -> Self {
        MultiIndex::from_letters([(l, 1)])
    }

    pub fn exp(&self, l: &Letter) -> u32 {
        self.0.get(l).copied().unwrap_or(0)
    }

    pub fn letters(&self) -> impl Iterator<Item = (&Letter, u32)> {
        self.0.iter().map(|(l, &e)| (l, e))
    }

    pub fn add(&mut self, l: &Letter, e: u32) {
        if e > 0 {
            *self.0.entry(l.clone()).or_insert(0) += e;
        }
    }

    /// Removes `e` copies of a letter; panics if not present.
    pub fn remove(&mut self, l: &Letter, e: u32) {
        let have = self.exp(l);
        assert!(have >= e, "cannot remove {e} of {l} from {self}");
        if have == e {
            self.0.remove(l);
        } else {
            self.0.insert(l.clone(), have - e);
        }
    }

    /// k - e_from + e_to.
    pub fn moved(&self, from: &Letter, to: &Letter) -> MultiIndex {
        let mut m = self.clone();
        m.remove(from, 1);
        m.add(to, 1);
        m
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().map(|(l, &e)| l.j as i64 * e as i64).sum()
    }

    pub fn degree(&self) -> usize {
        self.0.values().map(|&e| e as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// k! = prod over letters of k_l!.
    pub fn factorial(&self) -> BigUint {
        self.0
            .values()
            .fold(BigUint::one(), |acc, &e| acc * factorial(e as usize))
    }

    pub fn times(&self, other: &MultiIndex) -> MultiIndex {
        let mut m = self.clone();
        for (l, e) in other.letters() {
            m.add(l, e);
        }
        m
    }

    pub fn contains(&self, other: &MultiIndex) -> bool {
        other.letters().all(|(l, e)| self.exp(l) >= e)
    }

    pub fn minus(&self, other: &MultiIndex) -> MultiIndex {
        let mut m = self.clone();
        for (l, e) in other.letters() {
            m.remove(l, e);
        }
        m
    }

    /// Every sub-monomial (including 1 and self).
    pub fn divisors(&self) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::new()];
        for (l, e) in self.letters() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for m in &out {
                for k in 0..=e {
                    let mut m2 = m.clone();
                    m2.add(l, k);
                    next.push(m2);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (l, &e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Basis for MultiIndex {
    fn degree(&self) -> usize {
        MultiIndex::degree(self)
    }
    fn sigma(&self) -> BigUint {
        self.factorial()
    }
}

/// Whether a monomial factor stands for an aroma (cycle) or a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Aroma,
    Tree,
}

impl Kind {
    /// Weight of a factor of this kind without free edges.
    pub fn base_weight(self) -> i64 {
        match self {
            Kind::Aroma => 0,
            Kind::Tree => -1,
        }
    }
}

pub(crate) fn format_factor(m: &MultiIndex, kind: Kind) -> String {
    if m.weight() == kind.base_weight() {
        m.to_string()
    } else {
        match kind {
            Kind::Aroma => format!("<{m}>"),
            Kind::Tree => format!("[{m}]"),
        }
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn join_factors(aromas: &[MultiIndex], roots: &[MultiIndex]) -> String {
    let mut a: Vec<String> = aromas
        .iter()
        .map(|m| format_factor(m, Kind::Aroma))
        .collect();
    let mut r: Vec<String> = roots.iter().map(|m| format_factor(m, Kind::Tree)).collect();
    a.sort();
    r.sort();
    a.extend(r);
    if a.is_empty() {
        "1".to_string()
    } else {
        a.join(" . ")
    }
}

/// Aromatic monomial y . x^k: a product of aroma monomials and one tree monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AromaticMonomial {
    pub aromas: Vec<MultiIndex>,
    pub root: MultiIndex,
}

impl AromaticMonomial {
    pub fn new(aromas: Vec<MultiIndex>, root: MultiIndex) -> Self {
        AromaticMonomial {
            aromas: sorted(aromas),
            root,
        }
    }

    pub fn from_root(root: MultiIndex) -> Self {
        AromaticMonomial {
            aromas: Vec::new(),
            root,
        }
    }

    pub fn to_ami(&self) -> AromaticMI {
        AromaticMI {
            aromas: self.aromas.clone(),
            roots: vec![self.root.clone()],
        }
    }
}

impl fmt::Display for AromaticMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_factors(
            &self.aromas,
            std::slice::from_ref(&self.root),
        ))
    }
}

impl Basis for AromaticMonomial {
    fn degree(&self) -> usize {
        self.aromas.iter().map(|m| m.degree()).sum::<usize>() + self.root.degree()
    }
    fn sigma(&self) -> BigUint {
        multiset_sigma(&self.aromas, |m| m.factorial()) * self.root.factorial()
    }
}

/// Aromatic multi-index: free commutative product of aroma monomials and
/// tree monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AromaticMI {
    pub aromas: Vec<MultiIndex>,
    pub roots: Vec<MultiIndex>,
}

impl AromaticMI {
    pub fn new(aromas: Vec<MultiIndex>, roots: Vec<MultiIndex>) -> Self {
        AromaticMI {
            aromas: sorted(aromas),
            roots: sorted(roots),
        }
    }

    pub fn aroma(m: MultiIndex) -> Self {
        AromaticMI {
            aromas: vec![m],
            roots: Vec::new(),
        }
    }

    pub fn root(m: MultiIndex) -> Self {
        AromaticMI {
            aromas: Vec::new(),
            roots: vec![m],
        }
    }

    pub fn factor(m: MultiIndex, kind: Kind) -> Self {
        match kind {
            Kind::Aroma => AromaticMI::aroma(m),
            Kind::Tree => AromaticMI::root(m),
        }
    }

    /// Factors with their kinds, aromas first.
    pub fn factors(&self) -> Vec<(MultiIndex, Kind)> {
        self.aromas
            .iter()
            .map(|m| (m.clone(), Kind::Aroma))
            .chain(self.roots.iter().map(|m| (m.clone(), Kind::Tree)))
            .collect()
    }

    pub fn from_factors(factors: Vec<(MultiIndex, Kind)>) -> Self {
        let mut a = Vec::new();
        let mut r = Vec::new();
        for (m, k) in factors {
            match k {
                Kind::Aroma => a.push(m),
                Kind::Tree => r.push(m),
            }
        }
        AromaticMI::new(a, r)
    }

    pub fn as_aromatic_monomial(&self) -> Option<AromaticMonomial> {
        match self.roots.as_slice() {
            [r] => Some(AromaticMonomial::new(self.aromas.clone(), r.clone())),
            _ => None,
        }
    }

    pub fn is_pure_aromatic(&self) -> bool {
        self.roots.is_empty() && !self.aromas.is_empty()
    }
}

impl fmt::Display for AromaticMI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_factors(&self.aromas, &self.roots))
    }
}

impl Basis for AromaticMI {
    fn degree(&self) -> usize {
        self.aromas
            .iter()
            .chain(&self.roots)
            .map(|m| m.degree())
            .sum()
    }
    fn sigma(&self) -> BigUint {
        multiset_sigma(&self.aromas, |m| m.factorial())
            * multiset_sigma(&self.roots, |m| m.factorial())
    }
}

impl Monoid for AromaticMI {
    fn one() -> Self {
        AromaticMI::default()
    }
    fn is_one(&self) -> bool {
        self.aromas.is_empty() && self.roots.is_empty()
    }
    fn mul(&self, other: &Self) -> Self {
        AromaticMI::new(
            self.aromas.iter().chain(&other.aromas).cloned().collect(),
            self.roots.iter().chain(&other.roots).cloned().collect(),
        )
    }
}

/// Clumped multi-index: free commutative product of aromatic monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ClumpedMI {
    pub clumps: Vec<AromaticMonomial>,
}

impl ClumpedMI {
    pub fn new(clumps: Vec<AromaticMonomial>) -> Self {
        ClumpedMI {
            clumps: sorted(clumps),
        }
    }

    pub fn clump(c: AromaticMonomial) -> Self {
        ClumpedMI { clumps: vec![c] }
    }
}

impl fmt::Display for ClumpedMI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clumps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.clumps.iter().map(|c| format!("({c})")).collect();
        write!(f, "{}", parts.join(" # "))
    }
}

impl Basis for ClumpedMI {
    fn degree(&self) -> usize {
        self.clumps.iter().map(|c| c.degree()).sum()
    }
    fn sigma(&self) -> BigUint {
        multiset_sigma(&self.clumps, |c| c.sigma())
    }
}

impl Monoid for ClumpedMI {
    fn one() -> Self {
        ClumpedMI::default()
    }
    fn is_one(&self) -> bool {
        self.clumps.is_empty()
    }
    fn mul(&self, other: &Self) -> Self {
        ClumpedMI::new(self.clumps.iter().chain(&other.clumps).cloned().collect())
    }
}
