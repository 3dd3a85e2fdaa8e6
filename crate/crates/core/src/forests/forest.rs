use std::fmt;

use num_bigint::BigUint;

use super::aroma::Aroma;
use super::tree::RootedTree;
use crate::algebra::{multiset_sigma, Basis, Monoid};
use crate::color::Color;

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

/// Commutative product of aromas.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiAroma(Vec<Aroma>);

impl MultiAroma {
    pub fn new(aromas: Vec<Aroma>) -> Self {
        MultiAroma(sorted(aromas))
    }

    pub fn aromas(&self) -> &[Aroma] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(|a| a.order()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MultiAroma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<&str> = self.0.iter().map(|a| a.code()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Basis for MultiAroma {
    fn degree(&self) -> usize {
        self.order()
    }
    fn sigma(&self) -> BigUint {
        multiset_sigma(&self.0, |a| a.sigma())
    }
}

impl Monoid for MultiAroma {
    fn one() -> Self {
        MultiAroma::default()
    }
    fn is_one(&self) -> bool {
        self.0.is_empty()
    }
    fn mul(&self, other: &Self) -> Self {
        MultiAroma::new(self.0.iter().chain(other.0.iter()).cloned().collect())
    }
}

/// A multiaroma times a single rooted tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AromaticTree {
    pub aromas: MultiAroma,
    pub tree: RootedTree,
}

impl AromaticTree {
    pub fn new(aromas: MultiAroma, tree: RootedTree) -> Self {
        AromaticTree { aromas, tree }
    }

    pub fn from_tree(tree: RootedTree) -> Self {
        AromaticTree {
            aromas: MultiAroma::default(),
            tree,
        }
    }

    pub fn order(&self) -> usize {
        self.aromas.order() + self.tree.order()
    }

    pub fn to_forest(&self) -> AromaticForest {
        AromaticForest {
            aromas: self.aromas.clone(),
            trees: vec![self.tree.clone()],
        }
    }
}

impl fmt::Display for AromaticTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.aromas.is_empty() {
            write!(f, "{}", self.tree)
        } else {
            write!(f, "{} {}", self.aromas, self.tree)
        }
    }
}

impl Basis for AromaticTree {
    fn degree(&self) -> usize {
        self.order()
    }
    fn sigma(&self) -> BigUint {
        self.aromas.sigma() * self.tree.sigma()
    }
}

/// A multiaroma times a forest of rooted trees; the free commutative monoid
/// on aromas and trees.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AromaticForest {
    pub aromas: MultiAroma,
    pub trees: Vec<RootedTree>,
}

impl AromaticForest {
    pub fn new(aromas: Vec<Aroma>, trees: Vec<RootedTree>) -> Self {
        AromaticForest {
            aromas: MultiAroma::new(aromas),
            trees: sorted(trees),
        }
    }

    pub fn from_tree(t: RootedTree) -> Self {
        AromaticForest::new(Vec::new(), vec![t])
    }

    pub fn from_aroma(a: Aroma) -> Self {
        AromaticForest::new(vec![a], Vec::new())
    }

    pub fn from_multiaroma(m: &MultiAroma) -> Self {
        AromaticForest {
            aromas: m.clone(),
            trees: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.aromas.order() + self.trees.iter().map(|t| t.order()).sum::<usize>()
    }

    pub fn is_pure_aromatic(&self) -> bool {
        self.trees.is_empty() && !self.aromas.is_empty()
    }

    /// The aromatic tree, when there is exactly one tree.
    pub fn as_aromatic_tree(&self) -> Option<AromaticTree> {
        match self.trees.as_slice() {
            [t] => Some(AromaticTree::new(self.aromas.clone(), t.clone())),
            _ => None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.order()
    }

    pub fn total_free_edges(&self) -> u32 {
        self.aromas
            .aromas()
            .iter()
            .map(|a| a.total_free_edges())
            .sum::<u32>()
            + self.trees.iter().map(|t| t.total_free_edges()).sum::<u32>()
    }

    /// Vertices as (colour, free, children, on a cycle), aromas first.
    pub fn vertices(&self) -> Vec<(Color, u32, usize, bool)> {
        let mut out = Vec::new();
        for a in self.aromas.aromas() {
            out.extend(a.vertices());
        }
        for t in &self.trees {
            out.extend(t.vertices().into_iter().map(|(c, f, n)| (c, f, n, false)));
        }
        out
    }

    /// Applies `f` to the subtree hanging at vertex `idx` (aromas first,
    /// then trees, each in preorder).
    pub fn modify_at<F: FnOnce(&RootedTree) -> Option<RootedTree>>(
        &self,
        idx: usize,
        f: F,
    ) -> Option<AromaticForest> {
        let mut rest = idx;
        for (i, a) in self.aromas.aromas().iter().enumerate() {
            if rest < a.order() {
                let na = a.modify_at(rest, f)?;
                let mut v = self.aromas.aromas().to_vec();
                v[i] = na;
                return Some(AromaticForest::new(v, self.trees.clone()));
            }
            rest -= a.order();
        }
        for (i, t) in self.trees.iter().enumerate() {
            if rest < t.order() {
                let nt = t.modify_at(rest, f)?;
                let mut v = self.trees.clone();
                v[i] = nt;
                return Some(AromaticForest::new(self.aromas.aromas().to_vec(), v));
            }
            rest -= t.order();
        }
        panic!("vertex index {idx} out of range for {self}")
    }

    pub fn rebuild(
        &self,
        g: &mut dyn FnMut(usize, &Color, u32) -> (u32, Vec<RootedTree>),
    ) -> AromaticForest {
        let mut base = 0;
        let aromas = self
            .aromas
            .aromas()
            .iter()
            .map(|a| {
                let off = base;
                base += a.order();
                a.rebuild(&mut |i, c, f| g(off + i, c, f))
            })
            .collect();
        let trees = self
            .trees
            .iter()
            .map(|t| {
                let off = base;
                base += t.order();
                t.rebuild(&mut |i, c, f| g(off + i, c, f))
            })
            .collect();
        AromaticForest::new(aromas, trees)
    }

    pub fn graft_at(&self, idx: usize, t: &RootedTree) -> AromaticForest {
        self.modify_at(idx, |v| Some(v.graft_at(0, t)))
            .expect("grafting never fails")
    }

    pub fn without_free_edges(&self) -> AromaticForest {
        self.rebuild(&mut |_, _, _| (0, Vec::new()))
    }
}

impl fmt::Display for AromaticForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .aromas
            .aromas()
            .iter()
            .map(|a| a.code())
            .chain(self.trees.iter().map(|t| t.code()))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl Basis for AromaticForest {
    fn degree(&self) -> usize {
        self.order()
    }
    fn sigma(&self) -> BigUint {
        self.aromas.sigma() * multiset_sigma(&self.trees, |t| t.sigma())
    }
}

impl Monoid for AromaticForest {
    fn one() -> Self {
        AromaticForest::default()
    }
    fn is_one(&self) -> bool {
        self.aromas.is_empty() && self.trees.is_empty()
    }
    fn mul(&self, other: &Self) -> Self {
        AromaticForest {
            aromas: self.aromas.mul(&other.aromas),
            trees: sorted(
                self.trees
                    .iter()
                    .chain(other.trees.iter())
                    .cloned()
                    .collect(),
            ),
        }
    }
}

/// Commutative product of aromatic trees (clumps); the symmetric algebra over
/// aromatic trees.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ClumpedForest {
    pub clumps: Vec<AromaticTree>,
}

impl ClumpedForest {
    pub fn new(clumps: Vec<AromaticTree>) -> Self {
        ClumpedForest {
            clumps: sorted(clumps),
        }
    }

    pub fn clump(c: AromaticTree) -> Self {
        ClumpedForest { clumps: vec![c] }
    }

    pub fn order(&self) -> usize {
        self.clumps.iter().map(|c| c.order()).sum()
    }
}

impl fmt::Display for ClumpedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clumps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.clumps.iter().map(|c| format!("({c})")).collect();
        write!(f, "{}", parts.join(" # "))
    }
}

impl Basis for ClumpedForest {
    fn degree(&self) -> usize {
        self.order()
    }
    fn sigma(&self) -> BigUint {
        multiset_sigma(&self.clumps, |c| c.sigma())
    }
}

impl Monoid for ClumpedForest {
    fn one() -> Self {
        ClumpedForest::default()
    }
    fn is_one(&self) -> bool {
        self.clumps.is_empty()
    }
    fn mul(&self, other: &Self) -> Self {
        ClumpedForest::new(
            self.clumps
                .iter()
                .chain(other.clumps.iter())
                .cloned()
                .collect(),
        )
    }
}
