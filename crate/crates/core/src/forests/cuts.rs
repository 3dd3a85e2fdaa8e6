use num_traits::One;

use super::aroma::Aroma;
use super::forest::{AromaticForest, AromaticTree, ClumpedForest};
use super::psi::psi_star;
use super::tree::RootedTree;
use crate::algebra::{product, Coeff, Coproduct, LinComb, Monoid, Tensor};

/// One admissible cut: the pruned trees, the trunk, and the trunk with a free
/// edge left at each vertex that lost a child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCut {
    pub pruned: Vec<RootedTree>,
    pub trunk: RootedTree,
    pub full_trunk: RootedTree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AromaCut {
    pub pruned: Vec<RootedTree>,
    pub trunk: Aroma,
    pub full_trunk: Aroma,
}

/// Admissible cuts of a tree (including the empty cut), never removing the root.
pub fn tree_cuts(t: &RootedTree) -> Vec<TreeCut> {
    // (pruned, kept children, full children, severed count)
    let mut partial: Vec<(Vec<RootedTree>, Vec<RootedTree>, Vec<RootedTree>, u32)> =
        vec![(Vec::new(), Vec::new(), Vec::new(), 0)];
    for c in t.children() {
        let sub = tree_cuts(c);
        let mut next = Vec::with_capacity(partial.len() * (sub.len() + 1));
        for (p, k, fk, s) in &partial {
            let mut p2 = p.clone();
            p2.push(c.clone());
            next.push((p2, k.clone(), fk.clone(), s + 1));
            for cut in &sub {
                let mut p2 = p.clone();
                p2.extend(cut.pruned.iter().cloned());
                let mut k2 = k.clone();
                k2.push(cut.trunk.clone());
                let mut fk2 = fk.clone();
                fk2.push(cut.full_trunk.clone());
                next.push((p2, k2, fk2, *s));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(mut pruned, kept, full, severed)| {
            pruned.sort();
            TreeCut {
                pruned,
                trunk: t.with_root(t.free_edges(), kept),
                full_trunk: t.with_root(t.free_edges() + severed, full),
            }
        })
        .collect()
}

/// Admissible cuts of an aroma: cycle edges are never cut.
pub fn aroma_cuts(a: &Aroma) -> Vec<AromaCut> {
    let mut partial: Vec<(Vec<RootedTree>, Vec<RootedTree>, Vec<RootedTree>)> =
        vec![(Vec::new(), Vec::new(), Vec::new())];
    for t in a.cycle() {
        let sub = tree_cuts(t);
        let mut next = Vec::with_capacity(partial.len() * sub.len());
        for (p, k, fk) in &partial {
            for cut in &sub {
                let mut p2 = p.clone();
                p2.extend(cut.pruned.iter().cloned());
                let mut k2 = k.clone();
                k2.push(cut.trunk.clone());
                let mut fk2 = fk.clone();
                fk2.push(cut.full_trunk.clone());
                next.push((p2, k2, fk2));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(mut pruned, k, fk)| {
            pruned.sort();
            AromaCut {
                pruned,
                trunk: Aroma::new(k),
                full_trunk: Aroma::new(fk),
            }
        })
        .collect()
}

type Cop<B> = LinComb<Tensor<B, B>>;

fn one() -> Coeff {
    Coeff::one()
}

pub fn bck_tree(t: &RootedTree) -> Cop<AromaticForest> {
    let mut out = LinComb::basis(Tensor::new(
        AromaticForest::from_tree(t.clone()),
        AromaticForest::one(),
    ));
    for c in tree_cuts(t) {
        out.add_term(
            Tensor::new(
                AromaticForest::new(Vec::new(), c.pruned),
                AromaticForest::from_tree(c.trunk),
            ),
            one(),
        );
    }
    out
}

pub fn bck_aroma(a: &Aroma) -> Cop<AromaticForest> {
    let mut out = LinComb::basis(Tensor::new(
        AromaticForest::from_aroma(a.clone()),
        AromaticForest::one(),
    ));
    for c in aroma_cuts(a) {
        out.add_term(
            Tensor::new(
                AromaticForest::new(Vec::new(), c.pruned),
                AromaticForest::from_aroma(c.trunk),
            ),
            one(),
        );
    }
    out
}

/// Aromatic Butcher-Connes-Kreimer coproduct on aromatic forests.
#[derive(Clone, Copy, Debug, Default)]
pub struct BckAro;

impl Coproduct for BckAro {
    type B = AromaticForest;
    fn coproduct(&self, x: &AromaticForest) -> Cop<AromaticForest> {
        let mut out = LinComb::basis(Tensor::new(AromaticForest::one(), AromaticForest::one()));
        for a in x.aromas.aromas() {
            out = product(&out, &bck_aroma(a));
        }
        for t in &x.trees {
            out = product(&out, &bck_tree(t));
        }
        out
    }
}

/// Clumped coproduct of a single clump: (psi* (x) id) applied to the aromatic
/// coproduct, keeping the terms whose right factor is a clump or the unit.
pub fn bck_clump(x: &AromaticTree) -> Cop<ClumpedForest> {
    let mut out = LinComb::zero();
    for (t, c) in BckAro.coproduct(&x.to_forest()).iter() {
        let right = if t.right.is_one() {
            ClumpedForest::one()
        } else {
            match t.right.as_aromatic_tree() {
                Some(r) => ClumpedForest::clump(r),
                None => continue,
            }
        };
        for (l, d) in psi_star(&t.left).iter() {
            out.add_term(Tensor::new(l.clone(), right.clone()), c * d);
        }
    }
    out
}

/// Clumped Butcher-Connes-Kreimer coproduct, multiplicative over clumps.
#[derive(Clone, Copy, Debug, Default)]
pub struct BckCl;

impl Coproduct for BckCl {
    type B = ClumpedForest;
    fn coproduct(&self, x: &ClumpedForest) -> Cop<ClumpedForest> {
        let mut out = LinComb::basis(Tensor::new(ClumpedForest::one(), ClumpedForest::one()));
        for c in &x.clumps {
            out = product(&out, &bck_clump(c));
        }
        out
    }
}

/// Cut of a whole aromatic forest: one admissible cut per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCut {
    pub pruned: AromaticForest,
    pub trunk: AromaticForest,
    pub full_trunk: AromaticForest,
}

pub fn forest_cuts(x: &AromaticForest) -> Vec<ForestCut> {
    let mut out = vec![ForestCut {
        pruned: AromaticForest::one(),
        trunk: AromaticForest::one(),
        full_trunk: AromaticForest::one(),
    }];
    let extend = |out: &mut Vec<ForestCut>,
                  parts: Vec<(Vec<RootedTree>, AromaticForest, AromaticForest)>| {
        let mut next = Vec::with_capacity(out.len() * parts.len());
        for c in out.iter() {
            for (p, t, ft) in &parts {
                next.push(ForestCut {
                    pruned: c.pruned.mul(&AromaticForest::new(Vec::new(), p.clone())),
                    trunk: c.trunk.mul(t),
                    full_trunk: c.full_trunk.mul(ft),
                });
            }
        }
        *out = next;
    };
    for a in x.aromas.aromas() {
        let parts = aroma_cuts(a)
            .into_iter()
            .map(|c| {
                (
                    c.pruned,
                    AromaticForest::from_aroma(c.trunk),
                    AromaticForest::from_aroma(c.full_trunk),
                )
            })
            .collect();
        extend(&mut out, parts);
    }
    for t in &x.trees {
        let parts = tree_cuts(t)
            .into_iter()
            .map(|c| {
                (
                    c.pruned,
                    AromaticForest::from_tree(c.trunk),
                    AromaticForest::from_tree(c.full_trunk),
                )
            })
            .collect();
        extend(&mut out, parts);
    }
    out
}
