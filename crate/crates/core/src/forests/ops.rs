use num_traits::One;

use super::aroma::Aroma;
use super::forest::{AromaticForest, AromaticTree, MultiAroma};
use super::tree::RootedTree;
use crate::algebra::{Coeff, LinComb, Monoid};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ForestError {
    #[error("trace needs exactly one free edge, found {0}")]
    FreeEdgeCount(u32),
}

fn one() -> Coeff {
    Coeff::one()
}

/// Grafting product x -> y on aromatic trees: the root of x's tree is linked
/// to every vertex of y in turn, aromas multiply.
pub fn graft(x: &AromaticTree, y: &AromaticTree) -> LinComb<AromaticTree> {
    let yf = y.to_forest();
    let mut out = LinComb::zero();
    for v in 0..yf.vertex_count() {
        let g = yf.graft_at(v, &x.tree);
        let t = g.trees[0].clone();
        out.add_term(AromaticTree::new(x.aromas.mul(&g.aromas), t), one());
    }
    out
}

pub fn graft_lin(x: &LinComb<AromaticTree>, y: &LinComb<AromaticTree>) -> LinComb<AromaticTree> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&graft(a, b), &(c * d));
        }
    }
    out
}

/// Grafting of a tree onto a multiaroma (derivation over the aromas).
pub fn graft_onto_aromas(t: &RootedTree, m: &MultiAroma) -> LinComb<MultiAroma> {
    let f = AromaticForest::from_multiaroma(m);
    let mut out = LinComb::zero();
    for v in 0..f.vertex_count() {
        out.add_term(f.graft_at(v, t).aromas, one());
    }
    out
}

/// Anchor: the action of an aromatic tree on multiaromas, a (tau -> .).
pub fn anchor(x: &AromaticTree, m: &MultiAroma) -> LinComb<MultiAroma> {
    graft_onto_aromas(&x.tree, m).map_basis(|r| x.aromas.mul(r))
}

pub fn bracket(x: &AromaticTree, y: &AromaticTree) -> LinComb<AromaticTree> {
    graft(x, y) - graft(y, x)
}

/// Aromas obtained by linking the root of `t` to each of its vertices.
pub fn tree_divergence(t: &RootedTree) -> LinComb<MultiAroma> {
    t.root_paths()
        .into_iter()
        .map(|p| (MultiAroma::new(vec![Aroma::new(p)]), one()))
        .collect()
}

/// Divergence d(a tau) = a d(tau) + (tau -> a).
pub fn divergence(x: &AromaticTree) -> LinComb<MultiAroma> {
    let mut out = tree_divergence(&x.tree).map_basis(|m| x.aromas.mul(m));
    out += &graft_onto_aromas(&x.tree, &x.aromas);
    out
}

/// Adds one free edge, summed over all vertices.
pub fn delta(x: &AromaticForest) -> LinComb<AromaticForest> {
    let mut out = LinComb::zero();
    for v in 0..x.vertex_count() {
        out.add_term(
            x.modify_at(v, |s| Some(s.add_free_at(0, 1))).unwrap(),
            one(),
        );
    }
    out
}

/// Removes one free edge, summed over the vertices that carry one.
pub fn delta_bar(x: &AromaticForest) -> LinComb<AromaticForest> {
    let mut out = LinComb::zero();
    for v in 0..x.vertex_count() {
        if let Some(y) = x.modify_at(v, |s| s.remove_free_at(0)) {
            out.add_term(y, one());
        }
    }
    out
}

pub fn delta_lin(x: &LinComb<AromaticForest>) -> LinComb<AromaticForest> {
    x.flat_map(delta)
}

pub fn delta_bar_lin(x: &LinComb<AromaticForest>) -> LinComb<AromaticForest> {
    x.flat_map(delta_bar)
}

pub fn delta_pow(x: &AromaticForest, r: usize) -> LinComb<AromaticForest> {
    (0..r).fold(LinComb::basis(x.clone()), |acc, _| delta_lin(&acc))
}

pub fn delta_bar_pow(x: &AromaticForest, r: usize) -> LinComb<AromaticForest> {
    (0..r).fold(LinComb::basis(x.clone()), |acc, _| delta_bar_lin(&acc))
}

/// Links the root of an aromatic tree carrying exactly one free edge to the
/// vertex holding that edge, which disappears.
pub fn trace(x: &AromaticTree) -> Result<MultiAroma, ForestError> {
    let n = x
        .aromas
        .aromas()
        .iter()
        .map(|a| a.total_free_edges())
        .sum::<u32>()
        + x.tree.total_free_edges();
    if n != 1 {
        return Err(ForestError::FreeEdgeCount(n));
    }
    for (i, a) in x.aromas.aromas().iter().enumerate() {
        if a.total_free_edges() == 1 {
            let v = a.vertices().iter().position(|w| w.1 == 1).unwrap();
            let na = a.remove_free_at(v).unwrap().graft_at(v, &x.tree);
            let mut rest = x.aromas.aromas().to_vec();
            rest[i] = na;
            return Ok(MultiAroma::new(rest));
        }
    }
    let v = x.tree.vertices().iter().position(|w| w.1 == 1).unwrap();
    let t = x.tree.remove_free_at(v).unwrap();
    let path = t.root_paths().swap_remove(v);
    Ok(x.aromas.mul(&MultiAroma::new(vec![Aroma::new(path)])))
}

/// All functions from `n` labelled items to `0..m`.
pub(crate) fn functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * m);
        for f in &out {
            for v in 0..m {
                let mut g = f.clone();
                g.push(v);
                next.push(g);
            }
        }
        out = next;
    }
    out
}

/// Attaches `trees[i]` at vertex `f[i]` of `target` simultaneously.
pub(crate) fn attach(target: &AromaticForest, trees: &[RootedTree], f: &[usize]) -> AromaticForest {
    target.rebuild(&mut |idx, _, free| {
        let extra = trees
            .iter()
            .zip(f)
            .filter(|(_, &v)| v == idx)
            .map(|(t, _)| t.clone())
            .collect();
        (free, extra)
    })
}

/// Extension of grafting to forests acting on forests: every tree of x is
/// grafted onto a vertex of y (all choices), aromas of x multiply in.
pub fn forest_action(x: &AromaticForest, y: &AromaticForest) -> LinComb<AromaticForest> {
    let aromas = AromaticForest::from_multiaroma(&x.aromas);
    let mut out = LinComb::zero();
    for f in functions(x.trees.len(), y.vertex_count()) {
        out.add_term(aromas.mul(&attach(y, &x.trees, &f)), one());
    }
    out
}
