use num_traits::One;

use super::forest::{AromaticForest, AromaticTree, ClumpedForest};
use super::ops::{attach, functions};
use crate::algebra::{Coeff, LinComb, Monoid};

/// Grossman-Larson product on aromatic forests: each tree of x either stays
/// or is grafted onto a vertex of y; aromas of x multiply in.
pub fn gl_aro(x: &AromaticForest, y: &AromaticForest) -> LinComb<AromaticForest> {
    let n = y.vertex_count();
    let aromas = AromaticForest::from_multiaroma(&x.aromas);
    let mut out = LinComb::zero();
    for f in functions(x.trees.len(), n + 1) {
        let mut stay = Vec::new();
        let mut moved = Vec::new();
        let mut targets = Vec::new();
        for (t, &v) in x.trees.iter().zip(&f) {
            if v == n {
                stay.push(t.clone());
            } else {
                moved.push(t.clone());
                targets.push(v);
            }
        }
        let g = attach(y, &moved, &targets);
        out.add_term(
            aromas.mul(&AromaticForest::new(Vec::new(), stay)).mul(&g),
            Coeff::one(),
        );
    }
    out
}

/// Grafts the clumps `xs[i]` at vertex `f[i]` of clump `y` (a vertex index
/// into y), merging their aromas into y.
fn act_on_clump(xs: &[&AromaticTree], f: &[usize], y: &AromaticTree) -> AromaticTree {
    let trees: Vec<_> = xs.iter().map(|x| x.tree.clone()).collect();
    let g = attach(&y.to_forest(), &trees, f);
    let aromas = xs
        .iter()
        .fold(g.aromas.clone(), |acc, x| acc.mul(&x.aromas));
    AromaticTree::new(aromas, g.trees[0].clone())
}

/// Grossman-Larson product on clumped forests: each clump of x either stays
/// or has its tree grafted onto a vertex of some clump of y, whose aromas it
/// joins.
pub fn gl_cl(x: &ClumpedForest, y: &ClumpedForest) -> LinComb<ClumpedForest> {
    let sizes: Vec<usize> = y.clumps.iter().map(|c| c.order()).collect();
    let n: usize = sizes.iter().sum();
    let mut out = LinComb::zero();
    for f in functions(x.clumps.len(), n + 1) {
        let mut result: Vec<AromaticTree> = x
            .clumps
            .iter()
            .zip(&f)
            .filter(|(_, &v)| v == n)
            .map(|(c, _)| c.clone())
            .collect();
        let mut base = 0;
        for (k, yk) in y.clumps.iter().enumerate() {
            let mut xs = Vec::new();
            let mut local = Vec::new();
            for (c, &v) in x.clumps.iter().zip(&f) {
                if v != n && v >= base && v < base + sizes[k] {
                    xs.push(c);
                    local.push(v - base);
                }
            }
            result.push(act_on_clump(&xs, &local, yk));
            base += sizes[k];
        }
        out.add_term(ClumpedForest::new(result), Coeff::one());
    }
    out
}

/// Action of a clumped forest on a single clump: every clump of x is grafted
/// somewhere on y.
pub fn clump_action(x: &ClumpedForest, y: &AromaticTree) -> LinComb<AromaticTree> {
    let xs: Vec<&AromaticTree> = x.clumps.iter().collect();
    let mut out = LinComb::zero();
    for f in functions(xs.len(), y.order()) {
        out.add_term(act_on_clump(&xs, &f, y), Coeff::one());
    }
    out
}

pub fn gl_aro_lin(
    x: &LinComb<AromaticForest>,
    y: &LinComb<AromaticForest>,
) -> LinComb<AromaticForest> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&gl_aro(a, b), &(c * d));
        }
    }
    out
}

pub fn gl_cl_lin(x: &LinComb<ClumpedForest>, y: &LinComb<ClumpedForest>) -> LinComb<ClumpedForest> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&gl_cl(a, b), &(c * d));
        }
    }
    out
}
