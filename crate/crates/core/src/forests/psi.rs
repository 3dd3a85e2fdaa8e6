use std::collections::BTreeSet;

use super::forest::{AromaticForest, AromaticTree, ClumpedForest, MultiAroma};
use super::ops::functions;
use crate::algebra::{from_big, Basis, LinComb, Monoid};

/// Forgets the clumping.
pub fn psi(x: &ClumpedForest) -> AromaticForest {
    x.clumps
        .iter()
        .fold(AromaticForest::one(), |acc, c| acc.mul(&c.to_forest()))
}

/// Adjoint of psi, computed by distributing the aromas over the trees:
/// psi*(pi) = sum over the clumped preimages F of sigma(pi)/sigma(F) F.
pub fn psi_star(x: &AromaticForest) -> LinComb<ClumpedForest> {
    if x.trees.is_empty() {
        return if x.aromas.is_empty() {
            LinComb::basis(ClumpedForest::one())
        } else {
            LinComb::zero()
        };
    }
    let aromas = x.aromas.aromas();
    let mut seen = BTreeSet::new();
    for f in functions(aromas.len(), x.trees.len()) {
        let clumps = x
            .trees
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mine = aromas
                    .iter()
                    .zip(&f)
                    .filter(|(_, &j)| j == i)
                    .map(|(a, _)| a.clone())
                    .collect();
                AromaticTree::new(MultiAroma::new(mine), t.clone())
            })
            .collect();
        seen.insert(ClumpedForest::new(clumps));
    }
    let s = from_big(&x.sigma());
    seen.into_iter()
        .map(|c| {
            let w = &s / from_big(&c.sigma());
            (c, w)
        })
        .collect()
}
