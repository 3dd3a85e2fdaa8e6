use crate::forests::{Aroma, AromaticForest, AromaticTree, ClumpedForest, MultiAroma, RootedTree};
use crate::multiindices::{AromaticMI, AromaticMonomial, ClumpedMI, Letter, MultiIndex};

/// Fertility profile of a tree: one letter x_{f(v)-1} per vertex, where f(v)
/// counts children and free edges.
pub fn tree_profile(t: &RootedTree) -> MultiIndex {
    MultiIndex::from_letters(
        t.vertices()
            .into_iter()
            .map(|(c, free, n)| (Letter::new(free as i32 + n as i32 - 1, c), 1)),
    )
}

/// Fertility profile of an aroma; cycle vertices count their cycle predecessor.
pub fn aroma_profile(a: &Aroma) -> MultiIndex {
    MultiIndex::from_letters(
        a.vertices()
            .into_iter()
            .map(|(c, free, n, cyc)| (Letter::new(free as i32 + n as i32 + cyc as i32 - 1, c), 1)),
    )
}

pub fn fertility_multiaroma(m: &MultiAroma) -> AromaticMI {
    AromaticMI::new(m.aromas().iter().map(aroma_profile).collect(), Vec::new())
}

pub fn fertility_tree(x: &AromaticTree) -> AromaticMonomial {
    AromaticMonomial::new(
        x.aromas.aromas().iter().map(aroma_profile).collect(),
        tree_profile(&x.tree),
    )
}

pub fn fertility_forest(x: &AromaticForest) -> AromaticMI {
    AromaticMI::new(
        x.aromas.aromas().iter().map(aroma_profile).collect(),
        x.trees.iter().map(tree_profile).collect(),
    )
}

pub fn fertility_clumped(x: &ClumpedForest) -> ClumpedMI {
    ClumpedMI::new(x.clumps.iter().map(fertility_tree).collect())
}
