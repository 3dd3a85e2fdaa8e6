use std::collections::BTreeSet;

use super::aroma::Aroma;
use super::forest::{AromaticForest, AromaticTree, ClumpedForest, MultiAroma};
use super::ops::delta;
use super::tree::RootedTree;
use crate::color::ColorSet;

/// All multisets of total grade `w` drawn from `by_grade` (index = grade,
/// grade 0 ignored). Each multiset is returned sorted by position.
pub fn graded_multisets<T: Clone>(w: usize, by_grade: &[Vec<T>]) -> Vec<Vec<T>> {
    let items: Vec<(usize, &T)> = by_grade
        .iter()
        .enumerate()
        .skip(1)
        .flat_map(|(g, v)| v.iter().map(move |x| (g, x)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec<'a, T: Clone>(
        items: &[(usize, &'a T)],
        start: usize,
        rem: usize,
        cur: &mut Vec<&'a T>,
        out: &mut Vec<Vec<T>>,
    ) {
        if rem == 0 {
            out.push(cur.iter().map(|x| (*x).clone()).collect());
            return;
        }
        for i in start..items.len() {
            let (g, x) = items[i];
            if g <= rem {
                cur.push(x);
                rec(items, i, rem - g, cur, out);
                cur.pop();
            }
        }
    }
    rec(&items, 0, w, &mut cur, &mut out);
    out
}

/// Rooted trees without free edges, indexed by order 0..=max.
pub fn trees_by_order(max: usize, colors: &ColorSet) -> Vec<Vec<RootedTree>> {
    let mut by: Vec<Vec<RootedTree>> = vec![Vec::new()];
    for n in 1..=max {
        let mut level = Vec::new();
        for kids in graded_multisets(n - 1, &by) {
            for c in colors.colors() {
                level.push(RootedTree::new(c.clone(), 0, kids.clone()));
            }
        }
        level.sort();
        level.dedup();
        by.push(level);
    }
    by
}

pub fn trees(order: usize, colors: &ColorSet) -> Vec<RootedTree> {
    trees_by_order(order, colors).swap_remove(order)
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn aromas_by_order(max: usize, colors: &ColorSet) -> Vec<Vec<Aroma>> {
    let t = trees_by_order(max, colors);
    let mut by = vec![Vec::new()];
    for n in 1..=max {
        let mut set = BTreeSet::new();
        for comp in compositions(n) {
            let mut tuples: Vec<Vec<RootedTree>> = vec![Vec::new()];
            for &k in &comp {
                tuples = tuples
                    .into_iter()
                    .flat_map(|tu| {
                        t[k].iter().map(move |x| {
                            let mut v = tu.clone();
                            v.push(x.clone());
                            v
                        })
                    })
                    .collect();
            }
            for tu in tuples {
                set.insert(Aroma::new(tu));
            }
        }
        by.push(set.into_iter().collect());
    }
    by
}

pub fn aromas(order: usize, colors: &ColorSet) -> Vec<Aroma> {
    aromas_by_order(order, colors).swap_remove(order)
}

pub fn multiaromas_by_order(max: usize, colors: &ColorSet) -> Vec<Vec<MultiAroma>> {
    let a = aromas_by_order(max, colors);
    (0..=max)
        .map(|n| {
            graded_multisets(n, &a)
                .into_iter()
                .map(MultiAroma::new)
                .collect()
        })
        .collect()
}

pub fn multiaromas(order: usize, colors: &ColorSet) -> Vec<MultiAroma> {
    multiaromas_by_order(order, colors).swap_remove(order)
}

pub fn aromatic_trees_by_order(max: usize, colors: &ColorSet) -> Vec<Vec<AromaticTree>> {
    let m = multiaromas_by_order(max, colors);
    let t = trees_by_order(max, colors);
    (0..=max)
        .map(|n| {
            let mut v = Vec::new();
            for k in 0..n {
                for a in &m[k] {
                    for tr in &t[n - k] {
                        v.push(AromaticTree::new(a.clone(), tr.clone()));
                    }
                }
            }
            v.sort();
            v
        })
        .collect()
}

pub fn aromatic_trees(order: usize, colors: &ColorSet) -> Vec<AromaticTree> {
    aromatic_trees_by_order(order, colors).swap_remove(order)
}

pub fn aromatic_forests(order: usize, colors: &ColorSet) -> Vec<AromaticForest> {
    let m = multiaromas_by_order(order, colors);
    let t = trees_by_order(order, colors);
    let mut v = Vec::new();
    for k in 0..=order {
        for a in &m[k] {
            for f in graded_multisets(order - k, &t) {
                v.push(
                    AromaticForest {
                        aromas: a.clone(),
                        trees: f,
                    }
                    .normalised(),
                );
            }
        }
    }
    v.sort();
    v
}

pub fn clumped_forests(order: usize, colors: &ColorSet) -> Vec<ClumpedForest> {
    let at = aromatic_trees_by_order(order, colors);
    let mut v: Vec<ClumpedForest> = graded_multisets(order, &at)
        .into_iter()
        .map(ClumpedForest::new)
        .collect();
    v.sort();
    v
}

/// Objects with exactly `free` free edges whose underlying forest is one of
/// `base`: the support of delta^free.
pub fn with_free_edges(base: &[AromaticForest], free: usize) -> Vec<AromaticForest> {
    let mut cur: BTreeSet<AromaticForest> = base.iter().cloned().collect();
    for _ in 0..free {
        cur = cur
            .iter()
            .flat_map(|x| delta(x).support().cloned().collect::<Vec<_>>())
            .collect();
    }
    cur.into_iter().collect()
}

impl AromaticForest {
    fn normalised(self) -> Self {
        AromaticForest::new(self.aromas.aromas().to_vec(), self.trees)
    }
}
