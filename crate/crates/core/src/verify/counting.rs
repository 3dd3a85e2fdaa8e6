use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;

use super::{Context, Tally};
use crate::algebra::{factorial, from_big, multiset_sigma, Basis, Coeff, LinComb, Tensor};
use crate::embedding::{fertility_forest, fertility_tree, j_aro};
use crate::forests::enumerate::with_free_edges;
use crate::forests::ops::functions;
use crate::forests::{aroma_cuts, delta_bar_pow, forest_cuts, tree_cuts, AromaticForest};
use crate::multiindices::enumerate::{aroma_monomials, tree_monomials};
use crate::multiindices::{monomial_cuts, partial_bar_pow, AromaticMI, Kind};

fn free_profile(x: &AromaticForest) -> Vec<u32> {
    x.vertices().iter().map(|v| v.1).collect()
}

/// r! / prod r_v! for the free-edge profile of x.
fn multinomial(x: &AromaticForest) -> BigUint {
    let p = free_profile(x);
    let r: u32 = p.iter().sum();
    p.iter()
        .fold(factorial(r as usize), |acc, &k| acc / factorial(k as usize))
}

/// deltabar^r removes all r free edges with coefficient r!/prod r_v!.
pub(super) fn delete_free_edges(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let base = ctx.forests.slice(n);
        for r in 0..=3 {
            for y in with_free_edges(&base, r) {
                let want = LinComb::term(y.without_free_edges(), from_big(&multinomial(&y)));
                if !t.eq(&[&y], &delta_bar_pow(&y, r), &want) {
                    return;
                }
            }
        }
    }
}

/// deltabar^r of a full trunk is r!/prod r_v! times the trunk.
pub(super) fn full_trunk(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for x in ctx.aromatic_trees.slice(n).iter() {
            for c in forest_cuts(&x.to_forest()) {
                let r = c.full_trunk.total_free_edges() as usize;
                let want = LinComb::term(c.trunk.clone(), from_big(&multinomial(&c.full_trunk)));
                if !t.eq(&[x, &c.pruned], &delta_bar_pow(&c.full_trunk, r), &want) {
                    return;
                }
            }
        }
    }
}

/// Functions from r labelled components to the vertices with prescribed fibre
/// sizes r_v number r!/prod r_v!.
pub(super) fn grafting_count(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let base = ctx.forests.slice(n);
        for r in 1..=3 {
            for y in with_free_edges(&base, r) {
                let p = free_profile(&y);
                let count = functions(r, p.len())
                    .into_iter()
                    .filter(|f| {
                        (0..p.len()).all(|v| f.iter().filter(|&&w| w == v).count() == p[v] as usize)
                    })
                    .count();
                if !t.eq(&[&y], &BigUint::from(count), &multinomial(&y)) {
                    return;
                }
            }
        }
    }
}

/// |C(a, A, abar)| sigma(A) sigma(abar) = sigma(a) |G(a, A, abar)|, where C
/// collects the cuts of a with pruned part A and full trunk abar, and G the
/// graftings of the labelled trees of A onto the free edges of abar that
/// give back a.
pub(super) fn graft_cut_count(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for a in ctx.forests.slice(n).iter() {
            let mut groups: BTreeMap<(AromaticForest, AromaticForest), u64> = BTreeMap::new();
            for c in forest_cuts(a) {
                *groups.entry((c.pruned, c.full_trunk)).or_default() += 1;
            }
            for ((p, ft), nc) in groups {
                let profile = free_profile(&ft);
                let g = functions(p.trees.len(), profile.len())
                    .into_iter()
                    .filter(|f| {
                        (0..profile.len())
                            .all(|v| f.iter().filter(|&&w| w == v).count() == profile[v] as usize)
                    })
                    .filter(|f| fill_free_edges(&ft, &p.trees, f) == *a)
                    .count();
                let lhs = BigUint::from(nc) * p.sigma() * ft.sigma();
                let rhs = a.sigma() * BigUint::from(g);
                if !t.eq(&[a, &p, &ft], &lhs, &rhs) {
                    return;
                }
            }
        }
    }
}

/// Number of permutations fixing a sorted list of items.
fn ext<T: Ord>(items: &[T]) -> BigUint {
    multiset_sigma(items, |_| BigUint::one())
}

/// Grafts `trees[i]` at vertex `f[i]` of x, dropping the free edges; vertex
/// indices refer to x itself.
fn fill_free_edges(
    x: &AromaticForest,
    trees: &[crate::forests::RootedTree],
    f: &[usize],
) -> AromaticForest {
    x.rebuild(&mut |idx, _, _| {
        (
            0,
            trees
                .iter()
                .zip(f)
                .filter(|(_, &v)| v == idx)
                .map(|(t, _)| t.clone())
                .collect(),
        )
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Orderings of the clumps of F matching the fixed ordering of M = Phi(F)
/// factor by factor number sigma_ext(M)/sigma_ext(F), where sigma_ext
/// counts the permutations of identical clumps.
pub(super) fn tuple_count(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for f in ctx.clumped.slice(n).iter() {
            let m: Vec<_> = f.clumps.iter().map(fertility_tree).collect();
            let mut sorted_m = m.clone();
            sorted_m.sort();
            let mut tuples = BTreeSet::new();
            for p in permutations(f.clumps.len()) {
                let tuple: Vec<_> = p.iter().map(|&i| f.clumps[i].clone()).collect();
                if tuple
                    .iter()
                    .map(fertility_tree)
                    .eq(sorted_m.iter().cloned())
                {
                    tuples.insert(tuple);
                }
            }
            let want = from_big(&ext(&sorted_m)) / from_big(&ext(&f.clumps));
            if !t.eq(&[f], &Coeff::from_integer(tuples.len().into()), &want) {
                return;
            }
        }
    }
}

/// For every single factor m and cut c of m, the LOT term of c equals the sum
/// over the Phi-preimages a of m, weighted sigma(m)/sigma(a), of the BCK terms
/// of the cuts of a whose pruned part has fertility P^c.
pub(super) fn matching_cuts(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let mut pre: BTreeMap<AromaticMI, Vec<AromaticForest>> = BTreeMap::new();
        for a in ctx.forests.slice(n).iter() {
            if a.aromas.aromas().len() + a.trees.len() == 1 {
                pre.entry(fertility_forest(a)).or_default().push(a.clone());
            }
        }
        for kind in [Kind::Aroma, Kind::Tree] {
            let ms = match kind {
                Kind::Aroma => aroma_monomials(n, &ctx.colors),
                Kind::Tree => tree_monomials(n, &ctx.colors),
            };
            for m in ms {
                let mf = AromaticMI::factor(m.clone(), kind);
                let preimages = pre.get(&mf).cloned().unwrap_or_default();
                for c in monomial_cuts(&m) {
                    let p = AromaticMI::new(Vec::new(), c.extracted.clone());
                    let mut lhs = LinComb::zero();
                    let jp = j_aro(&p).expect("weight -1 factors");
                    for (r, k) in partial_bar_pow(&c.remainder, c.extracted.len()).iter() {
                        let jr = j_aro(&AromaticMI::factor(r.clone(), kind)).expect("base weight");
                        for (x, e) in jp.iter() {
                            for (y, g) in jr.iter() {
                                lhs.add_term(
                                    Tensor::new(x.clone(), y.clone()),
                                    from_big(&c.multiplicity) * k * e * g,
                                );
                            }
                        }
                    }
                    let mut rhs = LinComb::zero();
                    for a in &preimages {
                        let w = from_big(&mf.sigma()) / from_big(&a.sigma());
                        for (pruned, trunk) in single_cuts(a) {
                            if fertility_forest(&pruned) == p {
                                rhs.add_term(Tensor::new(pruned, trunk), w.clone());
                            }
                        }
                    }
                    if !t.eq(&[&mf, &p], &lhs, &rhs) {
                        return;
                    }
                }
            }
        }
    }
}

fn single_cuts(a: &AromaticForest) -> Vec<(AromaticForest, AromaticForest)> {
    let empty = Vec::new();
    if let Some(x) = a.aromas.aromas().first() {
        aroma_cuts(x)
            .into_iter()
            .map(|c| {
                (
                    AromaticForest::new(empty.clone(), c.pruned),
                    AromaticForest::from_aroma(c.trunk),
                )
            })
            .collect()
    } else {
        tree_cuts(&a.trees[0])
            .into_iter()
            .map(|c| {
                (
                    AromaticForest::new(empty.clone(), c.pruned),
                    AromaticForest::from_tree(c.trunk),
                )
            })
            .collect()
    }
}
