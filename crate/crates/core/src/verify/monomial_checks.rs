use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::{transpose_pairs, Context, Tally};
use crate::algebra::{from_big, Basis, LinComb};
use crate::embedding::{fertility_forest, fertility_multiaroma, fertility_tree, j_aro, j_bar};
use crate::forests::enumerate::with_free_edges;
use crate::forests::{anchor, delta, delta_bar, graft, AromaticForest};
use crate::multiindices::derivation::{partial_ami, partial_bar_ami, partial_bar_iterated_ami};
use crate::multiindices::enumerate::multi_indices;
use crate::multiindices::{
    anchor_mono, bracket_mono, novikov, novikov_lin, partial_bar_iterated, partial_bar_pow,
    partial_bar_pow_ami, AromaticMI, AromaticMonomial,
};

fn lin<B: Ord + Clone>(b: &B) -> LinComb<B> {
    LinComb::basis(b.clone())
}

fn monomials(ctx: &Context, d: usize) -> Vec<AromaticMonomial> {
    (1..=d)
        .flat_map(|n| ctx.monomials.slice(n).iter().cloned().collect::<Vec<_>>())
        .collect()
}

/// Aromatic multi-indices of degree n whose weight exceeds the base weight
/// by r: the support of d^r on the base slice.
fn raised(ctx: &Context, n: usize, r: usize) -> Vec<AromaticMI> {
    let mut cur: BTreeSet<AromaticMI> = ctx.amis.slice(n).iter().cloned().collect();
    for _ in 0..r {
        cur = cur
            .iter()
            .flat_map(|x| partial_ami(x).support().cloned().collect::<Vec<_>>())
            .collect();
    }
    cur.into_iter().collect()
}

pub(super) fn novikov_laws(ctx: &Context, d: usize, t: &mut Tally) {
    let all = monomials(ctx, d);
    for x in &all {
        for y in &all {
            for z in &all {
                let ax =
                    novikov_lin(&lin(x), &novikov(y, z)) - novikov_lin(&novikov(x, y), &lin(z));
                let ay =
                    novikov_lin(&lin(y), &novikov(x, z)) - novikov_lin(&novikov(y, x), &lin(z));
                if !t.eq(&[x, y, z], &ax, &ay) {
                    return;
                }
                if x.aromas.is_empty() && y.aromas.is_empty() && z.aromas.is_empty() {
                    let l = novikov_lin(&novikov(x, y), &lin(z));
                    let r = novikov_lin(&novikov(x, z), &lin(y));
                    if !t.eq(&[x, y, z], &l, &r) {
                        return;
                    }
                }
            }
        }
    }
}

fn times(a: &AromaticMI, y: &AromaticMonomial) -> AromaticMonomial {
    let mut aromas = a.aromas.clone();
    aromas.extend(y.aromas.iter().cloned());
    AromaticMonomial::new(aromas, y.root.clone())
}

fn anchor_mono_lin(x: &AromaticMonomial, a: &LinComb<AromaticMI>) -> LinComb<AromaticMI> {
    a.flat_map(|m| anchor_mono(x, m))
}

pub(super) fn rinehart(ctx: &Context, d: usize, t: &mut Tally) {
    let all = monomials(ctx, d);
    let aromas: Vec<AromaticMI> = ctx
        .amis
        .up_to(d)
        .into_iter()
        .filter(|a| a.roots.is_empty())
        .collect();
    for x in &all {
        for y in &all {
            let xy = bracket_mono(x, y);
            for a in &aromas {
                let lhs = bracket_mono(x, &times(a, y));
                let mut rhs = anchor_mono(x, a).map_basis(|m| times(m, y));
                rhs += &xy.map_basis(|z| times(a, z));
                if !t.eq(&[x, y, a], &lhs, &rhs) {
                    return;
                }
                let lhs = xy.iter().fold(LinComb::zero(), |mut acc, (z, c)| {
                    acc.add_scaled(&anchor_mono(z, a), c);
                    acc
                });
                let rhs =
                    anchor_mono_lin(x, &anchor_mono(y, a)) - anchor_mono_lin(y, &anchor_mono(x, a));
                if !t.eq(&[x, y, a], &lhs, &rhs) {
                    return;
                }
            }
        }
    }
}

/// <d P, Q> = <P, dbar Q> for P of excess weight 0 and 1.
pub(super) fn transpose_partial(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for r in 0..=1 {
            let ps = raised(ctx, n, r);
            let qs = raised(ctx, n, r + 1);
            transpose_pairs(&ps, &qs, partial_ami, partial_bar_ami, t);
            if t.failed() {
                return;
            }
        }
    }
}

/// Closed form of dbar^r against r-fold iteration, on single multi-indices of
/// weight -1, 0, 1 and on aromatic multi-indices.
pub(super) fn partialbar_closed_form(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for w in -1..=1 {
            for k in multi_indices(n, w, &ctx.colors) {
                for r in 0..=4 {
                    if !t.eq(
                        &[&k, &r],
                        &partial_bar_pow(&k, r),
                        &partial_bar_iterated(&k, r),
                    ) {
                        return;
                    }
                }
            }
        }
        for x in raised(ctx, n, 1) {
            for r in 0..=4 {
                if !t.eq(
                    &[&x, &r],
                    &partial_bar_pow_ami(&x, r),
                    &partial_bar_iterated_ami(&x, r),
                ) {
                    return;
                }
            }
        }
    }
}

/// Phi(x -> y) = Phi(x) |> Phi(y) and Phi(rho(x) a) = rho(Phi x) Phi(a).
pub(super) fn phi_morphism(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..d {
        for m in 1..=d - n {
            for x in ctx.aromatic_trees.slice(n).iter() {
                let fx = fertility_tree(x);
                for y in ctx.aromatic_trees.slice(m).iter() {
                    let lhs = graft(x, y).map_basis(fertility_tree);
                    if !t.eq(&[x, y], &lhs, &novikov(&fx, &fertility_tree(y))) {
                        return;
                    }
                }
                for a in ctx.multiaromas.slice(m).iter() {
                    let lhs = anchor(x, a).map_basis(fertility_multiaroma);
                    if !t.eq(&[x, a], &lhs, &anchor_mono(&fx, &fertility_multiaroma(a))) {
                        return;
                    }
                }
            }
        }
    }
}

/// Phi(delta x) = d Phi(x) on forests with up to two free edges.
pub(super) fn phi_delta(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let base = ctx.forests.slice(n);
        for f in 0..=2 {
            for x in with_free_edges(&base, f) {
                let lhs = delta(&x).map_basis(fertility_forest);
                if !t.eq(&[&x], &lhs, &partial_ami(&fertility_forest(&x))) {
                    return;
                }
            }
        }
    }
}

/// deltabar jbar = jbar dbar on excess weights 0, 1, 2.
pub(super) fn jbar_partialbar(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for r in 0..=2 {
            for x in raised(ctx, n, r) {
                let lhs = j_bar(&x).flat_map(delta_bar);
                let rhs = partial_bar_ami(&x).flat_map(j_bar);
                if !t.eq(&[&x], &lhs, &rhs) {
                    return;
                }
            }
        }
    }
}

/// j computed by the embedding against sum over Phi-preimages a of
/// sigma(m)/sigma(a) a, the preimages found by scanning the forest slice.
pub(super) fn j_adjunction(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let mut pre: BTreeMap<AromaticMI, LinComb<AromaticForest>> = BTreeMap::new();
        for a in ctx.forests.slice(n).iter() {
            pre.entry(fertility_forest(a))
                .or_default()
                .add_term(a.clone(), from_big(&a.sigma()).recip());
        }
        for m in ctx.amis.slice(n).iter() {
            let expected = pre
                .get(m)
                .cloned()
                .unwrap_or_default()
                .scale(&from_big(&m.sigma()));
            let got = match j_aro(m) {
                Ok(j) => j,
                Err(e) => {
                    t.error(&[m], e);
                    return;
                }
            };
            if !t.eq(&[m], &got, &expected) || !t.eq(&[m], &got.is_integral(), &true) {
                return;
            }
        }
        let hit: usize = pre
            .keys()
            .filter(|m| ctx.amis.slice(n).binary_search(m).is_err())
            .count();
        if !t.eq(&[&n], &hit, &0) {
            return;
        }
    }
}

/// Rank of a set of sparse rational rows.
pub(crate) fn rank<B: Ord + Clone>(rows: Vec<LinComb<B>>) -> usize {
    let mut pivots: Vec<(B, LinComb<B>)> = Vec::new();
    for mut row in rows {
        for (p, prow) in &pivots {
            let c = row.coeff(p);
            if !c.is_zero() {
                row = row - prow.scale(&c);
            }
        }
        if let Some((b, c)) = row.iter().next().map(|(b, c)| (b.clone(), c.clone())) {
            let row = row.scale(&c.recip());
            for (_, prow) in pivots.iter_mut() {
                let e = prow.coeff(&b);
                if !e.is_zero() {
                    *prow = prow.clone() - row.scale(&e);
                }
            }
            pivots.push((b, row));
        }
    }
    pivots.len()
}

pub(super) fn injectivity(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let slice = ctx.amis.slice(n);
        let mut rows = Vec::with_capacity(slice.len());
        for m in slice.iter() {
            match j_aro(m) {
                Ok(j) => rows.push(j),
                Err(e) => {
                    t.error(&[m], e);
                    return;
                }
            }
        }
        if !t.eq(&[&n], &rank(rows), &slice.len()) {
            return;
        }
    }
}
