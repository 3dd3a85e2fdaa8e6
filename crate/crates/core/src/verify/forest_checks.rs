use super::{transpose_pairs, Context, Tally};
use crate::algebra::{LinComb, Monoid};
use crate::forests::enumerate::with_free_edges;
use crate::forests::{
    anchor, delta, delta_bar, divergence, graft, graft_lin, trace, AromaticTree, MultiAroma,
};

fn with_aromas(m: &MultiAroma, y: &AromaticTree) -> AromaticTree {
    AromaticTree::new(m.mul(&y.aromas), y.tree.clone())
}

fn anchor_lin(x: &AromaticTree, a: &LinComb<MultiAroma>) -> LinComb<MultiAroma> {
    a.flat_map(|m| anchor(x, m))
}

/// x -> (y -> z) - (x -> y) -> z is symmetric in x and y.
pub(super) fn pre_lie(ctx: &Context, d: usize, t: &mut Tally) {
    let all = ctx.aromatic_trees.up_to(d);
    let all: Vec<_> = all.into_iter().filter(|x| x.order() > 0).collect();
    for x in &all {
        for y in &all {
            if y < x {
                continue;
            }
            for z in &all {
                let ax = graft_lin(&LinComb::basis(x.clone()), &graft(y, z))
                    - graft_lin(&graft(x, y), &LinComb::basis(z.clone()));
                let ay = graft_lin(&LinComb::basis(y.clone()), &graft(x, z))
                    - graft_lin(&graft(y, x), &LinComb::basis(z.clone()));
                if !t.eq(&[x, y, z], &ax, &ay) {
                    return;
                }
            }
        }
    }
}

/// [X, aY] = rho(X)(a) Y + a [X, Y] and rho([X, Y]) = [rho(X), rho(Y)].
pub(super) fn rinehart(ctx: &Context, d: usize, t: &mut Tally) {
    let trees: Vec<_> = ctx
        .aromatic_trees
        .up_to(d)
        .into_iter()
        .filter(|x| x.order() > 0)
        .collect();
    let aromas: Vec<_> = ctx.multiaromas.up_to(d);
    for x in &trees {
        for y in &trees {
            let xy = crate::forests::bracket(x, y);
            for a in &aromas {
                let ay = with_aromas(a, y);
                let lhs = crate::forests::bracket(x, &ay);
                let mut rhs = anchor(x, a).flat_map(|m| LinComb::basis(with_aromas(m, y)));
                rhs += &xy.map_basis(|z| with_aromas(a, z));
                if !t.eq(&[x, y, a], &lhs, &rhs) {
                    return;
                }
                let lhs = xy.iter().fold(LinComb::zero(), |mut acc, (z, c)| {
                    acc.add_scaled(&anchor(z, a), c);
                    acc
                });
                let rhs = anchor_lin(x, &anchor(y, a)) - anchor_lin(y, &anchor(x, a));
                if !t.eq(&[x, y, a], &lhs, &rhs) {
                    return;
                }
            }
        }
    }
}

/// div(x) = sum of the traces of the terms of delta(x).
pub(super) fn trace_div(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for x in ctx.aromatic_trees.slice(n).iter() {
            let mut rhs = LinComb::zero();
            for (y, c) in delta(&x.to_forest()).iter() {
                let y = y.as_aromatic_tree().expect("one tree");
                match trace(&y) {
                    Ok(m) => rhs.add_term(m, c.clone()),
                    Err(e) => {
                        t.error(&[x], e);
                        return;
                    }
                }
            }
            if !t.eq(&[x], &divergence(x), &rhs) {
                return;
            }
        }
    }
}

/// <delta x, y> = <x, deltabar y> for x with up to two free edges.
pub(super) fn transpose_delta(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let base = ctx.forests.slice(n);
        for f in 0..=2 {
            let xs = with_free_edges(&base, f);
            let ys = with_free_edges(&xs, 1);
            transpose_pairs(&xs, &ys, delta, delta_bar, t);
            if t.failed() {
                return;
            }
        }
    }
}
