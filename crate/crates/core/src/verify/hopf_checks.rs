use std::fmt::Display;

use super::{Context, Tally};
use crate::algebra::{
    apply_left, apply_right, coassociativity_defect, convolution_defects, counit_defect,
    multiplicativity_defect, Adjoint, Basis, Coproduct, LinComb, Tensor,
};
use crate::embedding::{j_aro, j_cl, EmbeddingError};
use crate::forests::{
    clump_action, forest_action, gl_aro, gl_cl, psi, psi_star, AromaticForest, AromaticTree,
    BckAro, BckCl, ClumpedForest,
};
use crate::multiindices::{phi, phi_star, AromaticMI, ClumpedMI, LotAro, LotCl};

fn positive<B: Clone>(
    ctx_slice: impl Fn(usize) -> std::sync::Arc<Vec<B>>,
    d: usize,
) -> Vec<Vec<B>> {
    (0..=d)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                ctx_slice(n).to_vec()
            }
        })
        .collect()
}

/// Coassociativity and counit on every element up to degree d, and
/// multiplicativity on pairs of total degree at most d.
fn hopf_laws<C: Coproduct>(cop: &C, slices: &[Vec<C::B>], t: &mut Tally)
where
    C::B: Display,
{
    let d = slices.len() - 1;
    for n in 1..=d {
        for x in &slices[n] {
            if let Some((l, r)) = coassociativity_defect(cop, x) {
                t.eq(&[x], &l, &r);
                return;
            }
            if let Some(side) = counit_defect(cop, x) {
                t.eq(&[x], &side, &LinComb::basis(x.clone()));
                return;
            }
            t.eq(&[x], &true, &true);
        }
    }
    for n in 1..d {
        for m in n..=d - n {
            for x in &slices[n] {
                for y in &slices[m] {
                    if let Some((l, r)) = multiplicativity_defect(cop, x, y) {
                        t.eq(&[x, y], &l, &r);
                        return;
                    }
                    t.eq(&[x, y], &true, &true);
                }
            }
        }
    }
}

pub(super) fn coassoc_bck_aro(ctx: &Context, d: usize, t: &mut Tally) {
    hopf_laws(&BckAro, &positive(|n| ctx.forests.slice(n), d), t);
}

pub(super) fn coassoc_bck_cl(ctx: &Context, d: usize, t: &mut Tally) {
    hopf_laws(&BckCl, &positive(|n| ctx.clumped.slice(n), d), t);
}

pub(super) fn coassoc_lot_aro(ctx: &Context, d: usize, t: &mut Tally) {
    hopf_laws(&LotAro, &positive(|n| ctx.amis.slice(n), d), t);
}

pub(super) fn coassoc_lot_cl(ctx: &Context, d: usize, t: &mut Tally) {
    hopf_laws(&LotCl, &positive(|n| ctx.cmis.slice(n), d), t);
}

fn antipode_on<C: Coproduct>(cop: &C, slices: &[Vec<C::B>], t: &mut Tally) -> bool
where
    C::B: Display,
{
    for x in slices.iter().flatten() {
        match convolution_defects(cop, x) {
            Ok(None) => {
                t.eq(&[x], &true, &true);
            }
            Ok(Some(side)) => {
                t.eq(&[x], &side, &LinComb::zero());
                return false;
            }
            Err(e) => {
                t.error(&[x], e);
                return false;
            }
        }
    }
    true
}

pub(super) fn antipode_convolution(ctx: &Context, d: usize, t: &mut Tally) {
    let _ = antipode_on(&BckAro, &positive(|n| ctx.forests.slice(n), d), t)
        && antipode_on(&BckCl, &positive(|n| ctx.clumped.slice(n), d), t)
        && antipode_on(&LotAro, &positive(|n| ctx.amis.slice(n), d), t)
        && antipode_on(&LotCl, &positive(|n| ctx.cmis.slice(n), d), t);
}

/// The product is the adjoint of the coproduct on each slice, is
/// associative, and acts compatibly: (x y) . z = x . (y . z).
fn gl_laws<B, C>(cop: &C, slices: &[Vec<B>], prod: impl Fn(&B, &B) -> LinComb<B>, t: &mut Tally)
where
    B: Basis,
    C: Coproduct<B = B>,
{
    let d = slices.len() - 1;
    let adj: Vec<Adjoint<B, Tensor<B, B>>> = (0..=d)
        .map(|n| Adjoint::new(&slices[n], |z| cop.coproduct(z)))
        .collect();
    for n in 1..d {
        for m in 1..=d - n {
            for x in &slices[n] {
                for y in &slices[m] {
                    let want = adj[n + m]
                        .apply(&Tensor::new(x.clone(), y.clone()))
                        .expect("slice tabulated");
                    if !t.eq(&[x, y], &prod(x, y), &want) {
                        return;
                    }
                }
            }
        }
    }
    let lin_prod = |a: &LinComb<B>, b: &LinComb<B>| {
        let mut out = LinComb::zero();
        for (p, c) in a.iter() {
            for (q, e) in b.iter() {
                out.add_scaled(&prod(p, q), &(c * e));
            }
        }
        out
    };
    for n in 1..=d {
        for m in 1..=d.saturating_sub(n + 1) {
            for k in 1..=d - n - m {
                for x in &slices[n] {
                    for y in &slices[m] {
                        let xy = prod(x, y);
                        for z in &slices[k] {
                            let l = lin_prod(&xy, &LinComb::basis(z.clone()));
                            let r = lin_prod(&LinComb::basis(x.clone()), &prod(y, z));
                            if !t.eq(&[x, y, z], &l, &r) {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

fn action_law<B: Basis, T: Basis>(
    slices: &[Vec<B>],
    targets: &[Vec<T>],
    prod: impl Fn(&B, &B) -> LinComb<B>,
    act: impl Fn(&B, &T) -> LinComb<T>,
    t: &mut Tally,
) {
    let d = slices.len() - 1;
    for n in 1..=d {
        for m in 1..=d.saturating_sub(n + 1) {
            for k in 1..=d - n - m {
                for x in &slices[n] {
                    for y in &slices[m] {
                        let xy = prod(x, y);
                        for z in &targets[k] {
                            let l = xy.flat_map(|p| act(p, z));
                            let r = act(y, z).flat_map(|w| act(x, w));
                            if !t.eq(&[x, y, z], &l, &r) {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

pub(super) fn gl_duality(ctx: &Context, d: usize, t: &mut Tally) {
    let forests = positive(|n| ctx.forests.slice(n), d);
    gl_laws(&BckAro, &forests, gl_aro, t);
    if t.failed() {
        return;
    }
    action_law(&forests, &forests, gl_aro, forest_action, t);
    if t.failed() {
        return;
    }
    let clumped = positive(|n| ctx.clumped.slice(n), d);
    gl_laws(&BckCl, &clumped, gl_cl, t);
    if t.failed() {
        return;
    }
    let clumps: Vec<Vec<AromaticTree>> = positive(|n| ctx.aromatic_trees.slice(n), d);
    action_law(&clumped, &clumps, gl_cl, clump_action, t);
}

fn jj<L: Ord + Clone, R: Ord + Clone, A: Ord + Clone, B2: Ord + Clone>(
    x: &LinComb<Tensor<L, R>>,
    f: impl Fn(&L) -> Result<LinComb<A>, EmbeddingError>,
    g: impl Fn(&R) -> Result<LinComb<B2>, EmbeddingError>,
) -> Result<LinComb<Tensor<A, B2>>, EmbeddingError> {
    let mut err = None;
    let left = apply_left(x, |l| {
        f(l).unwrap_or_else(|e| {
            err.get_or_insert(e);
            LinComb::zero()
        })
    });
    let out = apply_right(&left, |r| {
        g(r).unwrap_or_else(|e| {
            err.get_or_insert(e);
            LinComb::zero()
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

pub(super) fn embedding_aro(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for m in ctx.amis.slice(n).iter() {
            let lhs = jj(&LotAro.coproduct(m), j_aro, j_aro);
            let rhs = j_aro(m).map(|x| BckAro.coproduct_lin(&x));
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    if !t.eq(&[m], &l, &r) {
                        return;
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    t.error(&[m], e);
                    return;
                }
            }
        }
    }
}

pub(super) fn embedding_cl(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        for m in ctx.cmis.slice(n).iter() {
            let lhs = jj(&LotCl.coproduct(m), j_cl, j_cl);
            let rhs = j_cl(m).map(|x| BckCl.coproduct_lin(&x));
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    if !t.eq(&[m], &l, &r) {
                        return;
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    t.error(&[m], e);
                    return;
                }
            }
        }
    }
}

/// j_cl phi* = psi* j_aro, with psi* and phi* cross-checked against the
/// tabulated adjoints of psi and phi.
pub(super) fn commuting_square(ctx: &Context, d: usize, t: &mut Tally) {
    for n in 1..=d {
        let psi_adj: Adjoint<ClumpedForest, AromaticForest> =
            Adjoint::new(&ctx.clumped.slice(n), |c| LinComb::basis(psi(c)));
        for x in ctx.forests.slice(n).iter() {
            if !t.eq(
                &[x],
                &psi_star(x),
                &psi_adj.apply(x).expect("slice tabulated"),
            ) {
                return;
            }
        }
        let phi_adj: Adjoint<ClumpedMI, AromaticMI> =
            Adjoint::new(&ctx.cmis.slice(n), |c| LinComb::basis(phi(c)));
        for m in ctx.amis.slice(n).iter() {
            if !t.eq(
                &[m],
                &phi_star(m),
                &phi_adj.apply(m).expect("slice tabulated"),
            ) {
                return;
            }
            let lhs = phi_star(m)
                .iter()
                .try_fold(LinComb::zero(), |mut acc, (c, k)| {
                    acc.add_scaled(&j_cl(c)?, k);
                    Ok::<_, EmbeddingError>(acc)
                });
            let rhs = j_aro(m).map(|x| x.flat_map(psi_star));
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    if !t.eq(&[m], &l, &r) {
                        return;
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    t.error(&[m], e);
                    return;
                }
            }
        }
    }
}
