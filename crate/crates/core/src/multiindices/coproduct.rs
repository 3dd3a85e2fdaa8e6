use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::derivation::partial_bar_pow;
use super::monomial::{AromaticMI, AromaticMonomial, ClumpedMI, Kind, MultiIndex};
use crate::algebra::{
    from_big, multiset_sigma, product, Basis, Coproduct, LinComb, Monoid, Tensor,
};
use crate::forests::ops::functions;

/// Extraction of weight -1 sub-multi-indices from a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCut {
    pub extracted: Vec<MultiIndex>,
    pub remainder: MultiIndex,
    pub multiplicity: BigUint,
}

/// All cuts {k^1, ..., k^r} of `kappa` with nonempty remainder, including the
/// empty cut; multiplicity kappa! / (remainder! sigma(k^1 ... k^r)).
pub fn monomial_cuts(kappa: &MultiIndex) -> Vec<MonomialCut> {
    let mut cands: Vec<MultiIndex> = kappa
        .divisors()
        .into_iter()
        .filter(|m| !m.is_empty() && m.weight() == -1)
        .collect();
    cands.sort();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        cands: &[MultiIndex],
        start: usize,
        budget: &MultiIndex,
        cur: &mut Vec<MultiIndex>,
        out: &mut Vec<(Vec<MultiIndex>, MultiIndex)>,
    ) {
        if !budget.is_empty() {
            out.push((cur.clone(), budget.clone()));
        }
        for i in start..cands.len() {
            if budget.contains(&cands[i]) {
                cur.push(cands[i].clone());
                rec(cands, i, &budget.minus(&cands[i]), cur, out);
                cur.pop();
            }
        }
    }
    rec(&cands, 0, kappa, &mut cur, &mut out);
    let kf = kappa.factorial();
    out.into_iter()
        .map(|(extracted, remainder)| {
            let s = multiset_sigma(&extracted, |m| m.factorial());
            let multiplicity = &kf / (remainder.factorial() * s);
            MonomialCut {
                extracted,
                remainder,
                multiplicity,
            }
        })
        .collect()
}

type Cop<B> = LinComb<Tensor<B, B>>;

/// Aromatic LOT coproduct of a single factor.
pub fn lot_factor(kappa: &MultiIndex, kind: Kind) -> Cop<AromaticMI> {
    let mut out = LinComb::basis(Tensor::new(
        AromaticMI::factor(kappa.clone(), kind),
        AromaticMI::one(),
    ));
    for c in monomial_cuts(kappa) {
        let left = AromaticMI::new(Vec::new(), c.extracted.clone());
        let w = from_big(&c.multiplicity);
        for (r, d) in partial_bar_pow(&c.remainder, c.extracted.len()).iter() {
            out.add_term(
                Tensor::new(left.clone(), AromaticMI::factor(r.clone(), kind)),
                &w * d,
            );
        }
    }
    out
}

/// Aromatic Linares-Otto-Tempelmayr coproduct on aromatic multi-indices,
/// multiplicative over factors.
#[derive(Clone, Copy, Debug, Default)]
pub struct LotAro;

impl Coproduct for LotAro {
    type B = AromaticMI;
    fn coproduct(&self, x: &AromaticMI) -> Cop<AromaticMI> {
        let mut out = LinComb::basis(Tensor::new(AromaticMI::one(), AromaticMI::one()));
        for (m, k) in x.factors() {
            out = product(&out, &lot_factor(&m, k));
        }
        out
    }
}

/// Forgets the clumping.
pub fn phi(x: &ClumpedMI) -> AromaticMI {
    x.clumps
        .iter()
        .fold(AromaticMI::one(), |acc, c| acc.mul(&c.to_ami()))
}

/// Adjoint of phi: the aroma factors are distributed over the tree factors,
/// each preimage F weighted by sigma(x)/sigma(F).
pub fn phi_star(x: &AromaticMI) -> LinComb<ClumpedMI> {
    if x.roots.is_empty() {
        return if x.aromas.is_empty() {
            LinComb::basis(ClumpedMI::one())
        } else {
            LinComb::zero()
        };
    }
    let mut seen = BTreeSet::new();
    for f in functions(x.aromas.len(), x.roots.len()) {
        let clumps = x
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mine = x
                    .aromas
                    .iter()
                    .zip(&f)
                    .filter(|(_, &j)| j == i)
                    .map(|(a, _)| a.clone())
                    .collect();
                AromaticMonomial::new(mine, r.clone())
            })
            .collect();
        seen.insert(ClumpedMI::new(clumps));
    }
    let s = from_big(&x.sigma());
    seen.into_iter()
        .map(|c| {
            let w = &s / from_big(&c.sigma());
            (c, w)
        })
        .collect()
}

pub fn lot_clump(x: &AromaticMonomial) -> Cop<ClumpedMI> {
    let mut out = LinComb::zero();
    for (t, c) in LotAro.coproduct(&x.to_ami()).iter() {
        let right = if t.right.is_one() {
            ClumpedMI::one()
        } else {
            match t.right.as_aromatic_monomial() {
                Some(r) => ClumpedMI::clump(r),
                None => continue,
            }
        };
        for (l, d) in phi_star(&t.left).iter() {
            out.add_term(Tensor::new(l.clone(), right.clone()), c * d);
        }
    }
    out
}

/// Clumped LOT coproduct, multiplicative over clumps.
#[derive(Clone, Copy, Debug, Default)]
pub struct LotCl;

impl Coproduct for LotCl {
    type B = ClumpedMI;
    fn coproduct(&self, x: &ClumpedMI) -> Cop<ClumpedMI> {
        let mut out = LinComb::basis(Tensor::new(ClumpedMI::one(), ClumpedMI::one()));
        for c in &x.clumps {
            out = product(&out, &lot_clump(c));
        }
        out
    }
}
