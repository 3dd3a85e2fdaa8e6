use super::derivation::{derive_ami, partial};
use super::monomial::{AromaticMI, AromaticMonomial, MultiIndex};
use crate::algebra::{LinComb, Monoid};

/// x^{k1} |> P = x^{k1} d P on a single monomial.
pub fn mono_act(k1: &MultiIndex, p: &MultiIndex) -> LinComb<MultiIndex> {
    partial(p).map_basis(|q| q.times(k1))
}

/// x^{k1} acting on a product of aroma monomials, as a derivation.
pub fn act_on_aromas(k1: &MultiIndex, y: &[MultiIndex]) -> LinComb<AromaticMI> {
    derive_ami(&AromaticMI::new(y.to_vec(), Vec::new()), |p| {
        mono_act(k1, p)
    })
}

/// Novikov-type product on aromatic monomials:
/// (y1 . x^k1) |> (y2 . x^k2) = y1 . (x^k1 |> y2) . x^k2 + y1 . y2 . (x^k1 |> x^k2).
pub fn novikov(x: &AromaticMonomial, y: &AromaticMonomial) -> LinComb<AromaticMonomial> {
    let mut out = LinComb::zero();
    let y1 = AromaticMI::new(x.aromas.clone(), Vec::new());
    for (a, c) in act_on_aromas(&x.root, &y.aromas).iter() {
        let m = y1.mul(a);
        out.add_term(AromaticMonomial::new(m.aromas, y.root.clone()), c.clone());
    }
    let mut both = x.aromas.clone();
    both.extend(y.aromas.iter().cloned());
    for (r, c) in mono_act(&x.root, &y.root).iter() {
        out.add_term(AromaticMonomial::new(both.clone(), r.clone()), c.clone());
    }
    out
}

pub fn novikov_lin(
    x: &LinComb<AromaticMonomial>,
    y: &LinComb<AromaticMonomial>,
) -> LinComb<AromaticMonomial> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&novikov(a, b), &(c * d));
        }
    }
    out
}

/// Anchor rho(y1 . x^k1)(y) = y1 . (x^k1 |> y) on products of aroma monomials.
pub fn anchor_mono(x: &AromaticMonomial, y: &AromaticMI) -> LinComb<AromaticMI> {
    let y1 = AromaticMI::new(x.aromas.clone(), Vec::new());
    act_on_aromas(&x.root, &y.aromas).map_basis(|a| y1.mul(a))
}

pub fn bracket_mono(x: &AromaticMonomial, y: &AromaticMonomial) -> LinComb<AromaticMonomial> {
    novikov(x, y) - novikov(y, x)
}
