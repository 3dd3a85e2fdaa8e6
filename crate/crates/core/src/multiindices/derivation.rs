use std::collections::BTreeMap;

use num_traits::Zero;

use super::monomial::{AromaticMI, AromaticMonomial, Kind, Letter, MultiIndex};
use crate::algebra::{factorial, from_big, int, Coeff, LinComb};

/// d x^k = sum_j k_j x^{k - e_j + e_{j+1}}.
pub fn partial(k: &MultiIndex) -> LinComb<MultiIndex> {
    k.letters()
        .map(|(l, e)| (k.moved(l, &l.shifted(1)), int(e as i64)))
        .collect()
}

/// dbar x^k = sum_{j >= 0} k_j x^{k - e_j + e_{j-1}}.
pub fn partial_bar(k: &MultiIndex) -> LinComb<MultiIndex> {
    k.letters()
        .filter(|(l, _)| l.j >= 0)
        .map(|(l, e)| (k.moved(l, &l.shifted(-1)), int(e as i64)))
        .collect()
}

pub fn partial_bar_iterated(k: &MultiIndex, r: usize) -> LinComb<MultiIndex> {
    (0..r).fold(LinComb::basis(k.clone()), |acc, _| {
        acc.flat_map(partial_bar)
    })
}

/// Closed form of dbar^r: sum over move profiles l (l_t = number of letters
/// lowered out of slot t) of C_{k,l} x^{k - l + shift(l)}, with
/// C_{k,0} = 1 and C_{k,l} = sum_t C_{k,l-e_t} (k_t - l_t + 1 + l_{t+1}).
pub fn partial_bar_pow(k: &MultiIndex, r: usize) -> LinComb<MultiIndex> {
    let mut slots: Vec<Letter> = Vec::new();
    for (l, _) in k.letters() {
        if l.j >= 0 {
            for j in 0..=l.j {
                let s = Letter::new(j, l.color.clone());
                if !slots.contains(&s) {
                    slots.push(s);
                }
            }
        }
    }
    let mut level: BTreeMap<MultiIndex, Coeff> = BTreeMap::new();
    level.insert(MultiIndex::new(), int(1));
    for _ in 0..r {
        let mut profiles: Vec<MultiIndex> = Vec::new();
        for l in level.keys() {
            for t in &slots {
                let mut l2 = l.clone();
                l2.add(t, 1);
                profiles.push(l2);
            }
        }
        profiles.sort();
        profiles.dedup();
        let mut next = BTreeMap::new();
        for l in profiles {
            let mut c = Coeff::zero();
            for (t, lt) in l.letters() {
                let prev = l.minus(&MultiIndex::letter(t.clone()));
                if let Some(p) = level.get(&prev) {
                    let f = k.exp(t) as i64 - lt as i64 + 1 + l.exp(&t.shifted(1)) as i64;
                    c += p * int(f);
                }
            }
            if !c.is_zero() {
                next.insert(l, c);
            }
        }
        level = next;
    }
    let mut out = LinComb::zero();
    for (l, c) in level {
        let mut m = k.clone();
        for (t, e) in l.letters() {
            m.add(&t.shifted(-1), e);
        }
        m = m.minus(&l);
        out.add_term(m, c);
    }
    out
}

/// Extends an operator on single factors to products as a derivation.
pub fn derive_ami(
    x: &AromaticMI,
    op: impl Fn(&MultiIndex) -> LinComb<MultiIndex>,
) -> LinComb<AromaticMI> {
    let factors = x.factors();
    let mut out = LinComb::zero();
    for i in 0..factors.len() {
        for (m, c) in op(&factors[i].0).iter() {
            let mut f = factors.clone();
            f[i].0 = m.clone();
            out.add_term(AromaticMI::from_factors(f), c.clone());
        }
    }
    out
}

pub fn partial_ami(x: &AromaticMI) -> LinComb<AromaticMI> {
    derive_ami(x, partial)
}

pub fn partial_bar_ami(x: &AromaticMI) -> LinComb<AromaticMI> {
    derive_ami(x, partial_bar)
}

/// dbar^r on a product, via the Leibniz rule and the closed form per factor.
pub fn partial_bar_pow_ami(x: &AromaticMI, r: usize) -> LinComb<AromaticMI> {
    let factors = x.factors();
    if factors.is_empty() {
        return if r == 0 {
            LinComb::basis(x.clone())
        } else {
            LinComb::zero()
        };
    }
    let mut acc: LinComb<Vec<(MultiIndex, Kind)>> = LinComb::basis(Vec::new());
    for (i, (m, kind)) in factors.iter().enumerate() {
        let last = i + 1 == factors.len();
        let mut next = LinComb::zero();
        for (prefix, c) in acc.iter() {
            let spent = spent_moves(prefix, &factors[..i]);
            let left = r - spent;
            let choices: Vec<usize> = if last {
                vec![left]
            } else {
                (0..=left).collect()
            };
            for ri in choices {
                let w = from_big(&(factorial(left) / (factorial(ri) * factorial(left - ri))));
                for (m2, d) in partial_bar_pow(m, ri).iter() {
                    let mut p = prefix.clone();
                    p.push((m2.clone(), *kind));
                    next.add_term(p, c * d * &w);
                }
            }
        }
        acc = next;
    }
    acc.map_basis(|f| AromaticMI::from_factors(f.clone()))
}

/// Number of dbar moves already applied to the processed factors: each move
/// lowers the weight by one.
fn spent_moves(done: &[(MultiIndex, Kind)], orig: &[(MultiIndex, Kind)]) -> usize {
    done.iter()
        .zip(orig)
        .map(|((a, _), (b, _))| (b.weight() - a.weight()) as usize)
        .sum()
}

pub fn partial_bar_iterated_ami(x: &AromaticMI, r: usize) -> LinComb<AromaticMI> {
    (0..r).fold(LinComb::basis(x.clone()), |acc, _| {
        acc.flat_map(partial_bar_ami)
    })
}

pub fn partial_am(x: &AromaticMonomial) -> LinComb<AromaticMonomial> {
    partial_ami(&x.to_ami()).map_basis(|m| m.as_aromatic_monomial().expect("one root"))
}
