use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Basis, Coeff, LinComb, Monoid, Tensor};

pub trait Coproduct: Sync {
    type B: Monoid;

    fn coproduct(&self, x: &Self::B) -> LinComb<Tensor<Self::B, Self::B>>;

    fn coproduct_lin(&self, x: &LinComb<Self::B>) -> LinComb<Tensor<Self::B, Self::B>> {
        x.flat_map(|b| self.coproduct(b))
    }
}

pub fn product<B: Monoid>(x: &LinComb<B>, y: &LinComb<B>) -> LinComb<B> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term(a.mul(b), c * d);
        }
    }
    out
}

pub fn tensor_product<L: Ord + Clone, R: Ord + Clone>(
    x: &LinComb<L>,
    y: &LinComb<R>,
) -> LinComb<Tensor<L, R>> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term(Tensor::new(a.clone(), b.clone()), c * d);
        }
    }
    out
}

pub fn counit<B: Monoid>(x: &B) -> Coeff {
    if x.is_one() {
        Coeff::one()
    } else {
        Coeff::zero()
    }
}

/// (f (x) id) applied to a tensor combination.
pub fn apply_left<L: Ord + Clone, R: Ord + Clone, M: Ord + Clone>(
    t: &LinComb<Tensor<L, R>>,
    mut f: impl FnMut(&L) -> LinComb<M>,
) -> LinComb<Tensor<M, R>> {
    let mut out = LinComb::zero();
    for (tb, c) in t.iter() {
        for (m, d) in f(&tb.left).iter() {
            out.add_term(Tensor::new(m.clone(), tb.right.clone()), c * d);
        }
    }
    out
}

/// (id (x) f) applied to a tensor combination.
pub fn apply_right<L: Ord + Clone, R: Ord + Clone, M: Ord + Clone>(
    t: &LinComb<Tensor<L, R>>,
    mut f: impl FnMut(&R) -> LinComb<M>,
) -> LinComb<Tensor<L, M>> {
    let mut out = LinComb::zero();
    for (tb, c) in t.iter() {
        for (m, d) in f(&tb.right).iter() {
            out.add_term(Tensor::new(tb.left.clone(), m.clone()), c * d);
        }
    }
    out
}

type Triple<B> = Tensor<Tensor<B, B>, B>;

/// Returns ((D (x) id) D x, (id (x) D) D x) when they differ.
#[allow(clippy::type_complexity)]
pub fn coassociativity_defect<C: Coproduct>(
    cop: &C,
    x: &C::B,
) -> Option<(LinComb<Triple<C::B>>, LinComb<Triple<C::B>>)> {
    let d = cop.coproduct(x);
    let lhs = apply_left(&d, |l| cop.coproduct(l));
    let rhs = apply_right(&d, |r| cop.coproduct(r)).map_basis(|t| {
        Tensor::new(
            Tensor::new(t.left.clone(), t.right.left.clone()),
            t.right.right.clone(),
        )
    });
    if lhs == rhs {
        None
    } else {
        Some((lhs, rhs))
    }
}

/// Checks (eps (x) id) D x = x = (id (x) eps) D x; returns the offending side.
pub fn counit_defect<C: Coproduct>(cop: &C, x: &C::B) -> Option<LinComb<C::B>> {
    let d = cop.coproduct(x);
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for (t, c) in d.iter() {
        left.add_term(t.right.clone(), c * counit(&t.left));
        right.add_term(t.left.clone(), c * counit(&t.right));
    }
    let target = LinComb::basis(x.clone());
    if left != target {
        Some(left)
    } else if right != target {
        Some(right)
    } else {
        None
    }
}

/// Checks D(xy) = D(x) D(y).
#[allow(clippy::type_complexity)]
pub fn multiplicativity_defect<C: Coproduct>(
    cop: &C,
    x: &C::B,
    y: &C::B,
) -> Option<(LinComb<Tensor<C::B, C::B>>, LinComb<Tensor<C::B, C::B>>)> {
    let lhs = cop.coproduct(&x.mul(y));
    let rhs = product(&cop.coproduct(x), &cop.coproduct(y));
    if lhs == rhs {
        None
    } else {
        Some((lhs, rhs))
    }
}

pub fn reduced_coproduct<C: Coproduct>(cop: &C, x: &C::B) -> LinComb<Tensor<C::B, C::B>> {
    cop.coproduct(x)
        .filter(|t| !t.left.is_one() && !t.right.is_one())
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AntipodeError {
    #[error("input {0} has degree 0 but is not the unit")]
    NotConnected(String),
    #[error("coproduct of {0} is not counital in the top degree")]
    NotCounital(String),
}

/// Antipode from the recursion S(x) = -sum S(x') x'' over the coproduct
/// terms other than x (x) 1.
pub fn antipode<C: Coproduct>(cop: &C, x: &C::B) -> Result<LinComb<C::B>, AntipodeError> {
    let mut memo = BTreeMap::new();
    antipode_memo(cop, x, &mut memo)
}

fn antipode_memo<C: Coproduct>(
    cop: &C,
    x: &C::B,
    memo: &mut BTreeMap<C::B, LinComb<C::B>>,
) -> Result<LinComb<C::B>, AntipodeError> {
    if x.is_one() {
        return Ok(LinComb::basis(x.clone()));
    }
    if x.degree() == 0 {
        return Err(AntipodeError::NotConnected(x.to_string()));
    }
    if let Some(s) = memo.get(x) {
        return Ok(s.clone());
    }
    let d = cop.coproduct(x);
    let top = Tensor::new(x.clone(), C::B::one());
    let lead = d.coeff(&top);
    if lead.is_zero() {
        return Err(AntipodeError::NotCounital(x.to_string()));
    }
    let mut acc = LinComb::zero();
    for (t, c) in d.iter() {
        if *t == top {
            continue;
        }
        if t.left.degree() >= x.degree() {
            return Err(AntipodeError::NotCounital(x.to_string()));
        }
        let s = antipode_memo(cop, &t.left, memo)?;
        for (b, e) in s.iter() {
            acc.add_term(b.mul(&t.right), c * e);
        }
    }
    let out = acc.scale(&(-Coeff::one() / lead));
    memo.insert(x.clone(), out.clone());
    Ok(out)
}

/// m(S (x) id) D x and m(id (x) S) D x, each compared with eps(x) 1.
/// Returns the first side that differs.
pub fn convolution_defects<C: Coproduct>(
    cop: &C,
    x: &C::B,
) -> Result<Option<LinComb<C::B>>, AntipodeError> {
    let d = cop.coproduct(x);
    let mut memo = BTreeMap::new();
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for (t, c) in d.iter() {
        let sl = antipode_memo(cop, &t.left, &mut memo)?;
        for (b, e) in sl.iter() {
            left.add_term(b.mul(&t.right), c * e);
        }
        let sr = antipode_memo(cop, &t.right, &mut memo)?;
        for (b, e) in sr.iter() {
            right.add_term(t.left.mul(b), c * e);
        }
    }
    let target = LinComb::term(C::B::one(), counit(x));
    if left != target {
        Ok(Some(left))
    } else if right != target {
        Ok(Some(right))
    } else {
        Ok(None)
    }
}
