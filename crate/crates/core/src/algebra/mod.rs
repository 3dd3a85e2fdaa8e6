//! Exact linear algebra over combinatorial bases: linear combinations,
//! tensors, the diagonal pairing, adjoints, graded Hopf structures.

mod hopf;
mod lincomb;
mod multiset;

pub use hopf::{
    antipode, apply_left, apply_right, coassociativity_defect, convolution_defects, counit,
    counit_defect, multiplicativity_defect, product, reduced_coproduct, tensor_product,
    AntipodeError, Coproduct,
};
pub use lincomb::{format_coeff, from_big, int, ratio, Coeff, LinComb};
pub use multiset::{deshuffle, Multiset};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A basis element with a grading and a symmetry factor.
pub trait Basis: Clone + Ord + fmt::Display {
    fn degree(&self) -> usize;
    fn sigma(&self) -> BigUint;
}

/// Bases closed under a commutative product with a unit (free commutative monoids).
pub trait Monoid: Basis {
    fn one() -> Self;
    fn is_one(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<L, R> {
    pub left: L,
    pub right: R,
}

impl<L, R> Tensor<L, R> {
    pub fn new(left: L, right: R) -> Self {
        Tensor { left, right }
    }
}

impl<L: fmt::Display, R: fmt::Display> fmt::Display for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.left, self.right)
    }
}

impl<L: Basis, R: Basis> Basis for Tensor<L, R> {
    fn degree(&self) -> usize {
        self.left.degree() + self.right.degree()
    }
    fn sigma(&self) -> BigUint {
        self.left.sigma() * self.right.sigma()
    }
}

impl<L: Monoid, R: Monoid> Monoid for Tensor<L, R> {
    fn one() -> Self {
        Tensor::new(L::one(), R::one())
    }
    fn is_one(&self) -> bool {
        self.left.is_one() && self.right.is_one()
    }
    fn mul(&self, other: &Self) -> Self {
        Tensor::new(self.left.mul(&other.left), self.right.mul(&other.right))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Symmetry factor of a multiset given the factor of each element: prod m! sigma(x)^m.
pub fn multiset_sigma<T: Ord>(items: &[T], sigma: impl Fn(&T) -> BigUint) -> BigUint {
    let mut out = BigUint::one();
    let mut i = 0;
    while i < items.len() {
        let mut j = i;
        while j < items.len() && items[j] == items[i] {
            j += 1;
        }
        let s = sigma(&items[i]);
        out *= factorial(j - i) * s.pow((j - i) as u32);
        i = j;
    }
    out
}

/// Diagonal pairing <b1, b2> = delta(b1, b2) sigma(b1), extended bilinearly.
pub fn pairing<B: Basis>(x: &LinComb<B>, y: &LinComb<B>) -> Coeff {
    pairing_with(x, y, |b| b.sigma())
}

pub fn pairing_with<B: Ord + Clone>(
    x: &LinComb<B>,
    y: &LinComb<B>,
    sigma: impl Fn(&B) -> BigUint,
) -> Coeff {
    let mut acc = Coeff::zero();
    for (b, c) in x.iter() {
        let d = y.coeff(b);
        if !d.is_zero() {
            acc += c * d * from_big(&sigma(b));
        }
    }
    acc
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("degree {0} was not enumerated for this adjoint")]
    MissingSlice(usize),
}

/// Adjoint of a linear map with respect to the diagonal pairings, tabulated
/// over the enumerated degree slices of the domain.
pub struct Adjoint<B1: Ord, B2: Ord> {
    images: BTreeMap<B2, LinComb<B1>>,
    degrees: BTreeSet<usize>,
}

impl<B1: Basis, B2: Basis> Adjoint<B1, B2> {
    /// `domain` must contain complete degree slices of B1; every codomain
    /// degree reached from them is then complete as well, provided f is graded.
    pub fn new(domain: &[B1], f: impl Fn(&B1) -> LinComb<B2>) -> Self {
        let mut images: BTreeMap<B2, LinComb<B1>> = BTreeMap::new();
        let mut degrees = BTreeSet::new();
        for b1 in domain {
            degrees.insert(b1.degree());
            let s1 = from_big(&b1.sigma());
            for (b2, c) in f(b1).iter() {
                let w = c * from_big(&b2.sigma()) / &s1;
                images
                    .entry(b2.clone())
                    .or_default()
                    .add_term(b1.clone(), w);
            }
        }
        Adjoint { images, degrees }
    }

    pub fn apply(&self, b2: &B2) -> Result<LinComb<B1>, AlgebraError> {
        if !self.degrees.contains(&b2.degree()) {
            return Err(AlgebraError::MissingSlice(b2.degree()));
        }
        Ok(self.images.get(b2).cloned().unwrap_or_default())
    }

    pub fn apply_lin(&self, x: &LinComb<B2>) -> Result<LinComb<B1>, AlgebraError> {
        let mut out = LinComb::zero();
        for (b, c) in x.iter() {
            out.add_scaled(&self.apply(b)?, c);
        }
        Ok(out)
    }
}

/// Lazily filled, cached degree slices of a graded basis.
pub struct GradedBasis<B> {
    generate: Box<dyn Fn(usize) -> Vec<B> + Send + Sync>,
    slices: RwLock<BTreeMap<usize, Arc<Vec<B>>>>,
}

impl<B: Basis> GradedBasis<B> {
    pub fn new(generate: impl Fn(usize) -> Vec<B> + Send + Sync + 'static) -> Self {
        GradedBasis {
            generate: Box::new(generate),
            slices: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn slice(&self, degree: usize) -> Arc<Vec<B>> {
        if let Some(s) = self.slices.read().unwrap().get(&degree) {
            return s.clone();
        }
        let mut v = (self.generate)(degree);
        v.sort();
        v.dedup();
        let s = Arc::new(v);
        self.slices.write().unwrap().insert(degree, s.clone());
        s
    }

    pub fn up_to(&self, degree: usize) -> Vec<B> {
        (0..=degree)
            .flat_map(|d| self.slice(d).iter().cloned().collect::<Vec<_>>())
            .collect()
    }
}
