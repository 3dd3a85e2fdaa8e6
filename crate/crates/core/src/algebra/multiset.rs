use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::{binomial, from_big, multiset_sigma, Basis, LinComb, Monoid, Tensor};

/// Commutative monomial in the symmetric algebra over a basis `T`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset<T>(Vec<T>);

impl<T: Ord + Clone> Multiset<T> {
    pub fn new(mut items: Vec<T>) -> Self {
        items.sort();
        Multiset(items)
    }

    pub fn items(&self) -> &[T] {
        &self.0
    }
}

impl<T: Basis> fmt::Display for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        parts.sort();
        write!(f, "{}", parts.join(" "))
    }
}

impl<T: Basis> Basis for Multiset<T> {
    fn degree(&self) -> usize {
        self.0.iter().map(|x| x.degree()).sum()
    }
    fn sigma(&self) -> BigUint {
        multiset_sigma(&self.0, |x| x.sigma())
    }
}

impl<T: Basis> Monoid for Multiset<T> {
    fn one() -> Self {
        Multiset(Vec::new())
    }
    fn is_one(&self) -> bool {
        self.0.is_empty()
    }
    fn mul(&self, other: &Self) -> Self {
        Multiset::new(self.0.iter().chain(other.0.iter()).cloned().collect())
    }
}

/// All ways of splitting a sorted multiset into a left and a right part, with
/// the number of labelled splittings realising each pair.
pub fn split_multiset<T: Ord + Clone>(items: &[T]) -> Vec<(Vec<T>, Vec<T>, BigUint)> {
    let mut groups: Vec<(T, usize)> = Vec::new();
    for x in items {
        match groups.last_mut() {
            Some((y, m)) if y == x => *m += 1,
            _ => groups.push((x.clone(), 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new(), BigUint::one())];
    for (x, m) in groups {
        let mut next = Vec::new();
        for (l, r, c) in &out {
            for i in 0..=m {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.extend(std::iter::repeat_n(x.clone(), i));
                r2.extend(std::iter::repeat_n(x.clone(), m - i));
                next.push((l2, r2, c * binomial(m, i)));
            }
        }
        out = next;
    }
    out
}

/// Deshuffle coproduct on the symmetric algebra: every generator is primitive.
pub fn deshuffle<T: Basis>(m: &Multiset<T>) -> LinComb<Tensor<Multiset<T>, Multiset<T>>> {
    split_multiset(&m.0)
        .into_iter()
        .map(|(l, r, c)| (Tensor::new(Multiset(l), Multiset(r)), from_big(&c)))
        .collect()
}
