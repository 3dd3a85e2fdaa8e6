use crate::algebra::{from_big, product, Basis, LinComb, Monoid};
use crate::forests::{AromaticForest, ClumpedForest};
use crate::multiindices::{AromaticMI, ClumpedMI, Kind, MultiIndex};

use super::inverse::{aromas_with_profile, trees_with_profile};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("factor {factor} has weight {weight}, expected {expected}")]
    Weight {
        factor: String,
        weight: i64,
        expected: i64,
    },
    #[error("clump {0} must contain exactly one tree factor")]
    Clump(String),
}

/// j of a single factor: sum over the fertility preimages a of
/// sigma(x^k)/sigma(a) a.
pub fn j_factor(m: &MultiIndex, kind: Kind) -> LinComb<AromaticForest> {
    let s = from_big(&m.factorial());
    match kind {
        Kind::Aroma => aromas_with_profile(m)
            .iter()
            .map(|a| {
                (
                    AromaticForest::from_aroma(a.clone()),
                    &s / from_big(&a.sigma()),
                )
            })
            .collect(),
        Kind::Tree => trees_with_profile(m)
            .iter()
            .map(|t| {
                (
                    AromaticForest::from_tree(t.clone()),
                    &s / from_big(&t.sigma()),
                )
            })
            .collect(),
    }
}

/// Checks that every factor has the weight of a forest without free edges.
pub fn check_weights(x: &AromaticMI) -> Result<(), EmbeddingError> {
    for (m, k) in x.factors() {
        if m.weight() != k.base_weight() {
            return Err(EmbeddingError::Weight {
                factor: m.to_string(),
                weight: m.weight(),
                expected: k.base_weight(),
            });
        }
    }
    Ok(())
}

/// Morphism extension of j_factor; free edges are produced wherever the
/// weights exceed the base weights.
fn j_morphism(x: &AromaticMI) -> LinComb<AromaticForest> {
    x.factors()
        .iter()
        .fold(LinComb::basis(AromaticForest::one()), |acc, (m, k)| {
            product(&acc, &j_factor(m, *k))
        })
}

/// Aromatic embedding of multi-indices into aromatic forests.
pub fn j_aro(x: &AromaticMI) -> Result<LinComb<AromaticForest>, EmbeddingError> {
    check_weights(x)?;
    Ok(j_morphism(x))
}

/// Free-edge version: factors of any weight; a tree factor of weight n-1 or
/// an aroma factor of weight n yields objects with n free edges.
pub fn j_bar(x: &AromaticMI) -> LinComb<AromaticForest> {
    j_morphism(x)
}

pub fn j_aro_lin(x: &LinComb<AromaticMI>) -> Result<LinComb<AromaticForest>, EmbeddingError> {
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&j_aro(b)?, c);
    }
    Ok(out)
}

/// Clumped embedding: each clump goes to j_aro of itself, read as a clump.
pub fn j_cl(x: &ClumpedMI) -> Result<LinComb<ClumpedForest>, EmbeddingError> {
    let mut out = LinComb::basis(ClumpedForest::one());
    for c in &x.clumps {
        let img = j_aro(&c.to_ami())?;
        let as_clumps =
            img.map_basis(|f| ClumpedForest::clump(f.as_aromatic_tree().expect("one tree")));
        out = product(&out, &as_clumps);
    }
    Ok(out)
}

pub fn j_cl_lin(x: &LinComb<ClumpedMI>) -> Result<LinComb<ClumpedForest>, EmbeddingError> {
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&j_cl(b)?, c);
    }
    Ok(out)
}
