//! Aromatic multi-indices: monomials in the letters x_j (j >= -1) split into
//! aroma factors and tree factors, the derivations d and dbar, the Novikov
//! product, monomial cuts and the LOT coproducts.

pub mod coproduct;
pub mod derivation;
pub mod enumerate;
mod monomial;
pub mod novikov;

pub use coproduct::{
    lot_clump, lot_factor, monomial_cuts, phi, phi_star, LotAro, LotCl, MonomialCut,
};
pub use derivation::{
    partial, partial_ami, partial_bar, partial_bar_ami, partial_bar_iterated, partial_bar_pow,
    partial_bar_pow_ami,
};
pub use monomial::{AromaticMI, AromaticMonomial, ClumpedMI, Kind, Letter, MultiIndex};
pub use novikov::{anchor_mono, bracket_mono, novikov, novikov_lin};
