//! Aromas, rooted trees, aromatic and clumped forests, and the operations on
//! them: grafting, divergence, free edges, trace, admissible cuts, the two
//! Butcher-Connes-Kreimer coproducts, psi and the Grossman-Larson products.

mod aroma;
pub mod cuts;
pub mod enumerate;
mod forest;
pub mod gl;
pub mod ops;
pub mod psi;
mod tree;

pub use aroma::Aroma;
pub use cuts::{aroma_cuts, forest_cuts, tree_cuts, AromaCut, BckAro, BckCl, ForestCut, TreeCut};
pub use forest::{AromaticForest, AromaticTree, ClumpedForest, MultiAroma};
pub use gl::{clump_action, gl_aro, gl_cl};
pub use ops::{
    anchor, bracket, delta, delta_bar, delta_bar_pow, delta_pow, divergence, forest_action, graft,
    graft_lin, graft_onto_aromas, trace, ForestError,
};
pub use psi::{psi, psi_star};
pub use tree::RootedTree;
