//! The fertility map Phi from forests to multi-indices, its combinatorial
//! inverse, and the embeddings j^aro, j^cl and jbar.

mod fertility;
mod inverse;
mod jmaps;

pub use fertility::{
    aroma_profile, fertility_clumped, fertility_forest, fertility_multiaroma, fertility_tree,
    tree_profile,
};
pub use inverse::{
    aromas_with_profile, inverse_fertility_aromas, inverse_fertility_trees, trees_with_profile,
};
pub use jmaps::{check_weights, j_aro, j_aro_lin, j_bar, j_cl, j_cl_lin, j_factor, EmbeddingError};
