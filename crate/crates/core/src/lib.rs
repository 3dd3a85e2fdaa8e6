//! Aromatic and clumped forests, aromatic multi-indices, their Hopf algebras
//! and the fertility embeddings between them, with exact rational arithmetic.

pub mod algebra;
pub mod color;
pub mod embedding;
pub mod forests;
pub mod multiindices;
pub mod text;
pub mod verify;

pub use color::{Color, ColorSet};
