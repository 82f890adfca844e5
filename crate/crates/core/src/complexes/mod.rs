//! Projective presentations, resolutions, duals, transposes, and
//! extension-group dimensions — everything built from exact kernels
//! and covers over the base algebra.

mod complex;
mod dual;
mod ext;
mod proj;
mod resolution;
mod transpose;

pub use complex::Complex;
pub use dual::{a_dual, dual_hom, phi, proj_dual, DualModule};
pub use ext::{ext_hom_dims, ext_regular_dims};
pub use proj::{ProjMap, ProjSum};
pub use resolution::{projective_dimension, syzygy, Resolution};
pub use transpose::{
    cosyzygy, cosyzygy_embedding, evaluation, transpose, CosyzygyEmbedding, Evaluation,
};
