//! Finite abstract simplicial complexes and the constructions built on them:
//! simplicial maps, subcomplexes and covers, barycentric subdivision and
//! staircase products.

mod label;
mod map;
mod product;
mod simplicial;
mod subcomplex;
mod subdivision;

use thiserror::Error;

pub use label::Label;
pub use map::SimplicialMap;
pub use product::{product, Product};
pub use simplicial::{ComplexBuilder, Simplex, SimplicialComplex};
pub use subcomplex::{is_cover, Cover, CoverCheck, Subcomplex};
pub use subdivision::{barycentric_subdivision, sd_map, Subdivision};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("no faces given")]
    EmptyInput,
    #[error("face {index} is empty")]
    EmptyFace { index: usize },
    #[error("face {face} repeats vertex `{vertex}`")]
    DuplicateVertexInFace { face: usize, vertex: String },
    #[error("vertex order repeats `{0}`")]
    DuplicateVertexInOrder(String),
    #[error("vertex `{0}` is not used by any face")]
    UnusedVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("complex is disconnected ({components} components)")]
    DisconnectedComplex { components: usize },
    #[error("vertex `{0}` has no image")]
    MissingAssignment(String),
    #[error("image of simplex {0} is not a simplex of the target")]
    NotSimplicial(String),
    #[error("{0} is not a simplex of the parent complex")]
    NotASubcomplex(String),
    #[error("cover piece is empty")]
    EmptyPiece,
    #[error("objects live on different complexes")]
    ComplexMismatch,
}
