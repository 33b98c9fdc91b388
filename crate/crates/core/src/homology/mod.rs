//! Simplicial chains, (co)homology with coefficients, and induced maps.
//!
//! Induced maps are compared as homomorphisms between presentations, so over
//! `Z` two maps agree exactly when their difference lands in the relations.

mod chain;
mod graded;
mod induced;

pub use chain::ChainComplexData;
pub use graded::{cohomology, graded_module, homology, Backend, GradedModule, Variance};
pub use induced::{
    identity_hom, induced_map, induced_map_between, maps_equal, maps_equal_between, pullback_cochain, push_chain,
    GradedHom, HomologyError, MapsEqual,
};
