//! Exact simplicial (co)homology and cover certificates for the simplicial
//! cohomological distance `H•sD(φ, ψ; R)`: the least `n` such that the
//! source of two simplicial maps has a cover by `n + 1` subcomplexes on each
//! of which `φ` and `ψ` induce the same map in cohomology (or homology).
//!
//! The layers build on each other:
//!
//! * [`exactalg`]: coefficient rings `Z`, `Q`, `Z/p`, Smith normal form and
//!   presented modules;
//! * [`complex`]: simplicial complexes, maps, covers, barycentric subdivision
//!   and staircase products;
//! * [`homology`]: chain complexes, graded (co)homology modules and induced
//!   maps;
//! * [`ring`]: cup products and the cup-length invariants;
//! * [`distance`]: verifying and searching covers, lower and upper bounds.
//!
//! [`io`] reads and writes the plain-text formats, [`fixtures`] bundles the
//! reference triangulations and [`report`] renders results as text or JSON.
//!
//! ```
//! use cohodist::distance::{hscat, BoundOptions};
//! use cohodist::exactalg::CoeffRing;
//! use cohodist::fixtures;
//!
//! let cover = fixtures::cover("cp2").unwrap();
//! let opts = BoundOptions { cover: Some(cover), ..BoundOptions::default() };
//! let report = hscat(&fixtures::cp2_9(), CoeffRing::PrimeField(2), &opts).unwrap();
//! assert_eq!(report.exact, Some(2));
//! ```

pub mod complex;
pub mod distance;
pub mod exactalg;
pub mod fixtures;
pub mod homology;
pub mod io;
pub mod report;
pub mod ring;
