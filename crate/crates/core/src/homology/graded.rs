use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::ChainComplexData;
use crate::complex::SimplicialComplex;
use crate::exactalg::{
    kernel_basis, quotient_presentation, sparse_kernel, AlgebraError, EuclideanRing, Presentation, SparseVec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    Cohomology,
    Homology,
}

impl fmt::Display for Variance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variance::Cohomology => "cohomology",
            Variance::Homology => "homology",
        })
    }
}

impl FromStr for Variance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cohomology" | "co" => Ok(Variance::Cohomology),
            "homology" | "ho" => Ok(Variance::Homology),
            other => Err(format!("unknown variance `{other}`")),
        }
    }
}

/// Which linear-algebra route computes the presentations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    /// Sparse reduction over fields, Smith normal forms over `Z`.
    #[default]
    Auto,
    /// Smith normal forms for every ring.
    Dense,
}

/// (Co)homology of a complex, one presentation per degree `0..=dim`.
#[derive(Clone, Debug)]
pub struct GradedModule<R: EuclideanRing> {
    ring: R,
    variance: Variance,
    chains: Arc<ChainComplexData>,
    degrees: Vec<Arc<Presentation<R>>>,
}

impl<R: EuclideanRing> GradedModule<R> {
    pub fn compute(
        chains: &Arc<ChainComplexData>,
        ring: &R,
        variance: Variance,
        backend: Backend,
    ) -> Result<Self, AlgebraError> {
        let sparse = ring.is_field() && backend == Backend::Auto;
        let degrees = (0..=chains.dim())
            .map(|m| {
                let p = if sparse {
                    sparse_degree(chains, ring, variance, m)
                } else {
                    dense_degree(chains, ring, variance, m)
                };
                p.map(Arc::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedModule { ring: ring.clone(), variance, chains: chains.clone(), degrees })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        self.chains.complex()
    }

    pub fn chains(&self) -> &Arc<ChainComplexData> {
        &self.chains
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degree(&self, m: usize) -> &Arc<Presentation<R>> {
        &self.degrees[m]
    }

    pub fn degrees(&self) -> &[Arc<Presentation<R>>] {
        &self.degrees
    }

    /// Free ranks per degree (the Betti numbers over a field).
    pub fn free_ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|p| p.free_rank()).collect()
    }

    /// `Z, 0, Z/2`-style rendering, one entry per degree.
    pub fn describe(&self) -> Vec<String> {
        self.degrees.iter().map(|p| p.describe()).collect()
    }
}

/// Homology of `k` over `ring` with the default backend.
pub fn homology<R: EuclideanRing>(k: &Arc<SimplicialComplex>, ring: &R) -> GradedModule<R> {
    graded_module(k, ring, Variance::Homology)
}

/// Cohomology of `k` over `ring` with the default backend.
pub fn cohomology<R: EuclideanRing>(k: &Arc<SimplicialComplex>, ring: &R) -> GradedModule<R> {
    graded_module(k, ring, Variance::Cohomology)
}

pub fn graded_module<R: EuclideanRing>(k: &Arc<SimplicialComplex>, ring: &R, variance: Variance) -> GradedModule<R> {
    let chains = Arc::new(ChainComplexData::new(k));
    GradedModule::compute(&chains, ring, variance, Backend::Auto).expect("chain data yields valid presentations")
}

/// Cycle and boundary generators of degree `m` as sparse columns.
///
/// Homology: `Z = ker ∂_m`, `B = im ∂_{m+1}`. Cohomology: `Z = ker δ^m`,
/// `B = im δ^{m-1}`.
fn sparse_degree<R: EuclideanRing>(
    chains: &ChainComplexData,
    ring: &R,
    variance: Variance,
    m: usize,
) -> Result<Presentation<R>, AlgebraError> {
    let (maps_out, relations) = match variance {
        Variance::Homology => (chains.boundary_columns(ring, m), chains.boundary_columns(ring, m + 1)),
        Variance::Cohomology => (
            chains.coboundary_columns(ring, m),
            if m == 0 { Vec::new() } else { chains.coboundary_columns(ring, m - 1) },
        ),
    };
    let cycles: Vec<SparseVec<R::Elem>> = sparse_kernel(ring, &maps_out);
    Presentation::from_sparse(ring, chains.rank(m), &relations, &cycles)
}

fn dense_degree<R: EuclideanRing>(
    chains: &ChainComplexData,
    ring: &R,
    variance: Variance,
    m: usize,
) -> Result<Presentation<R>, AlgebraError> {
    let (out, rel) = match variance {
        Variance::Homology => (chains.boundary_matrix(ring, m), chains.boundary_matrix(ring, m + 1)),
        Variance::Cohomology => {
            let rel = if m == 0 {
                crate::exactalg::Matrix::zeros(ring, chains.rank(0), 0)
            } else {
                chains.coboundary_matrix(ring, m - 1)
            };
            (chains.coboundary_matrix(ring, m), rel)
        }
    };
    let cycles = if out.rows() == 0 {
        crate::exactalg::Matrix::identity(ring, chains.rank(m))
    } else {
        kernel_basis(ring, &out)
    };
    let rel = if rel.cols() == 0 { crate::exactalg::Matrix::zeros(ring, chains.rank(m), 0) } else { rel };
    quotient_presentation(ring, &cycles, &rel)
}
