use std::sync::Arc;

use crate::complex::SimplicialComplex;
use crate::exactalg::{EuclideanRing, Matrix, SparseVec};

/// Integer boundary operators of a complex in its simplex basis.
///
/// `∂[v_0..v_d] = Σ (-1)^i [v_0..v̂_i..v_d]` with vertices in the fixed order.
/// Coboundaries are stored as the transposed incidence lists.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    complex: Arc<SimplicialComplex>,
    boundary: Vec<Vec<Vec<(u32, i8)>>>,
    coboundary: Vec<Vec<Vec<(u32, i8)>>>,
}

impl ChainComplexData {
    pub fn new(complex: &Arc<SimplicialComplex>) -> Self {
        let top = complex.dim();
        let mut boundary: Vec<Vec<Vec<(u32, i8)>>> = vec![vec![Vec::new(); complex.count(0)]];
        let mut coboundary: Vec<Vec<Vec<(u32, i8)>>> = (0..=top).map(|d| vec![Vec::new(); complex.count(d)]).collect();
        for d in 1..=top {
            let mut cols = Vec::with_capacity(complex.count(d));
            for (j, s) in complex.simplices(d).iter().enumerate() {
                let mut col = Vec::with_capacity(s.len());
                let mut face = Vec::with_capacity(d);
                for skip in 0..s.len() {
                    face.clear();
                    face.extend(s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v));
                    let i = complex.simplex_index(&face).expect("faces are present") as u32;
                    let sign = if skip % 2 == 0 { 1 } else { -1 };
                    col.push((i, sign));
                    coboundary[d - 1][i as usize].push((j as u32, sign));
                }
                col.sort_unstable();
                cols.push(col);
            }
            boundary.push(cols);
        }
        ChainComplexData { complex: complex.clone(), boundary, coboundary }
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    /// Rank of the chain group in degree `d` (0 past the top dimension).
    pub fn rank(&self, d: usize) -> usize {
        self.complex.count(d)
    }

    /// Column `j` of `∂_d` as `(row, ±1)` pairs.
    pub fn boundary_column(&self, d: usize, j: usize) -> &[(u32, i8)] {
        &self.boundary[d][j]
    }

    /// Column `i` of `δ^d = ∂_{d+1}^T`, indexed by `(d+1)`-simplices.
    pub fn coboundary_column(&self, d: usize, i: usize) -> &[(u32, i8)] {
        self.coboundary.get(d).map_or(&[], |c| c[i].as_slice())
    }

    /// Columns of `∂_d : C_d -> C_{d-1}` over `ring` (empty when `d` is out of range).
    pub fn boundary_columns<R: EuclideanRing>(&self, ring: &R, d: usize) -> Vec<SparseVec<R::Elem>> {
        if d == 0 || d > self.dim() {
            return vec![SparseVec::new(); self.rank(d)];
        }
        self.boundary[d].iter().map(|c| lift(ring, c)).collect()
    }

    /// Columns of `δ^d : C^d -> C^{d+1}`.
    pub fn coboundary_columns<R: EuclideanRing>(&self, ring: &R, d: usize) -> Vec<SparseVec<R::Elem>> {
        match self.coboundary.get(d) {
            Some(cols) => cols.iter().map(|c| lift(ring, c)).collect(),
            None => Vec::new(),
        }
    }

    pub fn boundary_matrix<R: EuclideanRing>(&self, ring: &R, d: usize) -> Matrix<R::Elem> {
        let rows = if d == 0 { 0 } else { self.rank(d - 1) };
        dense(ring, rows, &self.boundary_columns(ring, d))
    }

    pub fn coboundary_matrix<R: EuclideanRing>(&self, ring: &R, d: usize) -> Matrix<R::Elem> {
        dense(ring, self.rank(d + 1), &self.coboundary_columns(ring, d))
    }
}

fn lift<R: EuclideanRing>(ring: &R, col: &[(u32, i8)]) -> SparseVec<R::Elem> {
    SparseVec::from_pairs(ring, col.iter().map(|&(i, s)| (i, ring.from_i64(s as i64))).collect())
}

fn dense<R: EuclideanRing>(ring: &R, rows: usize, cols: &[SparseVec<R::Elem>]) -> Matrix<R::Elem> {
    let cols: Vec<Vec<R::Elem>> = cols.iter().map(|c| c.to_dense(ring, rows)).collect();
    Matrix::from_columns(ring, rows, &cols)
}
