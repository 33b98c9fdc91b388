use super::EuclideanRing;

/// Dense row-major matrix with exact entries.
///
/// The ring is not stored: every arithmetic method takes it as an argument,
/// so the same storage serves `Z`, `Q` and `Z_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros<R: EuclideanRing<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity<R: EuclideanRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = ring.one();
        }
        m
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_i64_rows<R: EuclideanRing<Elem = E>>(ring: &R, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Matrix::from_fn(rows.len(), cols, |i, j| ring.from_i64(rows[i][j]))
    }

    /// Assembles a matrix from column vectors of length `rows`.
    pub fn from_columns<R: EuclideanRing<Elem = E>>(ring: &R, rows: usize, columns: &[Vec<E>]) -> Self {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        Matrix::from_fn(self.rows, keep.len(), |i, j| self[(i, keep[j])].clone())
    }

    /// Keeps the listed rows, in order.
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        Matrix::from_fn(keep.len(), self.cols, |i, j| self[(keep[i], j)].clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul<R: EuclideanRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !ring.is_zero(b) {
                        ring.add_mul_assign(&mut out.data[i * other.cols + j], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec<R: EuclideanRing<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !ring.is_zero(a) && !ring.is_zero(b) {
                        ring.add_mul_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub<R: EuclideanRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| ring.sub(&self[(i, j)], &other[(i, j)]))
    }

    pub fn is_zero<R: EuclideanRing<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|v| ring.is_zero(v))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += c * row[source]`
    pub(crate) fn add_row_multiple<R: EuclideanRing<Elem = E>>(
        &mut self,
        ring: &R,
        target: usize,
        source: usize,
        c: &E,
    ) {
        if ring.is_zero(c) {
            return;
        }
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            if !ring.is_zero(&s) {
                ring.add_mul_assign(&mut self.data[target * self.cols + j], c, &s);
            }
        }
    }

    /// `col[target] += c * col[source]`
    pub(crate) fn add_col_multiple<R: EuclideanRing<Elem = E>>(
        &mut self,
        ring: &R,
        target: usize,
        source: usize,
        c: &E,
    ) {
        if ring.is_zero(c) {
            return;
        }
        for i in 0..self.rows {
            let s = self.data[i * self.cols + source].clone();
            if !ring.is_zero(&s) {
                ring.add_mul_assign(&mut self.data[i * self.cols + target], c, &s);
            }
        }
    }

    pub(crate) fn scale_row<R: EuclideanRing<Elem = E>>(&mut self, ring: &R, i: usize, c: &E) {
        for j in 0..self.cols {
            let v = ring.mul(&self.data[i * self.cols + j], c);
            self.data[i * self.cols + j] = v;
        }
    }

    pub(crate) fn scale_col<R: EuclideanRing<Elem = E>>(&mut self, ring: &R, j: usize, c: &E) {
        for i in 0..self.rows {
            let v = ring.mul(&self.data[i * self.cols + j], c);
            self.data[i * self.cols + j] = v;
        }
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}
