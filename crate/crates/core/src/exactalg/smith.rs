use super::{EuclideanRing, Matrix};

/// Smith normal form `U * M * V = D` of a matrix over a Euclidean ring.
///
/// `diagonal` holds the nonzero invariant factors `d_1 | d_2 | ... | d_r`,
/// each normalized (positive over `Z`, `1` over a field). `u_inv` is kept so
/// that quotient generators can be read off without inverting `U` later.
#[derive(Clone, Debug)]
pub struct SmithForm<E> {
    pub diagonal: Vec<E>,
    pub u: Matrix<E>,
    pub u_inv: Matrix<E>,
    pub v: Matrix<E>,
}

impl<E: Clone> SmithForm<E> {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full diagonal matrix `D` with the shape of the input.
    pub fn diagonal_matrix<R: EuclideanRing<Elem = E>>(&self, ring: &R) -> Matrix<E> {
        let mut d = Matrix::zeros(ring, self.u.rows(), self.v.rows());
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

struct Reduction<'a, R: EuclideanRing> {
    ring: &'a R,
    a: Matrix<R::Elem>,
    u: Matrix<R::Elem>,
    u_inv: Matrix<R::Elem>,
    v: Matrix<R::Elem>,
}

impl<R: EuclideanRing> Reduction<'_, R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// row[t] += c * row[s]; the inverse acts as col[s] -= c * col[t] on U^-1.
    fn add_row(&mut self, t: usize, s: usize, c: &R::Elem) {
        self.a.add_row_multiple(self.ring, t, s, c);
        self.u.add_row_multiple(self.ring, t, s, c);
        let neg = self.ring.neg(c);
        self.u_inv.add_col_multiple(self.ring, s, t, &neg);
    }

    fn add_col(&mut self, t: usize, s: usize, c: &R::Elem) {
        self.a.add_col_multiple(self.ring, t, s, c);
        self.v.add_col_multiple(self.ring, t, s, c);
    }

    fn scale_row(&mut self, i: usize, unit: &R::Elem) {
        let inv = self.ring.inverse(unit).expect("scaling by a non-unit");
        self.a.scale_row(self.ring, i, unit);
        self.u.scale_row(self.ring, i, unit);
        self.u_inv.scale_col(self.ring, i, &inv);
    }

    /// Smallest nonzero entry of the trailing block starting at (t, t).
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if self.ring.is_zero(x) {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => self.ring.size_cmp(x, &self.a[b]).is_lt(),
                };
                if better {
                    best = Some((i, j));
                    if self.ring.is_unit(x) {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Clears row and column `t`. Returns false when a nonzero remainder
    /// appeared and a smaller pivot must be chosen.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        let pivot = self.a[(t, t)].clone();
        for i in t + 1..self.a.rows() {
            if self.ring.is_zero(&self.a[(i, t)]) {
                continue;
            }
            let (q, r) = self.ring.div_rem(&self.a[(i, t)], &pivot);
            self.add_row(i, t, &self.ring.neg(&q));
            if !self.ring.is_zero(&r) {
                clean = false;
            }
        }
        for j in t + 1..self.a.cols() {
            if self.ring.is_zero(&self.a[(t, j)]) {
                continue;
            }
            let (q, r) = self.ring.div_rem(&self.a[(t, j)], &pivot);
            self.add_col(j, t, &self.ring.neg(&q));
            if !self.ring.is_zero(&r) {
                clean = false;
            }
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[(t, t)];
        if self.ring.is_unit(pivot) {
            return None;
        }
        (t + 1..self.a.rows()).find(|&i| (t + 1..self.a.cols()).any(|j| !self.ring.divides(pivot, &self.a[(i, j)])))
    }
}

/// Computes the Smith normal form with the smallest-entry pivot rule.
///
/// Deterministic: ties are broken by row-major position.
pub fn smith_normal_form<R: EuclideanRing>(ring: &R, m: &Matrix<R::Elem>) -> SmithForm<R::Elem> {
    let mut red = Reduction {
        ring,
        a: m.clone(),
        u: Matrix::identity(ring, m.rows()),
        u_inv: Matrix::identity(ring, m.rows()),
        v: Matrix::identity(ring, m.cols()),
    };
    let mut diagonal = Vec::new();
    for t in 0..m.rows().min(m.cols()) {
        let Some((pi, pj)) = red.find_pivot(t) else { break };
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);
        loop {
            if !red.clear_cross(t) {
                let (pi, pj) = red.find_pivot_in_cross(t);
                red.swap_rows(t, pi);
                red.swap_cols(t, pj);
                continue;
            }
            match red.non_divisible_row(t) {
                Some(i) => red.add_row(t, i, &ring.one()),
                None => break,
            }
        }
        let unit = ring.normalizing_unit(&red.a[(t, t)]);
        red.scale_row(t, &unit);
        diagonal.push(red.a[(t, t)].clone());
    }
    SmithForm { diagonal, u: red.u, u_inv: red.u_inv, v: red.v }
}

impl<R: EuclideanRing> Reduction<'_, R> {
    /// Smallest nonzero entry in row `t` or column `t` (including the corner).
    fn find_pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let consider = |pos: (usize, usize), best: &mut (usize, usize)| {
            let x = &self.a[pos];
            if self.ring.is_zero(x) {
                return;
            }
            let cur = &self.a[*best];
            if self.ring.is_zero(cur) || self.ring.size_cmp(x, cur).is_lt() {
                *best = pos;
            }
        };
        for i in t..self.a.rows() {
            consider((i, t), &mut best);
        }
        for j in t..self.a.cols() {
            consider((t, j), &mut best);
        }
        best
    }
}

/// Membership and preimage queries against the column space of a matrix.
///
/// Over `Z` this is the lattice spanned by the columns, so `x` belongs iff
/// `U x` has entries divisible by the invariant factors and zeros past the rank.
#[derive(Clone, Debug)]
pub struct ColumnSpace<E> {
    smith: SmithForm<E>,
}

impl<E: Clone> ColumnSpace<E> {
    pub fn new<R: EuclideanRing<Elem = E>>(ring: &R, m: &Matrix<E>) -> Self {
        ColumnSpace { smith: smith_normal_form(ring, m) }
    }

    pub fn rank(&self) -> usize {
        self.smith.rank()
    }

    pub fn smith(&self) -> &SmithForm<E> {
        &self.smith
    }

    pub fn ambient_dim(&self) -> usize {
        self.smith.u.rows()
    }

    pub fn contains<R: EuclideanRing<Elem = E>>(&self, ring: &R, x: &[E]) -> bool {
        self.preimage(ring, x).is_some()
    }

    /// Some `c` with `M c = x`, if one exists.
    pub fn preimage<R: EuclideanRing<Elem = E>>(&self, ring: &R, x: &[E]) -> Option<Vec<E>> {
        let y = self.smith.u.mul_vec(ring, x);
        let mut z = vec![ring.zero(); self.smith.v.rows()];
        for (i, yi) in y.iter().enumerate() {
            if i < self.smith.rank() {
                let d = &self.smith.diagonal[i];
                let (q, r) = ring.div_rem(yi, d);
                if !ring.is_zero(&r) {
                    return None;
                }
                z[i] = q;
            } else if !ring.is_zero(yi) {
                return None;
            }
        }
        Some(self.smith.v.mul_vec(ring, &z))
    }
}

/// Basis of the kernel of `m` (a saturated lattice basis over `Z`), as columns.
pub fn kernel_basis<R: EuclideanRing>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let snf = smith_normal_form(ring, m);
    let keep: Vec<usize> = (snf.rank()..m.cols()).collect();
    snf.v.select_columns(&keep)
}

/// Basis of the column space of `m`, as columns.
pub fn image_basis<R: EuclideanRing>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let snf = smith_normal_form(ring, m);
    let mut basis = snf.u_inv.select_columns(&(0..snf.rank()).collect::<Vec<_>>());
    for (j, d) in snf.diagonal.iter().enumerate() {
        basis.scale_col(ring, j, d);
    }
    basis
}

/// Rank of `m` (over the fraction field when `ring` is `Z`).
pub fn rank<R: EuclideanRing>(ring: &R, m: &Matrix<R::Elem>) -> usize {
    smith_normal_form(ring, m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Integers, PrimeField};
    use num_bigint::BigInt;

    fn z(rows: &[Vec<i64>]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(&Integers, rows)
    }

    #[test]
    fn diag_two_three_becomes_one_six() {
        // gcd(2,3) = 1 and 2*3 = 6 are the only invariants compatible with det = 6.
        let snf = smith_normal_form(&Integers, &z(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(snf.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_and_identity() {
        let zero = z(&[vec![0, 0, 0], vec![0, 0, 0]]);
        let snf = smith_normal_form(&Integers, &zero);
        assert!(snf.diagonal.is_empty());
        assert_eq!(snf.u, Matrix::identity(&Integers, 2));
        assert_eq!(snf.v, Matrix::identity(&Integers, 3));

        let id = Matrix::identity(&Integers, 3);
        let snf = smith_normal_form(&Integers, &id);
        assert_eq!(snf.diagonal_matrix(&Integers), id);
    }

    #[test]
    fn kernel_over_z2() {
        let f = PrimeField::new(2).unwrap();
        let k = kernel_basis(&f, &Matrix::from_i64_rows(&f, &[vec![1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![1, 1]);
        assert_eq!(kernel_basis(&f, &Matrix::identity(&f, 3)).cols(), 0);
    }

    #[test]
    fn lattice_membership_respects_divisibility() {
        let m = z(&[vec![2, 0], vec![0, 4]]);
        let cs = ColumnSpace::new(&Integers, &m);
        assert!(cs.contains(&Integers, &[BigInt::from(6), BigInt::from(8)]));
        assert!(!cs.contains(&Integers, &[BigInt::from(1), BigInt::from(0)]));
        assert!(!cs.contains(&Integers, &[BigInt::from(2), BigInt::from(2)]));
        let c = cs.preimage(&Integers, &[BigInt::from(6), BigInt::from(8)]).unwrap();
        assert_eq!(m.mul_vec(&Integers, &c), vec![BigInt::from(6), BigInt::from(8)]);
    }
}
