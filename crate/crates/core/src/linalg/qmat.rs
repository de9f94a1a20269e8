//! Dense rectangular matrices over the rationals with exact elimination.

use crate::rat::{rzero, Rat};
use num_traits::{One, Zero};

/// A dense rows x cols rational matrix. All elimination is exact; there is no
/// floating point fallback anywhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> QMat {
        QMat {
            rows,
            cols,
            data: vec![rzero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMat {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> QMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: Vec<Vec<Rat>>) -> QMat {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        let mut m = QMat::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = rzero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        s += &self[(i, j)] * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // prefer a +-1 pivot, else any nonzero
            let mut pivot_row = None;
            for i in r..self.rows {
                if !self[(i, c)].is_zero() {
                    if pivot_row.is_none() {
                        pivot_row = Some(i);
                    }
                    let e = &self[(i, c)];
                    if e.numer().magnitude() == e.denom().magnitude() {
                        pivot_row = Some(i);
                        break;
                    }
                }
            }
            let Some(p) = pivot_row else { continue };
            self.swap_rows(r, p);
            let inv = self[(r, c)].clone();
            for j in c..self.cols {
                let v = self[(r, j)].clone() / inv.clone();
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let sub = &self[(r, j)] * &f;
                        self[(i, j)] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Exact basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = vec![rzero(); self.cols];
            v[f] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact basis of the column space: the pivot columns of the original matrix.
    pub fn image_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        pivots.into_iter().map(|c| self.col(c)).collect()
    }

    /// Solves self * x = b exactly; None when inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let mut aug = QMat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![rzero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse of a square matrix; None when singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = QMat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).any(|&c| c >= n) {
            return None;
        }
        let mut inv = QMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// Precomputed elimination of a coefficient matrix for solving many
/// right-hand sides exactly.
pub struct Solver {
    cols: usize,
    /// row transform E bringing A to reduced echelon form
    transform: QMat,
    pivots: Vec<usize>,
}

impl Solver {
    pub fn new(a: &QMat) -> Solver {
        let rows = a.rows;
        let mut aug = QMat::zeros(rows, a.cols + rows);
        for i in 0..rows {
            for j in 0..a.cols {
                aug[(i, j)] = a[(i, j)].clone();
            }
            aug[(i, a.cols + i)] = Rat::one();
        }
        // eliminate only over the first a.cols columns
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == rows {
                break;
            }
            let mut pivot_row = None;
            for i in r..rows {
                if !aug[(i, c)].is_zero() {
                    pivot_row = Some(i);
                    let e = &aug[(i, c)];
                    if e.numer().magnitude() == e.denom().magnitude() {
                        break;
                    }
                }
            }
            let Some(p) = pivot_row else { continue };
            aug.swap_rows(r, p);
            let inv = aug[(r, c)].clone();
            for j in 0..aug.cols {
                let v = aug[(r, j)].clone() / inv.clone();
                aug[(r, j)] = v;
            }
            for i in 0..rows {
                if i != r && !aug[(i, c)].is_zero() {
                    let f = aug[(i, c)].clone();
                    for j in 0..aug.cols {
                        let sub = &aug[(r, j)] * &f;
                        aug[(i, j)] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut transform = QMat::zeros(rows, rows);
        for i in 0..rows {
            for j in 0..rows {
                transform[(i, j)] = aug[(i, a.cols + j)].clone();
            }
        }
        Solver {
            cols: a.cols,
            transform,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solves A x = b with free coordinates set to zero; None when
    /// inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        let y = self.transform.mul_vec(b);
        if y.iter().skip(self.pivots.len()).any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![rzero(); self.cols];
        for (r, &c) in self.pivots.iter().enumerate() {
            x[c] = y[r].clone();
        }
        Some(x)
    }
}

/// Incremental row-reduction sieve for linear-independence bookkeeping.
#[derive(Default)]
pub struct RrefSieve {
    /// rows normalized to a unit leading entry, keyed by pivot column
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RrefSieve {
    pub fn new() -> RrefSieve {
        RrefSieve { rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces v against the sieve; inserts and returns true when independent.
    pub fn try_insert(&mut self, mut v: Vec<Rat>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = v[p].clone();
                for x in v.iter_mut() {
                    *x = &*x / &inv;
                }
                self.rows.push((p, v));
                self.rows.sort_by_key(|(p, _)| *p);
                true
            }
        }
    }

    pub fn rows(&self) -> &[(usize, Vec<Rat>)] {
        &self.rows
    }

    /// Fully reduces v and reports whether it lies in the span.
    pub fn reduce(&self, v: &mut Vec<Rat>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};
    use rand::{Rng, SeedableRng};

    fn random_mat(rng: &mut impl Rng, rows: usize, cols: usize) -> QMat {
        let mut m = QMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            }
        }
        m
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(QMat::zeros(4, 4).kernel_basis().len(), 4);
        assert_eq!(QMat::identity(4).kernel_basis().len(), 0);
    }

    #[test]
    fn rank_nullity_and_exactness_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let m = random_mat(&mut rng, rows, cols);
            let k = m.kernel_basis();
            assert_eq!(m.rank() + k.len(), cols);
            for v in &k {
                assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
            // every original column is reproduced exactly by the image basis
            let im = m.image_basis();
            if !im.is_empty() {
                let b = QMat::from_cols(im);
                for j in 0..cols {
                    assert!(b.solve(&m.col(j)).is_some());
                }
            } else {
                assert!(m.is_zero());
            }
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = QMat::from_rows(vec![
            vec![rint(2), rint(1)],
            vec![rint(1), rint(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(2));
        let x = m.solve(&[rint(3), rint(2)]).unwrap();
        assert_eq!(x, vec![rint(1), rint(1)]);
        let sing = QMat::from_rows(vec![
            vec![rint(1), rint(2)],
            vec![rint(2), rint(4)],
        ]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[rint(0), rint(1)]).is_none());
    }
}
