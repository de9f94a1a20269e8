//! Sparse exact elimination for the large cochain differentials.

use crate::rat::{rzero, Rat};
use num_traits::Zero;
use std::collections::HashMap;

/// Sorted (column, value) pairs with nonzero values.
pub type SparseVec = Vec<(u32, Rat)>;

fn axpy(target: &mut SparseVec, factor: &Rat, src: &SparseVec) {
    // target := target - factor * src, merging sorted runs
    let mut out = Vec::with_capacity(target.len() + src.len());
    let mut a = target.iter().peekable();
    let mut b = src.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, _)), Some((cb, _))) if ca == cb => {
                let (c, va) = a.next().unwrap();
                let (_, vb) = b.next().unwrap();
                let v = va - &(factor * vb);
                if !v.is_zero() {
                    out.push((*c, v));
                }
            }
            (Some((ca, _)), Some((cb, _))) if ca < cb => {
                let (c, va) = a.next().unwrap();
                out.push((*c, va.clone()));
            }
            (Some(_), Some(_)) | (None, Some(_)) => {
                let (c, vb) = b.next().unwrap();
                out.push((*c, -(factor * vb)));
            }
            (Some(_), None) => {
                let (c, va) = a.next().unwrap();
                out.push((*c, va.clone()));
            }
            (None, None) => break,
        }
    }
    *target = out;
}

/// Rank of a sparse rational matrix. Pivot selection favors short rows and
/// unit pivots to limit fill-in; the arithmetic stays exact throughout.
pub fn sparse_rank(mut rows: Vec<SparseVec>) -> usize {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    while !rows.is_empty() {
        // column occupancy for Markowitz-style scoring
        let mut col_count: HashMap<u32, usize> = HashMap::new();
        for r in &rows {
            for (c, _) in r {
                *col_count.entry(*c).or_insert(0) += 1;
            }
        }
        let mut best: Option<(usize, usize, u32)> = None; // (score, row idx, col)
        for (i, r) in rows.iter().enumerate() {
            for (c, v) in r {
                let unit = v.numer().magnitude() == v.denom().magnitude();
                let score = (r.len() - 1) * (col_count[c] - 1) * 2 + usize::from(!unit);
                if best.as_ref().map_or(true, |(s, _, _)| score < *s) {
                    best = Some((score, i, *c));
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        let (_, pi, pc) = best.unwrap();
        let pivot_row = rows.swap_remove(pi);
        let pv = pivot_row
            .iter()
            .find(|(c, _)| *c == pc)
            .unwrap()
            .1
            .clone();
        for r in rows.iter_mut() {
            if let Some(pos) = r.iter().position(|(c, _)| *c == pc) {
                let f = &r[pos].1 / &pv;
                axpy(r, &f, &pivot_row);
            }
        }
        rows.retain(|r| !r.is_empty());
        rank += 1;
    }
    rank
}

/// Exact kernel basis of a sparse matrix with `cols` columns, given by rows.
/// Returns dense vectors.
pub fn sparse_kernel(rows: &[SparseVec], cols: usize) -> Vec<Vec<Rat>> {
    // ordered-column RREF keeping reduced pivot rows
    let mut work: Vec<SparseVec> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut reduced: Vec<(u32, SparseVec)> = Vec::new(); // (pivot col, row normalized)
    while !work.is_empty() {
        // leading-column buckets; take the smallest leading column, shortest row
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, r) in work.iter().enumerate() {
            let lead = r[0].0;
            let key = (lead, r.len());
            if best.map_or(true, |(bl, blen, _)| (bl, blen) > key) {
                best = Some((lead, r.len(), i));
            }
        }
        let (_, _, idx) = best.unwrap();
        let mut pivot_row = work.swap_remove(idx);
        let pc = pivot_row[0].0;
        let pv = pivot_row[0].1.clone();
        for (_, v) in pivot_row.iter_mut() {
            *v = &*v / &pv;
        }
        for r in work.iter_mut() {
            if r[0].0 == pc {
                let f = r[0].1.clone();
                axpy(r, &f, &pivot_row);
            } else if let Some(pos) = r.iter().position(|(c, _)| *c == pc) {
                let f = r[pos].1.clone();
                axpy(r, &f, &pivot_row);
            }
        }
        work.retain(|r| !r.is_empty());
        // back-reduce earlier pivot rows against the new one
        for (_, row) in reduced.iter_mut() {
            if let Some(pos) = row.iter().position(|(c, _)| *c == pc) {
                let f = row[pos].1.clone();
                axpy(row, &f, &pivot_row);
            }
        }
        reduced.push((pc, pivot_row));
    }
    let pivot_cols: std::collections::HashSet<u32> = reduced.iter().map(|(c, _)| *c).collect();
    let mut basis = Vec::new();
    for f in 0..cols as u32 {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut v = vec![rzero(); cols];
        v[f as usize] = crate::rat::rone();
        for (pc, row) in &reduced {
            if let Some((_, val)) = row.iter().find(|(c, _)| *c == f) {
                v[*pc as usize] = -val.clone();
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QMat;
    use crate::rat::rat;
    use rand::{Rng, SeedableRng};

    fn to_sparse(m: &QMat) -> Vec<SparseVec> {
        (0..m.rows)
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                    .map(|(j, v)| (j as u32, v.clone()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn sparse_agrees_with_dense_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=8);
            let cols = rng.gen_range(1..=8);
            let mut m = QMat::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    if rng.gen_bool(0.4) {
                        m[(i, j)] = rat(rng.gen_range(-3..=3), 1);
                    }
                }
            }
            let s = to_sparse(&m);
            assert_eq!(sparse_rank(s.clone()), m.rank());
            let k = sparse_kernel(&s, cols);
            assert_eq!(k.len(), cols - m.rank());
            for v in &k {
                assert!(m.mul_vec(v).iter().all(num_traits::Zero::is_zero));
            }
        }
    }
}
