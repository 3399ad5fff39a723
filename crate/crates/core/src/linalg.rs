//! Exact linear algebra: dense Gaussian elimination over any coefficient
//! field, and an incremental sparse eliminator over GF(p) that reports the
//! combination witnessing each dependent row (used for kernel extraction in
//! the v-number oracle).

use crate::field::{Field, Fp};

/// In-place row echelon reduction; returns the rank. Rows end up with their
/// pivot columns strictly increasing.
#[allow(clippy::needless_range_loop)]
pub fn row_reduce<F: Field>(mat: &mut Vec<Vec<F>>) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let ncols = mat[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].inv();
        for c in col..ncols {
            mat[rank][c] = mat[rank][c].mul(&inv);
        }
        for r in 0..mat.len() {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..ncols {
                    let delta = mat[rank][c].mul(&factor);
                    mat[r][c] = mat[r][c].sub(&delta);
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    mat.retain(|row| row.iter().any(|x| !x.is_zero()));
    rank
}

/// Whether `v` lies in the row span of `basis`.
pub fn in_span<F: Field>(basis: &[Vec<F>], v: &[F]) -> bool {
    let mut mat: Vec<Vec<F>> = basis.to_vec();
    let rank = row_reduce(&mut mat);
    let mut w = v.to_vec();
    for row in &mat {
        let col = row.iter().position(|x| !x.is_zero()).unwrap();
        if !w[col].is_zero() {
            let factor = w[col].clone();
            for c in col..w.len() {
                let delta = row[c].mul(&factor);
                w[c] = w[c].sub(&delta);
            }
        }
    }
    let _ = rank;
    w.iter().all(|x| x.is_zero())
}

/// Incremental sparse Gaussian eliminator over GF(p). Rows are pushed one
/// at a time with an identifying label; when a pushed row is linearly
/// dependent on earlier ones, the returned combination expresses zero as a
/// sum over row labels (including the new row with coefficient 1), i.e. a
/// kernel vector of the transposed system.
pub struct SparseEliminator {
    one: Fp,
    /// pivot column -> index into `rows`
    pivot_of_col: std::collections::HashMap<u32, usize>,
    /// monic rows, sorted by column; parallel sparse combination over labels
    rows: Vec<(SparseRow, SparseRow)>,
    track_history: bool,
}

/// Sparse vector: (index, coefficient) pairs sorted by index.
pub type SparseRow = Vec<(u32, Fp)>;

fn sparse_axpy<F: Field>(a: &[(u32, F)], c: F, b: &[(u32, F)]) -> Vec<(u32, F)> {
    // a + c*b, both sorted by index
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, b[j].1.mul(&c)));
            j += 1;
        } else {
            let s = a[i].1.add(&b[j].1.mul(&c));
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a sparse matrix over any coefficient field. Rows are sorted
/// (column, coefficient) lists; zero entries must be absent.
pub fn sparse_rank<F: Field>(rows: impl IntoIterator<Item = Vec<(u32, F)>>) -> usize {
    let mut pivot_of_col: std::collections::HashMap<u32, usize> = Default::default();
    let mut stored: Vec<Vec<(u32, F)>> = vec![];
    for mut row in rows {
        while let Some((col, coeff)) = row.first().cloned() {
            match pivot_of_col.get(&col) {
                Some(&idx) => row = sparse_axpy(&row, coeff.neg(), &stored[idx]),
                None => {
                    let inv = coeff.inv();
                    for e in row.iter_mut() {
                        e.1 = e.1.mul(&inv);
                    }
                    pivot_of_col.insert(col, stored.len());
                    stored.push(row);
                    break;
                }
            }
        }
    }
    stored.len()
}

impl SparseEliminator {
    pub fn new(one: Fp, track_history: bool) -> SparseEliminator {
        SparseEliminator {
            one,
            pivot_of_col: Default::default(),
            rows: vec![],
            track_history,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pushes a row (sorted sparse coordinates). Returns `Some(combo)` when
    /// the row is dependent; the combo lists (label, coefficient) pairs with
    /// Σ coeff·row_label = 0 and the new row's coefficient equal to 1.
    pub fn push(&mut self, mut row: Vec<(u32, Fp)>, label: u32) -> Option<Vec<(u32, Fp)>> {
        let mut combo = if self.track_history {
            vec![(label, self.one)]
        } else {
            vec![]
        };
        loop {
            let Some(&(col, coeff)) = row.first() else {
                return Some(combo);
            };
            match self.pivot_of_col.get(&col) {
                Some(&idx) => {
                    let c = coeff.neg();
                    row = sparse_axpy(&row, c, &self.rows[idx].0);
                    if self.track_history {
                        combo = sparse_axpy(&combo, c, &self.rows[idx].1);
                    }
                }
                None => {
                    let inv = coeff.inv();
                    for e in row.iter_mut() {
                        e.1 = e.1.mul(&inv);
                    }
                    if self.track_history {
                        for e in combo.iter_mut() {
                            e.1 = e.1.mul(&inv);
                        }
                    }
                    self.pivot_of_col.insert(col, self.rows.len());
                    self.rows.push((row, combo));
                    return None;
                }
            }
        }
    }
}
