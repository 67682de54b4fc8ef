//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let mut m = RatMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix row");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form (pivot columns chosen left to right) and the
    /// list of pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut().skip(c) {
                *x *= &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, one vector per free column, with a 1 in
    /// that column (so the basis is itself in reduced echelon form).
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (rows, pivots) = self.rref();
        let mut free = Vec::new();
        let mut pi = 0;
        for c in 0..self.cols {
            if pi < pivots.len() && pivots[pi] == c {
                pi += 1;
            } else {
                free.push(c);
            }
        }
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }
}

/// One solution of `M v = rhs` (free variables set to zero), or `None` if
/// the system is inconsistent.
pub fn solve_linear(m: &RatMatrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(rhs.len(), m.rows);
    let mut aug = RatMatrix::zeros(m.rows, m.cols + 1);
    for (i, b) in rhs.iter().enumerate() {
        for j in 0..m.cols {
            let v = m.get(i, j);
            if !v.is_zero() {
                aug.set(i, j, v.clone());
            }
        }
        aug.set(i, m.cols, b.clone());
    }
    let (rows, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut sol = vec![Rational::zero(); m.cols];
    for (row, &p) in rows.iter().zip(&pivots) {
        sol[p] = row[m.cols].clone();
    }
    Some(sol)
}

/// Incremental row reduction: rows are fed one at a time and only the
/// independent ones are kept, in reduced echelon form. Suited to tall sparse
/// constraint systems where most rows are dependent.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    /// `(pivot column, row)` with a 1 at the pivot and zeros in every other
    /// pivot column.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Adds a sparse row given as `(column, value)` pairs; returns whether it
    /// was independent of the rows seen so far.
    pub fn push_sparse(&mut self, entries: &[(usize, Rational)]) -> bool {
        let mut row = vec![Rational::zero(); self.cols];
        for (c, v) in entries {
            row[*c] += v;
        }
        self.push(row)
    }

    pub fn push(&mut self, mut row: Vec<Rational>) -> bool {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        for (p, r) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let f = row[*p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].recip();
        row.iter_mut().skip(p).for_each(|x| *x *= &inv);
        for (_, r) in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, row));
        true
    }

    /// Basis of the common nullspace of the rows, one vector per free column
    /// with a 1 there (reduced echelon form, free columns left to right).
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        (0..self.cols)
            .filter(|c| pivots.binary_search(c).is_err())
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (p, row) in &self.rows {
                    v[*p] = -row[f].clone();
                }
                v
            })
            .collect()
    }
}

/// Row-reduce a list of vectors (rows) into a canonical basis of their span.
pub fn canonical_span(vectors: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    RatMatrix::from_rows(vectors.to_vec(), cols).rref().0
}
