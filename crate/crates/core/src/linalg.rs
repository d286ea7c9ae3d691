//! Exact dense linear algebra over the rationals: incremental rank and small
//! linear solves. Matrices here are a few hundred columns at most, so plain
//! Gaussian elimination with exact arithmetic is the right tool.

use crate::Rat;
use num::Zero;

/// Incremental row-echelon accumulator: feed rows, read off the rank.
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce the row against the current echelon set; returns true if it was
    /// independent (rank grew).
    pub fn add_row(&mut self, mut row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.cols);
        for (r, p) in self.rows.iter().zip(&self.pivots) {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for j in *p..self.cols {
                    let t = &r[j] * &f;
                    row[j] -= t;
                }
            }
        }
        match row.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(p) => {
                let inv = row[p].clone().recip();
                for c in row.iter_mut() {
                    *c *= &inv;
                }
                self.rows.push(row);
                self.pivots.push(p);
                true
            }
        }
    }
}

/// Solve sum_j x_j * columns[j] = target exactly. Returns one solution (free
/// variables set to zero) or None if the system is inconsistent.
pub fn solve_in_span(columns: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let n_rows = target.len();
    let n_cols = columns.len();
    for c in columns {
        assert_eq!(c.len(), n_rows);
    }
    // augmented matrix, rows indexed by coordinate
    let mut m: Vec<Vec<Rat>> = (0..n_rows)
        .map(|i| {
            let mut row: Vec<Rat> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n_cols];
    let mut next_row = 0usize;
    for col in 0..n_cols {
        let Some(pr) = (next_row..n_rows).find(|r| !m[*r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, pr);
        let inv = m[next_row][col].clone().recip();
        for j in col..=n_cols {
            m[next_row][j] *= &inv;
        }
        for r in 0..n_rows {
            if r != next_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=n_cols {
                    let t = &m[next_row][j] * &f;
                    m[r][j] -= t;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == n_rows {
            break;
        }
    }
    // inconsistency: a row with zero coefficients but nonzero rhs
    for r in 0..n_rows {
        if m[r][..n_cols].iter().all(|c| c.is_zero()) && !m[r][n_cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n_cols];
    for (col, pr) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pr {
            x[col] = m[*r][n_cols].clone();
        }
    }
    // pivot columns may still interact with later free columns; since free
    // variables are zero, the pivot rows read off directly
    Some(x)
}

/// Verify a candidate solution exactly.
pub fn check_solution(columns: &[Vec<Rat>], x: &[Rat], target: &[Rat]) -> bool {
    let n = target.len();
    let mut acc = vec![Rat::zero(); n];
    for (c, xi) in columns.iter().zip(x) {
        if xi.is_zero() {
            continue;
        }
        for i in 0..n {
            acc[i] += &c[i] * xi;
        }
    }
    acc.iter().zip(target).all(|(a, b)| a == b)
}

/// Rank of an explicit list of rows.
pub fn rank_of_rows(cols: usize, rows: impl IntoIterator<Item = Vec<Rat>>) -> usize {
    let mut red = RowReducer::new(cols);
    for r in rows {
        red.add_row(r);
    }
    red.rank()
}
