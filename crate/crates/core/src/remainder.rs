//! Remainders of the quantum corrections of the classical relations: the
//! exact rational coefficient of the single surviving linear generator in the
//! degree-2 part of each corrected relation. Nonvanishing of the all-zero
//! remainder is what produces the decoupling relations, so these values carry
//! the whole minimal-generation argument.
//!
//! Both families have a closed base case at rank 1 and a recursion that walks
//! down one rank while bumping a pair of entries; the recursion preserves the
//! total weight, and on even-entry lists every term keeps a fixed sign.

use crate::{rat, Rat};
use num::Zero;
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RemainderError {
    /// Remainders are defined only when the total weight is even.
    ParityViolation,
    BadLength,
}

impl fmt::Display for RemainderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RemainderError::ParityViolation => {
                write!(f, "remainder undefined: total index sum is odd")
            }
            RemainderError::BadLength => write!(f, "index list has the wrong length for this rank"),
        }
    }
}

impl std::error::Error for RemainderError {}

/// Memoized remainder values, keyed on sorted index lists.
#[derive(Default)]
pub struct RemainderTable {
    sp: HashMap<(u32, Vec<u32>), Rat>,
    gl: HashMap<(u32, Vec<u32>, Vec<u32>), Rat>,
}

impl RemainderTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// R_n(I) for the sp family; I must have length 2n+2. The input is sorted
    /// before lookup.
    pub fn sp(&mut self, n: u32, index: &[u32]) -> Result<Rat, RemainderError> {
        if index.len() != (2 * n + 2) as usize {
            return Err(RemainderError::BadLength);
        }
        if index.iter().map(|v| *v as u64).sum::<u64>() % 2 != 0 {
            return Err(RemainderError::ParityViolation);
        }
        let mut key: Vec<u32> = index.to_vec();
        key.sort_unstable();
        Ok(self.sp_sorted(n, key))
    }

    fn sp_sorted(&mut self, n: u32, key: Vec<u32>) -> Rat {
        if let Some(v) = self.sp.get(&(n, key.clone())) {
            return v.clone();
        }
        let val = if n == 1 {
            sp_base(&key)
        } else {
            sp_recurse(self, n, &key)
        };
        self.sp.insert((n, key), val.clone());
        val
    }

    /// R_n(I, J) for the gl family; both lists must have length n+1. Inputs
    /// are sorted before lookup.
    pub fn gl(&mut self, n: u32, row: &[u32], col: &[u32]) -> Result<Rat, RemainderError> {
        if row.len() != (n + 1) as usize || col.len() != (n + 1) as usize {
            return Err(RemainderError::BadLength);
        }
        let total: u64 = row.iter().chain(col).map(|v| *v as u64).sum();
        if !total.is_multiple_of(2) {
            return Err(RemainderError::ParityViolation);
        }
        let mut rk = row.to_vec();
        let mut ck = col.to_vec();
        rk.sort_unstable();
        ck.sort_unstable();
        Ok(self.gl_sorted(n, rk, ck))
    }

    fn gl_sorted(&mut self, n: u32, row: Vec<u32>, col: Vec<u32>) -> Rat {
        if let Some(v) = self.gl.get(&(n, row.clone(), col.clone())) {
            return v.clone();
        }
        let val = if n == 1 {
            gl_base(&row, &col)
        } else {
            gl_recurse(self, n, &row, &col)
        };
        self.gl.insert((n, row, col), val.clone());
        val
    }
}

fn sign_pow(k: u32) -> Rat {
    if k.is_multiple_of(2) {
        rat(1, 1)
    } else {
        rat(-1, 1)
    }
}

/// Rank-1 sp base case: over each unordered pair {a,b} of positions, the four
/// crossing signs (-1)^{i_x+i_y} (x in the pair, y outside) divided by
/// 2 + i_a + i_b, all scaled by -1/8.
pub fn sp_base(index: &[u32]) -> Rat {
    assert_eq!(index.len(), 4);
    let mut acc = Rat::zero();
    for a in 0..4 {
        for b in (a + 1)..4 {
            let mut num = Rat::zero();
            for x in [a, b] {
                for y in 0..4 {
                    if y != a && y != b {
                        num += sign_pow(index[x] + index[y]);
                    }
                }
            }
            acc += num * rat(1, 2 + index[a] as i64 + index[b] as i64);
        }
    }
    acc * rat(-1, 8)
}

/// Even-entry reduction of the rank-1 sp base case:
/// -(1/2) sum over pairs 1/(2 + i_a + i_b). Valid only on even lists; kept as
/// an independent code path for cross-checking.
pub fn sp_base_even_reduced(index: &[u32]) -> Rat {
    assert_eq!(index.len(), 4);
    assert!(index.iter().all(|v| v % 2 == 0), "reduction applies to even-entry lists");
    let mut acc = Rat::zero();
    for a in 0..4 {
        for b in (a + 1)..4 {
            acc += rat(1, 2 + index[a] as i64 + index[b] as i64);
        }
    }
    acc * rat(-1, 2)
}

fn sp_recurse(table: &mut RemainderTable, n: u32, index: &[u32]) -> Rat {
    let len = index.len(); // 2n+2
    let mut acc = Rat::zero();
    for r in 1..len {
        // positions other than 0 and r
        let others: Vec<usize> = (0..len).filter(|t| *t != 0 && *t != r).collect();
        for &a in &others {
            // bump i_a by i_0 + i_r + 2 in the list with positions 0, r removed
            let mut child: Vec<u32> = Vec::with_capacity(len - 2);
            for &t in &others {
                let mut v = index[t];
                if t == a {
                    v += index[0] + index[r] + 2;
                }
                child.push(v);
            }
            child.sort_unstable();
            let rv = table.sp_sorted(n - 1, child);
            let term_a = sign_pow(index[0] + 1) * rat(1, index[0] as i64 + index[a] as i64 + 2);
            let term_r = sign_pow(index[r] + 1) * rat(1, index[r] as i64 + index[a] as i64 + 2);
            acc += (term_a + term_r) * rv;
        }
    }
    acc * rat(-1, 2)
}

/// Rank-1 gl base case:
/// (-1)^{1+j_0+j_1} ( 1/(2+i_0+j_0) + 1/(2+i_1+j_0) + 1/(2+i_0+j_1) + 1/(2+i_1+j_1) ).
pub fn gl_base(row: &[u32], col: &[u32]) -> Rat {
    assert!(row.len() == 2 && col.len() == 2);
    let mut acc = Rat::zero();
    for i in row {
        for j in col {
            acc += rat(1, 2 + *i as i64 + *j as i64);
        }
    }
    acc * sign_pow(1 + col[0] + col[1])
}

fn gl_recurse(table: &mut RemainderTable, n: u32, row: &[u32], col: &[u32]) -> Rat {
    let len = row.len(); // n+1
    let mut acc = Rat::zero();
    let col_rest: Vec<u32> = col[1..].to_vec();
    for r in 0..len {
        let row_rest: Vec<u32> = (0..len).filter(|t| *t != r).map(|t| row[t]).collect();
        let bump = row[r] + col[0] + 2;
        // first sum: bump one surviving row entry
        for k in 0..row_rest.len() {
            let mut child = row_rest.clone();
            child[k] += bump;
            child.sort_unstable();
            let rv = table.gl_sorted(n - 1, child, col_rest.clone());
            acc += sign_pow(col[0]) * rat(1, 2 + row_rest[k] as i64 + col[0] as i64) * rv;
        }
        // second sum: bump one surviving column entry
        for l in 0..col_rest.len() {
            let mut child = col_rest.clone();
            child[l] += bump;
            child.sort_unstable();
            let rv = table.gl_sorted(n - 1, row_rest.clone(), child);
            acc += sign_pow(row[r]) * rat(1, 2 + col_rest[l] as i64 + row[r] as i64) * rv;
        }
    }
    acc
}

/// All weakly increasing lists of the given length with entries drawn from
/// the given values.
pub fn sorted_lists(values: &[u32], len: usize) -> Vec<Vec<u32>> {
    fn rec(values: &[u32], from: usize, len: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == len {
            out.push(acc.clone());
            return;
        }
        for t in from..values.len() {
            acc.push(values[t]);
            rec(values, t, len, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(values, 0, len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;

    #[test]
    fn sp_base_values() {
        let mut t = RemainderTable::new();
        // six pair terms of 4/2, times -1/8
        assert_eq!(t.sp(1, &[0, 0, 0, 0]).unwrap(), rat(-3, 2));
        // pair sums {2,2,2,4,4,4} under the even reduction
        assert_eq!(t.sp(1, &[0, 0, 0, 2]).unwrap(), rat(-9, 8));
    }

    #[test]
    fn sp_parity_rejected() {
        let mut t = RemainderTable::new();
        assert_eq!(t.sp(1, &[0, 0, 0, 1]), Err(RemainderError::ParityViolation));
        assert_eq!(t.sp(1, &[0, 0, 0]), Err(RemainderError::BadLength));
    }

    #[test]
    fn gl_base_value() {
        let mut t = RemainderTable::new();
        assert_eq!(t.gl(1, &[0, 0], &[0, 0]).unwrap(), rat(-2, 1));
    }

    #[test]
    fn base_matches_even_reduction() {
        let mut count = 0;
        for list in sorted_lists(&[0, 2, 4, 6], 4) {
            assert_eq!(sp_base(&list), sp_base_even_reduced(&list), "at {list:?}");
            count += 1;
        }
        assert!(count >= 20, "spec asks for at least 20 lists, got {count}");
    }

    #[test]
    fn even_entry_remainders_negative() {
        let mut t = RemainderTable::new();
        for n in 1..=3u32 {
            for list in sorted_lists(&[0, 2, 4], (2 * n + 2) as usize) {
                let v = t.sp(n, &list).unwrap();
                assert!(v.is_negative(), "R_{n}({list:?}) = {v} should be negative");
            }
        }
    }

    #[test]
    fn gl_even_entry_remainders_negative() {
        let mut t = RemainderTable::new();
        for n in 1..=2u32 {
            for row in sorted_lists(&[0, 2], (n + 1) as usize) {
                for col in sorted_lists(&[0, 2], (n + 1) as usize) {
                    let v = t.gl(n, &row, &col).unwrap();
                    assert!(v.is_negative(), "R_{n}({row:?},{col:?}) = {v}");
                }
            }
        }
    }

    /// The recursion privileges the first entry; the base case is symmetric.
    /// Whether the raw recursion is permutation invariant is recorded here
    /// empirically (the public API always sorts, so this is observational).
    #[test]
    fn permutation_sensitivity_recorded() {
        let mut t = RemainderTable::new();
        let sorted = vec![0u32, 0, 0, 0, 0, 2];
        let v_sorted = t.sp(2, &sorted).unwrap();
        // recompute with the recursion entered at a rotated list, bypassing the sort
        let rotated = vec![2u32, 0, 0, 0, 0, 0];
        let v_rotated = sp_recurse(&mut t, 2, &rotated);
        let agree = v_sorted == v_rotated;
        eprintln!(
            "permutation check: R_2(sorted)={v_sorted}, R_2(rotated)={v_rotated}, agree={agree}"
        );
        // no assertion on `agree`: the recursion is only defined on sorted lists
        assert!(v_sorted.is_negative());
    }
}
