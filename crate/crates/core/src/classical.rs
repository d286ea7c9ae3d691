//! Classical relations among the quadratic invariants: the unsigned Pfaffian
//! family for the symplectic action on an exterior algebra, and the unsigned
//! determinant family for the general linear action. Each relation is a
//! degree-(n+1) polynomial in commuting symbols whose image under the
//! substitution into exterior-algebra quadratics vanishes identically; the
//! vanishing is checked here by exact multilinear expansion.

use crate::{rat, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Which invariant-theory family a computation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Sp,
    Gl,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Sp => write!(f, "sp"),
            Family::Gl => write!(f, "gl"),
        }
    }
}

/// A commuting symbol: Q_{a,b} with Q_{a,b} = Q_{b,a} for the sp family, or
/// P_{a,b} with no symmetry for the gl family.
pub type Sym = (u32, u32);

/// Polynomial in the quadratic symbols with rational coefficients. Monomials
/// are sorted lists of symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalPoly {
    pub family: Family,
    pub terms: BTreeMap<Vec<Sym>, Rat>,
}

impl ClassicalPoly {
    pub fn zero(family: Family) -> Self {
        ClassicalPoly { family, terms: BTreeMap::new() }
    }

    fn norm_sym(family: Family, s: Sym) -> Sym {
        match family {
            Family::Sp => (s.0.min(s.1), s.0.max(s.1)),
            Family::Gl => s,
        }
    }

    pub fn add_term(&mut self, mut mono: Vec<Sym>, c: Rat) {
        if c.is_zero() {
            return;
        }
        for s in mono.iter_mut() {
            *s = Self::norm_sym(self.family, *s);
        }
        mono.sort_unstable();
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply every monomial by one symbol.
    pub fn mul_sym(&self, s: Sym) -> ClassicalPoly {
        let mut out = ClassicalPoly::zero(self.family);
        for (mono, c) in &self.terms {
            let mut m = mono.clone();
            m.push(s);
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn add(&self, other: &ClassicalPoly) -> ClassicalPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

/// The unsigned Pfaffian relation for the sp family at rank n, indexed by a
/// weakly increasing list of length 2n+2. Base case at n = 1:
///   q_{i0,i1} q_{i2,i3} + q_{i0,i2} q_{i1,i3} + q_{i0,i3} q_{i1,i2};
/// for n > 1 it expands along the first entry.
pub fn sp_relation(index: &[u32]) -> ClassicalPoly {
    assert!(index.len() >= 4 && index.len().is_multiple_of(2), "sp index lists have length 2n+2");
    if index.len() == 4 {
        let (i0, i1, i2, i3) = (index[0], index[1], index[2], index[3]);
        let mut p = ClassicalPoly::zero(Family::Sp);
        p.add_term(vec![(i0, i1), (i2, i3)], Rat::one());
        p.add_term(vec![(i0, i2), (i1, i3)], Rat::one());
        p.add_term(vec![(i0, i3), (i1, i2)], Rat::one());
        return p;
    }
    let mut out = ClassicalPoly::zero(Family::Sp);
    for r in 1..index.len() {
        let mut rest: Vec<u32> = Vec::with_capacity(index.len() - 2);
        for (t, v) in index.iter().enumerate() {
            if t != 0 && t != r {
                rest.push(*v);
            }
        }
        out = out.add(&sp_relation(&rest).mul_sym((index[0], index[r])));
    }
    out
}

/// The unsigned determinant relation for the gl family at rank n, indexed by
/// two weakly increasing lists of length n+1. Base case at n = 1:
///   p_{i0,j0} p_{i1,j1} + p_{i1,j0} p_{i0,j1};
/// for n > 1 it expands along the first column entry.
pub fn gl_relation(row: &[u32], col: &[u32]) -> ClassicalPoly {
    assert!(row.len() == col.len() && row.len() >= 2, "gl index lists have equal length n+1 >= 2");
    if row.len() == 2 {
        let mut p = ClassicalPoly::zero(Family::Gl);
        p.add_term(vec![(row[0], col[0]), (row[1], col[1])], Rat::one());
        p.add_term(vec![(row[1], col[0]), (row[0], col[1])], Rat::one());
        return p;
    }
    let mut out = ClassicalPoly::zero(Family::Gl);
    let col_rest = &col[1..];
    for r in 0..row.len() {
        let mut row_rest: Vec<u32> = Vec::with_capacity(row.len() - 1);
        for (t, v) in row.iter().enumerate() {
            if t != r {
                row_rest.push(*v);
            }
        }
        out = out.add(&gl_relation(&row_rest, col_rest).mul_sym((row[r], col[0])));
    }
    out
}

// ---------------------------------------------------------------------------
// exterior-algebra evaluation
// ---------------------------------------------------------------------------

/// Odd variable x_{i,k} or y_{i,k}: (is_y, color i, level k) packed to an id.
fn var_id(is_y: bool, color: u32, level: u32) -> u32 {
    (level << 12) | (color << 1) | (is_y as u32)
}

/// Multiply two exterior monomials (sorted id lists); None if a variable
/// repeats, otherwise the merged list with the sign of the shuffle.
fn ext_mul(a: &[u32], b: &[u32]) -> Option<(Vec<u32>, i64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1i64;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] crosses the remaining a-entries
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, sign))
}

/// Expansion of one quadratic symbol into exterior terms, for n colors.
fn symbol_image(family: Family, s: Sym, n: u32) -> Vec<(Vec<u32>, Rat)> {
    let (a, b) = s;
    let mut out = Vec::new();
    let mut push = |u: u32, v: u32, c: Rat| {
        // store ids ascending, tracking the odd swap sign
        let (pair, sign) = if u < v { (vec![u, v], 1) } else { (vec![v, u], -1) };
        out.push((pair, c * rat(sign, 1)));
    };
    match family {
        Family::Sp => {
            // q_{a,b} = (1/2) sum_i (x_{i,a} y_{i,b} + x_{i,b} y_{i,a})
            for i in 1..=n {
                if a == b {
                    push(var_id(false, i, a), var_id(true, i, a), Rat::one());
                } else {
                    push(var_id(false, i, a), var_id(true, i, b), rat(1, 2));
                    push(var_id(false, i, b), var_id(true, i, a), rat(1, 2));
                }
            }
        }
        Family::Gl => {
            // p_{a,b} = sum_i x_{i,a} y_{i,b}
            for i in 1..=n {
                push(var_id(false, i, a), var_id(true, i, b), Rat::one());
            }
        }
    }
    out
}

/// Exact image of the polynomial in the exterior algebra on n colors; the
/// relation is verified iff all coefficients cancel.
pub fn exterior_image(poly: &ClassicalPoly, n: u32) -> BTreeMap<Vec<u32>, Rat> {
    let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    for (mono, c) in &poly.terms {
        // expand the product of quadratics
        let mut partial: Vec<(Vec<u32>, Rat)> = vec![(Vec::new(), c.clone())];
        for s in mono {
            let image = symbol_image(poly.family, *s, n);
            let mut next = Vec::new();
            for (m1, c1) in &partial {
                for (m2, c2) in &image {
                    if let Some((m, sign)) = ext_mul(m1, m2) {
                        next.push((m, c1 * c2 * rat(sign, 1)));
                    }
                }
            }
            partial = next;
        }
        for (m, v) in partial {
            let entry = acc.entry(m).or_insert_with(Rat::zero);
            *entry += v;
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

/// Compute the relation polynomial and verify that its exterior image
/// vanishes. For sp the list has length 2n+2; for gl, both lists have length
/// n+1 and `col` must be Some.
pub fn classical_relation(
    family: Family,
    index: &[u32],
    col: Option<&[u32]>,
    n: u32,
) -> (ClassicalPoly, bool) {
    let poly = match family {
        Family::Sp => sp_relation(index),
        Family::Gl => gl_relation(index, col.expect("gl family needs a second index list")),
    };
    let verified = exterior_image(&poly, n).is_empty();
    (poly, verified)
}
