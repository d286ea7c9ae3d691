//! Reductive Lie algebra actions on the symplectic fermion generators, and
//! exact invariant-subspace dimensions by rational row reduction.
//!
//! Each element acts by the same matrix on every mode index, extended to
//! monomials as an even derivation. The supported algebras are the ones whose
//! invariants the orbifold theory needs: sp(2n) and gl(n) on the color index,
//! so(m) and gl(m) on the flavor index, and the two product combinations.

use crate::fock::{weight_basis, GeneratorId, Mode, Species, State};
use crate::linalg::RowReducer;
use crate::{rint, Rat};
use num::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A rational matrix on the span of the 2nm generators, acting identically on
/// every mode index.
#[derive(Clone, Debug)]
pub struct LieGenerator {
    pub n: u16,
    pub m: u16,
    /// entries[(target, source)] = coefficient of target in X(source)
    pub entries: BTreeMap<(GeneratorId, GeneratorId), Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    /// The matrix does not infinitesimally preserve the e/f pairing.
    PairingViolated,
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::PairingViolated => write!(f, "matrix does not preserve the symplectic pairing"),
        }
    }
}

impl std::error::Error for LieError {}

fn all_generators(n: u16, m: u16) -> Vec<GeneratorId> {
    let mut v = Vec::new();
    for species in [Species::E, Species::F] {
        for color in 1..=n {
            for flavor in 1..=m {
                v.push(GeneratorId { species, color, flavor });
            }
        }
    }
    v
}

/// The symplectic form omega(e^{ij}, f^{kl}) = delta delta, antisymmetric.
fn pairing_form(a: GeneratorId, b: GeneratorId) -> Rat {
    if a.color == b.color && a.flavor == b.flavor {
        match (a.species, b.species) {
            (Species::E, Species::F) => rint(1),
            (Species::F, Species::E) => rint(-1),
            _ => Rat::zero(),
        }
    } else {
        Rat::zero()
    }
}

impl LieGenerator {
    pub fn new(n: u16, m: u16) -> Self {
        LieGenerator { n, m, entries: BTreeMap::new() }
    }

    pub fn set(&mut self, target: GeneratorId, source: GeneratorId, c: Rat) {
        if c.is_zero() {
            self.entries.remove(&(target, source));
        } else {
            self.entries.insert((target, source), c);
        }
    }

    pub fn image_of(&self, source: GeneratorId) -> Vec<(GeneratorId, Rat)> {
        self.entries
            .iter()
            .filter(|((_, s), _)| *s == source)
            .map(|((t, _), c)| (*t, c.clone()))
            .collect()
    }

    /// True iff omega(Xu, v) + omega(u, Xv) = 0 for all generators u, v.
    pub fn preserves_pairing(&self) -> bool {
        let gens = all_generators(self.n, self.m);
        for &u in &gens {
            for &v in &gens {
                let mut acc = Rat::zero();
                for (t, c) in self.image_of(u) {
                    acc += &c * pairing_form(t, v);
                }
                for (t, c) in self.image_of(v) {
                    acc += &c * pairing_form(u, t);
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Diagonal matrices give a conserved charge per generator.
    pub fn as_diagonal(&self) -> Option<BTreeMap<GeneratorId, Rat>> {
        if self.entries.keys().any(|(t, s)| t != s) {
            return None;
        }
        let mut d = BTreeMap::new();
        for g in all_generators(self.n, self.m) {
            d.insert(g, self.entries.get(&(g, g)).cloned().unwrap_or_else(Rat::zero));
        }
        Some(d)
    }
}

/// Leibniz action of X on a state; errors if X breaks the pairing invariant.
pub fn lie_action(x: &LieGenerator, s: &State) -> Result<State, LieError> {
    if !x.preserves_pairing() {
        return Err(LieError::PairingViolated);
    }
    Ok(lie_action_unchecked(x, s))
}

pub(crate) fn lie_action_unchecked(x: &LieGenerator, s: &State) -> State {
    let mut out = State::zero();
    for (modes, c) in s.terms() {
        for (j, mj) in modes.iter().enumerate() {
            for (target, xc) in x.image_of(mj.gen) {
                let mut nm = modes.clone();
                nm[j] = Mode::new(target, mj.index);
                out.add_monomial(nm, c * &xc);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// algebra bases
// ---------------------------------------------------------------------------

/// Basis of sp(2n) acting on the color index of every flavor: block matrices
/// [[A, B], [C, -A^T]] with B, C symmetric.
pub fn sp_color_basis(n: u16, m: u16) -> Vec<LieGenerator> {
    let mut out = Vec::new();
    // A-part: e_j -> e_i, f_i -> -f_j
    for i in 1..=n {
        for j in 1..=n {
            let mut x = LieGenerator::new(n, m);
            for fl in 1..=m {
                x.set(GeneratorId::e(i, fl), GeneratorId::e(j, fl), rint(1));
                x.set(GeneratorId::f(j, fl), GeneratorId::f(i, fl), rint(-1));
            }
            out.push(x);
        }
    }
    // B-part (raising): f_j -> e_i, f_i -> e_j for i <= j
    for i in 1..=n {
        for j in i..=n {
            let mut x = LieGenerator::new(n, m);
            for fl in 1..=m {
                let mut add = |t: GeneratorId, s: GeneratorId| {
                    let prev = x.entries.get(&(t, s)).cloned().unwrap_or_else(Rat::zero);
                    x.set(t, s, prev + rint(1));
                };
                add(GeneratorId::e(i, fl), GeneratorId::f(j, fl));
                add(GeneratorId::e(j, fl), GeneratorId::f(i, fl));
            }
            out.push(x);
        }
    }
    // C-part (lowering): e_j -> f_i, e_i -> f_j for i <= j
    for i in 1..=n {
        for j in i..=n {
            let mut x = LieGenerator::new(n, m);
            for fl in 1..=m {
                let mut add = |t: GeneratorId, s: GeneratorId| {
                    let prev = x.entries.get(&(t, s)).cloned().unwrap_or_else(Rat::zero);
                    x.set(t, s, prev + rint(1));
                };
                add(GeneratorId::f(i, fl), GeneratorId::e(j, fl));
                add(GeneratorId::f(j, fl), GeneratorId::e(i, fl));
            }
            out.push(x);
        }
    }
    out
}

/// Basis of gl(n) on the color index: e -> Xe, f -> -X^T f.
pub fn gl_color_basis(n: u16, m: u16) -> Vec<LieGenerator> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut x = LieGenerator::new(n, m);
            for fl in 1..=m {
                x.set(GeneratorId::e(i, fl), GeneratorId::e(j, fl), rint(1));
                x.set(GeneratorId::f(j, fl), GeneratorId::f(i, fl), rint(-1));
            }
            out.push(x);
        }
    }
    out
}

/// Basis of so(m) on the flavor index of both e and f: antisymmetric matrices.
pub fn so_flavor_basis(n: u16, m: u16) -> Vec<LieGenerator> {
    let mut out = Vec::new();
    for j1 in 1..=m {
        for j2 in (j1 + 1)..=m {
            let mut x = LieGenerator::new(n, m);
            for c in 1..=n {
                for sp in [Species::E, Species::F] {
                    let g = |fl| GeneratorId { species: sp, color: c, flavor: fl };
                    x.set(g(j1), g(j2), rint(1));
                    x.set(g(j2), g(j1), rint(-1));
                }
            }
            out.push(x);
        }
    }
    out
}

/// Basis of gl(m) on the flavor index: A on e-flavors, -A^T on f-flavors.
pub fn gl_flavor_basis(n: u16, m: u16) -> Vec<LieGenerator> {
    let mut out = Vec::new();
    for j1 in 1..=m {
        for j2 in 1..=m {
            let mut x = LieGenerator::new(n, m);
            for c in 1..=n {
                x.set(GeneratorId::e(c, j1), GeneratorId::e(c, j2), rint(1));
                x.set(GeneratorId::f(c, j2), GeneratorId::f(c, j1), rint(-1));
            }
            out.push(x);
        }
    }
    out
}

/// The reductive groups whose invariants the orbifold theory computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sp,
    Gl,
    SpTimesSo,
    GlTimesGl,
}

impl GroupSpec {
    pub fn basis(&self, n: u16, m: u16) -> Vec<LieGenerator> {
        match self {
            GroupSpec::Sp => sp_color_basis(n, m),
            GroupSpec::Gl => gl_color_basis(n, m),
            GroupSpec::SpTimesSo => {
                let mut b = sp_color_basis(n, m);
                b.extend(so_flavor_basis(n, m));
                b
            }
            GroupSpec::GlTimesGl => {
                let mut b = gl_color_basis(n, m);
                b.extend(gl_flavor_basis(n, m));
                b
            }
        }
    }
}

// ---------------------------------------------------------------------------
// invariant dimensions
// ---------------------------------------------------------------------------

/// Exact dimension of the G-invariant subspace at the given weight: the joint
/// kernel of the Lie algebra basis. Diagonal basis elements carve out the
/// zero-charge sector; the rest are stacked and rank-reduced on that sector.
pub fn invariant_dimension(group: GroupSpec, n: u16, m: u16, w: u32) -> usize {
    let basis = group.basis(n, m);
    let monomials = weight_basis(n, m, w);
    invariant_dimension_with(&basis, &monomials)
}

pub fn invariant_dimension_with(basis: &[LieGenerator], monomials: &[Vec<Mode>]) -> usize {
    let diags: Vec<BTreeMap<GeneratorId, Rat>> =
        basis.iter().filter_map(LieGenerator::as_diagonal).collect();
    let others: Vec<&LieGenerator> = basis.iter().filter(|x| x.as_diagonal().is_none()).collect();

    let charge = |modes: &Vec<Mode>| -> Vec<Rat> {
        diags
            .iter()
            .map(|d| {
                let mut acc = Rat::zero();
                for mo in modes {
                    acc += d[&mo.gen].clone();
                }
                acc
            })
            .collect()
    };

    let sector: Vec<&Vec<Mode>> = monomials
        .iter()
        .filter(|mo| charge(mo).iter().all(Rat::is_zero))
        .collect();
    let d0 = sector.len();
    if d0 == 0 {
        return 0;
    }

    // rows of the stacked constraint matrix, grouped by (element, target monomial)
    let mut rank = RowReducer::new(d0);
    for x in &others {
        let mut rows: HashMap<Vec<Mode>, Vec<Rat>> = HashMap::new();
        for (col, mo) in sector.iter().enumerate() {
            let mut st = State::zero();
            st.add_monomial((*mo).clone(), Rat::from_integer(1.into()));
            let image = lie_action_unchecked(x, &st);
            for (target, c) in image.terms() {
                rows.entry(target.clone()).or_insert_with(|| vec![Rat::zero(); d0])[col] = c.clone();
            }
        }
        let mut keys: Vec<_> = rows.keys().cloned().collect();
        keys.sort();
        for k in keys {
            rank.add_row(rows.remove(&k).unwrap());
            if rank.rank() == d0 {
                return 0;
            }
        }
    }
    d0 - rank.rank()
}

/// Naive joint kernel over the full monomial basis, for cross-checking the
/// sector-split computation at small weights.
pub fn invariant_dimension_naive(group: GroupSpec, n: u16, m: u16, w: u32) -> usize {
    let basis = group.basis(n, m);
    let monomials = weight_basis(n, m, w);
    let dim = monomials.len();
    if dim == 0 {
        return 0;
    }
    let mut rank = RowReducer::new(dim);
    for x in &basis {
        let mut rows: HashMap<Vec<Mode>, Vec<Rat>> = HashMap::new();
        for (col, mo) in monomials.iter().enumerate() {
            let mut st = State::zero();
            st.add_monomial(mo.clone(), Rat::from_integer(1.into()));
            let image = lie_action_unchecked(x, &st);
            for (target, c) in image.terms() {
                rows.entry(target.clone()).or_insert_with(|| vec![Rat::zero(); dim])[col] = c.clone();
            }
        }
        let mut keys: Vec<_> = rows.keys().cloned().collect();
        keys.sort();
        for k in keys {
            rank.add_row(rows.remove(&k).unwrap());
        }
    }
    dim - rank.rank()
}

/// Raw dimensions of the diagonal-charge sectors at one weight, keyed by the
/// charge vector of the group's diagonal basis elements.
pub fn charge_sector_dims(group: GroupSpec, n: u16, m: u16, w: u32) -> BTreeMap<Vec<Rat>, usize> {
    let basis = group.basis(n, m);
    let diags: Vec<BTreeMap<GeneratorId, Rat>> =
        basis.iter().filter_map(LieGenerator::as_diagonal).collect();
    let mut out: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
    for mo in weight_basis(n, m, w) {
        let key: Vec<Rat> = diags
            .iter()
            .map(|d| {
                let mut acc = Rat::zero();
                for mode in &mo {
                    acc += d[&mode.gen].clone();
                }
                acc
            })
            .collect();
        *out.entry(key).or_insert(0) += 1;
    }
    out
}
