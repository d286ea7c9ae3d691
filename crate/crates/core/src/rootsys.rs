//! Root systems of the Lie superalgebras gl(m|n), spo(2m|2n), spo(2m|2n+1) on
//! the lattice spanned by delta_1..delta_m, eps_1..eps_n with bilinear form
//! (delta_i, delta_j) = +delta_{ij}, (eps_a, eps_b) = -delta_{ab}, mixed 0.
//!
//! Positive systems are built from an interleaved ordering of the basis
//! symbols chosen so that the maximal isotropic set S sits inside the simple
//! roots. Weyl groups act by signed permutations on each block and are
//! generated by closure from the even reflections. The denominator identity
//! is evaluated exactly at rational points on the half-coordinate torus.

use crate::{euclid_norm_sq, rat, rat_pow, rint, Rat};
use num::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use std::collections::HashSet;
use std::fmt;

/// Vector in the weight lattice tensor Q, split into delta and eps blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub delta: Vec<Rat>,
    pub eps: Vec<Rat>,
}

impl Weight {
    pub fn zero(m: usize, n: usize) -> Self {
        Weight { delta: vec![Rat::zero(); m], eps: vec![Rat::zero(); n] }
    }

    pub fn from_ints(delta: &[i64], eps: &[i64]) -> Self {
        Weight {
            delta: delta.iter().map(|v| rint(*v)).collect(),
            eps: eps.iter().map(|v| rint(*v)).collect(),
        }
    }

    pub fn delta_unit(m: usize, n: usize, i: usize) -> Self {
        let mut w = Weight::zero(m, n);
        w.delta[i] = Rat::one();
        w
    }

    pub fn eps_unit(m: usize, n: usize, a: usize) -> Self {
        let mut w = Weight::zero(m, n);
        w.eps[a] = Rat::one();
        w
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight {
            delta: self.delta.iter().zip(&o.delta).map(|(x, y)| x + y).collect(),
            eps: self.eps.iter().zip(&o.eps).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight {
            delta: self.delta.iter().zip(&o.delta).map(|(x, y)| x - y).collect(),
            eps: self.eps.iter().zip(&o.eps).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            delta: self.delta.iter().map(|x| -x).collect(),
            eps: self.eps.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight {
            delta: self.delta.iter().map(|x| x * c).collect(),
            eps: self.eps.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.delta.iter().all(Rat::is_zero) && self.eps.iter().all(Rat::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.delta.iter().chain(&self.eps).all(Rat::is_integer)
    }

    /// Positive-definite coordinate norm squared (not the indefinite form).
    pub fn euclid_sq(&self) -> Rat {
        euclid_norm_sq(self.delta.iter().chain(&self.eps).cloned())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.delta.iter().map(|c| c.to_string()).collect();
        let es: Vec<String> = self.eps.iter().map(|c| c.to_string()).collect();
        write!(f, "({} | {})", ds.join(","), es.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSysError {
    DimensionMismatch,
    UnsupportedKind(String),
    WeylTooLarge(String),
    NonDominant(String),
    PoleAtSamplePoint,
}

impl fmt::Display for RootSysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSysError::DimensionMismatch => write!(f, "weight dimensions do not match"),
            RootSysError::UnsupportedKind(s) => write!(f, "unsupported root system: {s}"),
            RootSysError::WeylTooLarge(s) => write!(f, "Weyl group size guard exceeded: {s}"),
            RootSysError::NonDominant(s) => write!(f, "weight is not dominant integral: {s}"),
            RootSysError::PoleAtSamplePoint => write!(f, "sample point hits a pole"),
        }
    }
}

impl std::error::Error for RootSysError {}

/// The indefinite bilinear form: sum of delta products minus eps products.
pub fn bilinear(x: &Weight, y: &Weight) -> Result<Rat, RootSysError> {
    if x.delta.len() != y.delta.len() || x.eps.len() != y.eps.len() {
        return Err(RootSysError::DimensionMismatch);
    }
    let mut acc = Rat::zero();
    for (a, b) in x.delta.iter().zip(&y.delta) {
        acc += a * b;
    }
    for (a, b) in x.eps.iter().zip(&y.eps) {
        acc -= a * b;
    }
    Ok(acc)
}

pub(crate) fn form(x: &Weight, y: &Weight) -> Rat {
    bilinear(x, y).expect("weights from the same system")
}

/// The three families handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// gl(m|n)
    Gl,
    /// spo(2m|2n)
    SpoEven,
    /// spo(2m|2n+1)
    SpoOdd,
}

/// Fully populated root data for one superalgebra.
#[derive(Clone, Debug)]
pub struct SuperRootSystem {
    pub kind: Kind,
    pub m: usize,
    pub n: usize,
    pub delta0_plus: Vec<Weight>,
    pub delta1_plus: Vec<Weight>,
    /// maximal isotropic subset of the simple positive odd roots
    pub s_set: Vec<Weight>,
    pub rho0: Weight,
    pub rho1: Weight,
    pub rho: Weight,
    /// true when the sharp Weyl subgroup is the delta-block factor
    pub sharp_is_delta: bool,
}

/// One basis symbol in the height ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Symbol {
    D(usize),
    E(usize),
}

fn interleaved_sequence(kind: Kind, m: usize, n: usize) -> Vec<Symbol> {
    let mut seq = Vec::new();
    match kind {
        Kind::Gl if m > n => {
            for i in 0..m - n {
                seq.push(Symbol::D(i));
            }
            for a in 0..n {
                seq.push(Symbol::E(a));
                seq.push(Symbol::D(m - n + a));
            }
        }
        _ => {
            let common = m.min(n);
            for a in 0..common {
                seq.push(Symbol::E(a));
                seq.push(Symbol::D(a));
            }
            for i in common..m {
                seq.push(Symbol::D(i));
            }
            for a in common..n {
                seq.push(Symbol::E(a));
            }
        }
    }
    seq
}

pub fn build_root_system(kind: Kind, m: usize, n: usize) -> Result<SuperRootSystem, RootSysError> {
    if m == 0 && n == 0 {
        return Err(RootSysError::UnsupportedKind("m = n = 0".into()));
    }
    let seq = interleaved_sequence(kind, m, n);
    // height of each symbol: position from the right, all positive
    let mut hd = vec![0i64; m];
    let mut he = vec![0i64; n];
    for (pos, s) in seq.iter().enumerate() {
        let h = (seq.len() - pos) as i64;
        match s {
            Symbol::D(i) => hd[*i] = h,
            Symbol::E(a) => he[*a] = h,
        }
    }
    let height = |w: &Weight| -> Rat {
        let mut acc = Rat::zero();
        for (i, c) in w.delta.iter().enumerate() {
            acc += c * rint(hd[i]);
        }
        for (a, c) in w.eps.iter().enumerate() {
            acc += c * rint(he[a]);
        }
        acc
    };

    let du = |i| Weight::delta_unit(m, n, i);
    let eu = |a| Weight::eps_unit(m, n, a);

    let mut even_full: Vec<Weight> = Vec::new();
    let mut odd_full: Vec<Weight> = Vec::new();
    match kind {
        Kind::Gl => {
            for i in 0..m {
                for j in 0..m {
                    if i != j {
                        even_full.push(du(i).sub(&du(j)));
                    }
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        even_full.push(eu(a).sub(&eu(b)));
                    }
                }
            }
            for i in 0..m {
                for a in 0..n {
                    odd_full.push(du(i).sub(&eu(a)));
                    odd_full.push(eu(a).sub(&du(i)));
                }
            }
        }
        Kind::SpoEven | Kind::SpoOdd => {
            for i in 0..m {
                for j in (i + 1)..m {
                    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        even_full.push(du(i).scale(&rint(s1)).add(&du(j).scale(&rint(s2))));
                    }
                }
            }
            for i in 0..m {
                even_full.push(du(i).scale(&rint(2)));
                even_full.push(du(i).scale(&rint(-2)));
            }
            for a in 0..n {
                for b in (a + 1)..n {
                    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        even_full.push(eu(a).scale(&rint(s1)).add(&eu(b).scale(&rint(s2))));
                    }
                }
            }
            if kind == Kind::SpoOdd {
                for a in 0..n {
                    even_full.push(eu(a));
                    even_full.push(eu(a).neg());
                }
            }
            for i in 0..m {
                for a in 0..n {
                    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        odd_full.push(du(i).scale(&rint(s1)).add(&eu(a).scale(&rint(s2))));
                    }
                }
            }
            if kind == Kind::SpoOdd {
                for i in 0..m {
                    odd_full.push(du(i));
                    odd_full.push(du(i).neg());
                }
            }
        }
    }

    let delta0_plus: Vec<Weight> =
        even_full.into_iter().filter(|r| height(r).is_positive()).collect();
    let delta1_plus: Vec<Weight> =
        odd_full.into_iter().filter(|r| height(r).is_positive()).collect();

    // S: the interleave pairs eps_a with a delta neighbor; both orders of the
    // difference are isotropic, keep the positive one
    let mut s_set = Vec::new();
    let pairs: Vec<(usize, usize)> = match kind {
        Kind::Gl if m > n => (0..n).map(|a| (a, m - n + a)).collect(),
        _ => (0..m.min(n)).map(|a| (a, a)).collect(),
    };
    for (a, i) in pairs {
        let cand = eu(a).sub(&du(i));
        if height(&cand).is_positive() {
            s_set.push(cand);
        } else {
            s_set.push(cand.neg());
        }
    }

    let half = rat(1, 2);
    let rho0 = delta0_plus
        .iter()
        .fold(Weight::zero(m, n), |acc, r| acc.add(r))
        .scale(&half);
    let rho1 = delta1_plus
        .iter()
        .fold(Weight::zero(m, n), |acc, r| acc.add(r))
        .scale(&half);
    let rho = rho0.sub(&rho1);

    // sharp factor: the Weyl group of the larger even subalgebra
    let sharp_is_delta = match kind {
        Kind::Gl => m >= n,
        Kind::SpoEven | Kind::SpoOdd => m >= n,
    };

    Ok(SuperRootSystem {
        kind,
        m,
        n,
        delta0_plus,
        delta1_plus,
        s_set,
        rho0,
        rho1,
        rho,
        sharp_is_delta,
    })
}

impl SuperRootSystem {
    /// Number of flavors of the Fock space this system organizes: for
    /// spo(2m|r) and gl(m|r) the paper's decomposition concerns A(m*r).
    pub fn fock_rank(&self) -> (u32, u32) {
        let r = match self.kind {
            Kind::Gl => self.n,
            Kind::SpoEven => 2 * self.n,
            Kind::SpoOdd => 2 * self.n + 1,
        };
        (self.m as u32, r as u32)
    }

    /// Membership in the root lattice L (spanned by the odd roots).
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        if !w.is_integral() {
            return false;
        }
        let total: Rat = w
            .delta
            .iter()
            .chain(&w.eps)
            .fold(Rat::zero(), |acc, c| acc + c);
        match self.kind {
            // sum of all coordinates is zero
            Kind::Gl => total.is_zero(),
            // spanned by delta_p +- eps_q: even total sum (n = 0 degenerates to {0})
            Kind::SpoEven => {
                if self.n == 0 {
                    w.is_zero()
                } else {
                    (total / rint(2)).is_integer()
                }
            }
            // delta_p alone is a root: the full integer lattice
            Kind::SpoOdd => true,
        }
    }

    /// Dominance for the even subalgebra: nonnegative integral coroot pairing
    /// against every positive even root.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        for alpha in &self.delta0_plus {
            let p = rint(2) * form(w, alpha) / form(alpha, alpha);
            if !p.is_integer() || p.is_negative() {
                return false;
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Weyl group
// ---------------------------------------------------------------------------

/// Signed permutation acting blockwise on the delta and eps coordinates;
/// `sign` is the determinant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    dperm: Vec<usize>,
    dsign: Vec<i8>,
    eperm: Vec<usize>,
    esign: Vec<i8>,
}

impl WeylElement {
    pub fn identity(m: usize, n: usize) -> Self {
        WeylElement {
            dperm: (0..m).collect(),
            dsign: vec![1; m],
            eperm: (0..n).collect(),
            esign: vec![1; n],
        }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = Weight::zero(self.dperm.len(), self.eperm.len());
        for (i, c) in w.delta.iter().enumerate() {
            let t = &out.delta[self.dperm[i]] + c * rint(self.dsign[i] as i64);
            out.delta[self.dperm[i]] = t;
        }
        for (a, c) in w.eps.iter().enumerate() {
            let t = &out.eps[self.eperm[a]] + c * rint(self.esign[a] as i64);
            out.eps[self.eperm[a]] = t;
        }
        out
    }

    pub fn compose(&self, inner: &WeylElement) -> WeylElement {
        // (self . inner)(x) = self(inner(x))
        let m = self.dperm.len();
        let n = self.eperm.len();
        let mut out = WeylElement::identity(m, n);
        for i in 0..m {
            out.dperm[i] = self.dperm[inner.dperm[i]];
            out.dsign[i] = inner.dsign[i] * self.dsign[inner.dperm[i]];
        }
        for a in 0..n {
            out.eperm[a] = self.eperm[inner.eperm[a]];
            out.esign[a] = inner.esign[a] * self.esign[inner.eperm[a]];
        }
        out
    }

    fn perm_parity(perm: &[usize]) -> i64 {
        let mut seen = vec![false; perm.len()];
        let mut parity = 1i64;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut t = start;
            while !seen[t] {
                seen[t] = true;
                t = perm[t];
                len += 1;
            }
            if len % 2 == 0 {
                parity = -parity;
            }
        }
        parity
    }

    /// Determinant of the signed permutation.
    pub fn sign(&self) -> i64 {
        let mut s = Self::perm_parity(&self.dperm) * Self::perm_parity(&self.eperm);
        for v in self.dsign.iter().chain(&self.esign) {
            s *= *v as i64;
        }
        s
    }
}

/// The reflection in an even root, as a signed permutation.
fn reflection(alpha: &Weight) -> WeylElement {
    let m = alpha.delta.len();
    let n = alpha.eps.len();
    let aa = form(alpha, alpha);
    let mut out = WeylElement::identity(m, n);
    let mut assign = |images: Vec<Weight>| {
        // images[t] = r_alpha(basis vector t), basis = deltas then epses
        for (t, img) in images.iter().enumerate() {
            let mut target = None;
            for (j, c) in img.delta.iter().enumerate() {
                if !c.is_zero() {
                    assert!(target.is_none(), "reflection is not a signed permutation");
                    assert!(c == &rint(1) || c == &rint(-1));
                    target = Some((true, j, if c == &rint(1) { 1i8 } else { -1 }));
                }
            }
            for (j, c) in img.eps.iter().enumerate() {
                if !c.is_zero() {
                    assert!(target.is_none());
                    assert!(c == &rint(1) || c == &rint(-1));
                    target = Some((false, j, if c == &rint(1) { 1i8 } else { -1 }));
                }
            }
            let (is_delta, j, s) = target.expect("reflection image of a basis vector is zero");
            if t < m {
                assert!(is_delta, "reflection mixes blocks");
                out.dperm[t] = j;
                out.dsign[t] = s;
            } else {
                assert!(!is_delta);
                out.eperm[t - m] = j;
                out.esign[t - m] = s;
            }
        }
    };
    let mut images = Vec::new();
    for t in 0..m + n {
        let basis = if t < m {
            Weight::delta_unit(m, n, t)
        } else {
            Weight::eps_unit(m, n, t - m)
        };
        let factor = rint(2) * form(&basis, alpha) / aa.clone();
        images.push(basis.sub(&alpha.scale(&factor)));
    }
    assign(images);
    out
}

/// Which even factor's reflections generate the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylScope {
    Full,
    Sharp,
}

/// Enumerate the Weyl group (or its sharp subgroup) by closure, each element
/// exactly once. Guarded for ranks at most 4 per factor.
pub fn weyl_elements(sys: &SuperRootSystem, scope: WeylScope) -> Result<Vec<WeylElement>, RootSysError> {
    if sys.m > 4 || sys.n > 4 {
        return Err(RootSysError::WeylTooLarge(format!("m={}, n={}", sys.m, sys.n)));
    }
    let use_root = |r: &Weight| -> bool {
        match scope {
            WeylScope::Full => true,
            WeylScope::Sharp => {
                let delta_root = r.eps.iter().all(Rat::is_zero);
                delta_root == sys.sharp_is_delta
            }
        }
    };
    let gens: Vec<WeylElement> = sys
        .delta0_plus
        .iter()
        .filter(|r| use_root(r))
        .map(reflection)
        .collect();
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = vec![WeylElement::identity(sys.m, sys.n)];
    seen.insert(queue[0].clone());
    let mut out = Vec::new();
    while let Some(next) = queue.pop() {
        out.push(next.clone());
        for g in &gens {
            let prod = g.compose(&next);
            if seen.insert(prod.clone()) {
                queue.push(prod);
            }
        }
        if out.len() > 100_000 {
            return Err(RootSysError::WeylTooLarge("closure exceeded 100000".into()));
        }
    }
    out.sort_by_key(|w| (w.dperm.clone(), w.dsign.clone(), w.eperm.clone(), w.esign.clone()));
    Ok(out)
}

// ---------------------------------------------------------------------------
// irreducible dimensions
// ---------------------------------------------------------------------------

/// Weyl dimension formula, taken as a product over all positive even roots;
/// factors multiply because the even algebra is a direct sum.
pub fn dim_irrep(sys: &SuperRootSystem, lambda: &Weight) -> Result<num::BigInt, RootSysError> {
    if !sys.is_dominant(lambda) {
        return Err(RootSysError::NonDominant(format!("{lambda}")));
    }
    let shifted = lambda.add(&sys.rho0);
    let mut acc = Rat::one();
    for alpha in &sys.delta0_plus {
        acc *= form(&shifted, alpha) / form(&sys.rho0, alpha);
    }
    assert!(acc.is_integer(), "Weyl dimension formula must give an integer");
    Ok(acc.to_integer())
}

// ---------------------------------------------------------------------------
// index-set enumeration
// ---------------------------------------------------------------------------

/// One solution tuple: integers for the non-isotropic positive odd roots and
/// for the isotropic set S.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexTuple {
    pub n_alpha: Vec<i64>,
    pub ell_beta: Vec<i64>,
}

/// The positive odd roots outside S, in a fixed order matching IndexTuple.
pub fn non_isotropic_roots(sys: &SuperRootSystem) -> Vec<Weight> {
    sys.delta1_plus
        .iter()
        .filter(|r| !sys.s_set.contains(r))
        .cloned()
        .collect()
}

/// Minimal possible q-exponent (in 24ths) of a coordinate value on a
/// non-isotropic root: 3(2x+1)^2.
fn min_exp_alpha(x: i64) -> i64 {
    let d = 2 * x + 1;
    3 * d * d
}

/// Minimal possible q-exponent (in 24ths) of the partial theta factor that an
/// isotropic coordinate produces, under either indexing convention: the
/// proof-corrected factor leads at 3(2|l|+1)^2, the literal one at
/// 3(2l+3)^2 for l >= 0 and 3(2|l|-1)^2 for l <= -1. Take the minimum.
fn min_exp_beta(l: i64) -> i64 {
    let d = if l >= 0 { 2 * l + 1 } else { 2 * (-l) - 1 };
    3 * d * d
}

/// All integer tuples with sum n_alpha*alpha + sum ell_beta*beta = lambda
/// whose minimal q-exponent is below the bound. Completeness below the bound
/// follows from the quadratic growth of the per-coordinate exponents.
pub fn enumerate_index_set(sys: &SuperRootSystem, lambda: &Weight, bound24: i64) -> Vec<IndexTuple> {
    let alphas = non_isotropic_roots(sys);
    let betas = sys.s_set.clone();
    let mut out = Vec::new();
    if !sys.in_root_lattice(lambda) {
        return out;
    }
    let mut n_alpha = vec![0i64; alphas.len()];
    let mut ell_beta = vec![0i64; betas.len()];
    fn coord_range(bound: i64, isotropic: bool) -> Vec<i64> {
        // the per-coordinate exponent is quadratic with vertex near -1/2, so
        // scan outward in each direction separately until it exceeds the bound
        let me = |x: i64| if isotropic { min_exp_beta(x) } else { min_exp_alpha(x) };
        let mut v = Vec::new();
        let mut x = 0i64;
        while me(x) <= bound && x <= 10_000 {
            v.push(x);
            x += 1;
        }
        let mut x = -1i64;
        while me(x) <= bound && x >= -10_000 {
            v.push(x);
            x -= 1;
        }
        v
    }
    let arange = coord_range(bound24, false);
    let brange = coord_range(bound24, true);

    fn rec(
        alphas: &[Weight],
        betas: &[Weight],
        arange: &[i64],
        brange: &[i64],
        bound24: i64,
        used: i64,
        pos: usize,
        remaining: &Weight,
        n_alpha: &mut Vec<i64>,
        ell_beta: &mut Vec<i64>,
        out: &mut Vec<IndexTuple>,
    ) {
        if pos == alphas.len() + betas.len() {
            if remaining.is_zero() {
                out.push(IndexTuple { n_alpha: n_alpha.clone(), ell_beta: ell_beta.clone() });
            }
            return;
        }
        // residual reachability: the leftover coordinates have |x| bounded by
        // the exponent budget, and each root moves the residual by at most
        // sqrt(2), so a far-away residual cannot be cancelled
        let left = (alphas.len() + betas.len() - pos) as i64;
        let budget = bound24 - used;
        let max_coord = {
            let mut v = 0i64;
            while 3 * (2 * (v + 1) - 1).pow(2) <= budget {
                v += 1;
            }
            v
        };
        let reach = rint(2) * rint(left * max_coord) * rint(left * max_coord);
        if remaining.euclid_sq() > reach {
            return;
        }
        let is_beta = pos >= alphas.len();
        let root = if is_beta { &betas[pos - alphas.len()] } else { &alphas[pos] };
        let range = if is_beta { brange } else { arange };
        for &x in range {
            let me = if is_beta { min_exp_beta(x) } else { min_exp_alpha(x) };
            if used + me > bound24 {
                continue;
            }
            let next = remaining.sub(&root.scale(&rint(x)));
            if is_beta {
                ell_beta[pos - alphas.len()] = x;
            } else {
                n_alpha[pos] = x;
            }
            rec(
                alphas, betas, arange, brange, bound24, used + me, pos + 1, &next, n_alpha,
                ell_beta, out,
            );
        }
        if is_beta {
            ell_beta[pos - alphas.len()] = 0;
        } else if pos < alphas.len() {
            n_alpha[pos] = 0;
        }
    }
    rec(
        &alphas,
        &betas,
        &arange,
        &brange,
        bound24,
        0,
        0,
        lambda,
        &mut n_alpha,
        &mut ell_beta,
        &mut out,
    );
    out
}

/// All dominant integral weights of the root lattice with Euclidean norm
/// bound ||Lambda + rho0||^2 <= bound, ordered by that norm then
/// lexicographically. (The indefinite lattice norm is degenerate for
/// gl(m|m)-type systems, so the enumeration uses the coordinate norm.)
pub fn enumerate_dominant(sys: &SuperRootSystem, bound: &Rat) -> Vec<Weight> {
    let mut out = Vec::new();
    if bound.is_negative() {
        return out;
    }
    // |lambda_i + rho0_i| <= sqrt(bound), so box at ceil(sqrt(bound)) + |rho0_i|
    let bf = bound.to_integer().to_string().parse::<f64>().unwrap_or(0.0).max(0.0);
    let r = bf.sqrt().ceil() as i64 + 2;
    let coords = sys.m + sys.n;
    let mut limits = Vec::with_capacity(coords);
    for i in 0..coords {
        let rho_c = if i < sys.m { &sys.rho0.delta[i] } else { &sys.rho0.eps[i - sys.m] };
        let extra = rho_c.abs().ceil().to_integer().to_string().parse::<i64>().unwrap_or(0);
        limits.push(r + extra);
    }
    let mut current = vec![0i64; coords];
    fn rec(
        sys: &SuperRootSystem,
        bound: &Rat,
        limits: &[i64],
        pos: usize,
        current: &mut Vec<i64>,
        out: &mut Vec<Weight>,
    ) {
        if pos == current.len() {
            let w = Weight::from_ints(&current[..sys.m], &current[sys.m..]);
            if sys.in_root_lattice(&w) && sys.is_dominant(&w) {
                let shifted = w.add(&sys.rho0);
                if shifted.euclid_sq() <= *bound {
                    out.push(w);
                }
            }
            return;
        }
        for x in -limits[pos]..=limits[pos] {
            current[pos] = x;
            rec(sys, bound, limits, pos + 1, current, out);
        }
    }
    rec(sys, bound, &limits, 0, &mut current, &mut out);
    out.sort_by(|a, b| {
        let na = a.add(&sys.rho0).euclid_sq();
        let nb = b.add(&sys.rho0).euclid_sq();
        na.cmp(&nb).then_with(|| a.cmp(b))
    });
    out
}

// ---------------------------------------------------------------------------
// denominator identity
// ---------------------------------------------------------------------------

/// Nonzero rational values for e^{delta_i/2} and e^{eps_a/2}.
#[derive(Clone, Debug)]
pub struct SamplePoint {
    pub t: Vec<Rat>,
    pub u: Vec<Rat>,
}

impl SamplePoint {
    /// Evaluate e^mu for mu in (1/2)L: all doubled coordinates must be integers.
    pub fn eval(&self, mu: &Weight) -> Rat {
        let mut acc = Rat::one();
        for (i, c) in mu.delta.iter().enumerate() {
            let twice = c * rint(2);
            assert!(twice.is_integer(), "exponent not in the half lattice");
            let k: i64 = twice.to_integer().to_string().parse().unwrap();
            acc *= rat_pow(&self.t[i], k);
        }
        for (a, c) in mu.eps.iter().enumerate() {
            let twice = c * rint(2);
            assert!(twice.is_integer());
            let k: i64 = twice.to_integer().to_string().parse().unwrap();
            acc *= rat_pow(&self.u[a], k);
        }
        acc
    }
}

/// Exact evaluation of both sides of the denominator identity at a point.
/// LHS = e^{rho0} prod_{even+}(1-e^{-a}) / (e^{rho1} prod_{odd+}(1+e^{-a}));
/// RHS = sum over the sharp Weyl subgroup of sign * w(e^rho / prod_S (1+e^{-b})).
pub fn denominator_identity_eval(
    sys: &SuperRootSystem,
    point: &SamplePoint,
) -> Result<(Rat, Rat), RootSysError> {
    // LHS
    let mut num = point.eval(&sys.rho0);
    for alpha in &sys.delta0_plus {
        num *= Rat::one() - point.eval(&alpha.neg());
    }
    let mut den = point.eval(&sys.rho1);
    for alpha in &sys.delta1_plus {
        let f = Rat::one() + point.eval(&alpha.neg());
        if f.is_zero() {
            return Err(RootSysError::PoleAtSamplePoint);
        }
        den *= f;
    }
    let lhs = num / den;
    // RHS
    let sharp = weyl_elements(sys, WeylScope::Sharp)?;
    let mut rhs = Rat::zero();
    for w in &sharp {
        let mut term = point.eval(&w.apply(&sys.rho));
        for beta in &sys.s_set {
            let f = Rat::one() + point.eval(&w.apply(beta).neg());
            if f.is_zero() {
                return Err(RootSysError::PoleAtSamplePoint);
            }
            term /= f;
        }
        rhs += term * rint(w.sign());
    }
    Ok((lhs, rhs))
}

/// Seeded pseudo-random pole-free sample points with small numerators and
/// denominators.
pub fn sample_points(sys: &SuperRootSystem, count: usize, seed: u64) -> Vec<SamplePoint> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let small = |rng: &mut rand_chacha::ChaCha8Rng| -> Rat {
        loop {
            let p = rng.gen_range(-7i64..=7);
            if p == 0 {
                continue;
            }
            let q = rng.gen_range(1i64..=7);
            return rat(p, q);
        }
    };
    while out.len() < count {
        let p = SamplePoint {
            t: (0..sys.m).map(|_| small(&mut rng)).collect(),
            u: (0..sys.n).map(|_| small(&mut rng)).collect(),
        };
        if denominator_identity_eval(sys, &p).is_ok() {
            out.push(p);
        }
    }
    out
}
