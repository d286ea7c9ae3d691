//! Orbifold generators, the derivative-basis expansion, the lambda-coefficient
//! action, decoupling-relation search, and the strong-generation identities.

use crate::classical::Family;
use crate::fock::{derive, wick, GeneratorId, Mode, State};
use crate::linalg::{check_solution, solve_in_span};
use crate::{factorial, neg_one_pow, rat, Rat};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantsError {
    IndexOutOfRange(String),
    /// The state is outside the span of the derivative basis at its weight:
    /// either a wrong-weight input or a true relation.
    NotInSpan,
    NotHomogeneous,
}

impl fmt::Display for InvariantsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantsError::IndexOutOfRange(s) => write!(f, "index out of range: {s}"),
            InvariantsError::NotInSpan => write!(f, "state is not in the generator span at its weight"),
            InvariantsError::NotHomogeneous => write!(f, "state is not weight-homogeneous"),
        }
    }
}

impl std::error::Error for InvariantsError {}

// ---------------------------------------------------------------------------
// quadratic generators
// ---------------------------------------------------------------------------

/// The symmetric quadratic generator for the symplectic family on flavors
/// (j,k): (1/2) sum_i ( :d^a e^{i,j} d^b f^{i,k}: + :d^b e^{i,k} d^a f^{i,j}: ),
/// as an exact Fock state with the factorial normalization of the
/// derivative dictionary.
pub fn sp_omega(n: u16, m: u16, j: u16, k: u16, a: u32, b: u32) -> Result<State, InvariantsError> {
    if j == 0 || k == 0 || j > m || k > m {
        return Err(InvariantsError::IndexOutOfRange(format!("flavors ({j},{k}) with m={m}")));
    }
    if j == k && a > b {
        return Err(InvariantsError::IndexOutOfRange(format!(
            "diagonal-flavor generator needs a <= b, got ({a},{b})"
        )));
    }
    let fact = Rat::from_integer(factorial(a as u64) * factorial(b as u64));
    let half = rat(1, 2);
    let mut s = State::zero();
    for i in 1..=n {
        s.add_monomial(
            vec![
                Mode::new(GeneratorId::e(i, j), -1 - a as i32),
                Mode::new(GeneratorId::f(i, k), -1 - b as i32),
            ],
            &half * &fact,
        );
        s.add_monomial(
            vec![
                Mode::new(GeneratorId::e(i, k), -1 - b as i32),
                Mode::new(GeneratorId::f(i, j), -1 - a as i32),
            ],
            &half * &fact,
        );
    }
    Ok(s)
}

/// The quadratic generator for the general linear family:
/// sum_i :d^a e^{i,j} d^b f^{i,k}:.
pub fn gl_gamma(n: u16, m: u16, j: u16, k: u16, a: u32, b: u32) -> Result<State, InvariantsError> {
    if j == 0 || k == 0 || j > m || k > m {
        return Err(InvariantsError::IndexOutOfRange(format!("flavors ({j},{k}) with m={m}")));
    }
    let fact = Rat::from_integer(factorial(a as u64) * factorial(b as u64));
    let mut s = State::zero();
    for i in 1..=n {
        s.add_monomial(
            vec![
                Mode::new(GeneratorId::e(i, j), -1 - a as i32),
                Mode::new(GeneratorId::f(i, k), -1 - b as i32),
            ],
            fact.clone(),
        );
    }
    Ok(s)
}

/// j^{2r} at rank n (single flavor): the weight-(2r+2) strong generator.
pub fn j_generator(n: u16, two_r: u32) -> State {
    sp_omega(n, 1, 1, 1, 0, two_r).expect("single flavor always in range")
}

/// h^r at rank n (single flavor): the weight-(r+2) strong generator.
pub fn h_generator(n: u16, r: u32) -> State {
    gl_gamma(n, 1, 1, 1, 0, r).expect("single flavor always in range")
}

// ---------------------------------------------------------------------------
// expansion in the derivative basis
// ---------------------------------------------------------------------------

/// Which derivative basis to expand in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JBasis {
    /// span { d^{2i} j^{2M-2i} } (even weight) or { d^{2i+1} j^{2M-2i} } (odd)
    SpJ { n: u16 },
    /// span { d^a h^{M-a} }
    GlH { n: u16 },
    /// span { d^s omega^{j,k}_{0,t} } for an off-diagonal flavor pair
    FlavoredSp { n: u16, m: u16, j: u16, k: u16 },
}

/// Exact coefficients keyed by (derivative order, generator label).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct JBasisExpansion {
    pub coeffs: BTreeMap<(u32, u32), Rat>,
}

impl JBasisExpansion {
    pub fn coeff(&self, deriv: u32, label: u32) -> Rat {
        self.coeffs.get(&(deriv, label)).cloned().unwrap_or_else(Rat::zero)
    }
}

/// The (derivative order, label) pairs spanning the weight-w slice of the
/// generator space, together with the corresponding states.
fn basis_elements(basis: JBasis, w: u32) -> Result<Vec<((u32, u32), State)>, InvariantsError> {
    let mut out = Vec::new();
    match basis {
        JBasis::SpJ { n } => {
            if w < 2 {
                return Err(InvariantsError::NotInSpan);
            }
            if w.is_multiple_of(2) {
                let big_m = (w - 2) / 2;
                for i in 0..=big_m {
                    let label = 2 * (big_m - i);
                    out.push(((2 * i, label), derive(&j_generator(n, label), 2 * i)));
                }
            } else {
                if w < 3 {
                    return Err(InvariantsError::NotInSpan);
                }
                let big_m = (w - 3) / 2;
                for i in 0..=big_m {
                    let label = 2 * (big_m - i);
                    out.push(((2 * i + 1, label), derive(&j_generator(n, label), 2 * i + 1)));
                }
            }
        }
        JBasis::GlH { n } => {
            if w < 2 {
                return Err(InvariantsError::NotInSpan);
            }
            let big_m = w - 2;
            for a in 0..=big_m {
                let label = big_m - a;
                out.push(((a, label), derive(&h_generator(n, label), a)));
            }
        }
        JBasis::FlavoredSp { n, m, j, k } => {
            if w < 2 {
                return Err(InvariantsError::NotInSpan);
            }
            let big_m = w - 2;
            for s in 0..=big_m {
                let label = big_m - s;
                let gen = sp_omega(n, m, j, k, 0, label)
                    .map_err(|_| InvariantsError::NotInSpan)?;
                out.push(((s, label), derive(&gen, s)));
            }
        }
    }
    Ok(out)
}

/// Express a homogeneous state exactly in the derivative basis at its weight.
/// Fails with NotInSpan when the state lies outside the span, which is how
/// true relations are detected.
pub fn express_in_j_basis(s: &State, basis: JBasis) -> Result<JBasisExpansion, InvariantsError> {
    if s.is_zero() {
        return Ok(JBasisExpansion::default());
    }
    let w = s.weight().ok_or(InvariantsError::NotHomogeneous)?;
    let elements = basis_elements(basis, w)?;
    // coordinates over the union of monomials
    let mut index: BTreeMap<Vec<Mode>, usize> = BTreeMap::new();
    let mut add_keys = |st: &State| {
        for (m, _) in st.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    };
    for (_, st) in &elements {
        add_keys(st);
    }
    add_keys(s);
    let dim = index.len();
    let to_vec = |st: &State| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dim];
        for (m, c) in st.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let columns: Vec<Vec<Rat>> = elements.iter().map(|(_, st)| to_vec(st)).collect();
    let target = to_vec(s);
    let x = solve_in_span(&columns, &target).ok_or(InvariantsError::NotInSpan)?;
    debug_assert!(check_solution(&columns, &x, &target));
    let mut out = JBasisExpansion::default();
    for ((key, _), c) in elements.iter().zip(x) {
        if !c.is_zero() {
            out.coeffs.insert(*key, c);
        }
    }
    Ok(out)
}

/// Re-evaluate an expansion as a Fock state (round-trip check support).
pub fn evaluate_expansion(exp: &JBasisExpansion, basis: JBasis) -> State {
    let mut acc = State::zero();
    for ((deriv, label), c) in &exp.coeffs {
        let gen = match basis {
            JBasis::SpJ { n } => j_generator(n, *label),
            JBasis::GlH { n } => h_generator(n, *label),
            JBasis::FlavoredSp { n, m, j, k } => sp_omega(n, m, j, k, 0, *label).unwrap(),
        };
        acc = acc.add(&derive(&gen, *deriv).scale(c));
    }
    acc
}

// ---------------------------------------------------------------------------
// lambda coefficients
// ---------------------------------------------------------------------------

/// The closed-form coefficient of the weight-lowering action of one quadratic
/// generator mode on another:
///   lambda_{a,b,w,c} = (-1)^{a+1} (a+c+1)!/(c-b+w)! + (-1)^{b+1} (b+c+1)!/(c-a+w)!
/// when c-b+w >= 0, and 0 otherwise.
pub fn lambda_coefficient(a: u32, b: u32, w: u32, c: u32) -> Rat {
    assert!(a <= b, "lambda coefficient is defined for a <= b");
    let cb = c as i64 - b as i64 + w as i64;
    if cb < 0 {
        return Rat::zero();
    }
    let ca = c as i64 - a as i64 + w as i64;
    debug_assert!(ca >= 0);
    let t1 = neg_one_pow(a as i64 + 1)
        * Rat::from_integer(factorial((a + c + 1) as u64))
        / Rat::from_integer(factorial(cb as u64));
    let t2 = neg_one_pow(b as i64 + 1)
        * Rat::from_integer(factorial((b + c + 1) as u64))
        / Rat::from_integer(factorial(ca as u64));
    t1 + t2
}

// ---------------------------------------------------------------------------
// decoupling search
// ---------------------------------------------------------------------------

/// One normally ordered word: a sequence of (generator label, derivative
/// order), combined right-nested, :g1 (:g2 (:g3 ...:):):.
pub type Word = Vec<(u32, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoupling {
    /// The excluded generator's label (2n for sp j^{2n}, 2n for gl h^{2n}).
    pub target_label: u32,
    pub terms: Vec<(Word, Rat)>,
}

fn generator_weight(family: Family, label: u32) -> u32 {
    let _ = family;
    label + 2
}

fn retained_labels(family: Family, target_weight: u32) -> Vec<u32> {
    match family {
        // j^0, j^2, ... of weight < target
        Family::Sp => (0..target_weight - 2).step_by(2).collect(),
        // h^0, h^1, ... of weight < target
        Family::Gl => (0..target_weight - 2).collect(),
    }
}

fn label_state(family: Family, n: u16, label: u32) -> State {
    match family {
        Family::Sp => j_generator(n, label),
        Family::Gl => h_generator(n, label),
    }
}

/// All ordered sequences of (label, derivs) over the retained generators with
/// total weight w. This is the standard spanning set of iterated Wick
/// products, so absence of a solution is meaningful.
fn enumerate_words(family: Family, labels: &[u32], w: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut acc: Word = Vec::new();
    fn rec(family: Family, labels: &[u32], remaining: u32, acc: &mut Word, out: &mut Vec<Word>) {
        if remaining == 0 {
            if !acc.is_empty() {
                out.push(acc.clone());
            }
            return;
        }
        for &label in labels {
            let base = generator_weight(family, label);
            if base > remaining {
                continue;
            }
            for d in 0..=(remaining - base) {
                acc.push((label, d));
                rec(family, labels, remaining - base - d, acc, out);
                acc.pop();
            }
        }
    }
    rec(family, labels, w, &mut acc, &mut out);
    out
}

/// Build the state of a word by right-nested Wick products.
pub fn word_state(family: Family, n: u16, word: &Word) -> State {
    let mut it = word.iter().rev();
    let Some(&(label, d)) = it.next() else {
        return State::vacuum();
    };
    let mut acc = derive(&label_state(family, n, label), d);
    for &(label, d) in it {
        acc = wick(&derive(&label_state(family, n, label), d), &acc);
    }
    acc
}

/// Search for a decoupling relation expressing the weight-`target_weight`
/// generator as a normally ordered polynomial in the lower ones. Returns the
/// coefficients of one exact solution, or None when the exhaustive span
/// contains no solution.
pub fn find_decoupling(family: Family, n: u16, target_weight: u32) -> Option<Decoupling> {
    assert!(target_weight >= 4);
    // the symplectic family only has generators of even weight
    assert!(
        family == Family::Gl || target_weight.is_multiple_of(2),
        "sp decoupling targets have even weight"
    );
    let target_label = target_weight - 2;
    let target = label_state(family, n, target_label);
    let labels = retained_labels(family, target_weight);
    let words = enumerate_words(family, &labels, target_weight);

    let mut index: BTreeMap<Vec<Mode>, usize> = BTreeMap::new();
    let mut states: Vec<State> = Vec::new();
    for word in &words {
        let st = word_state(family, n, word);
        for (m, _) in st.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
        states.push(st);
    }
    for (m, _) in target.terms() {
        let next = index.len();
        index.entry(m.clone()).or_insert(next);
    }
    let dim = index.len();
    let to_vec = |st: &State| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dim];
        for (m, c) in st.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let columns: Vec<Vec<Rat>> = states.iter().map(to_vec).collect();
    let rhs = to_vec(&target);
    let x = solve_in_span(&columns, &rhs)?;
    debug_assert!(check_solution(&columns, &x, &rhs));
    let terms: Vec<(Word, Rat)> = words
        .into_iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Some(Decoupling { target_label, terms })
}

/// Substitute a decoupling solution back through the engine and return the
/// reconstructed state (must equal the excluded generator exactly).
pub fn evaluate_decoupling(family: Family, n: u16, d: &Decoupling) -> State {
    let mut acc = State::zero();
    for (word, c) in &d.terms {
        acc = acc.add(&word_state(family, n, word).scale(c));
    }
    acc
}

// ---------------------------------------------------------------------------
// strong-generation identities
// ---------------------------------------------------------------------------

/// Coefficient of j^{2k+2} in j^2 o_1 j^{2k}, expanded in the derivative
/// basis at weight 2k+4. The identity predicts -(2k+4).
pub fn sp_j_leading_coefficient(n: u16, k: u32) -> Result<Rat, InvariantsError> {
    let lhs = crate::fock::circle(&j_generator(n, 2), 1, &j_generator(n, 2 * k));
    let exp = express_in_j_basis(&lhs, JBasis::SpJ { n })?;
    Ok(exp.coeff(0, 2 * k + 2))
}

/// Check h^1 o_1 h^k = -(k+3) h^{k+1} + 2 d h^k as exact state equality.
pub fn gl_h_identity(n: u16, k: u32) -> (bool, State, State) {
    let lhs = crate::fock::circle(&h_generator(n, 1), 1, &h_generator(n, k));
    let rhs = h_generator(n, k + 1)
        .scale(&rat(-(k as i64 + 3), 1))
        .add(&derive(&h_generator(n, k), 1).scale(&rat(2, 1)));
    (lhs == rhs, lhs, rhs)
}

/// Coefficient of omega^{j,k}_{0,2r} in omega^{j,k}_{0,0} o_1 omega^{j,j}_{0,2r}
/// for an off-diagonal flavor pair. The identity predicts -(r+1).
pub fn flavored_sp_leading_coefficient(n: u16, m: u16, r: u32) -> Result<Rat, InvariantsError> {
    assert!(m >= 2, "flavored identity needs at least two flavors");
    let a = sp_omega(n, m, 1, 2, 0, 0).map_err(|_| InvariantsError::NotInSpan)?;
    let b = sp_omega(n, m, 1, 1, 0, 2 * r).map_err(|_| InvariantsError::NotInSpan)?;
    let lhs = crate::fock::circle(&a, 1, &b);
    let exp = express_in_j_basis(&lhs, JBasis::FlavoredSp { n, m, j: 1, k: 2 })?;
    Ok(exp.coeff(0, 2 * r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{circle, generator_state};
    use crate::rint;
    use num::One;

    #[test]
    fn omega_states_match_wick_construction() {
        // the explicit mode construction agrees with :d^a e d^b f: built by
        // the engine
        for (a, b) in [(0u32, 0u32), (0, 1), (1, 1), (1, 2)] {
            let direct = sp_omega(2, 1, 1, 1, a, b).unwrap();
            let mut via_wick = State::zero();
            for i in 1..=2u16 {
                let de = derive(&generator_state(GeneratorId::e(i, 1), 0), a);
                let df = derive(&generator_state(GeneratorId::f(i, 1), 0), b);
                let de2 = derive(&generator_state(GeneratorId::e(i, 1), 0), b);
                let df2 = derive(&generator_state(GeneratorId::f(i, 1), 0), a);
                via_wick = via_wick
                    .add(&wick(&de, &df).scale(&rat(1, 2)))
                    .add(&wick(&de2, &df2).scale(&rat(1, 2)));
            }
            assert_eq!(direct, via_wick, "omega_({a},{b})");
        }
    }

    #[test]
    fn omega_00_is_minus_virasoro() {
        for n in 1..=2u16 {
            let w = sp_omega(n, 1, 1, 1, 0, 0).unwrap();
            assert_eq!(w, crate::fock::virasoro(n, 1).neg());
        }
    }

    #[test]
    fn omega_01_value() {
        let w = sp_omega(1, 1, 1, 1, 0, 1).unwrap();
        let mut expect = State::zero();
        expect.add_monomial(
            vec![Mode::new(GeneratorId::e(1, 1), -1), Mode::new(GeneratorId::f(1, 1), -2)],
            rat(1, 2),
        );
        expect.add_monomial(
            vec![Mode::new(GeneratorId::e(1, 1), -2), Mode::new(GeneratorId::f(1, 1), -1)],
            rat(1, 2),
        );
        assert_eq!(w, expect);
    }

    #[test]
    fn gamma_00_value() {
        let g = gl_gamma(1, 1, 1, 1, 0, 0).unwrap();
        let mut expect = State::zero();
        expect.add_monomial(
            vec![Mode::new(GeneratorId::e(1, 1), -1), Mode::new(GeneratorId::f(1, 1), -1)],
            Rat::one(),
        );
        assert_eq!(g, expect);
    }

    #[test]
    fn expansion_examples() {
        // omega_{0,1} = (1/2) d j^0
        let w01 = sp_omega(3, 1, 1, 1, 0, 1).unwrap();
        let e = express_in_j_basis(&w01, JBasis::SpJ { n: 3 }).unwrap();
        assert_eq!(e.coeff(1, 0), rat(1, 2));
        assert_eq!(e.coeffs.len(), 1);
        // omega_{1,1} = (1/2) d^2 j^0 - j^2
        let w11 = sp_omega(3, 1, 1, 1, 1, 1).unwrap();
        let e = express_in_j_basis(&w11, JBasis::SpJ { n: 3 }).unwrap();
        assert_eq!(e.coeff(2, 0), rat(1, 2));
        assert_eq!(e.coeff(0, 2), rint(-1));
        // d j^0 expands to itself
        let dj = derive(&j_generator(2, 0), 1);
        let e = express_in_j_basis(&dj, JBasis::SpJ { n: 2 }).unwrap();
        assert_eq!(e.coeff(1, 0), rint(1));
        assert_eq!(e.coeffs.len(), 1);
        // gamma_{1,1} = d h^1 - h^2 in the h-basis (direct mode bookkeeping:
        // T(h^1) = gamma_{1,1} + gamma_{0,2} and h^2 = gamma_{0,2})
        let g11 = gl_gamma(2, 1, 1, 1, 1, 1).unwrap();
        let e = express_in_j_basis(&g11, JBasis::GlH { n: 2 }).unwrap();
        assert_eq!(e.coeff(1, 1), rint(1));
        assert_eq!(e.coeff(0, 2), rint(-1));
        assert_eq!(e.coeffs.len(), 2);
    }

    #[test]
    fn expansion_roundtrip_random() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let n = 3u16;
            let w = rng.gen_range(2..=8u32);
            // random element of the generator span at weight w
            let mut s = State::zero();
            if let Ok(elements) = basis_elements(JBasis::SpJ { n }, w) {
                for (_, st) in elements {
                    let c = rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2));
                    s = s.add(&st.scale(&c));
                }
            }
            if s.is_zero() {
                continue;
            }
            let e = express_in_j_basis(&s, JBasis::SpJ { n }).unwrap();
            assert_eq!(evaluate_expansion(&e, JBasis::SpJ { n }), s);
        }
    }

    #[test]
    fn not_in_span_detected() {
        // at rank 1 and weight 6, the weight-6 invariant space is larger than
        // the j-span? No: j^4 IS in the span by definition. Use a state with
        // a deliberately wrong shape instead: a single monomial.
        let mut s = State::zero();
        s.add_monomial(
            vec![Mode::new(GeneratorId::e(1, 1), -1), Mode::new(GeneratorId::f(1, 1), -3)],
            Rat::one(),
        );
        assert_eq!(
            express_in_j_basis(&s, JBasis::SpJ { n: 1 }),
            Err(InvariantsError::NotInSpan)
        );
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_coefficient(0, 0, 1, 0), rint(-2));
        assert_eq!(lambda_coefficient(0, 1, 2, 0), rint(0));
        // zero branch
        assert_eq!(lambda_coefficient(0, 3, 1, 0), rint(0));
        assert_eq!(lambda_coefficient(1, 2, 0, 0), rint(0));
    }

    #[test]
    fn decoupling_rank1_weight4() {
        let d = find_decoupling(Family::Sp, 1, 4).expect("j^2 decouples at rank 1");
        let rebuilt = evaluate_decoupling(Family::Sp, 1, &d);
        assert_eq!(rebuilt, j_generator(1, 2));
    }

    #[test]
    fn no_decoupling_rank2_weight4() {
        assert!(find_decoupling(Family::Sp, 2, 4).is_none(), "j^2 is a true generator at rank 2");
    }

    #[test]
    fn decoupling_next_rank() {
        // rank-2 gl: h^4 decouples, h^2 and h^3 do not
        let d = find_decoupling(Family::Gl, 2, 6).expect("h^4 decouples at rank 2");
        assert_eq!(evaluate_decoupling(Family::Gl, 2, &d), h_generator(2, 4));
        assert!(find_decoupling(Family::Gl, 2, 4).is_none());
        assert!(find_decoupling(Family::Gl, 2, 5).is_none());
        // rank-3 sp: j^6 decouples, j^4 does not
        let d = find_decoupling(Family::Sp, 3, 8).expect("j^6 decouples at rank 3");
        assert_eq!(evaluate_decoupling(Family::Sp, 3, &d), j_generator(3, 6));
        assert!(find_decoupling(Family::Sp, 3, 6).is_none());
    }

    #[test]
    fn gl_decoupling_rank1_weight4() {
        let d = find_decoupling(Family::Gl, 1, 4).expect("h^2 decouples at rank 1");
        let rebuilt = evaluate_decoupling(Family::Gl, 1, &d);
        assert_eq!(rebuilt, h_generator(1, 2));
    }

    #[test]
    fn strong_generation_sp() {
        assert_eq!(sp_j_leading_coefficient(3, 1).unwrap(), rint(-6));
    }

    #[test]
    fn strong_generation_gl() {
        let (ok, lhs, rhs) = gl_h_identity(2, 2);
        assert!(ok, "h^1 o_1 h^2 = -5 h^3 + 2 d h^2:\n lhs={lhs:?}\n rhs={rhs:?}");
    }

    #[test]
    fn strong_generation_flavored() {
        assert_eq!(flavored_sp_leading_coefficient(2, 2, 1).unwrap(), rint(-2));
    }

    /// Coefficient-level comparison between the closed-form lambda action and
    /// the engine, recorded without assertion: the normalization convention
    /// for coincident indices is not pinned down, so only the structural span
    /// membership (next test) is load-bearing.
    #[test]
    fn lambda_action_coefficients_recorded() {
        let n = 6u16;
        for (a, b, w, c, d) in [(0u32, 1u32, 1u32, 0u32, 3u32), (0, 1, 2, 1, 4), (0, 2, 1, 0, 5)] {
            let k = (a + b + 1 - w) as i64;
            let x = circle(
                &sp_omega(n, 1, 1, 1, a, b).unwrap(),
                k,
                &sp_omega(n, 1, 1, 1, c, d).unwrap(),
            );
            // expand in the quadratic-generator basis at the target weight
            let big_m = c + d + w;
            let mut index: BTreeMap<Vec<Mode>, usize> = BTreeMap::new();
            let mut columns = Vec::new();
            let mut labels = Vec::new();
            for lo in 0..=big_m / 2 {
                let st = sp_omega(n, 1, 1, 1, lo, big_m - lo).unwrap();
                for (mo, _) in st.terms() {
                    let next = index.len();
                    index.entry(mo.clone()).or_insert(next);
                }
                columns.push(st);
                labels.push((lo, big_m - lo));
            }
            for (mo, _) in x.terms() {
                let next = index.len();
                index.entry(mo.clone()).or_insert(next);
            }
            let dim = index.len();
            let to_vec = |st: &State| -> Vec<Rat> {
                let mut v = vec![Rat::zero(); dim];
                for (mo, co) in st.terms() {
                    v[index[mo]] = co.clone();
                }
                v
            };
            let cols: Vec<Vec<Rat>> = columns.iter().map(to_vec).collect();
            let Some(sol) = solve_in_span(&cols, &to_vec(&x)) else {
                eprintln!("lambda record ({a},{b},{w},{c},{d}): outside the quadratic span");
                continue;
            };
            let coeff_of = |aa: u32, bb: u32| -> Rat {
                let key = (aa.min(bb), aa.max(bb));
                labels
                    .iter()
                    .zip(&sol)
                    .find(|((x1, x2), _)| (*x1, *x2) == key)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(Rat::zero)
            };
            eprintln!(
                "lambda record ({a},{b},{w},{c},{d}): engine [{}, {}] vs closed form [{}, {}]",
                coeff_of(c + w, d),
                coeff_of(c, d + w),
                lambda_coefficient(a, b, w, c),
                lambda_coefficient(a, b, w, d),
            );
        }
    }

    /// Structural form of the lambda action: for n past the relation range,
    /// the circle product of two quadratic generators lies in the span of the
    /// two predicted generators plus total derivatives.
    #[test]
    fn lambda_action_structural() {
        let n = 6u16; // comfortably above a+b+c+d+2
        for (a, b, c, d, w) in [(0u32, 1u32, 0u32, 2u32, 1u32), (0, 0, 1, 1, 1), (1, 1, 0, 2, 1)] {
            let k = (a + b + 1).checked_sub(w).expect("mode stays nonnegative") as i64;
            let lhs = circle(
                &sp_omega(n, 1, 1, 1, a, b).unwrap(),
                k,
                &sp_omega(n, 1, 1, 1, c, d).unwrap(),
            );
            if lhs.is_zero() {
                continue;
            }
            // membership in span{omega_{c+w,d}, omega_{c,d+w}} + d(lower weight span)
            let mut columns = Vec::new();
            let mut push = |st: State| columns.push(st);
            let o1 = sp_omega(n, 1, 1, 1, (c + w).min(d), (c + w).max(d)).unwrap();
            let o2 = sp_omega(n, 1, 1, 1, c.min(d + w), c.max(d + w)).unwrap();
            push(o1);
            push(o2);
            let wt = c + d + w + 2;
            if wt >= 3 {
                if let Ok(elements) = basis_elements(JBasis::SpJ { n }, wt - 1) {
                    for (_, st) in elements {
                        push(derive(&st, 1));
                    }
                }
            }
            let mut index: BTreeMap<Vec<Mode>, usize> = BTreeMap::new();
            for st in columns.iter().chain(std::iter::once(&lhs)) {
                for (m, _) in st.terms() {
                    let next = index.len();
                    index.entry(m.clone()).or_insert(next);
                }
            }
            let dim = index.len();
            let to_vec = |st: &State| -> Vec<Rat> {
                let mut v = vec![Rat::zero(); dim];
                for (mo, co) in st.terms() {
                    v[index[mo]] = co.clone();
                }
                v
            };
            let cols: Vec<Vec<Rat>> = columns.iter().map(to_vec).collect();
            let target = to_vec(&lhs);
            assert!(
                solve_in_span(&cols, &target).is_some(),
                "structural lambda action fails at (a,b,c,d,w)=({a},{b},{c},{d},{w})"
            );
        }
    }
}
