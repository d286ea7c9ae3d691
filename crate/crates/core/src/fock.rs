//! Fock space of the rank-nm symplectic fermion algebra, with exact mode
//! action, translation, circle products, and the Virasoro element.
//!
//! States are canonical signed sums of ordered monomials in creation modes
//! g_(k), k <= -1, applied to the vacuum. The mode anticommutators are
//! {e^{i,j}_(s), f^{k,l}_(t)} = s * delta_{s+t,0} delta_{ik} delta_{jl}, with
//! same-species modes anticommuting to zero. The state-field dictionary is
//! state(d^k g) = k! * g_(-1-k)|0>.

use crate::{binomial_general, rat, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Species {
    E,
    F,
}

/// One of the 2nm odd generators e^{i,j} / f^{i,j}; color is the symplectic
/// index 1..=n, flavor the orthogonal/linear index 1..=m.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratorId {
    pub species: Species,
    pub color: u16,
    pub flavor: u16,
}

impl GeneratorId {
    pub fn e(color: u16, flavor: u16) -> Self {
        GeneratorId { species: Species::E, color, flavor }
    }
    pub fn f(color: u16, flavor: u16) -> Self {
        GeneratorId { species: Species::F, color, flavor }
    }
}

/// A single mode g_(index). Field order matters: modes sort by index first,
/// then species E < F, then color, then flavor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mode {
    pub index: i32,
    pub gen: GeneratorId,
}

impl Mode {
    pub fn new(gen: GeneratorId, index: i32) -> Self {
        Mode { index, gen }
    }
    pub fn is_creation(&self) -> bool {
        self.index <= -1
    }
}

/// Anticommutator {a, b} of two modes: the index of the e-mode when a and b
/// are an e/f pair with matching color and flavor and indices summing to zero,
/// and 0 otherwise.
pub fn anticommutator(a: Mode, b: Mode) -> i64 {
    if a.index + b.index != 0 {
        return 0;
    }
    if a.gen.color != b.gen.color || a.gen.flavor != b.gen.flavor {
        return 0;
    }
    match (a.gen.species, b.gen.species) {
        (Species::E, Species::F) => a.index as i64,
        (Species::F, Species::E) => b.index as i64,
        _ => 0,
    }
}

/// Sort modes into canonical order, counting transpositions. Returns None if
/// a mode repeats (odd square = 0).
pub fn canonicalize(mut modes: Vec<Mode>) -> Option<(Vec<Mode>, i64)> {
    let mut sign = 1i64;
    for i in 1..modes.len() {
        let mut j = i;
        while j > 0 && modes[j] < modes[j - 1] {
            modes.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && modes[j] == modes[j - 1] {
            return None;
        }
    }
    Some((modes, sign))
}

/// Canonical signed linear combination of ordered creation-mode monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct State {
    terms: BTreeMap<Vec<Mode>, Rat>,
}

impl State {
    pub fn zero() -> Self {
        State { terms: BTreeMap::new() }
    }

    pub fn vacuum() -> Self {
        let mut s = State::zero();
        s.terms.insert(Vec::new(), Rat::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Mode>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, monomial: &[Mode]) -> Rat {
        self.terms.get(monomial).cloned().unwrap_or_else(Rat::zero)
    }

    /// Accumulate a coefficient onto an already-canonical monomial key.
    fn accumulate(&mut self, key: Vec<Mode>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    /// Add coeff * monomial, canonicalizing the mode list first.
    pub fn add_monomial(&mut self, modes: Vec<Mode>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(modes.iter().all(Mode::is_creation), "monomials contain creation modes only");
        if let Some((sorted, sign)) = canonicalize(modes) {
            let c = if sign < 0 { -coeff } else { coeff };
            self.accumulate(sorted, c);
        }
    }

    pub fn add(&self, other: &State) -> State {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &State) -> State {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> State {
        State { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> State {
        if c.is_zero() {
            return State::zero();
        }
        State { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Weight of a monomial: minus the sum of its mode indices.
    pub fn monomial_weight(modes: &[Mode]) -> u32 {
        modes.iter().map(|m| (-m.index) as u32).sum()
    }

    /// Largest monomial weight present (0 for the zero state).
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| State::monomial_weight(m)).max().unwrap_or(0)
    }

    /// The common weight if the state is homogeneous.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| State::monomial_weight(m));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Component of the given weight.
    pub fn weight_component(&self, w: u32) -> State {
        State {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| State::monomial_weight(m) == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Number of modes in the longest monomial (the filtration degree).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_state(self))
    }
}

/// Apply one mode to a state. Creation modes anticommute into place;
/// annihilation and zero modes contract against creation modes and kill the
/// vacuum.
pub fn apply_mode(mode: Mode, s: &State) -> State {
    let mut out = State::zero();
    for (modes, c) in &s.terms {
        if mode.is_creation() {
            match modes.binary_search(&mode) {
                Ok(_) => continue, // repeated odd mode
                Err(pos) => {
                    let mut nm = Vec::with_capacity(modes.len() + 1);
                    nm.extend_from_slice(&modes[..pos]);
                    nm.push(mode);
                    nm.extend_from_slice(&modes[pos..]);
                    let signed = if pos % 2 == 0 { c.clone() } else { -c.clone() };
                    out.accumulate(nm, signed);
                }
            }
        } else {
            // contract against each creation mode; reaching the vacuum kills it
            for (j, mj) in modes.iter().enumerate() {
                let v = anticommutator(mode, *mj);
                if v != 0 {
                    let mut nm = modes.clone();
                    nm.remove(j);
                    let mut coeff = c * rat(v, 1);
                    if j % 2 == 1 {
                        coeff = -coeff;
                    }
                    out.accumulate(nm, coeff);
                }
            }
        }
    }
    out
}

/// Translation operator: T|0> = 0 and [T, g_(-k)] = k g_(-k-1).
pub fn translate(s: &State) -> State {
    let mut out = State::zero();
    for (modes, c) in &s.terms {
        for j in 0..modes.len() {
            let mut nm = modes.clone();
            nm[j] = Mode::new(nm[j].gen, nm[j].index - 1);
            let factor = rat(-(modes[j].index as i64), 1);
            out.add_monomial(nm, c * factor);
        }
    }
    out
}

/// d^k applied to a state: translate iterated k times.
pub fn derive(s: &State, k: u32) -> State {
    let mut out = s.clone();
    for _ in 0..k {
        out = translate(&out);
    }
    out
}

/// The k-th circle product a_(k) b, by the standard mode-iterate expansion:
/// for a = u_(p) c with u a generator mode,
///   (u_(p)c)_(k) b = sum_i (-1)^i C(p,i) u_(p-i) (c_(k+i) b)
///     - (-1)^{p + |u||c|} sum_i (-1)^i C(p,i) c_(p+k-i) (u_(i) b).
/// Both sums are finite: the first by the weight bound on c_(k+i) b, the
/// second because u_(i) b vanishes for i > wt(b).
pub fn circle(a: &State, k: i64, b: &State) -> State {
    let mut out = State::zero();
    if a.is_zero() || b.is_zero() {
        return out;
    }
    let wt_b = b.max_weight() as i64;
    for (modes, c) in &a.terms {
        let t = circle_monomial(modes, k, b, wt_b);
        out = out.add(&t.scale(c));
    }
    out
}

fn circle_monomial(modes: &[Mode], k: i64, b: &State, wt_b: i64) -> State {
    if modes.is_empty() {
        // vacuum: |0>_(k) b = delta_{k,-1} b
        return if k == -1 { b.clone() } else { State::zero() };
    }
    let u = modes[0];
    let rest = &modes[1..];
    let c_state = {
        let mut s = State::zero();
        s.terms.insert(rest.to_vec(), Rat::one());
        s
    };
    let p = u.index as i64;
    let wt_c: i64 = rest.iter().map(|m| -m.index as i64).sum();
    let parity_c = rest.len() % 2 == 1;

    let mut out = State::zero();

    // sum 1: u_(p-i) (c_(k+i) b), bounded by wt(c_(k+i) b) >= 0
    let mut i: i64 = 0;
    while k + i < wt_c + wt_b {
        let inner = circle(&c_state, k + i, b);
        if !inner.is_zero() {
            let coeff = Rat::from_integer(binomial_general(p, i as u64))
                * if i % 2 == 0 { Rat::one() } else { -Rat::one() };
            let t = apply_mode(Mode::new(u.gen, (p - i) as i32), &inner);
            out = out.add(&t.scale(&coeff));
        }
        i += 1;
    }

    // sum 2: -(-1)^{p+|u||c|} sum_i (-1)^i C(p,i) c_(p+k-i) (u_(i) b)
    let front = {
        let exp = p + if parity_c { 1 } else { 0 };
        if exp.rem_euclid(2) == 0 {
            -Rat::one()
        } else {
            Rat::one()
        }
    };
    for i in 0..=wt_b {
        let ub = apply_mode(Mode::new(u.gen, i as i32), b);
        if ub.is_zero() {
            continue;
        }
        let inner = circle(&c_state, p + k - i, &ub);
        if inner.is_zero() {
            continue;
        }
        let coeff = &front
            * Rat::from_integer(binomial_general(p, i as u64))
            * if i % 2 == 0 { Rat::one() } else { -Rat::one() };
        out = out.add(&inner.scale(&coeff));
    }
    out
}

/// Wick (normally ordered) product :ab: = a_(-1) b.
pub fn wick(a: &State, b: &State) -> State {
    circle(a, -1, b)
}

/// Single-generator state k! g_(-1-k)|0> corresponding to d^k g.
pub fn generator_state(gen: GeneratorId, derivs: u32) -> State {
    let mut s = State::zero();
    s.terms.insert(
        vec![Mode::new(gen, -1 - derivs as i32)],
        Rat::from_integer(crate::factorial(derivs as u64)),
    );
    s
}

/// The conformal vector -sum_{i,j} :e^{i,j} f^{i,j}: of the rank-nm algebra.
pub fn virasoro(n: u16, m: u16) -> State {
    let mut s = State::zero();
    for i in 1..=n {
        for j in 1..=m {
            s.add_monomial(
                vec![Mode::new(GeneratorId::e(i, j), -1), Mode::new(GeneratorId::f(i, j), -1)],
                -Rat::one(),
            );
        }
    }
    s
}

// ---------------------------------------------------------------------------
// weight-graded basis
// ---------------------------------------------------------------------------

/// All partitions of v into distinct parts, each part listed descending.
fn distinct_partitions(v: u32) -> Vec<Vec<u32>> {
    fn rec(v: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == 0 {
            out.push(acc.clone());
            return;
        }
        let mut part = v.min(max);
        while part >= 1 {
            if part <= v {
                acc.push(part);
                rec(v - part, part.saturating_sub(1), acc, out);
                acc.pop();
            }
            part -= 1;
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(v, v, &mut acc, &mut out);
    out
}

/// All canonical monomials of the given weight in the rank-nm algebra. The
/// count equals the q^w coefficient of prod (1+q^k)^{2nm}.
pub fn weight_basis(n: u16, m: u16, w: u32) -> Vec<Vec<Mode>> {
    let mut gens = Vec::new();
    for species in [Species::E, Species::F] {
        for color in 1..=n {
            for flavor in 1..=m {
                gens.push(GeneratorId { species, color, flavor });
            }
        }
    }
    let mut out: Vec<Vec<Mode>> = Vec::new();
    fn rec(
        gens: &[GeneratorId],
        idx: usize,
        remaining: u32,
        acc: &mut Vec<Mode>,
        out: &mut Vec<Vec<Mode>>,
    ) {
        if idx == gens.len() {
            if remaining == 0 {
                let (sorted, _) = canonicalize(acc.clone()).expect("distinct by construction");
                out.push(sorted);
            }
            return;
        }
        for part in distinct_partitions_upto(remaining) {
            let used: u32 = part.iter().sum();
            let before = acc.len();
            for p in &part {
                acc.push(Mode::new(gens[idx], -(*p as i32)));
            }
            rec(gens, idx + 1, remaining - used, acc, out);
            acc.truncate(before);
        }
    }
    fn distinct_partitions_upto(v: u32) -> Vec<Vec<u32>> {
        let mut all = Vec::new();
        for used in 0..=v {
            for p in distinct_partitions(used) {
                all.push(p);
            }
        }
        all
    }
    let mut acc = Vec::new();
    rec(&gens, 0, w, &mut acc, &mut out);
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// textual fixture format
// ---------------------------------------------------------------------------

/// Render a state as e.g. "-1·e[1,1](-1) f[1,1](-1) + 1/2·f[2,1](-3)".
/// The vacuum monomial renders as a bare coefficient; the zero state as "0".
pub fn format_state(s: &State) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (modes, c) in s.terms() {
        if modes.is_empty() {
            parts.push(c.to_string());
        } else {
            let body: Vec<String> = modes
                .iter()
                .map(|m| {
                    let sp = match m.gen.species {
                        Species::E => "e",
                        Species::F => "f",
                    };
                    format!("{}[{},{}]({})", sp, m.gen.color, m.gen.flavor, m.index)
                })
                .collect();
            parts.push(format!("{}·{}", c, body.join(" ")));
        }
    }
    parts.join(" + ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseStateError(pub String);

impl fmt::Display for ParseStateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad state syntax: {}", self.0)
    }
}

impl std::error::Error for ParseStateError {}

/// Parse the textual fixture format emitted by [`format_state`]. Round-trips
/// canonical forms bit-exactly.
pub fn parse_state(input: &str) -> Result<State, ParseStateError> {
    let input = input.trim();
    if input == "0" {
        return Ok(State::zero());
    }
    let mut out = State::zero();
    for term in input.split(" + ") {
        let term = term.trim();
        let (coeff_str, modes_str) = match term.split_once('·') {
            Some((c, m)) => (c, Some(m)),
            None => (term, None),
        };
        let coeff = crate::parse_rat(coeff_str)
            .ok_or_else(|| ParseStateError(format!("bad coefficient `{coeff_str}`")))?;
        let mut modes = Vec::new();
        if let Some(ms) = modes_str {
            for tok in ms.split_whitespace() {
                modes.push(parse_mode(tok)?);
            }
        }
        if modes.is_empty() {
            let entry = out.terms.entry(Vec::new()).or_insert_with(Rat::zero);
            *entry += coeff;
            if entry.is_zero() {
                out.terms.remove(&Vec::new());
            }
        } else {
            out.add_monomial(modes, coeff);
        }
    }
    Ok(out)
}

fn parse_mode(tok: &str) -> Result<Mode, ParseStateError> {
    let err = || ParseStateError(format!("bad mode `{tok}`"));
    let species = match tok.chars().next() {
        Some('e') => Species::E,
        Some('f') => Species::F,
        _ => return Err(err()),
    };
    let rest = &tok[1..];
    let open = rest.find('[').ok_or_else(err)?;
    let close = rest.find(']').ok_or_else(err)?;
    let cf = &rest[open + 1..close];
    let (c, f) = cf.split_once(',').ok_or_else(err)?;
    let color: u16 = c.trim().parse().map_err(|_| err())?;
    let flavor: u16 = f.trim().parse().map_err(|_| err())?;
    let idx_part = &rest[close + 1..];
    if !idx_part.starts_with('(') || !idx_part.ends_with(')') {
        return Err(err());
    }
    let index: i32 = idx_part[1..idx_part.len() - 1].trim().parse().map_err(|_| err())?;
    Ok(Mode::new(GeneratorId { species, color, flavor }, index))
}

// ---------------------------------------------------------------------------
// seeded random states for property tests
// ---------------------------------------------------------------------------

/// A pseudo-random state of homogeneous monomial parity with weight at most
/// max_weight, for the engine property suites. Deterministic given the rng.
pub fn random_state<R: rand::Rng>(n: u16, m: u16, max_weight: u32, rng: &mut R) -> State {
    let mut s = State::zero();
    let n_terms = rng.gen_range(1..=3);
    let parity = rng.gen_range(0..2usize);
    for _ in 0..n_terms {
        let n_modes = 2 * rng.gen_range(0..=(max_weight as usize) / 2) + parity;
        let mut modes = Vec::new();
        let mut budget = max_weight as i32;
        for _ in 0..n_modes {
            if budget < 1 {
                break;
            }
            let depth = rng.gen_range(1..=budget.min(3));
            budget -= depth;
            let species = if rng.gen_bool(0.5) { Species::E } else { Species::F };
            let color = rng.gen_range(1..=n);
            let flavor = rng.gen_range(1..=m);
            modes.push(Mode::new(GeneratorId { species, color, flavor }, -depth));
        }
        if modes.len() % 2 != parity % 2 {
            continue;
        }
        let coeff = rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3));
        s.add_monomial(modes, coeff);
    }
    s
}
