//! Truncated formal q-series with exact rational coefficients.
//!
//! Every exponent is stored as an integer numerator over the fixed denominator
//! 24, which is fine enough for all the fractional prefactors that show up in
//! the characters here (1/24 from eta, 1/12 from rank prefactors, 1/8 = 3/24
//! from partial theta functions). Truncation is an exclusive upper cutoff and
//! is propagated pessimistically: an operation never reports a coefficient it
//! cannot know exactly.

use crate::{rint, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Fixed global denominator for q-exponents.
pub const EXP_DEN: i64 = 24;

/// A q-exponent numerator; the actual exponent is `value / 24`.
pub type QExp = i64;

/// Sparse truncated series in q with rational coefficients and exponents in
/// (1/24)Z. All stored coefficients are nonzero and below the cutoff.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    terms: BTreeMap<QExp, Rat>,
    trunc: QExp,
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{}/24)", self, self.trunc)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e % EXP_DEN == 0 {
                write!(f, "{}*q^{}", c, e / EXP_DEN)?;
            } else {
                write!(f, "{}*q^({}/24)", c, e)?;
            }
        }
        Ok(())
    }
}

impl QSeries {
    pub fn zero(trunc: QExp) -> Self {
        QSeries { terms: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: QExp) -> Self {
        Self::monomial(0, Rat::one(), trunc)
    }

    /// c * q^(exp/24), truncated.
    pub fn monomial(exp: QExp, coeff: Rat, trunc: QExp) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(exp, coeff);
        s
    }

    pub fn trunc(&self) -> QExp {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QExp, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True if no nonzero coefficient is known below the cutoff.
    pub fn is_zero_series(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(QExp, &Rat)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    fn lead_or_trunc(&self) -> QExp {
        self.leading().map(|(e, _)| e).unwrap_or(self.trunc)
    }

    pub fn coeff(&self, exp: QExp) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient at offset `k` (in whole powers of q) above the leading exponent.
    pub fn coeff_at_offset(&self, k: i64) -> Rat {
        match self.leading() {
            Some((e, _)) => self.coeff(e + EXP_DEN * k),
            None => Rat::zero(),
        }
    }

    pub fn add_term(&mut self, exp: QExp, coeff: Rat) {
        if exp >= self.trunc || coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut out = QSeries::zero(trunc);
        for (e, c) in &self.terms {
            out.add_term(*e, c.clone());
        }
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn scale(&self, c: &Rat) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.trunc);
        }
        QSeries {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
            trunc: self.trunc,
        }
    }

    /// Shift all exponents by d/24.
    pub fn shift(&self, d: QExp) -> QSeries {
        QSeries {
            terms: self.terms.iter().map(|(e, c)| (e + d, c.clone())).collect(),
            trunc: self.trunc + d,
        }
    }

    /// Lower the cutoff (dropping terms at or above it).
    pub fn truncate_to(&self, t: QExp) -> QSeries {
        let trunc = self.trunc.min(t);
        QSeries {
            terms: self.terms.range(..trunc).map(|(e, c)| (*e, c.clone())).collect(),
            trunc,
        }
    }

    /// Coefficientwise convolution. The result cutoff accounts for leading
    /// exponent shifts: terms at exponent e are known exactly only when
    /// e < min(trunc_a + lead_b, trunc_b + lead_a).
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let trunc = (self.trunc + other.lead_or_trunc()).min(other.trunc + self.lead_or_trunc());
        let mut out = QSeries::zero(trunc);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e >= trunc {
                    break;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> QSeries {
        let mut acc = QSeries::one(self.trunc);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse up to truncation. Errors if the series is zero
    /// to its truncation.
    pub fn invert(&self) -> Result<QSeries, QSeriesError> {
        let (lead, lead_c) = match self.leading() {
            Some((e, c)) => (e, c.clone()),
            None => return Err(QSeriesError::ZeroInverse),
        };
        // normalize to g = 1 + u with u supported on positive exponents
        let g: Vec<(QExp, Rat)> = self
            .terms
            .iter()
            .filter(|(e, _)| **e > lead)
            .map(|(e, c)| (e - lead, c / &lead_c))
            .collect();
        let valid = self.trunc - lead; // g is known below this
        let mut b: BTreeMap<QExp, Rat> = BTreeMap::new();
        b.insert(0, Rat::one());
        for e in 1..valid {
            let mut s = Rat::zero();
            for (eg, cg) in &g {
                if *eg > e {
                    break;
                }
                if let Some(prev) = b.get(&(e - eg)) {
                    s += cg * prev;
                }
            }
            if !s.is_zero() {
                b.insert(e, -s);
            }
        }
        let mut out = QSeries::zero(self.trunc - 2 * lead);
        for (e, c) in b {
            out.add_term(e - lead, c / &lead_c);
        }
        Ok(out)
    }

    /// First exponent strictly below both cutoffs where the two series differ.
    pub fn first_mismatch(&self, other: &QSeries) -> Option<QExp> {
        let bound = self.trunc.min(other.trunc);
        let mut exps: Vec<QExp> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .filter(|e| *e < bound)
            .collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter().find(|e| self.coeff(*e) != other.coeff(*e))
    }

    /// Exact equality of all coefficients below the shared cutoff.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// JSON encoding {"den":24,"trunc":N,"terms":[[exp,"p/q"],...]}, terms ascending.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!([e, c.to_string()]))
            .collect();
        serde_json::json!({"den": EXP_DEN, "trunc": self.trunc, "terms": terms})
    }

    /// (exponent numerator, coefficient string) rows for CSV output.
    pub fn csv_rows(&self) -> Vec<(QExp, String)> {
        self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QSeriesError {
    /// Inversion of a series that is zero to its truncation.
    ZeroInverse,
}

impl fmt::Display for QSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSeriesError::ZeroInverse => write!(f, "cannot invert a series that is zero to truncation"),
        }
    }
}

impl std::error::Error for QSeriesError {}

// ---------------------------------------------------------------------------
// named series
// ---------------------------------------------------------------------------

/// Dense product accumulator on the integer q-grid. `v[k]` is the coefficient
/// of q^k; factors (1 ± q^w)^±1 are applied by in-place recurrences.
struct IntGrid {
    v: Vec<Rat>,
}

impl IntGrid {
    fn new(order: usize) -> Self {
        let mut v = vec![Rat::zero(); order + 1];
        v[0] = Rat::one();
        IntGrid { v }
    }

    /// Multiply by (1 - sign*q^w)^pow for pow of either sign, w >= 1.
    fn apply(&mut self, w: usize, sign: i64, pow: i64) {
        assert!(w >= 1);
        let n = self.v.len() - 1;
        if w > n {
            return;
        }
        for _ in 0..pow.unsigned_abs() {
            if pow > 0 {
                // v *= (1 - sign q^w)
                for e in (w..=n).rev() {
                    let t = &self.v[e - w] * rint(sign);
                    self.v[e] -= t;
                }
            } else {
                // v /= (1 - sign q^w)  i.e. v[e] += sign*v[e-w] ascending
                for e in w..=n {
                    let t = &self.v[e - w] * rint(sign);
                    self.v[e] += t;
                }
            }
        }
    }

    /// Into a QSeries with the given fractional prefactor (in 24ths) and
    /// cutoff prefactor24 + 24*(order+1).
    fn into_series(self, prefactor24: QExp) -> QSeries {
        let order = self.v.len() as i64 - 1;
        let mut s = QSeries::zero(prefactor24 + EXP_DEN * (order + 1));
        for (k, c) in self.v.into_iter().enumerate() {
            s.add_term(prefactor24 + EXP_DEN * k as i64, c);
        }
        s
    }
}

fn orders_for(trunc: QExp, prefactor24: QExp) -> usize {
    if trunc <= prefactor24 {
        0
    } else {
        ((trunc - prefactor24) / EXP_DEN + 1) as usize
    }
}

/// Pentagonal-number expansion of q^{front/24} prod_{n>=1} (1 - q^{step*n}).
fn pentagonal(front: QExp, step: i64, trunc: QExp) -> QSeries {
    let mut s = QSeries::zero(trunc);
    let exp = |k: i64| front + 24 * step * (k * (3 * k - 1) / 2);
    let mut k: i64 = 0;
    loop {
        if k > 0 && exp(k) >= trunc && exp(-k) >= trunc {
            break;
        }
        for kk in [k, -k] {
            let e = exp(kk);
            if e < trunc {
                s.add_term(e, neg_one_pow_rat(kk));
            }
            if kk == 0 {
                break;
            }
        }
        k += 1;
    }
    s
}

fn neg_one_pow_rat(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Dedekind eta: q^{1/24} prod_{n>=1} (1-q^n), by the pentagonal number theorem.
pub fn eta(trunc: QExp) -> QSeries {
    assert!(trunc > 0, "eta needs a positive truncation");
    pentagonal(1, 1, trunc)
}

/// eta(q^2): q^{2/24} prod_{n>=1} (1-q^{2n}).
pub fn eta2(trunc: QExp) -> QSeries {
    pentagonal(2, 2, trunc)
}

/// eta(q)^k for any integer k (negative allowed), built by product recurrences.
pub fn eta_power(k: i64, trunc: QExp) -> QSeries {
    let prefactor = k; // k * 1/24
    let order = orders_for(trunc, prefactor);
    let mut grid = IntGrid::new(order);
    for w in 1..=order.max(1) {
        grid.apply(w, 1, k);
    }
    grid.into_series(prefactor).truncate_to(trunc)
}

/// Partial theta function P_n(q) = sum_{m>=0} (-1)^m q^{(m-n-1/2)^2/2}.
pub fn partial_theta(n_idx: i64, trunc: QExp) -> QSeries {
    let mut s = QSeries::zero(trunc);
    let mut m: i64 = 0;
    loop {
        let d = 2 * (m - n_idx) - 1;
        let e = 3 * d * d; // (d/2)^2/2 = d^2/8 = 3d^2/24
        if m > n_idx && e >= trunc {
            break;
        }
        if e < trunc {
            s.add_term(e, if m % 2 == 0 { Rat::one() } else { -Rat::one() });
        }
        m += 1;
    }
    s
}

/// The graded character of the rank-(m*r) symplectic fermion Fock space,
/// (eta(q^2)/eta(q))^{2mr} = q^{mr/12} prod_{j>=1} (1+q^j)^{2mr}.
pub fn full_character(m: u32, r: u32, trunc: QExp) -> QSeries {
    let k = 2 * (m as i64) * (r as i64);
    let prefactor = 2 * (m as i64) * (r as i64); // mr/12 = 2mr/24
    let order = orders_for(trunc, prefactor);
    let mut grid = IntGrid::new(order);
    for w in 1..=order.max(1) {
        // (1+q^w)^k
        grid.apply(w, -1, k);
    }
    grid.into_series(prefactor).truncate_to(trunc)
}

/// q^{n/12} prod_{i=1}^n prod_{k>=0} (1-q^{2i+k})^{-1}: the vacuum orbifold
/// character for the full symplectic group action at rank n.
pub fn sp_orbifold(n: u32, trunc: QExp) -> QSeries {
    let prefactor = 2 * n as i64;
    let order = orders_for(trunc, prefactor);
    let mut grid = IntGrid::new(order);
    for w in 2..=order.max(2) {
        let mult = (n as i64).min(w as i64 / 2);
        if mult > 0 {
            grid.apply(w, 1, -mult);
        }
    }
    grid.into_series(prefactor).truncate_to(trunc)
}

/// prod_i prod_{k>=0} (1-q^{w_i+k})^{-1} with no prefactor: the character of a
/// free W-algebra with generators of the given weights.
pub fn free_wtype(weights: &[u32], trunc: QExp) -> QSeries {
    let order = orders_for(trunc, 0);
    let mut grid = IntGrid::new(order);
    for w in 1..=order.max(1) {
        let mult = weights.iter().filter(|x| **x as usize <= w).count() as i64;
        if mult > 0 {
            grid.apply(w, 1, -mult);
        }
    }
    grid.into_series(0).truncate_to(trunc)
}
