//! Exact-arithmetic engine for symplectic fermion algebras and their orbifolds.
//!
//! Everything here is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The main pieces are:
//!
//! - [`qseries`]: truncated formal q-series with exponents in (1/24)Z — eta
//!   functions, partial theta functions, named product characters.
//! - [`fock`]: the Fock space of the rank-nm symplectic fermion algebra, with
//!   exact mode action, translation, circle (OPE) products, Wick products, and
//!   the Virasoro element.
//! - [`lie`]: reductive Lie algebra actions on the generators and exact
//!   invariant-subspace dimensions.
//! - [`classical`] / [`remainder`] / [`invariants`]: the orbifold generators,
//!   classical relations, remainder recursions, and decoupling-relation search.
//! - [`rootsys`]: root systems of gl(m|n), spo(2m|2n), spo(2m|2n+1), Weyl
//!   groups, and exact denominator-identity evaluation.
//! - [`characters`]: branching functions and character-decomposition checks.

pub mod characters;
pub mod classical;
pub mod fock;
pub mod invariants;
pub mod lie;
pub mod linalg;
pub mod qseries;
pub mod remainder;
pub mod rootsys;

pub use num::BigInt;
pub use num::BigRational as Rat;

use num::{One, Zero};

/// Rational n/d from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from a single integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Generalized binomial coefficient C(p, i) = p(p-1)...(p-i+1)/i! for any
/// integer p (including negative) and i >= 0. Always an integer.
pub fn binomial_general(p: i64, i: u64) -> BigInt {
    let mut num = BigInt::one();
    for t in 0..i {
        num *= BigInt::from(p - t as i64);
    }
    let q = Rat::new(num, factorial(i));
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// (-1)^k for possibly negative k.
pub fn neg_one_pow(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Exact integer power of a nonzero rational, with negative exponents allowed.
pub fn rat_pow(base: &Rat, k: i64) -> Rat {
    assert!(!base.is_zero() || k >= 0, "0 cannot be raised to a negative power");
    let mut acc = Rat::one();
    let b = if k >= 0 { base.clone() } else { base.recip() };
    for _ in 0..k.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Euclidean norm squared of a list of rationals.
pub fn euclid_norm_sq(coords: impl Iterator<Item = Rat>) -> Rat {
    let mut acc = Rat::zero();
    for c in coords {
        acc += &c * &c;
    }
    acc
}

#[allow(unused_imports)]
pub(crate) use num::{One as _One, Signed as _Signed, Zero as _Zero};
