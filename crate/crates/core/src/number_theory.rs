//! Exact integer arithmetic for the classical side of period finding.
//!
//! Everything here works on native `u64`. Moduli are capped at
//! [`MAX_MODULUS`] so that a product of two residues always fits the word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`mod_exp`] and friends; `N^2` fits in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Greatest common divisor by the Euclidean algorithm.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::Domain("gcd(0, 0) is undefined".into()));
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_coprime(a: u64, n: u64) -> bool {
    gcd_unchecked(a, n) == 1
}

/// `base^exponent mod modulus` by square-and-multiply.
pub fn mod_exp(base: u64, mut exponent: u64, modulus: u64) -> Result<u64> {
    check_modulus(modulus)?;
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exponent >>= 1;
    }
    Ok(result)
}

fn check_modulus(modulus: u64) -> Result<()> {
    if modulus < 2 {
        return Err(Error::Domain(format!(
            "modulus must be at least 2, got {modulus}"
        )));
    }
    if modulus > MAX_MODULUS {
        return Err(Error::Domain(format!(
            "modulus {modulus} exceeds the supported maximum {MAX_MODULUS}"
        )));
    }
    Ok(())
}

/// Multiplicative order of `a` modulo `n` by direct iteration.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64> {
    check_modulus(n)?;
    if !is_coprime(a, n) {
        return Err(Error::NotCoprime { a, modulus: n });
    }
    let a = a % n;
    let mut acc = a;
    let mut r = 1;
    while acc != 1 % n {
        acc = acc * a % n;
        r += 1;
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub numerator: u64,
    pub denominator: u64,
}

impl Fraction {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain(
                "fraction denominator must be positive".into(),
            ));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    /// Cancel to lowest terms. `0/s` reduces to `0/1`.
    pub fn reduce(self) -> Self {
        let g = gcd_unchecked(self.numerator, self.denominator);
        Self {
            numerator: self.numerator / g,
            denominator: self.denominator / g,
        }
    }

    pub fn is_reduced(&self) -> bool {
        gcd_unchecked(self.numerator, self.denominator) == 1
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Why a number is not a suitable target for quantum order finding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum ShorInputRejection {
    TooSmall {
        n: u64,
    },
    TooLarge {
        n: u64,
        max: u64,
    },
    /// Even numbers have the factor 2 for free.
    Even {
        n: u64,
        factor: u64,
    },
    Prime {
        n: u64,
    },
    PerfectPower {
        n: u64,
        base: u64,
        exponent: u32,
    },
}

impl fmt::Display for ShorInputRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::TooSmall { n } => write!(f, "{n} is too small to factor"),
            Self::TooLarge { n, max } => write!(f, "{n} exceeds the supported maximum {max}"),
            Self::Even { n, factor } => write!(f, "{n} is even (factor {factor})"),
            Self::Prime { n } => write!(f, "{n} is prime"),
            Self::PerfectPower { n, base, exponent } => {
                write!(f, "{n} is a perfect power ({base}^{exponent})")
            }
        }
    }
}

/// Accepts odd composites that are not perfect powers.
pub fn validate_shor_input(n: u64) -> std::result::Result<(), ShorInputRejection> {
    if n < 2 {
        return Err(ShorInputRejection::TooSmall { n });
    }
    if n > MAX_MODULUS {
        return Err(ShorInputRejection::TooLarge {
            n,
            max: MAX_MODULUS,
        });
    }
    if n.is_multiple_of(2) {
        return Err(ShorInputRejection::Even { n, factor: 2 });
    }
    if is_prime(n) {
        return Err(ShorInputRejection::Prime { n });
    }
    if let Some((base, exponent)) = perfect_power(n) {
        return Err(ShorInputRejection::PerfectPower { n, base, exponent });
    }
    Ok(())
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Integer `k`-th root, rounded down.
pub fn integer_root(n: u64, k: u32) -> u64 {
    if k == 1 || n < 2 {
        return n;
    }
    let mut guess = (n as f64).powf(1.0 / k as f64).round() as u64;
    // float estimate can be off by one in either direction
    while guess > 0 && checked_pow(guess, k).is_none_or(|p| p > n) {
        guess -= 1;
    }
    while checked_pow(guess + 1, k).is_some_and(|p| p <= n) {
        guess += 1;
    }
    guess
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Returns `(b, k)` with `b^k = n`, `k >= 2`, maximizing `k`.
pub fn perfect_power(n: u64) -> Option<(u64, u32)> {
    if n < 4 {
        return None;
    }
    let max_k = 63 - n.leading_zeros();
    (2..=max_k).rev().find_map(|k| {
        let b = integer_root(n, k);
        (b >= 2 && checked_pow(b, k) == Some(n)).then_some((b, k))
    })
}

/// Bit `i` of an equation or solution vector is the coefficient of variable `i`.
pub type Gf2Vector = u64;

pub fn dot_gf2(a: Gf2Vector, b: Gf2Vector) -> u8 {
    ((a & b).count_ones() & 1) as u8
}

/// Null space `{ r : y . r = 0 for every equation y }` over GF(2).
///
/// Gauss-Jordan elimination pivoting on the lowest bit index first. The
/// returned basis has one vector per free variable, ordered by that variable.
pub fn solve_gf2(equations: &[Gf2Vector], n: usize) -> Result<Vec<Gf2Vector>> {
    if n == 0 || n > 64 {
        return Err(Error::Domain(format!(
            "GF(2) system width must be in 1..=64, got {n}"
        )));
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if let Some(bad) = equations.iter().find(|&&e| e & !mask != 0) {
        return Err(Error::Domain(format!(
            "equation {bad:#b} is wider than {n} bits"
        )));
    }

    let (rows, pivots) = row_reduce(equations, n);
    let is_pivot = |bit: usize| pivots.contains(&bit);

    let mut basis = Vec::with_capacity(n - rows.len());
    for free in (0..n).filter(|&b| !is_pivot(b)) {
        let mut v: Gf2Vector = 1 << free;
        for (row, &p) in rows.iter().zip(&pivots) {
            if row >> free & 1 == 1 {
                v |= 1 << p;
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Rank of the equation set over GF(2).
pub fn rank_gf2(equations: &[Gf2Vector], n: usize) -> usize {
    row_reduce(equations, n).0.len()
}

fn row_reduce(equations: &[Gf2Vector], n: usize) -> (Vec<Gf2Vector>, Vec<usize>) {
    let mut rows: Vec<Gf2Vector> = equations.iter().copied().filter(|&e| e != 0).collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for bit in 0..n {
        let Some(found) = (next..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && *row >> bit & 1 == 1 {
                *row ^= pivot_row;
            }
        }
        pivots.push(bit);
        next += 1;
    }
    rows.truncate(next);
    (rows, pivots)
}
