#![allow(dead_code)]

use num_complex::Complex64;
use qlogic::subspace::{span, Subspace};
use rand::Rng;

pub fn random_vector<R: Rng>(d: usize, rng: &mut R) -> Vec<Complex64> {
    (0..d)
        .map(|_| {
            Complex64::new(
                rng.random::<f64>() * 2.0 - 1.0,
                rng.random::<f64>() * 2.0 - 1.0,
            )
        })
        .collect()
}

/// Orthonormal basis of `C^d` from Gram-Schmidt on random vectors.
pub fn random_orthonormal_basis<R: Rng>(d: usize, rng: &mut R) -> Vec<Vec<Complex64>> {
    loop {
        let vs: Vec<_> = (0..d).map(|_| random_vector(d, rng)).collect();
        let s = span(&vs, d).unwrap();
        if s.dimension() == d {
            return s.basis().to_vec();
        }
    }
}

/// Span of a random subset of `basis`; subspaces drawn from one basis all
/// commute with each other.
pub fn random_coordinate_subspace<R: Rng>(basis: &[Vec<Complex64>], rng: &mut R) -> Subspace {
    let chosen: Vec<_> = basis
        .iter()
        .filter(|_| rng.random::<bool>())
        .cloned()
        .collect();
    span(&chosen, basis.len()).unwrap()
}

/// Span of `k` random vectors, `k` uniform in `0..=d`.
pub fn random_generic_subspace<R: Rng>(d: usize, rng: &mut R) -> Subspace {
    let k = rng.random_range(0..=d);
    let vs: Vec<_> = (0..k).map(|_| random_vector(d, rng)).collect();
    span(&vs, d).unwrap()
}

/// Sum of squared moduli.
pub fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// `|<a|b>|` for unit vectors, computed directly.
pub fn abs_overlap(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.conj() * y)
        .sum::<Complex64>()
        .norm()
}

/// Independent single-qubit Hadamard-basis vectors: `|0'>` and `|1'>`.
pub fn prime(bit: usize) -> [Complex64; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    if bit == 0 {
        [Complex64::new(h, 0.0), Complex64::new(h, 0.0)]
    } else {
        [Complex64::new(h, 0.0), Complex64::new(-h, 0.0)]
    }
}

/// `|b1' b0'>` as a 4-vector, first qubit most significant.
pub fn prime2(label: usize) -> Vec<Complex64> {
    let (hi, lo) = (prime(label >> 1 & 1), prime(label & 1));
    let mut out = Vec::with_capacity(4);
    for a in hi {
        for b in lo {
            out.push(a * b);
        }
    }
    out
}

/// Smallest `r >= 1` with `a^r = 1 mod n`, by repeated multiplication.
pub fn order_by_iteration(a: u64, n: u64) -> u64 {
    let mut x = a % n;
    let mut r = 1;
    while x != 1 {
        x = x * a % n;
        r += 1;
        assert!(r <= n, "{a} is not a unit mod {n}");
    }
    r
}

/// Nontrivial factor pairs of `n` by trial division.
pub fn factor_pairs(n: u64) -> Vec<[u64; 2]> {
    (2..n)
        .filter(|p| n.is_multiple_of(*p) && p * p <= n)
        .map(|p| [p, n / p])
        .collect()
}

pub fn parity(x: usize) -> usize {
    x.count_ones() as usize % 2
}
