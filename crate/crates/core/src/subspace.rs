//! Closed subspaces of a finite-dimensional Hilbert space and the lattice
//! operations on them: span (join), intersection (meet), orthocomplement.
//!
//! A subspace is stored as an orthonormal basis. Bases are not canonical,
//! so equality is mutual containment ([`Subspace::same_as`]).

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statevector::{basis_vector, inner, norm_sqr, TOLERANCE};

/// Relative residual below which Gram-Schmidt treats a vector as dependent.
pub const RANK_TOLERANCE: f64 = 1e-7;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Complex64>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| basis_vector(ambient, i)).collect(),
        }
    }

    /// The ray through a nonzero vector.
    pub fn ray(v: &[Complex64]) -> Result<Self> {
        let s = span(&[v.to_vec()], v.len())?;
        if s.dimension() == 0 {
            return Err(Error::ZeroNorm);
        }
        Ok(s)
    }

    /// Span of computational basis vectors `|i>` for the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let mut seen = vec![false; ambient];
        let mut basis = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= ambient {
                return Err(Error::LabelOutOfRange {
                    register: 0,
                    label: i,
                    dimension: ambient,
                });
            }
            if !std::mem::replace(&mut seen[i], true) {
                basis.push(basis_vector(ambient, i));
            }
        }
        Ok(Self { ambient, basis })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Complex64>] {
        &self.basis
    }

    /// `max |<b_i|b_j> - delta_ij|` over the stored basis.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((inner(a, b) - target).norm());
            }
        }
        worst
    }

    pub fn projector(&self) -> Projector {
        let n = self.ambient;
        let mut m = DMatrix::from_element(n, n, ZERO);
        for b in &self.basis {
            for i in 0..n {
                if b[i] == ZERO {
                    continue;
                }
                for j in 0..n {
                    m[(i, j)] += b[i] * b[j].conj();
                }
            }
        }
        Projector { matrix: m }
    }

    /// Norm of the component of `v` orthogonal to this subspace.
    pub fn residual(&self, v: &[Complex64]) -> f64 {
        let mut w = v.to_vec();
        for b in &self.basis {
            let c = inner(b, &w);
            for (x, y) in w.iter_mut().zip(b) {
                *x -= y * c;
            }
        }
        norm_sqr(&w).sqrt()
    }

    /// `||P v - v|| <= tol * ||v||`.
    pub fn contains_within(&self, v: &[Complex64], tol: f64) -> bool {
        v.len() == self.ambient && self.residual(v) <= tol * norm_sqr(v).sqrt().max(1.0)
    }

    pub fn contains(&self, v: &[Complex64]) -> bool {
        self.contains_within(v, TOLERANCE)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dimension() <= other.dimension()
            && self.basis.iter().all(|b| other.contains(b))
    }

    /// Equality as closed subspaces.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dimension() == other.dimension()
            && self.is_subspace_of(other)
            && other.is_subspace_of(self)
    }

    /// Indices `i` such that this subspace is exactly `span{|i>}`, if it is
    /// a coordinate subspace.
    pub fn coordinate_support(&self) -> Option<Vec<usize>> {
        let mut diag = vec![0.0; self.ambient];
        for b in &self.basis {
            for (d, x) in diag.iter_mut().zip(b) {
                *d += x.norm_sqr();
            }
        }
        let mut support = Vec::new();
        for (i, &d) in diag.iter().enumerate() {
            if (d - 1.0).abs() <= TOLERANCE {
                support.push(i);
            } else if d > TOLERANCE {
                return None;
            }
        }
        (support.len() == self.dimension()).then_some(support)
    }
}

/// Orthogonal projector onto a subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    matrix: DMatrix<Complex64>,
}

impl Projector {
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    /// `max |P^2 - P|`.
    pub fn idempotence_defect(&self) -> f64 {
        max_entry(&(&self.matrix * &self.matrix - &self.matrix))
    }

    /// `max |P^dagger - P|`.
    pub fn hermiticity_defect(&self) -> f64 {
        max_entry(&(self.matrix.adjoint() - &self.matrix))
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.matrix.nrows();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[(i, j)] * v[j]).sum())
            .collect()
    }
}

pub fn max_entry(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Orthonormal basis of the linear span, by modified Gram-Schmidt with one
/// round of re-orthogonalization. Vectors are taken in input order; a vector
/// whose residual is at most [`RANK_TOLERANCE`] of its norm is dropped.
pub fn span(vectors: &[Vec<Complex64>], ambient: usize) -> Result<Subspace> {
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for v in vectors {
        if v.len() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        if let Some(w) = orthogonalize(v, &basis) {
            basis.push(w);
        }
        if basis.len() == ambient {
            break;
        }
    }
    Ok(Subspace { ambient, basis })
}

fn orthogonalize(v: &[Complex64], basis: &[Vec<Complex64>]) -> Option<Vec<Complex64>> {
    let original = norm_sqr(v).sqrt();
    if original == 0.0 {
        return None;
    }
    let mut w = v.to_vec();
    for _ in 0..2 {
        for b in basis {
            let c = inner(b, &w);
            for (x, y) in w.iter_mut().zip(b) {
                *x -= y * c;
            }
        }
    }
    let norm = norm_sqr(&w).sqrt();
    if norm <= RANK_TOLERANCE * original {
        return None;
    }
    w.iter_mut().for_each(|x| *x /= norm);
    Some(w)
}

fn check_same_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            expected: a.ambient,
            found: b.ambient,
        });
    }
    Ok(())
}

/// Span of the union of the two bases.
pub fn join(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_same_ambient(a, b)?;
    let vectors: Vec<Vec<Complex64>> = a.basis.iter().chain(&b.basis).cloned().collect();
    span(&vectors, a.ambient)
}

/// Intersection: the eigenspace of `P_a P_b P_a` for eigenvalue 1 (within
/// [`RANK_TOLERANCE`]).
pub fn meet(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_same_ambient(a, b)?;
    if a.dimension() == 0 || b.dimension() == 0 {
        return Ok(Subspace::zero(a.ambient));
    }
    let pa = a.projector().matrix;
    let pb = b.projector().matrix;
    let m = &pa * &pb * &pa;
    // symmetrize away rounding so the Hermitian solver sees a Hermitian input
    let m = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(m);
    let vectors: Vec<Vec<Complex64>> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &lambda)| lambda >= 1.0 - RANK_TOLERANCE)
        .map(|(k, _)| eig.eigenvectors.column(k).iter().copied().collect())
        .collect();
    span(&vectors, a.ambient)
}

/// Orthogonal complement, built by extending the basis with `|0>, |1>, ...`.
pub fn orthocomplement(a: &Subspace) -> Subspace {
    let n = a.ambient;
    let target = n - a.dimension();
    let mut basis = a.basis.clone();
    for i in 0..n {
        if basis.len() == n {
            break;
        }
        if let Some(w) = orthogonalize(&basis_vector(n, i), &basis) {
            basis.push(w);
        }
    }
    let complement: Vec<Vec<Complex64>> = basis.split_off(a.dimension());
    if complement.len() == target {
        return Subspace {
            ambient: n,
            basis: complement,
        };
    }
    // Rank decisions went astray on an ill-conditioned basis: fall back to
    // the eigenvectors of I - P with eigenvalue near 1.
    let p = a.projector().matrix;
    let q = DMatrix::<Complex64>::identity(n, n) - p;
    let q = (&q + q.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(q);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let vectors: Vec<Vec<Complex64>> = order[..target]
        .iter()
        .map(|&k| eig.eigenvectors.column(k).iter().copied().collect())
        .collect();
    Subspace {
        ambient: n,
        basis: span(&vectors, n)
            .expect("eigenvectors have the ambient dimension")
            .basis,
    }
}

/// Projector commutator norm within [`TOLERANCE`].
pub fn commutes(a: &Subspace, b: &Subspace) -> Result<bool> {
    commutes_within(a, b, TOLERANCE)
}

pub fn commutes_within(a: &Subspace, b: &Subspace, tol: f64) -> Result<bool> {
    check_same_ambient(a, b)?;
    let pa = a.projector().matrix;
    let pb = b.projector().matrix;
    Ok(max_entry(&(&pa * &pb - &pb * &pa)) <= tol)
}

pub fn contains(a: &Subspace, v: &[Complex64]) -> bool {
    a.contains(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distinction {
    /// `v` lies in exactly this candidate.
    Unique(usize),
    /// `v` lies in an overlap of two or more candidates.
    Inconclusive,
}

/// Which of a family of commuting subspaces a state identifies.
pub fn subspace_distinguisher(candidates: &[Subspace], v: &[Complex64]) -> Result<Distinction> {
    let Some(first) = candidates.first() else {
        return Err(Error::Domain("no candidate subspaces".into()));
    };
    for c in candidates {
        check_same_ambient(first, c)?;
    }
    if v.len() != first.ambient {
        return Err(Error::DimensionMismatch {
            expected: first.ambient,
            found: v.len(),
        });
    }
    for (i, a) in candidates.iter().enumerate() {
        for b in &candidates[i + 1..] {
            if !commutes(a, b)? {
                return Err(Error::Domain("candidate subspaces do not commute".into()));
            }
        }
    }
    let containing: Vec<usize> = candidates
        .iter()
        .enumerate()
        .filter(|(_, c)| c.contains(v))
        .map(|(i, _)| i)
        .collect();
    match containing.as_slice() {
        [] => Err(Error::PromiseViolation(
            "state lies in none of the candidate subspaces".into(),
        )),
        [only] => Ok(Distinction::Unique(*only)),
        _ => Ok(Distinction::Inconclusive),
    }
}
