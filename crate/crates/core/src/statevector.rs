//! Dense statevectors over multi-register spaces, the unitaries the
//! algorithms need, and projective measurement in the computational basis.
//!
//! Registers are ordered (input, output, ...) and composite indices are
//! row-major: for two registers `index = input * output_dim + output`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::number_theory::{gcd_unchecked, mod_exp};
use crate::oracles::TruthTable;

/// Entrywise and norm tolerance used throughout the crate.
pub const TOLERANCE: f64 = 1e-9;

/// Largest composite dimension a layout may have.
pub const MAX_COMPOSITE_DIMENSION: usize = 1 << 17;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterLayout {
    dims: Vec<usize>,
    total: usize,
}

impl RegisterLayout {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.is_empty() {
            return Err(Error::InvalidLayout(
                "at least one register is required".into(),
            ));
        }
        if let Some((i, &d)) = dims.iter().enumerate().find(|(_, &d)| d < 2) {
            return Err(Error::InvalidLayout(format!(
                "register {i} has dimension {d}; every register needs at least 2"
            )));
        }
        let mut total: usize = 1;
        for &d in &dims {
            total = total
                .checked_mul(d)
                .filter(|&t| t <= MAX_COMPOSITE_DIMENSION)
                .ok_or(Error::TooLarge {
                    dimension: dims.iter().fold(1usize, |a, &d| a.saturating_mul(d)),
                    cap: MAX_COMPOSITE_DIMENSION,
                })?;
        }
        Ok(Self { dims, total })
    }

    /// Two-register layout, input first.
    pub fn pair(input_dim: usize, output_dim: usize) -> Result<Self> {
        Self::new(vec![input_dim, output_dim])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn register_count(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dimension(&self) -> usize {
        self.total
    }

    pub fn dim(&self, register: usize) -> Result<usize> {
        self.dims
            .get(register)
            .copied()
            .ok_or(Error::NoSuchRegister {
                register,
                count: self.dims.len(),
            })
    }

    /// Product of the dimensions after `register`; the step between
    /// consecutive labels of that register in the composite index.
    fn stride(&self, register: usize) -> usize {
        self.dims[register + 1..].iter().product()
    }

    pub fn compose(&self, labels: &[usize]) -> Result<usize> {
        if labels.len() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dims.len(),
                found: labels.len(),
            });
        }
        let mut index = 0;
        for (register, (&label, &dim)) in labels.iter().zip(&self.dims).enumerate() {
            if label >= dim {
                return Err(Error::LabelOutOfRange {
                    register,
                    label,
                    dimension: dim,
                });
            }
            index = index * dim + label;
        }
        Ok(index)
    }

    pub fn decompose(&self, mut index: usize) -> Vec<usize> {
        let mut labels = vec![0; self.dims.len()];
        for (slot, &dim) in labels.iter_mut().zip(&self.dims).rev() {
            *slot = index % dim;
            index /= dim;
        }
        labels
    }

    /// Label of `register` inside a composite index.
    pub fn label_of(&self, index: usize, register: usize) -> usize {
        index / self.stride(register) % self.dims[register]
    }

    /// Starting indices of every fiber along `register`: the sets of
    /// composite indices that differ only in that register's label.
    fn fibers(&self, register: usize) -> impl Iterator<Item = usize> + '_ {
        let stride = self.stride(register);
        let block = stride * self.dims[register];
        let outer = self.total / block;
        (0..outer).flat_map(move |o| (0..stride).map(move |t| o * block + t))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    layout: RegisterLayout,
}

impl StateVector {
    /// Wraps amplitudes after checking length and normalization.
    pub fn new(layout: RegisterLayout, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != layout.total_dimension() {
            return Err(Error::DimensionMismatch {
                expected: layout.total_dimension(),
                found: amplitudes.len(),
            });
        }
        let norm_sqr = norm_sqr(&amplitudes);
        if (norm_sqr - 1.0).abs() > TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amplitudes, layout })
    }

    /// Scales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(layout: RegisterLayout, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm_sqr(&amplitudes).sqrt();
        if norm <= TOLERANCE {
            return Err(Error::ZeroNorm);
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::new(layout, amplitudes)
    }

    /// Tensor product of one normalized vector per register.
    pub fn product(layout: RegisterLayout, factors: &[&[Complex64]]) -> Result<Self> {
        if factors.len() != layout.register_count() {
            return Err(Error::DimensionMismatch {
                expected: layout.register_count(),
                found: factors.len(),
            });
        }
        let mut amps = vec![ONE];
        for (f, &dim) in factors.iter().zip(layout.dims()) {
            if f.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.len(),
                });
            }
            amps = amps
                .iter()
                .flat_map(|&a| f.iter().map(move |&b| a * b))
                .collect();
        }
        Self::new(layout, amps)
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn amplitude(&self, labels: &[usize]) -> Result<Complex64> {
        Ok(self.amplitudes[self.layout.compose(labels)?])
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amplitudes)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.layout != other.layout {
            return Err(Error::DimensionMismatch {
                expected: self.layout.total_dimension(),
                found: other.layout.total_dimension(),
            });
        }
        Ok(inner(&self.amplitudes, &other.amplitudes))
    }

    /// True when the states differ at most by a global phase.
    pub fn equals_up_to_phase(&self, other: &StateVector, tol: f64) -> bool {
        self.layout == other.layout && overlap(&self.amplitudes, &other.amplitudes) >= 1.0 - tol
    }

    pub fn marginal_distribution(&self, register: usize) -> Result<Vec<f64>> {
        marginal_distribution(self, register)
    }

    /// Projects `register` onto `outcome` and renormalizes. Returns the
    /// outcome probability alongside the post-measurement state.
    pub fn condition(&self, register: usize, outcome: usize) -> Result<(f64, StateVector)> {
        let dim = self.layout.dim(register)?;
        if outcome >= dim {
            return Err(Error::LabelOutOfRange {
                register,
                label: outcome,
                dimension: dim,
            });
        }
        let mut amps = self.amplitudes.clone();
        for (i, a) in amps.iter_mut().enumerate() {
            if self.layout.label_of(i, register) != outcome {
                *a = ZERO;
            }
        }
        let prob = norm_sqr(&amps);
        if prob <= TOLERANCE * TOLERANCE {
            return Err(Error::ZeroNorm);
        }
        let norm = prob.sqrt();
        amps.iter_mut().for_each(|a| *a /= norm);
        Ok((
            prob,
            Self {
                amplitudes: amps,
                layout: self.layout.clone(),
            },
        ))
    }

    /// If the state factors as (state of `register`) x (state of the rest),
    /// returns the normalized factor for `register`, fixed up to phase.
    pub fn register_factor(&self, register: usize, tol: f64) -> Result<Option<Vec<Complex64>>> {
        let dim = self.layout.dim(register)?;
        let stride = self.layout.stride(register);
        let fibers: Vec<Vec<Complex64>> = self
            .layout
            .fibers(register)
            .map(|start| {
                (0..dim)
                    .map(|k| self.amplitudes[start + k * stride])
                    .collect()
            })
            .collect();
        let Some(best) = fibers
            .iter()
            .max_by(|a, b| norm_sqr(a).total_cmp(&norm_sqr(b)))
        else {
            return Ok(None);
        };
        let norm = norm_sqr(best).sqrt();
        if norm <= tol {
            return Ok(None);
        }
        let factor: Vec<Complex64> = best.iter().map(|a| a / norm).collect();
        for fiber in &fibers {
            let c = inner(&factor, fiber);
            let residual: f64 = fiber
                .iter()
                .zip(&factor)
                .map(|(x, u)| (x - u * c).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if residual > tol {
                return Ok(None);
            }
        }
        Ok(Some(factor))
    }
}

pub fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum()
}

/// `<a|b>`, conjugate-linear in the first argument.
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// `|<a|b>|` for two vectors; 1 means equal up to global phase when both are normalized.
pub fn overlap(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return 0.0;
    }
    inner(a, b).norm()
}

pub fn basis_state(layout: &RegisterLayout, labels: &[usize]) -> Result<StateVector> {
    let index = layout.compose(labels)?;
    let mut amps = vec![ZERO; layout.total_dimension()];
    amps[index] = ONE;
    StateVector::new(layout.clone(), amps)
}

/// Unit vector `|index>` of the given dimension.
pub fn basis_vector(dimension: usize, index: usize) -> Vec<Complex64> {
    let mut v = vec![ZERO; dimension];
    v[index] = ONE;
    v
}

/// Number of qubits if `d` is a power of two greater than one.
pub fn qubit_count(d: usize) -> Option<u32> {
    (d >= 2 && d.is_power_of_two()).then(|| d.trailing_zeros())
}

/// Applies `H^{(x)k}` to a register of dimension `2^k`, identity elsewhere.
pub fn hadamard_layer(state: &StateVector, register: usize) -> Result<StateVector> {
    let dim = state.layout.dim(register)?;
    if qubit_count(dim).is_none() {
        return Err(Error::Unsupported(format!(
            "Hadamard layer needs a power-of-two register, register {register} has dimension {dim}"
        )));
    }
    let stride = state.layout.stride(register);
    let scale = 1.0 / (dim as f64).sqrt();
    let mut amps = state.amplitudes.clone();
    let mut fiber = vec![ZERO; dim];
    for start in state.layout.fibers(register) {
        for (k, slot) in fiber.iter_mut().enumerate() {
            *slot = amps[start + k * stride];
        }
        walsh_hadamard(&mut fiber);
        for (k, v) in fiber.iter().enumerate() {
            amps[start + k * stride] = v * scale;
        }
    }
    Ok(StateVector {
        amplitudes: amps,
        layout: state.layout.clone(),
    })
}

/// Unnormalized in-place butterfly: `x -> sum_y (-1)^{x.y} |y>`.
fn walsh_hadamard(v: &mut [Complex64]) {
    let mut h = 1;
    while h < v.len() {
        for block in v.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    Dense(DMatrix<Complex64>),
    /// `perm[i]` is the image of basis vector `i`.
    Permutation(Vec<usize>),
    /// DFT over `Z_s`: entry `(y, x)` is `twiddle[x * y mod s]`.
    Fourier(Vec<Complex64>),
}

/// A unitary operator, stored densely or as a basis permutation.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    repr: Repr,
}

impl Unitary {
    /// Wraps a square matrix; fails if it is not unitary within [`TOLERANCE`].
    pub fn dense(matrix: DMatrix<Complex64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                found: matrix.ncols(),
            });
        }
        let u = Self {
            repr: Repr::Dense(matrix),
        };
        let defect = u.unitarity_defect();
        if defect > TOLERANCE {
            return Err(Error::Domain(format!(
                "matrix is not unitary (defect {defect:e})"
            )));
        }
        Ok(u)
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || seen[p] {
                return Err(Error::Domain(format!(
                    "basis map is not a bijection (image of {i} is {p})"
                )));
            }
            seen[p] = true;
        }
        Ok(Self {
            repr: Repr::Permutation(perm),
        })
    }

    pub fn identity(dimension: usize) -> Self {
        Self {
            repr: Repr::Permutation((0..dimension).collect()),
        }
    }

    /// Dense `H^{(x)k}` on `2^k` dimensions.
    pub fn hadamard(qubits: u32) -> Self {
        let d = 1usize << qubits;
        let scale = 1.0 / (d as f64).sqrt();
        let m = DMatrix::from_fn(d, d, |y, x| {
            let sign = if (x & y).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            Complex64::new(sign * scale, 0.0)
        });
        Self {
            repr: Repr::Dense(m),
        }
    }

    pub fn dimension(&self) -> usize {
        match &self.repr {
            Repr::Dense(m) => m.nrows(),
            Repr::Permutation(p) => p.len(),
            Repr::Fourier(t) => t.len(),
        }
    }

    /// The basis map, if this operator is a permutation.
    pub fn as_permutation(&self) -> Option<&[usize]> {
        match &self.repr {
            Repr::Permutation(p) => Some(p),
            Repr::Dense(_) | Repr::Fourier(_) => None,
        }
    }

    pub fn to_matrix(&self) -> DMatrix<Complex64> {
        match &self.repr {
            Repr::Dense(m) => m.clone(),
            Repr::Permutation(p) => {
                let n = p.len();
                let mut m = DMatrix::from_element(n, n, ZERO);
                for (i, &j) in p.iter().enumerate() {
                    m[(j, i)] = ONE;
                }
                m
            }
            Repr::Fourier(t) => {
                let s = t.len();
                DMatrix::from_fn(s, s, |y, x| t[x * y % s])
            }
        }
    }

    pub fn adjoint(&self) -> Self {
        match &self.repr {
            Repr::Dense(m) => Self {
                repr: Repr::Dense(m.adjoint()),
            },
            Repr::Permutation(p) => {
                let mut inv = vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                Self {
                    repr: Repr::Permutation(inv),
                }
            }
            Repr::Fourier(t) => Self {
                repr: Repr::Fourier(t.iter().map(|z| z.conj()).collect()),
            },
        }
    }

    /// `max |U^dagger U - I|` entrywise. Exactly zero for permutations.
    pub fn unitarity_defect(&self) -> f64 {
        match &self.repr {
            Repr::Permutation(_) => 0.0,
            Repr::Dense(_) | Repr::Fourier(_) => {
                let m = self.to_matrix();
                let prod = m.adjoint() * &m;
                let n = prod.nrows();
                let mut worst: f64 = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        let target = if i == j { ONE } else { ZERO };
                        worst = worst.max((prod[(i, j)] - target).norm());
                    }
                }
                worst
            }
        }
    }

    /// `U v` for a vector of matching dimension.
    pub fn apply_to(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: v.len(),
            });
        }
        let mut out = vec![ZERO; v.len()];
        self.apply_into(v, &mut out);
        Ok(out)
    }

    fn apply_into(&self, v: &[Complex64], out: &mut [Complex64]) {
        match &self.repr {
            Repr::Permutation(p) => {
                for (i, &j) in p.iter().enumerate() {
                    out[j] = v[i];
                }
            }
            Repr::Dense(m) => {
                out.iter_mut().for_each(|o| *o = ZERO);
                // column-major storage: accumulate column by column
                for (x, &vx) in v.iter().enumerate() {
                    if vx == ZERO {
                        continue;
                    }
                    for (o, &mx) in out.iter_mut().zip(m.column(x).iter()) {
                        *o += mx * vx;
                    }
                }
            }
            Repr::Fourier(t) => {
                let s = t.len();
                out.iter_mut().for_each(|o| *o = ZERO);
                for (x, &vx) in v.iter().enumerate() {
                    if vx == ZERO {
                        continue;
                    }
                    let mut k = 0;
                    for o in out.iter_mut() {
                        *o += t[k] * vx;
                        k += x;
                        if k >= s {
                            k %= s;
                        }
                    }
                }
            }
        }
    }
}

/// `U_f : |x>|y> -> |x>|y xor f(x)>` on a two-register layout.
pub fn oracle_xor_unitary(f: &TruthTable, layout: &RegisterLayout) -> Result<Unitary> {
    if layout.register_count() != 2 {
        return Err(Error::InvalidLayout(
            "oracle needs exactly two registers".into(),
        ));
    }
    let (in_dim, out_dim) = (layout.dims()[0], layout.dims()[1]);
    if f.domain_size() != in_dim {
        return Err(Error::DimensionMismatch {
            expected: in_dim,
            found: f.domain_size(),
        });
    }
    if qubit_count(out_dim).is_none() {
        return Err(Error::Domain(format!(
            "XOR oracle needs a power-of-two output register, got {out_dim}"
        )));
    }
    if f.codomain_size() != out_dim {
        return Err(Error::DimensionMismatch {
            expected: out_dim,
            found: f.codomain_size(),
        });
    }
    let perm = (0..layout.total_dimension())
        .map(|i| {
            let (x, y) = (i / out_dim, i % out_dim);
            x * out_dim + (y ^ f.value(x))
        })
        .collect();
    Unitary::permutation(perm)
}

/// Modular-exponentiation oracle: `|x>|0> -> |x>|a^x mod N>`.
///
/// On the rest of the space: `|x>|y> -> |x>|(y + a^x) mod N>` for `y < N`
/// and identity for `y >= N`.
pub fn oracle_modmul_unitary(a: u64, modulus: u64, layout: &RegisterLayout) -> Result<Unitary> {
    if layout.register_count() != 2 {
        return Err(Error::InvalidLayout(
            "oracle needs exactly two registers".into(),
        ));
    }
    if modulus < 2 {
        return Err(Error::Domain(format!(
            "modulus must be at least 2, got {modulus}"
        )));
    }
    if gcd_unchecked(a, modulus) != 1 {
        return Err(Error::NotCoprime { a, modulus });
    }
    let (in_dim, out_dim) = (layout.dims()[0], layout.dims()[1]);
    let n = modulus as usize;
    if out_dim < n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: out_dim,
        });
    }
    let mut perm = Vec::with_capacity(layout.total_dimension());
    for x in 0..in_dim {
        let fx = mod_exp(a, x as u64, modulus)? as usize;
        for y in 0..out_dim {
            let image = if y < n { (y + fx) % n } else { y };
            perm.push(x * out_dim + image);
        }
    }
    Unitary::permutation(perm)
}

/// DFT over `Z_s` with entries `e^{2 pi i x y / s} / sqrt(s)`, applied
/// from a twiddle table rather than a stored matrix.
pub fn qft_unitary(s: usize) -> Result<Unitary> {
    if s < 2 {
        return Err(Error::Domain(format!(
            "QFT dimension must be at least 2, got {s}"
        )));
    }
    let scale = 1.0 / (s as f64).sqrt();
    let twiddle: Vec<Complex64> = (0..s)
        .map(|k| Complex64::from_polar(scale, 2.0 * PI * k as f64 / s as f64))
        .collect();
    Ok(Unitary {
        repr: Repr::Fourier(twiddle),
    })
}

/// Which part of the composite space an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Register(usize),
    Whole,
}

pub fn apply(u: &Unitary, state: &StateVector, target: Target) -> Result<StateVector> {
    let amplitudes = match target {
        Target::Whole => u.apply_to(&state.amplitudes)?,
        Target::Register(register) => {
            let dim = state.layout.dim(register)?;
            if u.dimension() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: u.dimension(),
                });
            }
            let stride = state.layout.stride(register);
            let mut amps = state.amplitudes.clone();
            let mut fiber = vec![ZERO; dim];
            let mut image = vec![ZERO; dim];
            for start in state.layout.fibers(register) {
                for (k, slot) in fiber.iter_mut().enumerate() {
                    *slot = amps[start + k * stride];
                }
                if fiber.iter().all(|a| *a == ZERO) {
                    continue;
                }
                u.apply_into(&fiber, &mut image);
                for (k, v) in image.iter().enumerate() {
                    amps[start + k * stride] = *v;
                }
            }
            amps
        }
    };
    let out = StateVector {
        amplitudes,
        layout: state.layout.clone(),
    };
    debug_assert!((out.norm_sqr() - 1.0).abs() <= 1e-6);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementRecord {
    pub register_index: usize,
    pub outcome: usize,
    pub probability: f64,
    pub post_state: StateVector,
}

pub fn marginal_distribution(state: &StateVector, register: usize) -> Result<Vec<f64>> {
    let dim = state.layout.dim(register)?;
    let mut probs = vec![0.0; dim];
    for (i, a) in state.amplitudes.iter().enumerate() {
        probs[state.layout.label_of(i, register)] += a.norm_sqr();
    }
    Ok(probs)
}

/// Samples an outcome of `register` in the computational basis and collapses.
pub fn measure<R: Rng + ?Sized>(
    state: &StateVector,
    register: usize,
    rng: &mut R,
) -> Result<MeasurementRecord> {
    let norm_sqr = state.norm_sqr();
    if norm_sqr <= TOLERANCE {
        return Err(Error::ZeroNorm);
    }
    if (norm_sqr - 1.0).abs() > TOLERANCE {
        return Err(Error::NotNormalized { norm_sqr });
    }
    let probs = marginal_distribution(state, register)?;
    let u: f64 = rng.random::<f64>() * norm_sqr;
    let mut acc = 0.0;
    let mut outcome = None;
    for (k, &p) in probs.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        acc += p;
        outcome = Some(k);
        if u < acc {
            break;
        }
    }
    // rounding can leave u just above the cumulative sum; `outcome` then
    // holds the last outcome with nonzero probability
    let outcome = outcome.ok_or(Error::ZeroNorm)?;
    let (probability, post_state) = state.condition(register, outcome)?;
    Ok(MeasurementRecord {
        register_index: register,
        outcome,
        probability,
        post_state,
    })
}

/// `|0'> = H|0>` and `|1'> = H|1>` as plain vectors.
pub fn prime_qubit(bit: usize) -> Result<Vec<Complex64>> {
    let layout = RegisterLayout::new(vec![2])?;
    Ok(hadamard_layer(&basis_state(&layout, &[bit])?, 0)?.into_amplitudes())
}

/// `|b_{k-1}' ... b_0'>` for a `k`-qubit label, built with the Hadamard layer.
pub fn prime_basis_vector(qubits: u32, label: usize) -> Result<Vec<Complex64>> {
    let d = 1usize << qubits;
    let layout = RegisterLayout::new(vec![d])?;
    Ok(hadamard_layer(&basis_state(&layout, &[label])?, 0)?.into_amplitudes())
}

#[cfg(test)]
pub(crate) const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;
