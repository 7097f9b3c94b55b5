//! Sampled wavefunctions on a self-dual grid.
//!
//! A grid of `n` points with spacing `dx = 1/sqrt(n)` covers positions
//! `x_j = (j - n/2) dx`. With that spacing the centered discrete Fourier
//! transform
//!
//! ```text
//! F[j,l] = n^(-1/2) exp(-2 pi i (j - n/2)(l - n/2) / n)
//! ```
//!
//! is exactly unitary, satisfies `F^2 = parity` and `F^4 = 1`, and its
//! output samples the continuous transform
//! `psi~(k) = integral exp(-2 pi i k x) psi(x) dx` on the same abscissas.
//! Everything downstream (entropies, projectors, the optimizer) leans on
//! those exact identities.

use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::{Error, Result};

/// Densities below `ENTROPY_FLOOR * max(density)` are dropped from entropy
/// sums; the true integrand `rho log rho` vanishes there and the floor keeps
/// exact zeros (from projections and nodes) from producing NaN.
pub const ENTROPY_FLOOR: f64 = 1e-60;

/// Largest tolerated `|norm^2 - 1|` before entropy operations refuse a state.
pub const NORM_TOL: f64 = 1e-6;

/// Uniform grid: `n` points, spacing `1/sqrt(n)`, centered on the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    n: usize,
}

impl GridSpec {
    /// `n` must be even and at least 8; the spacing is then `1/sqrt(n)`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 8 || n % 2 != 0 {
            return Err(Error::InvalidGrid(format!(
                "n = {n} must be even and at least 8"
            )));
        }
        Ok(GridSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dx(&self) -> f64 {
        1.0 / (self.n as f64).sqrt()
    }

    /// Position of sample `j`: `(j - n/2) dx`. Momentum abscissas coincide.
    pub fn position(&self, j: usize) -> f64 {
        (j as f64 - self.n as f64 / 2.0) * self.dx()
    }

    pub fn positions(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |j| self.position(j))
    }

    /// Half-width of the covered interval, `sqrt(n)/2`.
    pub fn extent(&self) -> f64 {
        (self.n as f64).sqrt() / 2.0
    }
}

/// Fourier eigenvalue, one of the fourth roots of unity in the order
/// `(-i)^m` for `m = 0..3` (the order in which Hermite states carry them).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Eigenvalue {
    PlusOne,
    MinusI,
    MinusOne,
    PlusI,
}

impl Eigenvalue {
    pub const ALL: [Eigenvalue; 4] = [
        Eigenvalue::PlusOne,
        Eigenvalue::MinusI,
        Eigenvalue::MinusOne,
        Eigenvalue::PlusI,
    ];

    pub fn value(&self) -> Complex64 {
        match self {
            Eigenvalue::PlusOne => Complex64::new(1.0, 0.0),
            Eigenvalue::MinusI => Complex64::new(0.0, -1.0),
            Eigenvalue::MinusOne => Complex64::new(-1.0, 0.0),
            Eigenvalue::PlusI => Complex64::new(0.0, 1.0),
        }
    }

    /// Exponent `m` with `lambda = (-i)^m`.
    pub fn hermite_index(&self) -> usize {
        match self {
            Eigenvalue::PlusOne => 0,
            Eigenvalue::MinusI => 1,
            Eigenvalue::MinusOne => 2,
            Eigenvalue::PlusI => 3,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Eigenvalue::PlusOne => "+1",
            Eigenvalue::MinusI => "-i",
            Eigenvalue::MinusOne => "-1",
            Eigenvalue::PlusI => "+i",
        }
    }
}

/// Symmetry subspace a state may be constrained to.
///
/// `Antisymmetric` is the odd-parity half of the space, the direct sum of the
/// `-i` and `+i` Fourier eigenspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubspaceSpec {
    Unconstrained,
    Antisymmetric,
    FourierEigen(Eigenvalue),
}

impl SubspaceSpec {
    pub fn label(&self) -> String {
        match self {
            SubspaceSpec::Unconstrained => "unconstrained".into(),
            SubspaceSpec::Antisymmetric => "antisymmetric".into(),
            SubspaceSpec::FourierEigen(l) => format!("eigen:{}", l.label()),
        }
    }
}

impl FromStr for SubspaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unconstrained" => Ok(SubspaceSpec::Unconstrained),
            "antisymmetric" => Ok(SubspaceSpec::Antisymmetric),
            "eigen:+1" | "eigen:1" => Ok(SubspaceSpec::FourierEigen(Eigenvalue::PlusOne)),
            "eigen:-i" => Ok(SubspaceSpec::FourierEigen(Eigenvalue::MinusI)),
            "eigen:-1" => Ok(SubspaceSpec::FourierEigen(Eigenvalue::MinusOne)),
            "eigen:+i" | "eigen:i" => Ok(SubspaceSpec::FourierEigen(Eigenvalue::PlusI)),
            other => Err(Error::InvalidSpec(format!(
                "unknown subspace {other:?}; expected unconstrained, antisymmetric, \
                 or eigen:{{+1,-i,-1,+i}}"
            ))),
        }
    }
}

/// A complex-valued state sampled on a [`GridSpec`].
#[derive(Debug, Clone, PartialEq)]
pub struct WaveGrid {
    spec: GridSpec,
    values: Vec<Complex64>,
}

fn planner() -> &'static Mutex<FftPlanner<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    PLANNER.get_or_init(|| Mutex::new(FftPlanner::new()))
}

impl WaveGrid {
    pub fn new(spec: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != spec.n() {
            return Err(Error::InvalidGrid(format!(
                "value count {} does not match grid n = {}",
                values.len(),
                spec.n()
            )));
        }
        Ok(WaveGrid { spec, values })
    }

    /// Sample a function of position onto the grid.
    pub fn from_fn(spec: GridSpec, f: impl Fn(f64) -> Complex64) -> Self {
        let values = spec.positions().map(f).collect();
        WaveGrid { spec, values }
    }

    pub fn zero(spec: GridSpec) -> Self {
        WaveGrid {
            spec,
            values: vec![Complex64::new(0.0, 0.0); spec.n()],
        }
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Position densities `|psi_j|^2`.
    pub fn densities(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// `sum conj(a_j) b_j dx`, the grid approximation of the L2 pairing.
    pub fn inner(&self, other: &WaveGrid) -> Complex64 {
        assert_eq!(self.spec, other.spec, "inner product across distinct grids");
        let dot: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.conj() * b)
            .sum();
        dot * self.spec.dx()
    }

    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.spec.dx()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, c: Complex64) -> WaveGrid {
        WaveGrid {
            spec: self.spec,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: Complex64, other: &WaveGrid) -> WaveGrid {
        assert_eq!(self.spec, other.spec, "arithmetic across distinct grids");
        WaveGrid {
            spec: self.spec,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + c * b)
                .collect(),
        }
    }

    pub fn normalized(&self) -> Result<WaveGrid> {
        let n = self.norm();
        if n < 1e-12 {
            return Err(Error::Zero("cannot normalize a vanishing state".into()));
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }
}

fn transform(state: &WaveGrid, forward: bool) -> WaveGrid {
    let n = state.spec.n();
    // Global sign (-i)^n = (-1)^(n/2) for even n, from completing the square
    // in the centered kernel; the conjugate kernel carries its conjugate,
    // which is the same real sign.
    let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let mut buf: Vec<Complex64> = state
        .values
        .iter()
        .enumerate()
        .map(|(l, v)| if l % 2 == 0 { *v } else { -*v })
        .collect();
    let fft = {
        let mut planner = planner().lock().expect("fft planner poisoned");
        if forward {
            planner.plan_fft_forward(n)
        } else {
            planner.plan_fft_inverse(n)
        }
    };
    fft.process(&mut buf);
    let scale = sign / (n as f64).sqrt();
    for (j, v) in buf.iter_mut().enumerate() {
        let s = if j % 2 == 0 { scale } else { -scale };
        *v *= s;
    }
    WaveGrid {
        spec: state.spec,
        values: buf,
    }
}

/// Apply the centered unitary Fourier transform.
///
/// The result samples `psi~(k) = integral exp(-2 pi i k x) psi(x) dx` at the
/// grid abscissas; the 2-norm is preserved exactly.
pub fn fourier(state: &WaveGrid) -> WaveGrid {
    transform(state, true)
}

/// Inverse (adjoint) of [`fourier`].
pub fn fourier_inv(state: &WaveGrid) -> WaveGrid {
    transform(state, false)
}

/// Reflect through the origin: sample `j` moves to `(n - j) mod n`.
/// Index 0 (the unpaired leftmost point) is a fixed point.
pub fn parity(state: &WaveGrid) -> WaveGrid {
    let n = state.spec.n();
    let values = (0..n).map(|j| state.values[(n - j) % n]).collect();
    WaveGrid {
        spec: state.spec,
        values,
    }
}

/// Orthogonal projection onto a symmetry subspace.
///
/// Fourier eigenprojectors use `P = (1/4) sum_m lambda^(-m) F^m`; the
/// antisymmetric projector is `(1 - parity)/2`.
pub fn project(state: &WaveGrid, sub: SubspaceSpec) -> WaveGrid {
    match sub {
        SubspaceSpec::Unconstrained => state.clone(),
        SubspaceSpec::Antisymmetric => {
            let p = parity(state);
            state.axpy(Complex64::new(-1.0, 0.0), &p).scaled(Complex64::new(0.5, 0.0))
        }
        SubspaceSpec::FourierEigen(lambda) => {
            let l = lambda.value();
            let f1 = fourier(state);
            let f2 = fourier(&f1);
            let f3 = fourier(&f2);
            let quarter = Complex64::new(0.25, 0.0);
            let linv = l.conj(); // |lambda| = 1
            let mut acc = state.clone();
            acc = acc.axpy(linv, &f1);
            acc = acc.axpy(linv * linv, &f2);
            acc = acc.axpy(linv * linv * linv, &f3);
            acc.scaled(quarter)
        }
    }
}

/// Shannon entropy of the sampled densities, `-sum rho log(rho) dx`, with no
/// normalization gate. The [`ENTROPY_FLOOR`] cutoff is applied.
pub fn entropy_x_raw(state: &WaveGrid) -> f64 {
    let dx = state.spec.dx();
    let mut max = 0.0_f64;
    for v in &state.values {
        max = max.max(v.norm_sqr());
    }
    if max == 0.0 {
        return 0.0;
    }
    let floor = max * ENTROPY_FLOOR;
    let mut acc = 0.0;
    for v in &state.values {
        let rho = v.norm_sqr();
        if rho > floor {
            acc += rho * rho.ln();
        }
    }
    -acc * dx
}

fn require_normalized(state: &WaveGrid) -> Result<()> {
    let dev = (state.norm_sq() - 1.0).abs();
    if dev > NORM_TOL {
        return Err(Error::NotNormalized { deviation: dev });
    }
    Ok(())
}

/// Position-space entropy `S_x = -integral |psi|^2 log |psi|^2 dx`.
pub fn entropy_x(state: &WaveGrid) -> Result<f64> {
    require_normalized(state)?;
    Ok(entropy_x_raw(state))
}

/// Momentum-space entropy `S_k = S_x(fourier(psi))`.
pub fn entropy_k(state: &WaveGrid) -> Result<f64> {
    require_normalized(state)?;
    Ok(entropy_x_raw(&fourier(state)))
}

/// Phase-space entropy `S = S_x + S_k`.
pub fn entropy_phase(state: &WaveGrid) -> Result<f64> {
    require_normalized(state)?;
    Ok(entropy_x_raw(state) + entropy_x_raw(&fourier(state)))
}

/// `(integral |psi|^p dx)^(1/p)` for `p >= 1`.
pub fn p_norm(state: &WaveGrid, p: f64) -> Result<f64> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::InvalidExponent {
            p,
            reason: "p-norms require finite p >= 1",
        });
    }
    let dx = state.spec.dx();
    let sum: f64 = state.values.iter().map(|v| v.norm().powf(p)).sum();
    Ok((sum * dx).powf(1.0 / p))
}
