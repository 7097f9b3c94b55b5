//! Constructors for named grid states: Gaussians, oscillator eigenstates,
//! the alternating delta train `psi0`, and Gaussian-regularized samples of
//! arbitrary canonical combs.

use num_complex::Complex64;
use num_rational::Ratio;

use crate::combcalc::{canonical_form, d0, unit_phase, CanonicalComb};
use crate::gridwave::{GridSpec, WaveGrid};
use crate::{Error, Result};

/// `exp(-pi t^2)` drops below 1e-18 of its peak past this |t|; delta trains
/// and profile tails are truncated there.
const TAIL_RADIUS: f64 = 3.6316; // sqrt(18 ln 10 / pi), rounded up

/// Quantum number of an oscillator eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HermiteSpec {
    n: usize,
}

impl HermiteSpec {
    /// `n` up to 64; higher orders are not resolved by the stable recurrence
    /// at the default grid extents.
    pub fn new(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::InvalidSpec(format!(
                "oscillator order {n} exceeds the supported maximum 64"
            )));
        }
        Ok(HermiteSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Regularization scale `a` paired with a grid able to resolve it: the grid
/// must sample the narrow profile (`dx < a/4`) and contain the wide envelope
/// (`n dx > 4/a`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingParams {
    a: f64,
    grid: GridSpec,
}

impl SamplingParams {
    pub fn new(a: f64, grid: GridSpec) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "regularization scale must be positive, got {a}"
            )));
        }
        // On a self-dual grid (dx = 1/sqrt(n), length = sqrt(n)) the profile
        // condition dx < a/4 and the envelope condition n dx > 4/a are the
        // same inequality, so one check enforces both.
        if grid.dx() >= a / 4.0 {
            return Err(Error::Range(format!(
                "grid (dx = {:.3e}, length = {:.3}) cannot resolve profiles of \
                 width a = {a} under an envelope of width 1/a",
                grid.dx(),
                grid.n() as f64 * grid.dx()
            )));
        }
        Ok(SamplingParams { a, grid })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }
}

/// Normalized samples of `exp(-pi x^2 / width^2)`; `width = 1` is the
/// self-dual Gaussian.
pub fn gaussian(width: f64, grid: GridSpec) -> Result<WaveGrid> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(Error::InvalidSpec(format!(
            "gaussian width must be positive, got {width}"
        )));
    }
    let w2 = width * width;
    WaveGrid::from_fn(grid, |x| {
        Complex64::new((-std::f64::consts::PI * x * x / w2).exp(), 0.0)
    })
    .normalized()
}

/// Normalized `n`-th eigenstate of the self-dual oscillator, a Hermite
/// polynomial in `sqrt(2 pi) x` times `exp(-pi x^2)`, generated by the
/// normalized three-term recurrence with per-step grid renormalization.
/// Satisfies `fourier(h_n) = (-i)^n h_n`.
pub fn hermite_state(spec: HermiteSpec, grid: GridSpec) -> Result<WaveGrid> {
    let n = spec.n();
    let turning = ((2 * n + 1) as f64 / (2.0 * std::f64::consts::PI)).sqrt();
    if grid.extent() < turning + 1.0 {
        return Err(Error::Range(format!(
            "grid extent {:.2} cannot contain oscillator state {n} (needs {:.2})",
            grid.extent(),
            turning + 1.0
        )));
    }
    let scale = (2.0 * std::f64::consts::PI).sqrt();
    let mut prev = WaveGrid::zero(grid);
    let mut cur = gaussian(1.0, grid)?;
    for m in 0..n {
        let c1 = (2.0 / (m as f64 + 1.0)).sqrt();
        let c2 = (m as f64 / (m as f64 + 1.0)).sqrt();
        let mut next = WaveGrid::zero(grid);
        for (j, v) in next.values_mut().iter_mut().enumerate() {
            let x = grid.position(j);
            *v = c1 * scale * x * cur.values()[j] - c2 * prev.values()[j];
        }
        let next = next.normalized()?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Unnormalized Gaussian-regularized samples of a canonical comb:
///
/// ```text
/// psi(x) = exp(-pi a^2 x^2) *
///          sum_k sum_n amplitude_k exp(-2 pi i beta_k n)
///                      exp(-pi (x - period (n + offset_k))^2 / a^2)
/// ```
///
/// Delta positions where the envelope is below 1e-18 of its peak are
/// skipped, as are profile tails below the same relative level.
pub fn comb_sample_raw(c: &CanonicalComb, params: &SamplingParams) -> WaveGrid {
    let grid = params.grid();
    let a = params.a();
    let n = grid.n();
    let dx = grid.dx();
    let r = c.period().value();
    let x_lim = (TAIL_RADIUS / a).min(grid.extent() + TAIL_RADIUS * a);
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    for s in c.series() {
        let off = *s.offset.numer() as f64 / *s.offset.denom() as f64;
        let lo = (-x_lim / r - off).floor() as i64;
        let hi = (x_lim / r - off).ceil() as i64;
        for m in lo..=hi {
            let center = r * (m as f64 + off);
            if center.abs() > x_lim {
                continue;
            }
            let weight = s.amplitude * unit_phase(-s.beta * Ratio::from_integer(m));
            let j_center = (center - grid.position(0)) / dx;
            let half = TAIL_RADIUS * a / dx + 1.0;
            let j_lo = ((j_center - half).floor().max(0.0)) as usize;
            let j_hi = ((j_center + half).ceil().min((n - 1) as f64)) as usize;
            for j in j_lo..=j_hi {
                let t = (grid.position(j) - center) / a;
                values[j] += weight * (-std::f64::consts::PI * t * t).exp();
            }
        }
    }
    for (j, v) in values.iter_mut().enumerate() {
        let x = grid.position(j);
        *v *= Complex64::new((-std::f64::consts::PI * a * a * x * x).exp(), 0.0);
    }
    WaveGrid::new(grid, values).expect("length matches grid")
}

/// Normalized Gaussian-regularized samples of a canonical comb.
pub fn comb_sample(c: &CanonicalComb, params: &SamplingParams) -> Result<WaveGrid> {
    let raw = comb_sample_raw(c, params);
    raw.normalized().map_err(|_| {
        Error::Range("no delta train samples fall inside the grid".into())
    })
}

/// The alternating train of narrow Gaussians under a wide envelope,
///
/// ```text
/// psi0(x) = exp(-pi a^2 x^2) sum_n (-1)^n exp(-pi (x - n - 1/2)^2 / a^2)
/// ```
///
/// normalized on the grid. Odd under parity; close to a Fourier eigenvector
/// with eigenvalue `-i`, exactly so as `a -> 0`.
pub fn psi0(params: &SamplingParams) -> Result<WaveGrid> {
    let train = canonical_form(&d0()).expect("unit train is canonical");
    comb_sample(&train, params)
}

/// Sum of per-factor phase-space entropies: the entropy of a separable
/// product state in as many dimensions as there are factors.
pub fn separable_entropy(factors: &[f64]) -> f64 {
    factors.iter().sum()
}
