//! Projected-gradient minimization of the phase-space entropy.
//!
//! The functional `S = S_x + S_k` is minimized over unit-norm grid states
//! confined to a symmetry subspace by iterating
//! `psi <- normalize(project(psi - eta g, sub))` with Armijo backtracking
//! on `eta`. Entropy has logarithmic singularities at nodes, so a robust
//! first-order method with projection is used instead of curvature-based
//! steps.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gridwave::{
    entropy_x_raw, fourier, fourier_inv, project, GridSpec, SubspaceSpec, WaveGrid,
    ENTROPY_FLOOR, NORM_TOL,
};
use crate::{Error, Result};

/// Smallest step the backtracking line search will try; reaching it without
/// an accepted decrease ends the run as converged.
pub const STEP_FLOOR: f64 = 1e-12;

/// Tuning knobs for [`minimize_entropy`].
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizeOptions {
    pub max_iters: usize,
    pub step_init: f64,
    /// Armijo acceptance slope: a step of size `eta` is accepted only if the
    /// entropy drops by at least `armijo_c * eta * |g|^2`.
    pub armijo_c: f64,
    /// Backtracking factor applied to `eta` after a rejected trial.
    pub shrink: f64,
    /// Relative decrease below which the run stops.
    pub tol_rel: f64,
    /// Seed for [`random_start`]; carried here so one struct pins down a
    /// whole run.
    pub seed: u64,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions {
            max_iters: 5000,
            step_init: 0.1,
            armijo_c: 1e-4,
            shrink: 0.5,
            tol_rel: 1e-10,
            seed: 0,
        }
    }
}

impl MinimizeOptions {
    fn validate(&self) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::InvalidSpec("max_iters must be positive".into()));
        }
        if !(self.step_init > 0.0) {
            return Err(Error::InvalidSpec("step_init must be positive".into()));
        }
        if !(self.armijo_c > 0.0 && self.armijo_c < 1.0) {
            return Err(Error::InvalidSpec("armijo_c must lie in (0,1)".into()));
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return Err(Error::InvalidSpec("shrink must lie in (0,1)".into()));
        }
        if !(self.tol_rel > 0.0) {
            return Err(Error::InvalidSpec("tol_rel must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of one minimization run.
#[derive(Debug, Clone)]
pub struct MinimizeReport {
    pub final_state: WaveGrid,
    pub s_x: f64,
    pub s_k: f64,
    pub s_total: f64,
    /// Accepted steps taken.
    pub iterations: usize,
    pub converged: bool,
    /// `s_total` of the start followed by every accepted iterate;
    /// non-increasing by construction of the acceptance rule.
    pub trajectory: Vec<f64>,
}

/// `-psi (1 + log |psi|^2)` with the entropy floor applied inside the log.
fn density_gradient(state: &WaveGrid) -> WaveGrid {
    let max = state
        .values()
        .iter()
        .fold(0.0_f64, |m, v| m.max(v.norm_sqr()));
    let mut out = state.clone();
    if max == 0.0 {
        for v in out.values_mut() {
            *v = Complex64::new(0.0, 0.0);
        }
        return out;
    }
    let floor = max * ENTROPY_FLOOR;
    for v in out.values_mut() {
        let rho = v.norm_sqr().max(floor);
        *v = -*v * (1.0 + rho.ln());
    }
    out
}

/// Gradient of `S` with respect to the conjugated amplitudes:
/// `g = -psi (1 + log|psi|^2) - F^{-1}[psi~ (1 + log|psi~|^2)]`,
/// so the derivative of `S` along a direction `d` is `2 Re<g, d>`.
pub fn entropy_gradient(state: &WaveGrid) -> Result<WaveGrid> {
    let dev = (state.norm_sq() - 1.0).abs();
    if dev > NORM_TOL {
        return Err(Error::NotNormalized { deviation: dev });
    }
    let gx = density_gradient(state);
    let gk = fourier_inv(&density_gradient(&fourier(state)));
    Ok(gx.axpy(Complex64::new(1.0, 0.0), &gk))
}

fn phase_entropy_raw(state: &WaveGrid) -> f64 {
    entropy_x_raw(state) + entropy_x_raw(&fourier(state))
}

/// Minimize the phase-space entropy over `sub` starting from `start`.
///
/// The start is projected and normalized first. Each iteration takes the
/// steepest-descent direction, backtracks `eta` from `step_init` by `shrink`
/// until the Armijo test passes, and stops when the relative decrease falls
/// below `tol_rel`, the step hits [`STEP_FLOOR`], or `max_iters` runs out.
pub fn minimize_entropy(
    start: &WaveGrid,
    sub: SubspaceSpec,
    opts: &MinimizeOptions,
) -> Result<MinimizeReport> {
    opts.validate()?;
    let projected = project(start, sub);
    if projected.norm() < 1e-12 {
        return Err(Error::EmptyStart);
    }
    let mut psi = projected.normalized().map_err(|_| Error::EmptyStart)?;
    let mut s = phase_entropy_raw(&psi);
    let mut trajectory = vec![s];
    let mut iterations = 0usize;
    let mut converged = false;

    for _ in 0..opts.max_iters {
        let g = entropy_gradient(&psi)?;
        let g_sq = g.norm_sq();
        let mut eta = opts.step_init;
        let mut accepted = None;
        while eta >= STEP_FLOOR {
            let trial = project(&psi.axpy(Complex64::new(-eta, 0.0), &g), sub);
            match trial.normalized() {
                Ok(candidate) => {
                    let s_new = phase_entropy_raw(&candidate);
                    if s - s_new >= opts.armijo_c * eta * g_sq {
                        accepted = Some((candidate, s_new));
                        break;
                    }
                }
                Err(_) => {}
            }
            eta *= opts.shrink;
        }
        let Some((candidate, s_new)) = accepted else {
            converged = true;
            break;
        };
        let rel = (s - s_new) / s.abs().max(1.0);
        psi = candidate;
        s = s_new;
        trajectory.push(s);
        iterations += 1;
        if rel < opts.tol_rel {
            converged = true;
            break;
        }
    }

    let s_x = entropy_x_raw(&psi);
    let s_k = entropy_x_raw(&fourier(&psi));
    Ok(MinimizeReport {
        final_state: psi,
        s_x,
        s_k,
        s_total: s_x + s_k,
        iterations,
        converged,
        trajectory,
    })
}

fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn normal_pair(rng: &mut impl RngCore) -> (f64, f64) {
    let u1 = 1.0 - unit_f64(rng);
    let u2 = unit_f64(rng);
    let r = (-2.0 * u1.ln()).sqrt();
    let theta = std::f64::consts::TAU * u2;
    (r * theta.cos(), r * theta.sin())
}

/// Seeded complex Gaussian noise on `spec`, without projection.
pub fn random_state(spec: GridSpec, seed: u64) -> WaveGrid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..spec.n())
        .map(|_| {
            let (re, im) = normal_pair(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    WaveGrid::new(spec, values).expect("noise matches the grid length")
}

/// Seeded random start inside `sub`: complex Gaussian noise, projected and
/// normalized.
pub fn random_start(spec: GridSpec, sub: SubspaceSpec, seed: u64) -> Result<WaveGrid> {
    let projected = project(&random_state(spec, seed), sub);
    if projected.norm() < 1e-12 {
        return Err(Error::EmptyStart);
    }
    projected.normalized().map_err(|_| Error::EmptyStart)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gridwave::Eigenvalue;
    use crate::states::{gaussian, hermite_state, HermiteSpec};

    fn grid(n: usize) -> GridSpec {
        GridSpec::new(n).unwrap()
    }

    #[test]
    fn gradient_requires_a_normalized_state() {
        let psi = gaussian(1.0, grid(64)).unwrap().scaled(Complex64::new(2.0, 0.0));
        assert!(matches!(
            entropy_gradient(&psi),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn gaussian_is_stationary_on_the_sphere() {
        let psi = gaussian(1.0, grid(256)).unwrap();
        let g = entropy_gradient(&psi).unwrap();
        let radial = psi.scaled(psi.inner(&g));
        let tangent = g.axpy(Complex64::new(-1.0, 0.0), &radial);
        assert!(tangent.norm() <= 1e-6, "tangent norm {}", tangent.norm());
    }

    #[test]
    fn gradient_matches_central_finite_differences() {
        let spec = grid(256);
        let psi = random_state(spec, 42).normalized().unwrap();
        let g = entropy_gradient(&psi).unwrap();
        let step = 1e-6;
        for k in 0..20u64 {
            let delta = random_state(spec, 1000 + k).normalized().unwrap();
            let plus = phase_entropy_raw(&psi.axpy(Complex64::new(step, 0.0), &delta));
            let minus = phase_entropy_raw(&psi.axpy(Complex64::new(-step, 0.0), &delta));
            let fd = (plus - minus) / (2.0 * step);
            let predicted = 2.0 * g.inner(&delta).re;
            let rel = (fd - predicted).abs() / fd.abs().max(1e-12);
            assert!(rel <= 1e-5, "direction {k}: fd {fd} vs predicted {predicted}");
        }
    }

    #[test]
    fn gradient_is_u1_equivariant() {
        let spec = grid(128);
        let psi = random_state(spec, 7).normalized().unwrap();
        let phase = Complex64::from_polar(1.0, 0.83);
        let g = entropy_gradient(&psi).unwrap();
        let g_rot = entropy_gradient(&psi.scaled(phase)).unwrap();
        let expected = g.scaled(phase);
        for (a, b) in g_rot.values().iter().zip(expected.values()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    fn assert_report_sane(report: &MinimizeReport, sub: SubspaceSpec) {
        assert!((report.s_total - (report.s_x + report.s_k)).abs() <= 1e-12);
        for w in report.trajectory.windows(2) {
            assert!(w[1] <= w[0], "trajectory must be non-increasing");
        }
        let drift = project(&report.final_state, sub)
            .axpy(Complex64::new(-1.0, 0.0), &report.final_state)
            .norm();
        assert!(drift <= 1e-9, "constraint drift {drift}");
        assert!(report.s_total >= 1.0 - 2f64.ln() - 1e-6);
    }

    #[test]
    fn hermite_one_relaxes_below_the_oscillator_value() {
        let start = hermite_state(HermiteSpec::new(1).unwrap(), grid(2048)).unwrap();
        let report =
            minimize_entropy(&start, SubspaceSpec::Antisymmetric, &MinimizeOptions::default())
                .unwrap();
        assert_report_sane(&report, SubspaceSpec::Antisymmetric);
        let oscillator = -1.0 + 2f64.ln() + 2.0 * 0.577_215_664_901_532_9;
        assert!(report.s_total < oscillator);
        assert!(report.s_total <= 0.75, "reached {}", report.s_total);
    }

    #[test]
    fn hermite_two_relaxes_toward_the_two_train_value() {
        let start = hermite_state(HermiteSpec::new(2).unwrap(), grid(2048)).unwrap();
        let sub = SubspaceSpec::FourierEigen(Eigenvalue::MinusOne);
        let report = minimize_entropy(&start, sub, &MinimizeOptions::default()).unwrap();
        assert_report_sane(&report, sub);
        assert!(report.s_total < 1.15934);
        let two_train = 2.0 + 2f64.sqrt() * (2f64.sqrt() - 1.0).ln();
        assert!(
            (report.s_total - two_train).abs() <= 0.15,
            "reached {}",
            report.s_total
        );
    }

    #[test]
    fn minimized_subspaces_keep_the_known_ordering() {
        let spec = grid(512);
        let opts = MinimizeOptions {
            max_iters: 1500,
            ..MinimizeOptions::default()
        };
        let run = |start: &WaveGrid, sub: SubspaceSpec| {
            minimize_entropy(start, sub, &opts).unwrap().s_total
        };
        let h = |n: usize| hermite_state(HermiteSpec::new(n).unwrap(), spec).unwrap();
        let s_plus = run(&gaussian(1.0, spec).unwrap(), SubspaceSpec::FourierEigen(Eigenvalue::PlusOne));
        let s_minus = run(&h(2), SubspaceSpec::FourierEigen(Eigenvalue::MinusOne));
        let s_minus_i = run(&h(1), SubspaceSpec::FourierEigen(Eigenvalue::MinusI));
        let s_plus_i = run(&h(3), SubspaceSpec::FourierEigen(Eigenvalue::PlusI));
        assert!(s_plus <= s_minus);
        assert!(s_minus_i <= s_plus_i);
        assert!(s_plus <= s_minus_i);
    }

    #[test]
    fn identical_options_reproduce_the_report_bit_for_bit() {
        let spec = grid(256);
        let opts = MinimizeOptions {
            max_iters: 400,
            seed: 11,
            ..MinimizeOptions::default()
        };
        let start = random_start(spec, SubspaceSpec::Antisymmetric, opts.seed).unwrap();
        let a = minimize_entropy(&start, SubspaceSpec::Antisymmetric, &opts).unwrap();
        let b = minimize_entropy(&start, SubspaceSpec::Antisymmetric, &opts).unwrap();
        assert_eq!(a.s_total.to_bits(), b.s_total.to_bits());
        assert_eq!(a.iterations, b.iterations);
        assert_eq!(a.trajectory.len(), b.trajectory.len());
        for (x, y) in a.trajectory.iter().zip(&b.trajectory) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn orthogonal_starts_are_rejected() {
        let start = hermite_state(HermiteSpec::new(1).unwrap(), grid(256)).unwrap();
        let res = minimize_entropy(
            &start,
            SubspaceSpec::FourierEigen(Eigenvalue::PlusOne),
            &MinimizeOptions::default(),
        );
        assert!(matches!(res, Err(Error::EmptyStart)));
    }

    #[test]
    fn bad_options_are_rejected() {
        let start = gaussian(1.0, grid(64)).unwrap();
        for opts in [
            MinimizeOptions { step_init: 0.0, ..MinimizeOptions::default() },
            MinimizeOptions { armijo_c: 1.0, ..MinimizeOptions::default() },
            MinimizeOptions { shrink: 1.0, ..MinimizeOptions::default() },
            MinimizeOptions { max_iters: 0, ..MinimizeOptions::default() },
        ] {
            let res = minimize_entropy(&start, SubspaceSpec::Unconstrained, &opts);
            assert!(matches!(res, Err(Error::InvalidSpec(_))));
        }
    }

    #[test]
    fn random_starts_are_seeded_and_in_subspace() {
        let spec = grid(512);
        let sub = SubspaceSpec::FourierEigen(Eigenvalue::MinusI);
        let a = random_start(spec, sub, 3).unwrap();
        let b = random_start(spec, sub, 3).unwrap();
        let c = random_start(spec, sub, 4).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
        assert!(a.axpy(Complex64::new(-1.0, 0.0), &c).norm() > 1e-3);
        let drift = project(&a, sub).axpy(Complex64::new(-1.0, 0.0), &a).norm();
        assert!(drift <= 1e-12);
        assert!((a.norm_sq() - 1.0).abs() <= 1e-12);
    }
}
