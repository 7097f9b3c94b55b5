//! Python bindings: grid states and entropies, the delta-train calculus,
//! eigenfamily surveys, constrained minimization, and localization bounds.
//!
//! Train arguments are comb literals such as `phi(1,1/2,1/2)` or
//! `0.5*phi(sqrt(2),0,0) + (0-1i)*phi(sqrt(2),1/2,0)`; subspaces are named
//! `unconstrained`, `antisymmetric`, or `eigen:{+1,-1,+i,-i}`; families are
//! `even-zero`, `even-half`, or `odd-half`.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use phasent::bounds;
use phasent::combcalc::{
    canonical_form, comb_entropy_phase, comb_fourier as train_fourier, comb_normalize, Regularizer,
};
use phasent::eigensearch::{self, FamilyId};
use phasent::gridwave::{self, GridSpec, SubspaceSpec};
use phasent::literal::{format_comb, parse_comb};
use phasent::optimize::{self, MinimizeOptions};
use phasent::states::{self, HermiteSpec, SamplingParams};

fn err(e: phasent::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn subspace(text: &str) -> PyResult<SubspaceSpec> {
    text.parse().map_err(err)
}

fn family(text: &str) -> PyResult<FamilyId> {
    FamilyId::ALL
        .into_iter()
        .find(|f| f.label() == text)
        .ok_or_else(|| {
            PyValueError::new_err(format!(
                "unknown family {text:?}; expected even-zero, even-half, or odd-half"
            ))
        })
}

fn normalized_train(literal: &str) -> PyResult<phasent::combcalc::CanonicalComb> {
    Ok(comb_normalize(
        &canonical_form(&parse_comb(literal).map_err(err)?).map_err(err)?,
    ))
}

/// A complex-valued state sampled on a centered self-dual grid.
#[pyclass(frozen, name = "WaveGrid")]
struct PyWaveGrid {
    inner: gridwave::WaveGrid,
}

#[pymethods]
impl PyWaveGrid {
    #[getter]
    fn n(&self) -> usize {
        self.inner.spec().n()
    }

    #[getter]
    fn dx(&self) -> f64 {
        self.inner.spec().dx()
    }

    fn values(&self) -> Vec<Complex64> {
        self.inner.values().to_vec()
    }

    fn densities(&self) -> Vec<f64> {
        self.inner.densities()
    }

    fn norm(&self) -> f64 {
        self.inner.norm()
    }

    fn inner_product(&self, other: &PyWaveGrid) -> Complex64 {
        self.inner.inner(&other.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.spec().n()
    }

    fn __repr__(&self) -> String {
        format!("WaveGrid(n={})", self.inner.spec().n())
    }
}

/// Outcome of a constrained entropy minimization.
#[pyclass(frozen, name = "MinimizeResult")]
struct PyMinimizeResult {
    #[pyo3(get)]
    s_x: f64,
    #[pyo3(get)]
    s_k: f64,
    #[pyo3(get)]
    s_total: f64,
    #[pyo3(get)]
    iterations: usize,
    #[pyo3(get)]
    converged: bool,
    #[pyo3(get)]
    trajectory: Vec<f64>,
    state: gridwave::WaveGrid,
}

#[pymethods]
impl PyMinimizeResult {
    fn final_state(&self) -> PyWaveGrid {
        PyWaveGrid {
            inner: self.state.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "MinimizeResult(s_total={:.6}, iterations={}, converged={})",
            self.s_total, self.iterations, self.converged
        )
    }
}

#[pyfunction]
fn gaussian(width: f64, n: usize) -> PyResult<PyWaveGrid> {
    let grid = GridSpec::new(n).map_err(err)?;
    Ok(PyWaveGrid {
        inner: states::gaussian(width, grid).map_err(err)?,
    })
}

#[pyfunction]
fn hermite(level: usize, n: usize) -> PyResult<PyWaveGrid> {
    let grid = GridSpec::new(n).map_err(err)?;
    Ok(PyWaveGrid {
        inner: states::hermite_state(HermiteSpec::new(level).map_err(err)?, grid).map_err(err)?,
    })
}

#[pyfunction]
fn psi0(a: f64, n: usize) -> PyResult<PyWaveGrid> {
    let grid = GridSpec::new(n).map_err(err)?;
    Ok(PyWaveGrid {
        inner: states::psi0(&SamplingParams::new(a, grid).map_err(err)?).map_err(err)?,
    })
}

/// Gaussian-regularized grid samples of the train given by `literal`.
#[pyfunction]
fn sample_comb(literal: &str, a: f64, n: usize) -> PyResult<PyWaveGrid> {
    let grid = GridSpec::new(n).map_err(err)?;
    Ok(PyWaveGrid {
        inner: states::comb_sample(
            &normalized_train(literal)?,
            &SamplingParams::new(a, grid).map_err(err)?,
        )
        .map_err(err)?,
    })
}

#[pyfunction]
fn fourier(state: &PyWaveGrid) -> PyWaveGrid {
    PyWaveGrid {
        inner: gridwave::fourier(&state.inner),
    }
}

#[pyfunction]
fn project(state: &PyWaveGrid, sub: &str) -> PyResult<PyWaveGrid> {
    Ok(PyWaveGrid {
        inner: gridwave::project(&state.inner, subspace(sub)?),
    })
}

#[pyfunction]
fn entropy_x(state: &PyWaveGrid) -> PyResult<f64> {
    gridwave::entropy_x(&state.inner).map_err(err)
}

#[pyfunction]
fn entropy_k(state: &PyWaveGrid) -> PyResult<f64> {
    gridwave::entropy_k(&state.inner).map_err(err)
}

#[pyfunction]
fn entropy_phase(state: &PyWaveGrid) -> PyResult<f64> {
    gridwave::entropy_phase(&state.inner).map_err(err)
}

/// Canonical presentation of a train literal.
#[pyfunction]
fn canonicalize(literal: &str) -> PyResult<String> {
    let can = canonical_form(&parse_comb(literal).map_err(err)?).map_err(err)?;
    Ok(format_comb(&can.to_comb()))
}

/// Exact phase-space entropy of the normalized train, in the a -> 0 limit.
#[pyfunction]
fn comb_entropy(literal: &str) -> PyResult<f64> {
    comb_entropy_phase(&normalized_train(literal)?, &Regularizer::gaussian()).map_err(err)
}

/// Fourier transform of a train literal, as a literal.
#[pyfunction]
fn comb_fourier(literal: &str) -> PyResult<String> {
    Ok(format_comb(&train_fourier(&parse_comb(literal).map_err(err)?)))
}

/// Survey rows `(q, p, series_count, entropy, literal)` sorted by entropy.
#[pyfunction]
fn survey(fam: &str, qmax: u32, pmax: u32) -> PyResult<Vec<(u32, u32, usize, f64, String)>> {
    Ok(eigensearch::survey(family(fam)?, qmax, pmax)
        .map_err(err)?
        .into_iter()
        .map(|r| {
            let lit = format_comb(&r.comb.to_comb());
            (r.q, r.p, r.series_count, r.entropy, lit)
        })
        .collect())
}

/// Literal of the lowest-entropy known train in the subspace.
#[pyfunction]
fn best_known(sub: &str) -> PyResult<String> {
    Ok(format_comb(
        &eigensearch::best_known(subspace(sub)?).to_comb(),
    ))
}

#[pyfunction]
fn best_known_entropy(sub: &str) -> PyResult<f64> {
    Ok(eigensearch::best_known_entropy(subspace(sub)?))
}

#[pyfunction]
#[pyo3(signature = (sub, n, seed = 0))]
fn random_start(sub: &str, n: usize, seed: u64) -> PyResult<PyWaveGrid> {
    let grid = GridSpec::new(n).map_err(err)?;
    Ok(PyWaveGrid {
        inner: optimize::random_start(grid, subspace(sub)?, seed).map_err(err)?,
    })
}

/// Projected-gradient entropy minimization from `start` within `sub`.
#[pyfunction]
#[pyo3(signature = (start, sub, max_iters = 5000))]
fn minimize(start: &PyWaveGrid, sub: &str, max_iters: usize) -> PyResult<PyMinimizeResult> {
    let opts = MinimizeOptions {
        max_iters,
        ..MinimizeOptions::default()
    };
    let run = optimize::minimize_entropy(&start.inner, subspace(sub)?, &opts).map_err(err)?;
    Ok(PyMinimizeResult {
        s_x: run.s_x,
        s_k: run.s_k,
        s_total: run.s_total,
        iterations: run.iterations,
        converged: run.converged,
        trajectory: run.trajectory,
        state: run.final_state,
    })
}

/// `[d (1 - log 2), (d + 1)(1 - log 2)]`.
#[pyfunction]
fn c_d_bracket(d: u32) -> PyResult<(f64, f64)> {
    let b = bounds::c_d_bracket(d).map_err(err)?;
    Ok((b.lower, b.upper))
}

#[pyfunction]
fn k_dq_bracket(d: u32, q: f64) -> PyResult<(f64, f64)> {
    let b = bounds::k_dq_bracket(d, q).map_err(err)?;
    Ok((b.lower, b.upper))
}

#[pyfunction]
fn oscillator_entropy(level: usize) -> PyResult<f64> {
    bounds::oscillator_entropy_closed(level).map_err(err)
}

#[pyfunction]
fn babenko_beckner(q: f64) -> PyResult<f64> {
    bounds::babenko_beckner(q).map_err(err)
}

/// Transform-to-state norm ratio of a normalized eigenvector train at
/// exponent `q`; a lower bound on the restricted norm constant.
#[pyfunction]
fn restricted_norm_lower_bound(literal: &str, q: f64) -> PyResult<f64> {
    bounds::restricted_norm_lower_bound(&normalized_train(literal)?, q).map_err(err)
}

#[pymodule]
fn phasent_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWaveGrid>()?;
    m.add_class::<PyMinimizeResult>()?;
    m.add_function(wrap_pyfunction!(gaussian, m)?)?;
    m.add_function(wrap_pyfunction!(hermite, m)?)?;
    m.add_function(wrap_pyfunction!(psi0, m)?)?;
    m.add_function(wrap_pyfunction!(sample_comb, m)?)?;
    m.add_function(wrap_pyfunction!(fourier, m)?)?;
    m.add_function(wrap_pyfunction!(project, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_x, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_k, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_phase, m)?)?;
    m.add_function(wrap_pyfunction!(canonicalize, m)?)?;
    m.add_function(wrap_pyfunction!(comb_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(comb_fourier, m)?)?;
    m.add_function(wrap_pyfunction!(survey, m)?)?;
    m.add_function(wrap_pyfunction!(best_known, m)?)?;
    m.add_function(wrap_pyfunction!(best_known_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(random_start, m)?)?;
    m.add_function(wrap_pyfunction!(minimize, m)?)?;
    m.add_function(wrap_pyfunction!(c_d_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(k_dq_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(oscillator_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(babenko_beckner, m)?)?;
    m.add_function(wrap_pyfunction!(restricted_norm_lower_bound, m)?)?;
    Ok(())
}
