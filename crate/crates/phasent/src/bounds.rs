//! Closed-form constants, two-sided brackets, and comb-witness lower bounds
//! for the sharp entropy and transform-norm inequalities.

use crate::combcalc::{
    canonical_form, comb_fourier, comb_norm_sq, comb_p_norm, CanonicalComb, Regularizer,
    COMB_NORM_TOL,
};
use crate::gridwave::Eigenvalue;
use crate::{Error, Result};

/// Euler's constant, 20 significant digits.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

/// A two-sided bound `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Bracket for the sharp phase-space entropy constant of antisymmetric
/// states in `d` pair coordinates: `[d (1 - log 2), (d+1)(1 - log 2)]`.
pub fn c_d_bracket(d: u32) -> Result<Bracket> {
    if d == 0 {
        return Err(Error::InvalidSpec("dimension must be positive".into()));
    }
    let unit = 1.0 - 2f64.ln();
    Ok(Bracket {
        lower: d as f64 * unit,
        upper: (d as f64 + 1.0) * unit,
    })
}

/// `p^{1/p} q^{-1/q}` with `p` conjugate to `q`; lies in (0, 1) for `q > 2`.
fn conjugate_base(q: f64) -> Result<f64> {
    if !q.is_finite() || !(q > 2.0) {
        return Err(Error::InvalidExponent {
            p: q,
            reason: "norm exponents require a finite q > 2",
        });
    }
    let p = q / (q - 1.0);
    Ok(p.powf(1.0 / p) * q.powf(-1.0 / q))
}

/// Sharp norm constant of the transform from exponent `p` (conjugate) to
/// `q` in one dimension: `(p^{1/p} q^{-1/q})^{1/2}`; tends to 1 as `q -> 2`.
pub fn babenko_beckner(q: f64) -> Result<f64> {
    Ok(conjugate_base(q)?.sqrt())
}

/// Bracket for the antisymmetric-restricted norm constant in `d` pair
/// coordinates: `[base^{(d+1)/2}, base^{d/2}]` with `base <= 1`, so the
/// larger exponent is the lower endpoint.
pub fn k_dq_bracket(d: u32, q: f64) -> Result<Bracket> {
    if d == 0 {
        return Err(Error::InvalidSpec("dimension must be positive".into()));
    }
    let base = conjugate_base(q)?;
    Ok(Bracket {
        lower: base.powf((d as f64 + 1.0) / 2.0),
        upper: base.powf(d as f64 / 2.0),
    })
}

/// Closed-form phase-space entropy of oscillator eigenstates: `1 - log 2`
/// for the ground state and `-1 + log 2 + 2 gamma` for the first excited
/// state. No closed form is known beyond `n = 1`.
pub fn oscillator_entropy_closed(n: usize) -> Result<f64> {
    match n {
        0 => Ok(1.0 - 2f64.ln()),
        1 => Ok(-1.0 + 2f64.ln() + 2.0 * EULER_GAMMA),
        _ => Err(Error::Range(format!(
            "closed-form oscillator entropy exists only for n = 0, 1; got {n}"
        ))),
    }
}

/// The transform eigenvalue of `c` and the residual `max |amplitude|` of
/// `F(c) - lambda c`, minimized over the four eigenvalue candidates.
fn eigen_deviation(c: &CanonicalComb) -> (Eigenvalue, f64) {
    let comb = c.to_comb();
    let transformed = comb_fourier(&comb);
    let mut best = (Eigenvalue::PlusOne, f64::INFINITY);
    for lambda in Eigenvalue::ALL {
        let diff = transformed
            .add(&comb.scaled(-lambda.value()))
            .expect("transform preserves the period radicand");
        let dev = match canonical_form(&diff) {
            Err(Error::Zero(_)) => 0.0,
            Ok(residual) => residual
                .series()
                .iter()
                .map(|s| s.amplitude.norm())
                .fold(0.0, f64::max),
            Err(_) => f64::INFINITY,
        };
        if dev < best.1 {
            best = (lambda, dev);
        }
    }
    best
}

/// Witness lower bound for the transform norm restricted to the eigenspace
/// of `c`: the `q`-to-conjugate-`p` norm ratio of the Gaussian-regularized
/// train in the small-smearing limit,
/// `comb_p_norm(F c, q) / comb_p_norm(c, p)`.
///
/// The single train at integer spacing with alternating signs realizes the
/// `(d+1)/2` exponent at `d = 1`, i.e. `babenko_beckner(q)^2`.
pub fn restricted_norm_lower_bound(c: &CanonicalComb, q: f64) -> Result<f64> {
    conjugate_base(q)?;
    let dev = (comb_norm_sq(c) - 1.0).abs();
    if dev > COMB_NORM_TOL {
        return Err(Error::NotNormalized { deviation: dev });
    }
    let (_, residual) = eigen_deviation(c);
    if residual > 1e-9 {
        return Err(Error::NotEigenvector {
            deviation: residual,
        });
    }
    let reg = Regularizer::gaussian();
    let p = q / (q - 1.0);
    let tilde = canonical_form(&comb_fourier(&c.to_comb()))?;
    Ok(comb_p_norm(&tilde, q, &reg)? / comb_p_norm(c, p, &reg)?)
}
