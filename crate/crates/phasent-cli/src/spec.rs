//! Flag-value grammars: states, families, eigenvalues.

use phasent::combcalc::{canonical_form, comb_normalize, Comb};
use phasent::eigensearch::{best_known, FamilyId};
use phasent::gridwave::{Eigenvalue, GridSpec, SubspaceSpec, WaveGrid};
use phasent::literal::parse_comb;
use phasent::states::{comb_sample, gaussian, hermite_state, psi0, HermiteSpec, SamplingParams};
use phasent::{Error, Result};

/// A state named on the command line; grid-independent until built.
pub enum StateSpec {
    Gaussian(f64),
    Hermite(usize),
    Psi0,
    Train(Comb),
    Best(SubspaceSpec),
}

pub fn parse_state(text: &str) -> Result<StateSpec> {
    if text == "psi0" {
        return Ok(StateSpec::Psi0);
    }
    if let Some(w) = text.strip_prefix("gaussian:") {
        let width = w
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad gaussian width {w:?}")))?;
        return Ok(StateSpec::Gaussian(width));
    }
    if let Some(m) = text.strip_prefix("hermite:") {
        let level = m
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad hermite level {m:?}")))?;
        return Ok(StateSpec::Hermite(level));
    }
    if let Some(lit) = text.strip_prefix("comb:") {
        return Ok(StateSpec::Train(parse_comb(lit)?));
    }
    if let Some(sub) = text.strip_prefix("best:") {
        return Ok(StateSpec::Best(sub.parse()?));
    }
    Err(Error::InvalidSpec(format!(
        "unknown state {text:?}; expected gaussian:<width>, hermite:<n>, psi0, \
         comb:<literal>, or best:<subspace>"
    )))
}

/// Sample the named state on an `n`-point grid; `a` is the regularization
/// scale for delta-train states and is ignored by the others.
pub fn build_state(spec: &StateSpec, n: usize, a: f64) -> Result<WaveGrid> {
    let grid = GridSpec::new(n)?;
    match spec {
        StateSpec::Gaussian(width) => gaussian(*width, grid),
        StateSpec::Hermite(level) => hermite_state(HermiteSpec::new(*level)?, grid),
        StateSpec::Psi0 => psi0(&SamplingParams::new(a, grid)?),
        StateSpec::Train(comb) => {
            let can = comb_normalize(&canonical_form(comb)?);
            comb_sample(&can, &SamplingParams::new(a, grid)?)
        }
        StateSpec::Best(sub) => comb_sample(&best_known(*sub), &SamplingParams::new(a, grid)?),
    }
}

pub fn parse_family(text: &str) -> Result<FamilyId> {
    FamilyId::ALL
        .into_iter()
        .find(|f| f.label() == text)
        .ok_or_else(|| {
            Error::InvalidSpec(format!(
                "unknown family {text:?}; expected even-zero, even-half, or odd-half"
            ))
        })
}

pub fn parse_eigenvalue(text: &str) -> Result<Eigenvalue> {
    match text {
        "+1" | "1" => Ok(Eigenvalue::PlusOne),
        "-1" => Ok(Eigenvalue::MinusOne),
        "+i" | "i" => Ok(Eigenvalue::PlusI),
        "-i" => Ok(Eigenvalue::MinusI),
        _ => Err(Error::InvalidSpec(format!(
            "unknown eigenvalue {text:?}; expected +1, -1, +i, or -i"
        ))),
    }
}
