//! Exact calculus for finite combinations of periodic delta trains.
//!
//! The building block is the distribution
//!
//! ```text
//! phi(x; r, alpha, beta) = sum_n exp(-2 pi i beta n) delta(x - r (n + alpha))
//! ```
//!
//! a train of weighted deltas with spacing `r`, offset `r alpha`, and a
//! geometric phase `beta` per step. The class is closed under Fourier
//! transform, parity, and rebasing to any integer multiple of the period, so
//! Fourier eigenvectors can be built and their entropies evaluated in closed
//! form once each delta is smeared by a normalized profile (the
//! [`Regularizer`]).
//!
//! Periods live in `Q * sqrt(d)` for a single square-free `d` per comb. That
//! field is closed under inversion and integer scaling, and it keeps offset
//! coincidence detection exact, which is what drives the series counts.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Series with squared amplitude below this threshold are dropped after
/// cancellation; projections cancel exactly up to rounding.
pub const AMP_EPS: f64 = 1e-12;

/// Entropy operations tolerate `|norm^2 - 1|` up to this and silently use the
/// normalized weights; larger deviations are an error.
pub const COMB_NORM_TOL: f64 = 1e-3;

fn square_free_split(mut x: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while p * p <= x {
        if x % p == 0 {
            let mut e = 0u32;
            while x % p == 0 {
                x /= p;
                e += 1;
            }
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, core * x)
}

/// `exp(2 pi i t)` for exact rational `t`, with quarter turns kept crisp.
pub(crate) fn unit_phase(turns: Ratio<i64>) -> Complex64 {
    let t = turns - turns.floor();
    match (*t.numer(), *t.denom()) {
        (0, 1) => Complex64::new(1.0, 0.0),
        (1, 2) => Complex64::new(-1.0, 0.0),
        (1, 4) => Complex64::new(0.0, 1.0),
        (3, 4) => Complex64::new(0.0, -1.0),
        (n, d) => {
            let angle = 2.0 * std::f64::consts::PI * (n as f64) / (d as f64);
            Complex64::new(angle.cos(), angle.sin())
        }
    }
}

/// Real number `t * sqrt(d)` with rational `t` and square-free `d >= 1`.
///
/// Products and quotients of two values sharing `d` stay in the
/// representation, as does `1/(t sqrt(d)) = (1/(t d)) sqrt(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadReal {
    t: Ratio<i64>,
    d: u64,
}

impl QuadReal {
    /// `t * sqrt(d)`; square factors of `d` are folded into `t`.
    pub fn new(t: Ratio<i64>, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidSpec("radicand must be positive".into()));
        }
        let (square, core) = square_free_split(d);
        let t = t * Ratio::from_integer(square as i64);
        Ok(QuadReal {
            t,
            d: if t.is_zero() { 1 } else { core },
        })
    }

    pub fn from_ratio(t: Ratio<i64>) -> Self {
        QuadReal { t, d: 1 }
    }

    pub fn from_int(k: i64) -> Self {
        QuadReal {
            t: Ratio::from_integer(k),
            d: 1,
        }
    }

    /// Exact square root of a positive rational: `sqrt(n/m) = (1/m) sqrt(n m)`.
    pub fn sqrt_ratio(q: Ratio<i64>) -> Result<Self> {
        if q <= Ratio::zero() {
            return Err(Error::InvalidSpec(format!(
                "cannot take a real square root of {q}"
            )));
        }
        let n = *q.numer() as u64;
        let m = *q.denom() as u64;
        QuadReal::new(Ratio::new(1, m as i64), n * m)
    }

    pub fn rational_part(&self) -> Ratio<i64> {
        self.t
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn value(&self) -> f64 {
        let t = *self.t.numer() as f64 / *self.t.denom() as f64;
        t * (self.d as f64).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    pub fn as_ratio(&self) -> Option<Ratio<i64>> {
        (self.d == 1).then_some(self.t)
    }

    pub fn neg(&self) -> Self {
        QuadReal {
            t: -self.t,
            d: self.d,
        }
    }

    /// `1/(t sqrt(d)) = (1/(t d)) sqrt(d)`.
    pub fn recip(&self) -> Result<Self> {
        if self.t.is_zero() {
            return Err(Error::Zero("cannot invert zero".into()));
        }
        Ok(QuadReal {
            t: (self.t * Ratio::from_integer(self.d as i64)).recip(),
            d: self.d,
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let g = self.d.gcd(&other.d);
        let t = self.t * other.t * Ratio::from_integer(g as i64);
        let d = (self.d / g) * (other.d / g);
        QuadReal {
            t,
            d: if t.is_zero() { 1 } else { d },
        }
    }

    pub fn mul_ratio(&self, q: Ratio<i64>) -> Self {
        let t = self.t * q;
        QuadReal {
            t,
            d: if t.is_zero() { 1 } else { self.d },
        }
    }

    /// Exact ratio `self/other` when it is rational (requires equal radicands).
    pub fn ratio_to(&self, other: &Self) -> Option<Ratio<i64>> {
        (self.d == other.d && !other.t.is_zero()).then(|| self.t / other.t)
    }
}

impl std::fmt::Display for QuadReal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.t)
        } else if self.t == Ratio::from_integer(1) {
            write!(f, "sqrt({})", self.d)
        } else {
            write!(f, "{}*sqrt({})", self.t, self.d)
        }
    }
}

/// One delta train `coeff * phi(x; period, alpha, beta)`, kept in canonical
/// form: period positive, `alpha` and `beta` in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombAtom {
    pub coeff: Complex64,
    pub period: QuadReal,
    pub alpha: Ratio<i64>,
    pub beta: Ratio<i64>,
}

impl CombAtom {
    pub fn new(
        coeff: Complex64,
        period: QuadReal,
        alpha: Ratio<i64>,
        beta: Ratio<i64>,
    ) -> Result<Self> {
        if period.is_zero() {
            return Err(Error::InvalidSpec("atom period must be nonzero".into()));
        }
        Ok(atom_canonicalize(&CombAtom {
            coeff,
            period,
            alpha,
            beta,
        }))
    }
}

/// Reduce an atom by the train equivalences:
///
/// ```text
/// phi(x; r, alpha, beta) = phi(x; -r, -alpha, -beta)
///                        = phi(x; r, alpha, beta + 1)
/// phi(x; r, alpha + 1, beta) = exp(2 pi i beta) phi(x; r, alpha, beta)
/// ```
///
/// The result has positive period and `alpha, beta` in `[0, 1)`, with the
/// induced phase folded into the coefficient. Idempotent.
pub fn atom_canonicalize(atom: &CombAtom) -> CombAtom {
    let mut coeff = atom.coeff;
    let mut period = atom.period;
    let mut alpha = atom.alpha;
    let mut beta = atom.beta;
    if period.value() < 0.0 {
        period = period.neg();
        alpha = -alpha;
        beta = -beta;
    }
    beta -= beta.floor();
    let whole = alpha.floor();
    if !whole.is_zero() {
        coeff *= unit_phase(beta * whole);
        alpha -= whole;
    }
    CombAtom {
        coeff,
        period,
        alpha,
        beta,
    }
}

/// Finite combination of delta trains whose periods are all rational
/// multiples of one `sqrt(d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Comb {
    atoms: Vec<CombAtom>,
}

impl Comb {
    pub fn new(atoms: Vec<CombAtom>) -> Result<Self> {
        let atoms: Vec<CombAtom> = atoms.iter().map(atom_canonicalize).collect();
        let mut radicand = None;
        for a in &atoms {
            if a.period.is_zero() {
                return Err(Error::InvalidSpec("atom period must be nonzero".into()));
            }
            match radicand {
                None => radicand = Some(a.period.radicand()),
                Some(d) if d != a.period.radicand() => {
                    return Err(Error::NotInClass(format!(
                        "period ratio sqrt({}/{d}) is irrational",
                        a.period.radicand()
                    )))
                }
                _ => {}
            }
        }
        Ok(Comb { atoms })
    }

    pub fn single(atom: CombAtom) -> Self {
        Comb { atoms: vec![atom] }
    }

    pub fn atoms(&self) -> &[CombAtom] {
        &self.atoms
    }

    pub fn scaled(&self, c: Complex64) -> Comb {
        Comb {
            atoms: self
                .atoms
                .iter()
                .map(|a| CombAtom { coeff: a.coeff * c, ..*a })
                .collect(),
        }
    }

    pub fn add(&self, other: &Comb) -> Result<Comb> {
        let mut atoms = self.atoms.clone();
        atoms.extend_from_slice(&other.atoms);
        Comb::new(atoms)
    }
}

/// The antisymmetric unit train `phi(x; 1, 1/2, 1/2)`, deltas of alternating
/// sign at the half-integers. It is a Fourier eigenvector with eigenvalue
/// `-i` and, Gaussian-regularized, it is normalized with phase-space entropy
/// `2 (1 - log 2)`.
pub fn d0() -> Comb {
    let half = Ratio::new(1, 2);
    Comb::single(
        CombAtom::new(Complex64::new(1.0, 0.0), QuadReal::from_int(1), half, half).unwrap(),
    )
}

fn merge_atoms(atoms: &[CombAtom]) -> Vec<CombAtom> {
    let mut groups: BTreeMap<(Ratio<i64>, Ratio<i64>, Ratio<i64>), Complex64> = BTreeMap::new();
    for a in atoms {
        let a = atom_canonicalize(a);
        *groups
            .entry((a.period.rational_part(), a.alpha, a.beta))
            .or_insert(Complex64::new(0.0, 0.0)) += a.coeff;
    }
    let d = atoms.first().map_or(1, |a| a.period.radicand());
    groups
        .into_iter()
        .filter(|(_, c)| c.norm() > AMP_EPS)
        .map(|((t, alpha, beta), coeff)| CombAtom {
            coeff,
            period: QuadReal::new(t, d).expect("radicand validated"),
            alpha,
            beta,
        })
        .collect()
}

/// Structural near-equality: both combs are merged atom-wise and compared
/// field-exactly with coefficient tolerance `tol`.
pub fn combs_close(a: &Comb, b: &Comb, tol: f64) -> bool {
    let ma = merge_atoms(&a.atoms);
    let mb = merge_atoms(&b.atoms);
    if ma.len() != mb.len() {
        return false;
    }
    ma.iter().zip(&mb).all(|(x, y)| {
        x.period == y.period
            && x.alpha == y.alpha
            && x.beta == y.beta
            && (x.coeff - y.coeff).norm() <= tol
    })
}

/// Structural near-equality of two canonical combs: equal period, offsets,
/// and betas, with amplitudes within `tol`.
pub fn canonical_close(a: &CanonicalComb, b: &CanonicalComb, tol: f64) -> bool {
    a.period() == b.period()
        && a.series_count() == b.series_count()
        && a.series().iter().zip(b.series()).all(|(x, y)| {
            x.offset == y.offset
                && x.beta == y.beta
                && (x.amplitude - y.amplitude).norm() <= tol
        })
}

/// Structural near-equality up to one global complex phase: series must
/// match field-exactly and the amplitude ratio must be a single unimodular
/// constant within `tol`.
pub fn canonical_close_up_to_phase(a: &CanonicalComb, b: &CanonicalComb, tol: f64) -> bool {
    if a.period() != b.period() || a.series_count() != b.series_count() {
        return false;
    }
    let mut phase: Option<Complex64> = None;
    for (x, y) in a.series().iter().zip(b.series()) {
        if x.offset != y.offset || x.beta != y.beta {
            return false;
        }
        let ph = *phase.get_or_insert_with(|| y.amplitude / x.amplitude);
        if (ph.norm() - 1.0).abs() > tol || (y.amplitude - ph * x.amplitude).norm() > tol {
            return false;
        }
    }
    true
}

/// Atom-wise Fourier transform by the train law
///
/// ```text
/// phi~(x; r, alpha, beta) = r^(-1) exp(2 pi i alpha beta) phi(x; 1/r, -beta, alpha)
/// ```
///
/// followed by canonicalization. Applying it four times is the identity.
pub fn comb_fourier(c: &Comb) -> Comb {
    let atoms = c
        .atoms
        .iter()
        .map(|a| {
            let rinv = a.period.recip().expect("periods are nonzero");
            let coeff = a.coeff * rinv.value() * unit_phase(a.alpha * a.beta);
            atom_canonicalize(&CombAtom {
                coeff,
                period: rinv,
                alpha: -a.beta,
                beta: a.alpha,
            })
        })
        .collect();
    Comb { atoms }
}

/// Reflection through the origin: atom-wise `(alpha, beta) -> (-alpha, -beta)`
/// plus canonicalization. An involution, and equal to two Fourier transforms.
pub fn comb_parity(c: &Comb) -> Comb {
    let atoms = c
        .atoms
        .iter()
        .map(|a| {
            atom_canonicalize(&CombAtom {
                coeff: a.coeff,
                period: a.period,
                alpha: -a.alpha,
                beta: -a.beta,
            })
        })
        .collect();
    Comb { atoms }
}

/// Symmetry projection in the train calculus, `(1/4) sum_m lambda^(-m) F^m`,
/// with atoms merged afterwards. The result satisfies
/// `comb_fourier(p) = lambda * p` exactly in the represented distribution.
pub fn comb_project(c: &Comb, sub: crate::gridwave::SubspaceSpec) -> Comb {
    use crate::gridwave::SubspaceSpec;
    match sub {
        SubspaceSpec::Unconstrained => c.clone(),
        SubspaceSpec::Antisymmetric => {
            let mut atoms = c.scaled(Complex64::new(0.5, 0.0)).atoms;
            atoms.extend(comb_parity(c).scaled(Complex64::new(-0.5, 0.0)).atoms);
            Comb {
                atoms: merge_atoms(&atoms),
            }
        }
        SubspaceSpec::FourierEigen(lambda) => {
            let linv = lambda.value().conj();
            let mut weight = Complex64::new(0.25, 0.0);
            let mut term = c.clone();
            let mut atoms = Vec::new();
            for _ in 0..4 {
                atoms.extend(term.scaled(weight).atoms);
                term = comb_fourier(&term);
                weight *= linv;
            }
            Comb {
                atoms: merge_atoms(&atoms),
            }
        }
    }
}

/// Express one train as `n` interleaved trains of period `n r`:
///
/// ```text
/// phi(x; r, alpha, beta) =
///     sum_{k=0}^{n-1} exp(-2 pi i beta k) phi(x; n r, (k + alpha)/n, n beta)
/// ```
pub fn rebase(atom: &CombAtom, n: u32) -> Comb {
    assert!(n >= 1, "rebase factor must be at least 1");
    let a = atom_canonicalize(atom);
    let period = a.period.mul_ratio(Ratio::from_integer(n as i64));
    let beta = a.beta * Ratio::from_integer(n as i64);
    let atoms = (0..n as i64)
        .map(|k| {
            let coeff = a.coeff * unit_phase(-a.beta * Ratio::from_integer(k));
            let alpha = (Ratio::from_integer(k) + a.alpha) / Ratio::from_integer(n as i64);
            atom_canonicalize(&CombAtom {
                coeff,
                period,
                alpha,
                beta,
            })
        })
        .collect();
    Comb { atoms }
}

/// One delta series of a [`CanonicalComb`]: deltas at `period * (n + offset)`
/// with per-step phase `beta` and overall complex `amplitude`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEntry {
    pub offset: Ratio<i64>,
    pub beta: Ratio<i64>,
    pub amplitude: Complex64,
}

/// A comb rebased to one common period with distinct, sorted offsets: finitely
/// many series per period, so `|u(x + period)| = |u(x)|` and the closed-form
/// entropy and norm formulas apply.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalComb {
    period: QuadReal,
    series: Vec<SeriesEntry>,
}

impl CanonicalComb {
    pub fn period(&self) -> QuadReal {
        self.period
    }

    pub fn series(&self) -> &[SeriesEntry] {
        &self.series
    }

    pub fn series_count(&self) -> usize {
        self.series.len()
    }

    pub fn to_comb(&self) -> Comb {
        Comb {
            atoms: self
                .series
                .iter()
                .map(|s| CombAtom {
                    coeff: s.amplitude,
                    period: self.period,
                    alpha: s.offset,
                    beta: s.beta,
                })
                .collect(),
        }
    }
}

fn rational_lcm(values: impl Iterator<Item = Ratio<i64>>) -> Ratio<i64> {
    let mut num = 1i64;
    let mut den = 1i64;
    for v in values {
        num = num.lcm(v.numer());
        den = den.gcd(v.denom());
    }
    Ratio::new(num, den)
}

/// Rebase every atom to the least common period and group coincident series.
///
/// Groups at one offset whose `beta` values differ are merged by extending
/// the period (a whole-comb rebase by the least common denominator of the
/// conflicting betas); cancellation below [`AMP_EPS`] drops a series.
pub fn canonical_form(c: &Comb) -> Result<CanonicalComb> {
    if c.atoms.is_empty() {
        return Err(Error::Zero("empty comb has no canonical form".into()));
    }
    let d = c.atoms[0].period.radicand();
    for a in &c.atoms {
        if a.period.radicand() != d {
            return Err(Error::NotInClass(
                "atom periods do not share a radicand".into(),
            ));
        }
    }
    let lcm_t = rational_lcm(c.atoms.iter().map(|a| a.period.rational_part().abs()));
    let mut period = QuadReal::new(lcm_t, d).expect("radicand validated");
    let mut atoms: Vec<CombAtom> = Vec::new();
    for a in &c.atoms {
        let factor = period
            .ratio_to(&a.period)
            .expect("shared radicand guarantees rational ratio");
        debug_assert!(factor.is_integer() && factor > Ratio::zero());
        atoms.extend(rebase(a, factor.to_integer() as u32).atoms);
    }

    // Two passes suffice: after one whole-comb rebase by the least common
    // denominator of the conflicting betas those betas are all 0 mod 1, and
    // distinct offsets cannot collide under (k + offset)/m.
    for _ in 0..2 {
        let mut groups: BTreeMap<Ratio<i64>, BTreeMap<Ratio<i64>, Complex64>> = BTreeMap::new();
        for a in &atoms {
            *groups
                .entry(a.alpha)
                .or_default()
                .entry(a.beta)
                .or_insert(Complex64::new(0.0, 0.0)) += a.coeff;
        }
        let mut series: Vec<SeriesEntry> = Vec::new();
        let mut conflict_dens: Vec<i64> = Vec::new();
        for (offset, by_beta) in &groups {
            let live: Vec<(Ratio<i64>, Complex64)> = by_beta
                .iter()
                .filter(|(_, amp)| amp.norm() > AMP_EPS)
                .map(|(b, amp)| (*b, *amp))
                .collect();
            if live.len() > 1 {
                conflict_dens.extend(live.iter().map(|(b, _)| *b.denom()));
            }
            for (beta, amplitude) in live {
                series.push(SeriesEntry {
                    offset: *offset,
                    beta,
                    amplitude,
                });
            }
        }
        if conflict_dens.is_empty() {
            if series.is_empty() {
                return Err(Error::Zero("comb cancels to zero".into()));
            }
            return Ok(CanonicalComb { period, series });
        }
        let m = conflict_dens.iter().fold(1i64, |acc, d| acc.lcm(d));
        let mut extended = Vec::new();
        for a in &atoms {
            extended.extend(rebase(a, m as u32).atoms);
        }
        atoms = extended;
        period = period.mul_ratio(Ratio::from_integer(m));
    }
    Err(Error::NotInClass(
        "series phases cannot be reconciled at a common period".into(),
    ))
}

/// Squared 2-norm of the regularized state: `(1/period) sum |amplitude|^2`
/// (unit-norm profiles).
pub fn comb_norm_sq(c: &CanonicalComb) -> f64 {
    c.series.iter().map(|s| s.amplitude.norm_sqr()).sum::<f64>() / c.period.value()
}

/// Rescale amplitudes to unit norm.
pub fn comb_normalize(c: &CanonicalComb) -> CanonicalComb {
    let scale = comb_norm_sq(c).sqrt().recip();
    CanonicalComb {
        period: c.period,
        series: c
            .series
            .iter()
            .map(|s| SeriesEntry {
                amplitude: s.amplitude * scale,
                ..*s
            })
            .collect(),
    }
}

/// Shannon entropy of the series weights `rho_k = |b_k|^2 / sum |b_j|^2`.
/// Invariant under overall rescaling; between 0 and `log(series_count)`.
pub fn mixing_entropy(c: &CanonicalComb) -> f64 {
    let total: f64 = c.series.iter().map(|s| s.amplitude.norm_sqr()).sum();
    -c.series
        .iter()
        .map(|s| {
            let rho = s.amplitude.norm_sqr() / total;
            if rho > 0.0 {
                rho * rho.ln()
            } else {
                0.0
            }
        })
        .sum::<f64>()
}

/// Smearing profile pair for the delta trains: a narrow peak on each delta
/// and a wide envelope, both of unit 2-norm. Only the profile entropies and
/// the `p`-integral enter the closed forms.
#[derive(Debug, Clone, Copy)]
pub struct Regularizer {
    pub entropy_x: f64,
    pub entropy_k: f64,
    p_integral: fn(f64) -> f64,
}

fn gaussian_p_integral(p: f64) -> f64 {
    2f64.powf(0.25 * p) / p.sqrt()
}

impl Regularizer {
    /// The profile pair built from `2^(1/4) exp(-pi x^2)`: each profile has
    /// `S_x = S_k = (1 - log 2)/2` and `integral |profile|^p = 2^(p/4)/sqrt(p)`.
    pub fn gaussian() -> Self {
        let half = 0.5 * (1.0 - 2f64.ln());
        Regularizer {
            entropy_x: half,
            entropy_k: half,
            p_integral: gaussian_p_integral,
        }
    }

    /// Caller-supplied profile data. Requires unit normalization
    /// (`p_integral(2) = 1`) and the entropy bound
    /// `entropy_x + entropy_k >= 1 - log 2`.
    pub fn new(entropy_x: f64, entropy_k: f64, p_integral: fn(f64) -> f64) -> Result<Self> {
        if (p_integral(2.0) - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidSpec(
                "regularizer profile is not normalized: p_integral(2) != 1".into(),
            ));
        }
        if entropy_x + entropy_k < (1.0 - 2f64.ln()) - 1e-12 {
            return Err(Error::InvalidSpec(
                "profile entropies violate the phase-space lower bound".into(),
            ));
        }
        Ok(Regularizer {
            entropy_x,
            entropy_k,
            p_integral,
        })
    }

    pub fn p_integral(&self, p: f64) -> f64 {
        (self.p_integral)(p)
    }
}

impl Default for Regularizer {
    fn default() -> Self {
        Regularizer::gaussian()
    }
}

fn require_comb_normalized(c: &CanonicalComb) -> Result<()> {
    let dev = (comb_norm_sq(c) - 1.0).abs();
    if dev > COMB_NORM_TOL {
        return Err(Error::NotNormalized { deviation: dev });
    }
    Ok(())
}

/// Position-space entropy of the regularized train in the small-smearing
/// limit: both profiles' position entropies plus the mixing entropy minus
/// `log(period)`. Auto-normalizes within [`COMB_NORM_TOL`].
pub fn comb_entropy_x(c: &CanonicalComb, reg: &Regularizer) -> Result<f64> {
    require_comb_normalized(c)?;
    Ok(2.0 * reg.entropy_x + mixing_entropy(c) - c.period.value().ln())
}

/// Total phase-space entropy of the regularized train in the small-smearing
/// limit:
///
/// ```text
/// S = 2 (S_x(profile) + S_k(profile)) + S(b) + S(b~) - log(period * period~)
/// ```
///
/// where the tilde quantities come from the canonical form of the Fourier
/// transform.
pub fn comb_entropy_phase(c: &CanonicalComb, reg: &Regularizer) -> Result<f64> {
    require_comb_normalized(c)?;
    let tilde = canonical_form(&comb_fourier(&c.to_comb()))?;
    Ok(2.0 * (reg.entropy_x + reg.entropy_k)
        + mixing_entropy(c)
        + mixing_entropy(&tilde)
        - (c.period.value() * tilde.period().value()).ln())
}

/// Scale-stripped `p`-norm of the regularized train:
/// `((1/period) sum |b_k|^p * p_integral(p)^2)^(1/p)`.
pub fn comb_p_norm(c: &CanonicalComb, p: f64, reg: &Regularizer) -> Result<f64> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::InvalidExponent {
            p,
            reason: "p-norms require finite p >= 1",
        });
    }
    let sum: f64 = c.series.iter().map(|s| s.amplitude.norm().powf(p)).sum();
    let integral = reg.p_integral(p);
    Ok((sum / c.period.value() * integral * integral).powf(1.0 / p))
}
