//! Structural invariants of the transform, the projectors, and the comb
//! calculus, exercised on randomized inputs.

use num_complex::Complex64;
use num_rational::Ratio;
use proptest::prelude::*;

use phasent::combcalc::{
    canonical_form, comb_entropy_x, comb_fourier, comb_normalize, comb_parity, combs_close, d0,
    mixing_entropy, rebase, Comb, CombAtom, QuadReal, Regularizer,
};
use phasent::eigensearch::best_known;
use phasent::gridwave::{
    entropy_k, entropy_phase, entropy_x, fourier, project, Eigenvalue, GridSpec, SubspaceSpec,
    WaveGrid,
};
use phasent::optimize::random_state;
use phasent::states::{comb_sample, gaussian, hermite_state, HermiteSpec, SamplingParams};

fn normalized_noise(n: usize, seed: u64) -> WaveGrid {
    random_state(GridSpec::new(n).unwrap(), seed)
        .normalized()
        .unwrap()
}

fn max_sample_gap(a: &WaveGrid, b: &WaveGrid) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[test]
fn transform_is_unitary_across_sizes() {
    for (k, n) in [8usize, 64, 256, 4096, 65536].into_iter().enumerate() {
        let s = normalized_noise(n, 100 + k as u64);
        assert!((fourier(&s).norm() - s.norm()).abs() <= 1e-12, "n = {n}");
    }
}

#[test]
fn fourth_power_is_the_identity() {
    for (k, n) in [8usize, 64, 256, 4096, 65536].into_iter().enumerate() {
        let s = normalized_noise(n, 200 + k as u64);
        let f4 = fourier(&fourier(&fourier(&fourier(&s))));
        assert!(max_sample_gap(&f4, &s) <= 1e-10, "n = {n}");
    }
}

#[test]
fn projectors_resolve_the_identity_orthogonally() {
    let s = normalized_noise(256, 300);
    let mut total = WaveGrid::zero(s.spec());
    for lambda in Eigenvalue::ALL {
        let sub = SubspaceSpec::FourierEigen(lambda);
        let once = project(&s, sub);
        let twice = project(&once, sub);
        assert!(max_sample_gap(&twice, &once) <= 1e-10, "idempotence {lambda:?}");
        for mu in Eigenvalue::ALL {
            if mu != lambda {
                let crossed = project(&once, SubspaceSpec::FourierEigen(mu));
                assert!(crossed.norm() <= 1e-10, "orthogonality {lambda:?}/{mu:?}");
            }
        }
        total = total.axpy(Complex64::new(1.0, 0.0), &once);
    }
    assert!(max_sample_gap(&total, &s) <= 1e-10, "completeness");
}

#[test]
fn antisymmetric_projection_is_the_odd_part() {
    let s = normalized_noise(512, 301);
    let odd = project(&s, SubspaceSpec::Antisymmetric);
    let mi = project(&s, SubspaceSpec::FourierEigen(Eigenvalue::MinusI));
    let pi = project(&s, SubspaceSpec::FourierEigen(Eigenvalue::PlusI));
    let sum = mi.axpy(Complex64::new(1.0, 0.0), &pi);
    assert!(max_sample_gap(&odd, &sum) <= 1e-10);
}

fn arb_rational(max: i64) -> impl Strategy<Value = Ratio<i64>> {
    (1..=max, 1..=max).prop_map(|(n, d)| Ratio::new(n, d))
}

fn arb_phase_rational() -> impl Strategy<Value = Ratio<i64>> {
    (-16i64..=16, 1i64..=8).prop_map(|(n, d)| Ratio::new(n, d))
}

prop_compose! {
    fn arb_atom()(
        t in arb_rational(3),
        d in prop::sample::select(vec![1u64, 2, 3, 5]),
        alpha in arb_phase_rational(),
        beta in arb_phase_rational(),
        re in -2.0..2.0f64,
        im in -2.0..2.0f64,
    ) -> CombAtom {
        CombAtom::new(
            Complex64::new(if re == 0.0 && im == 0.0 { 1.0 } else { re }, im),
            QuadReal::new(t, d).unwrap(),
            alpha,
            beta,
        ).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn atoms_cycle_under_the_transform(atom in arb_atom()) {
        let c = Comb::single(atom);
        let f1 = comb_fourier(&c);
        let f2 = comb_fourier(&f1);
        let f4 = comb_fourier(&comb_fourier(&f2));
        prop_assert!(combs_close(&f2, &comb_parity(&c), 1e-12));
        prop_assert!(combs_close(&f4, &c, 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rebasing_agrees_with_the_grid_sampler(atom in arb_atom(), n in 1u32..=6) {
        let grid = GridSpec::new(16384).unwrap();
        let params = SamplingParams::new(0.1, grid).unwrap();
        let original = canonical_form(&Comb::single(atom)).unwrap();
        let rebased = canonical_form(&rebase(&atom, n)).unwrap();
        let u = comb_sample(&original, &params).unwrap();
        let v = comb_sample(&rebased, &params).unwrap();
        prop_assert!(max_sample_gap(&u, &v) <= 1e-8);
    }

    #[test]
    fn mixing_entropy_ignores_overall_scale(atom in arb_atom(), s_re in -3.0..3.0f64, s_im in -3.0..3.0f64) {
        prop_assume!(s_re.abs() + s_im.abs() > 0.1);
        let c = canonical_form(&Comb::new(vec![
            atom,
            CombAtom::new(
                Complex64::new(0.4, -0.3),
                atom.period,
                atom.alpha + Ratio::new(1, 7),
                atom.beta,
            ).unwrap(),
        ]).unwrap()).unwrap();
        let scaled = canonical_form(&c.to_comb().scaled(Complex64::new(s_re, s_im))).unwrap();
        prop_assert!((mixing_entropy(&c) - mixing_entropy(&scaled)).abs() <= 1e-12);
    }
}

#[test]
fn tensor_products_add_position_entropies() {
    let grid = GridSpec::new(512).unwrap();
    let pairs = [
        (
            hermite_state(HermiteSpec::new(1).unwrap(), grid).unwrap(),
            gaussian(0.8, grid).unwrap(),
        ),
        (
            hermite_state(HermiteSpec::new(2).unwrap(), grid).unwrap(),
            hermite_state(HermiteSpec::new(0).unwrap(), grid).unwrap(),
        ),
    ];
    for (u, v) in pairs {
        let du = u.densities();
        let dv = v.densities();
        let dx = grid.dx();
        let max = du.iter().fold(0.0f64, |m, &x| m.max(x))
            * dv.iter().fold(0.0f64, |m, &x| m.max(x));
        let floor = max * 1e-60;
        let mut s2 = 0.0;
        for a in &du {
            for b in &dv {
                let rho = a * b;
                if rho > floor {
                    s2 -= rho * rho.ln();
                }
            }
        }
        s2 *= dx * dx;
        let expected = entropy_x(&u).unwrap() + entropy_x(&v).unwrap();
        assert!((s2 - expected).abs() <= 1e-9, "{s2} vs {expected}");
    }
}

#[test]
fn dilatation_shifts_marginals_and_fixes_the_total() {
    let grid = GridSpec::new(4096).unwrap();
    let half = 0.5 * (1.0 - 2f64.ln());
    for w in [0.5, 0.8, 1.25, 2.0] {
        let g = gaussian(w, grid).unwrap();
        let sx = entropy_x(&g).unwrap();
        let sk = entropy_k(&g).unwrap();
        assert!((sx - (half + w.ln())).abs() <= 1e-3, "S_x at width {w}");
        assert!((sk - (half - w.ln())).abs() <= 1e-3, "S_k at width {w}");
        assert!(
            (entropy_phase(&g).unwrap() - (1.0 - 2f64.ln())).abs() <= 1e-3,
            "total at width {w}"
        );
    }
}

#[test]
fn rebasing_preserves_the_closed_form_entropies() {
    let reg = Regularizer::gaussian();
    let named = [
        canonical_form(&d0()).unwrap(),
        best_known(SubspaceSpec::FourierEigen(Eigenvalue::MinusOne)),
        best_known(SubspaceSpec::FourierEigen(Eigenvalue::PlusI)),
    ];
    for can in named {
        let c = comb_normalize(&can);
        let mut atoms = Vec::new();
        for a in c.to_comb().atoms() {
            atoms.extend(rebase(a, 3).atoms().to_vec());
        }
        let stretched = comb_normalize(&canonical_form(&Comb::new(atoms).unwrap()).unwrap());
        assert_eq!(stretched.series_count(), 3 * c.series_count());
        let a = comb_entropy_x(&c, &reg).unwrap();
        let b = comb_entropy_x(&stretched, &reg).unwrap();
        assert!((a - b).abs() <= 1e-12, "{a} vs {b}");
    }
}
