#!/usr/bin/env python3
"""Smoke test for the phasent_py extension module.

Builds the cdylib if needed, stages it under the importable name, and checks
a handful of known values end to end. Run from anywhere:

    python3 python/smoke_test.py
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def ensure_module():
    try:
        import phasent_py  # noqa: F401

        return
    except ImportError:
        pass

    lib = None
    for profile in ("release", "debug"):
        cand = ROOT / "target" / profile / "libphasent_py.so"
        if cand.exists():
            lib = cand
            break
    if lib is None:
        subprocess.run(
            ["cargo", "build", "--release", "-p", "phasent-py"],
            cwd=ROOT,
            check=True,
        )
        lib = ROOT / "target" / "release" / "libphasent_py.so"

    stage = Path(tempfile.mkdtemp(prefix="phasent_py_"))
    shutil.copy2(lib, stage / "phasent_py.so")
    sys.path.insert(0, str(stage))


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    ensure_module()
    import phasent_py as pp

    unit = 1.0 - math.log(2.0)

    # Grid states and their entropies.
    g = pp.gaussian(1.0, 4096)
    assert close(g.norm(), 1.0, 1e-9), g.norm()
    assert len(g) == 4096
    assert close(pp.entropy_phase(g), unit, 2e-4)

    h1 = pp.hermite(1, 4096)
    assert close(pp.entropy_phase(h1), 0.847579, 2e-4)
    assert close(pp.entropy_x(h1) + pp.entropy_k(h1), pp.entropy_phase(h1), 1e-12)

    # Fourier transform is unitary and fixes the ground Gaussian.
    fg = pp.fourier(g)
    assert close(fg.norm(), 1.0, 1e-9)
    assert close(abs(g.inner_product(fg)), 1.0, 1e-9)

    # Projection onto the +1 eigenspace keeps the Gaussian intact.
    pg = pp.project(g, "eigen:+1")
    assert close(abs(g.inner_product(pg)), 1.0, 1e-9)

    # Exact train calculus.
    s0 = pp.comb_entropy("phi(1,1/2,1/2)")
    assert close(s0, 2.0 * unit, 1e-9), s0

    two = pp.best_known("eigen:-1")
    s_two = pp.best_known_entropy("eigen:-1")
    assert close(s_two, 2.0 + math.sqrt(2.0) * math.log(math.sqrt(2.0) - 1.0), 1e-9)
    assert close(pp.comb_entropy(two), s_two, 1e-9)

    three = pp.best_known("eigen:+i")
    s_three = pp.best_known_entropy("eigen:+i")
    expect = 2.0 - (2.0 / math.sqrt(3.0)) * math.log(math.sqrt(3.0) + 1.0)
    assert close(s_three, expect, 1e-9)
    assert close(pp.comb_entropy(three), s_three, 1e-9)

    # d0 is a -i eigenvector: its Fourier image has the same entropy, and
    # four transforms return the original presentation exactly.
    d0 = "phi(1,1/2,1/2)"
    fd0 = pp.comb_fourier(d0)
    assert close(pp.comb_entropy(fd0), pp.comb_entropy(d0), 1e-12)
    four = d0
    for _ in range(4):
        four = pp.comb_fourier(four)
    assert pp.canonicalize(four) == pp.canonicalize(d0), four

    # Survey ordering puts the known minimizers first.
    rows = pp.survey("even-zero", 6, 6)
    q, p, count, entropy, literal = rows[0]
    assert (q, p) == (1, 2), rows[0]
    assert close(entropy, s_two, 1e-9)
    assert count >= 1
    assert close(pp.comb_entropy(literal), entropy, 1e-9)

    rows = pp.survey("odd-half", 6, 6)
    assert (rows[0][0], rows[0][1]) == (3, 1), rows[0]
    assert close(rows[0][3], s_three, 1e-9)

    # Sampled trains land on the exact calculus.
    samp = pp.sample_comb(d0, 0.1, 65536)
    assert close(pp.entropy_phase(samp), 2.0 * unit, 1e-3)
    p0 = pp.psi0(0.1, 65536)
    assert close(pp.entropy_phase(p0), pp.entropy_phase(samp), 1e-10)

    # Minimization from the first excited level stays antisymmetric and descends.
    run = pp.minimize(pp.hermite(1, 2048), "antisymmetric")
    assert run.converged
    assert run.s_total <= 0.75, run.s_total
    assert run.s_total >= 2.0 * unit - 1e-6
    traj = run.trajectory
    assert all(b <= a + 1e-12 for a, b in zip(traj, traj[1:]))
    final = run.final_state()
    assert close(final.norm(), 1.0, 1e-9)

    # Starting at the minimum stops immediately.
    quick = pp.minimize(pp.gaussian(1.0, 1024), "eigen:+1")
    assert quick.iterations <= 1
    assert close(quick.s_total, unit, 1e-3)

    # Random starts are reproducible.
    r1 = pp.random_start("antisymmetric", 512, seed=7)
    r2 = pp.random_start("antisymmetric", 512, seed=7)
    assert r1.values() == r2.values()

    # Localization brackets.
    lo, hi = pp.c_d_bracket(1)
    assert close(lo, unit, 1e-12) and close(hi, 2.0 * unit, 1e-12)
    lo, hi = pp.k_dq_bracket(1, 4.0)
    bb = pp.babenko_beckner(4.0)
    assert close(lo, hi * bb, 1e-12)
    assert close(pp.restricted_norm_lower_bound(d0, 4.0), bb * bb, 1e-9)
    assert close(pp.oscillator_entropy(1), 0.847579, 1e-5)
    assert close(pp.oscillator_entropy(0), unit, 1e-12)

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
