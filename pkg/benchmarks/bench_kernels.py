#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python backend.

Workloads mirror the hot paths of the verification suite on the largest
zoo datum (F4 with its rank-4 subgroup).  Run from the repository root:

    python benchmarks/bench_kernels.py
"""

import random
import time

from spinduct import _kernels_py as py
from spinduct.charring import TorusElement, TwistClass, irreducible_restriction, weyl_denominator
from spinduct.induction import induce_between
from spinduct.rootdata import RationalWeight, build_root_datum, subgroup_from_roots
from spinduct.weyl import generate_weyl
from spinduct.zoo import zoo_problem

try:
    from spinduct import _kernels as cy
except ImportError:
    cy = None


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, pure_fn, fast_fn, repeat=3):
    tp, rp = timed(pure_fn, repeat)
    if fast_fn is None:
        print(f"{name:24s} pure {tp*1e3:9.2f} ms   (no compiled backend)")
        return
    tc, rc = timed(fast_fn, repeat)
    assert rp == rc, f"{name}: backends disagree"
    print(
        f"{name:24s} pure {tp*1e3:9.2f} ms   compiled {tc*1e3:9.2f} ms"
        f"   speedup {tp / tc:6.1f}x"
    )


def main():
    rng = random.Random(0)
    f4 = build_root_datum("F4")
    p = zoo_problem("F4", "b4")
    w = generate_weyl(f4)
    mats = [e.matrix for e in w.elements]
    dets = [e.det for e in w.elements]
    shifts = [(0, 0, 0, 0)] * len(mats)

    d_g = dict(weyl_denominator(f4).coeffs)
    chi = dict(irreducible_restriction(f4, RationalWeight([0, 0, 0, 1])).coeffs)
    support = {
        tuple(rng.randint(-3, 3) for _ in range(4)): rng.randint(-9, 9) or 1
        for _ in range(12)
    }
    d_h = dict(weyl_denominator(p.sub).coeffs)
    collect_input = py.convolve(d_h, support)
    cap = 4 * len(f4.positive_roots) ** 2
    doms = [
        (tuple(rng.randint(0, 3) for _ in range(4)), rng.randint(1, 4))
        for _ in range(8)
    ]

    print(f"workloads on F4 (|W| = {w.order}, |W_H| = {p.weyl_h.order})\n")
    bench(
        "convolve d_G * chi_26",
        lambda: py.convolve(d_g, chi),
        (lambda: cy.convolve(d_g, chi)) if cy else None,
    )
    bench(
        "weyl_sum J_G, 12 terms",
        lambda: py.weyl_sum(mats, dets, shifts, support),
        (lambda: cy.weyl_sum(mats, dets, shifts, support)) if cy else None,
    )
    bench(
        "dominant_collect d_H*a",
        lambda: py.dominant_collect(
            collect_input, f4.simple_roots, f4.simple_coroots, cap
        ),
        (
            lambda: cy.dominant_collect(
                collect_input, f4.simple_roots, f4.simple_coroots, cap
            )
        )
        if cy
        else None,
    )
    bench(
        "orbit_expand, 8 orbits",
        lambda: py.orbit_expand(doms, f4.simple_roots, f4.simple_coroots),
        (lambda: cy.orbit_expand(doms, f4.simple_roots, f4.simple_coroots)) if cy else None,
    )

    # end to end: one stage of twisted induction T -> F4
    t = subgroup_from_roots(f4, [])
    a = TorusElement(f4, f4.rho.residue_mod_one(), support)

    import os

    t0 = time.perf_counter()
    induce_between(f4, t, a)
    tt = time.perf_counter() - t0
    backend = "compiled" if cy and not os.environ.get("SPINDUCT_NO_EXT") else "pure"
    print(f"\nend-to-end induce T -> F4 ({backend} dispatch): {tt*1e3:.1f} ms")


if __name__ == "__main__":
    main()
