"""Pure-Python reference kernels for the hot inner loops.

All four kernels operate on finitely supported integer maps whose keys are
integer coordinate tuples.  Coefficients are Python ints, so this backend
is exact at any size; the compiled backend mirrors the same contracts with
checked 64-bit arithmetic.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

Key = Tuple[int, ...]
Support = Dict[Key, int]


def convolve(a: Support, b: Support) -> Support:
    """Product of two sparse Laurent elements: sum of a[k1]*b[k2] at k1+k2."""
    if len(a) > len(b):
        a, b = b, a
    out: Support = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            c = out.get(k, 0) + c1 * c2
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


def weyl_sum(
    mats: Sequence[Sequence[Sequence[int]]],
    dets: Sequence[int],
    shifts: Sequence[Key],
    coeffs: Support,
) -> Support:
    """Sum over group elements w of det_w * sum_k c_k e^(M_w k + t_w)."""
    out: Support = {}
    for mat, det, t in zip(mats, dets, shifts):
        for k, c in coeffs.items():
            nk = tuple(
                sum(row[j] * k[j] for j in range(len(k))) + t[i]
                for i, row in enumerate(mat)
            )
            v = out.get(nk, 0) + det * c
            if v:
                out[nk] = v
            elif nk in out:
                del out[nk]
    return out


def dominant_collect(
    coeffs: Support,
    basis: Sequence[Key],
    coroots: Sequence[Key],
    max_steps: int,
) -> Support:
    """Reduce every monomial to the (strictly) dominant chamber with sign.

    Keys are scaled weights (a common positive denominator has been
    multiplied through, which commutes with all reflections).  Monomials
    hitting a wall are dropped; regular ones accumulate det(w) times their
    coefficient at the dominant image.
    """
    out: Support = {}
    nb = len(basis)
    for key, c in coeffs.items():
        x = list(key)
        sign = 1
        steps = 0
        singular = False
        while True:
            moved = False
            for i in range(nb):
                cv = coroots[i]
                p = sum(cv[j] * x[j] for j in range(len(x)))
                if p == 0:
                    singular = True
                    break
                if p < 0:
                    al = basis[i]
                    for j in range(len(x)):
                        x[j] -= p * al[j]
                    sign = -sign
                    moved = True
                    steps += 1
            if singular or not moved:
                break
            if steps > max_steps:
                raise AssertionError("chamber ascent failed to terminate")
        if singular:
            continue
        k = tuple(x)
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def orbit_expand(
    items: Sequence[Tuple[Key, int]],
    basis: Sequence[Key],
    coroots: Sequence[Key],
) -> Support:
    """Sum of m * e^(w mu) over each orbit of the listed dominant weights."""
    out: Support = {}
    nb = len(basis)
    for key, mult in items:
        seen = {key}
        frontier: List[Key] = [key]
        while frontier:
            x = frontier.pop()
            for i in range(nb):
                cv = coroots[i]
                p = sum(cv[j] * x[j] for j in range(len(x)))
                if p > 0:
                    al = basis[i]
                    y = tuple(x[j] - p * al[j] for j in range(len(x)))
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
        for k in seen:
            v = out.get(k, 0) + mult
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out
