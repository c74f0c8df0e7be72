"""Weyl groups as integer matrices, minimal coset representatives, chamber
reduction, and the antisymmetrizer operators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple, Union

from . import kernels, rootdata
from .errors import MismatchedDatum, OrderCapExceeded, ShiftNotStable
from .rootdata import (
    RationalWeight,
    RootDatum,
    SubgroupDatum,
    Weight,
    dot,
)

Matrix = Tuple[Tuple[int, ...], ...]

Scope = Union[RootDatum, SubgroupDatum]


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def apply_matrix(m: Matrix, v: Sequence[int]) -> Weight:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def reflection_matrix(rank: int, root: Weight, coroot: Weight) -> Matrix:
    return tuple(
        tuple((1 if i == j else 0) - root[i] * coroot[j] for j in range(rank))
        for i in range(rank)
    )


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element stored as its integer matrix on X(T)."""

    matrix: Matrix
    length: int
    det: int

    def apply(self, v: Sequence[int]) -> Weight:
        return apply_matrix(self.matrix, v)

    def apply_rational(self, v: RationalWeight) -> RationalWeight:
        return RationalWeight(apply_matrix(self.matrix, v.nums), v.den)

    def inverse(self) -> "WeylElement":
        # length and determinant are invariant under inversion
        from fractions import Fraction

        n = len(self.matrix)
        a = [
            [Fraction(x) for x in row]
            + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(self.matrix)
        ]
        for col in range(n):
            piv = next(r for r in range(col, n) if a[r][col])
            a[col], a[piv] = a[piv], a[col]
            pv = a[col][col]
            a[col] = [x / pv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        inv = tuple(tuple(int(a[i][n + j]) for j in range(n)) for i in range(n))
        return WeylElement(inv, self.length, self.det)


class WeylGroup:
    """Full enumeration of a (sub)system's Weyl group with deterministic
    element order: by length, then lexicographic matrix order."""

    def __init__(self, scope: Scope):
        self.scope = scope
        self.datum = scope.datum
        rank = self.datum.rank
        gens = [
            reflection_matrix(rank, a, av)
            for a, av in zip(scope.basis, scope.basis_coroots)
        ]
        ident = _identity(rank)
        lengths: Dict[Matrix, int] = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gens:
                    nm = _matmul(m, g)
                    if nm not in lengths:
                        lengths[nm] = lengths[m] + 1
                        nxt.append(nm)
            frontier = nxt
            if len(lengths) > rootdata.WEYL_ORDER_CAP:
                raise OrderCapExceeded("Weyl group enumeration exceeded cap")
        ordered = sorted(lengths.items(), key=lambda kv: (kv[1], kv[0]))
        self.elements: Tuple[WeylElement, ...] = tuple(
            WeylElement(m, l, -1 if l % 2 else 1) for m, l in ordered
        )
        self.order = len(self.elements)
        self.generators = tuple(
            e for e in self.elements if e.length == 1 and e.matrix in set(gens)
        )
        self._index = {e.matrix: i for i, e in enumerate(self.elements)}

    def element(self, matrix: Matrix) -> WeylElement:
        return self.elements[self._index[matrix]]

    def __contains__(self, e: WeylElement) -> bool:
        return e.matrix in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order


_WEYL_CACHE: Dict[object, WeylGroup] = {}


def generate_weyl(scope: Scope) -> WeylGroup:
    """Enumerate the Weyl group of a RootDatum or SubgroupDatum (cached)."""
    key = scope.scope_key()
    w = _WEYL_CACHE.get(key)
    if w is None:
        w = WeylGroup(scope)
        _WEYL_CACHE[key] = w
    return w


@dataclass(frozen=True)
class CosetReps:
    """The minimal representatives W^H = {w : w(R_H^+) in R_G^+}."""

    reps: Tuple[WeylElement, ...]
    subgroup: SubgroupDatum


def coset_representatives(w: WeylGroup, sub: SubgroupDatum) -> CosetReps:
    if sub.parent is not w.datum and sub.parent.key != w.datum.key:
        raise MismatchedDatum("subgroup does not belong to this Weyl group")
    pos = set(w.datum.positive_roots)
    reps = tuple(
        e
        for e in w.elements
        if all(e.apply(a) in pos for a in sub.basis_h)
    )
    wh = generate_weyl(sub) if sub.basis_h else None
    order_h = wh.order if wh else 1
    if len(reps) * order_h != w.order:
        raise AssertionError("coset count mismatch")
    return CosetReps(reps, sub)


@dataclass(frozen=True)
class Regular:
    w: WeylElement
    image: RationalWeight


class Singular:
    """Marker result: the weight lies on a reflection wall."""

    def __repr__(self):
        return "Singular"

    def __eq__(self, other):
        return isinstance(other, Singular)

    def __hash__(self):
        return hash("Singular")


SINGULAR = Singular()


def to_dominant_chamber(scope: Scope, mu: RationalWeight):
    """Unique strictly dominant representative of a regular weight.

    Returns Regular(w, w(mu)) with w in the scope's Weyl group, or the
    Singular marker when mu lies on a wall of the scope system.  Uses
    iterated simple-reflection ascent; no group enumeration.
    """
    rank = scope.datum.rank
    basis = scope.basis
    coroots = scope.basis_coroots
    x = list(mu.nums)
    mat = _identity(rank)
    refs = [reflection_matrix(rank, a, av) for a, av in zip(basis, coroots)]
    steps = 0
    cap = max(1, len(scope.positive)) + 1
    while True:
        moved = False
        for i, cv in enumerate(coroots):
            p = dot(cv, x)
            if p == 0:
                return SINGULAR
            if p < 0:
                a = basis[i]
                for j in range(rank):
                    x[j] -= p * a[j]
                mat = _matmul(refs[i], mat)
                moved = True
                steps += 1
        if not moved:
            break
        if steps > cap * cap + len(scope.positive):
            raise AssertionError("dominant ascent failed to terminate")
    length = _length_of(scope, mat)
    w = WeylElement(mat, length, -1 if length % 2 else 1)
    return Regular(w, RationalWeight(x, mu.den))


def _length_of(scope: Scope, mat: Matrix) -> int:
    pos = set(scope.positive)
    n = 0
    for a in scope.positive:
        if apply_matrix(mat, a) not in pos:
            n += 1
    return n


def shift_adjustment(w_matrix: Matrix, shift: RationalWeight) -> Weight:
    """Integer vector w(delta) - delta; raises if the shift class moves."""
    img = apply_matrix(w_matrix, shift.nums)
    diff = [x - y for x, y in zip(img, shift.nums)]
    if any(d % shift.den for d in diff):
        raise ShiftNotStable(
            f"shift class {shift.nums}/{shift.den} is not stable under the group"
        )
    return tuple(d // shift.den for d in diff)


def apply_weyl_sum(
    elements: Sequence[WeylElement],
    dets: Sequence[int],
    shift: RationalWeight,
    coeffs: Dict[Weight, int],
) -> Dict[Weight, int]:
    """Sum of det(w) * w(.) over the listed elements, acting on offset maps
    relative to the (stable) shift."""
    mats = [e.matrix for e in elements]
    adjusts = [shift_adjustment(m, shift) for m in mats]
    return kernels.weyl_sum(mats, dets, adjusts, coeffs)


def apply_antisymmetrizer(kind: str, a, sub: Optional[SubgroupDatum] = None):
    """Apply J_G, J_H, J_M or J_M_op to a TorusElement.

    J_G sums det(w) w over the full Weyl group; J_H over the subgroup's;
    J_M over the minimal coset representatives W^H; J_M_op over their
    inverses.  The shift class of `a` must be stable under every element
    applied.
    """
    kind = kind.upper()
    datum = a.datum
    if kind == "J_G":
        grp = generate_weyl(datum)
        elements = grp.elements
        dets = [e.det for e in elements]
    elif kind == "J_H":
        if sub is None:
            raise MismatchedDatum("J_H needs a SubgroupDatum")
        elements = generate_weyl(sub).elements if sub.basis_h else (WeylElement(_identity(datum.rank), 0, 1),)
        dets = [e.det for e in elements]
    elif kind in ("J_M", "J_M_OP"):
        if sub is None:
            raise MismatchedDatum("J_M needs a SubgroupDatum")
        grp = generate_weyl(datum)
        reps = coset_representatives(grp, sub).reps
        if kind == "J_M":
            elements = reps
        else:
            elements = tuple(e.inverse() for e in reps)
        dets = [e.det for e in elements]
    else:
        raise ValueError(f"unknown antisymmetrizer kind {kind!r}")
    out = apply_weyl_sum(elements, dets, a.shift, a.coeffs)
    return a.replace_coeffs(out)
