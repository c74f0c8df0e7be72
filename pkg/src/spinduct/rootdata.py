"""Root data: exact root systems over a chosen character lattice.

A group is encoded by its root system together with an ordered Z-basis of
the character lattice X(T); all weights are integer coordinate vectors over
that basis, and rational weights carry a single common denominator.  The
basis is the fundamental-weight basis when the lattice choice is "weight";
other intermediate lattices are rebased so coordinates stay integral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import (
    DimensionMismatch,
    LatticeNotIntermediate,
    NotARoot,
    NotASubsetOfRoots,
    OrderCapExceeded,
    RankCapExceeded,
    UnknownSeries,
)
from . import intlinalg

Weight = Tuple[int, ...]
Covector = Tuple[int, ...]

RANK_CAP = 8
WEYL_ORDER_CAP = 1 << 21


def vadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def dot(cv: Covector, v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(cv, v))


class RationalWeight:
    """Integer numerator vector with a single positive denominator, in
    lowest terms.  Immutable and hashable."""

    __slots__ = ("nums", "den")

    def __init__(self, nums: Sequence[int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("RationalWeight denominator is zero")
        nums = [int(x) for x in nums]
        den = int(den)
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        g = den
        for x in nums:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalWeight is immutable")

    @classmethod
    def zero(cls, rank: int) -> "RationalWeight":
        return cls((0,) * rank, 1)

    @classmethod
    def from_ints(cls, v: Sequence[int]) -> "RationalWeight":
        return cls(tuple(v), 1)

    @property
    def rank(self) -> int:
        return len(self.nums)

    def __add__(self, other: "RationalWeight") -> "RationalWeight":
        a, b = self, other
        return RationalWeight(
            [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)], a.den * b.den
        )

    def __sub__(self, other: "RationalWeight") -> "RationalWeight":
        return self + (-other)

    def __neg__(self) -> "RationalWeight":
        return RationalWeight([-x for x in self.nums], self.den)

    def scale(self, num: int, den: int = 1) -> "RationalWeight":
        return RationalWeight([x * num for x in self.nums], self.den * den)

    def pair(self, cv: Covector) -> Fraction:
        return Fraction(dot(cv, self.nums), self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def ints(self) -> Weight:
        if self.den != 1:
            raise ValueError(f"{self} is not integral")
        return self.nums

    def residue_mod_one(self) -> "RationalWeight":
        """Canonical representative modulo the integer lattice: every
        coordinate lies in [0, 1)."""
        return RationalWeight([x % self.den for x in self.nums], self.den)

    def fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalWeight)
            and self.nums == other.nums
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.nums, self.den))

    def __repr__(self):
        if self.den == 1:
            return f"RationalWeight({list(self.nums)})"
        return f"RationalWeight({list(self.nums)}, den={self.den})"


@dataclass(frozen=True)
class Lattice:
    """Sublattice of the ambient coordinate lattice Z^rank, held as the
    column-Hermite canonical generating matrix (idempotent normal form)."""

    ambient_rank: int
    columns: Tuple[Weight, ...]

    @classmethod
    def from_columns(cls, ambient_rank: int, cols: Iterable[Sequence[int]]) -> "Lattice":
        cols = [tuple(int(x) for x in c) for c in cols if any(c)]
        for c in cols:
            if len(c) != ambient_rank:
                raise DimensionMismatch("lattice generator has wrong length")
        if not cols:
            return cls(ambient_rank, ())
        mat = intlinalg.transpose(cols)  # rows of length = #cols
        h = intlinalg.hermite_column_form(mat)
        return cls(ambient_rank, tuple(intlinalg.transpose(h)))

    @classmethod
    def full(cls, ambient_rank: int, scale: int = 1) -> "Lattice":
        return cls.from_columns(
            ambient_rank,
            [
                tuple(scale if i == j else 0 for j in range(ambient_rank))
                for i in range(ambient_rank)
            ],
        )

    @property
    def rank(self) -> int:
        return len(self.columns)

    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """Generators as a matrix (rows indexed by ambient coordinate)."""
        if not self.columns:
            return tuple(() for _ in range(self.ambient_rank))
        return intlinalg.transpose(self.columns)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_rank:
            raise DimensionMismatch("vector has wrong length")
        if not any(v):
            return True
        if not self.columns:
            return False
        return intlinalg.solve_integer(self.matrix(), v) is not None

    def contains_rational(self, v: RationalWeight) -> bool:
        return v.is_integral() and self.contains(v.nums)


# --- Cartan data ---------------------------------------------------------

_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

_WEYL_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: _factorial(n) << n,
    "C": lambda n: _factorial(n) << n,
    "D": lambda n: _factorial(n) << (n - 1) if n > 1 else 2,
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _cartan_matrix(series: str, n: int) -> List[List[int]]:
    """Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee> (Bourbaki shapes)."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if series == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif series == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        for i in range(n - 1):
            link(i, i + 1)
        if n >= 2:
            c[n - 1][n - 2] = -2
    elif series == "C":
        # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        for i in range(n - 1):
            link(i, i + 1)
        if n >= 2:
            c[n - 2][n - 1] = -2
    elif series == "D":
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 3:
            link(n - 3, n - 1)
        # n == 2: two disconnected nodes
    elif series == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-n, node 2 hangs off node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif series == "F":
        link(0, 1)
        link(2, 3)
        # alpha_3 short: <alpha_2, alpha_3^vee> = -2
        c[1][2] = -1
        c[2][1] = -2
    elif series == "G":
        # alpha_1 short, alpha_2 long
        c[0][1] = -3
        c[1][0] = -1
    else:
        raise UnknownSeries(f"unknown series {series!r}")
    return c


def _symmetrizer(c: List[List[int]]) -> List[int]:
    """Minimal positive integers d with d_i c_ij = d_j c_ji."""
    n = len(c)
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if c[i][j] and d[j] is None:
                    d[j] = d[i] * Fraction(c[i][j], c[j][i])
                    stack.append(j)
    lcm_den = 1
    for x in d:
        lcm_den = lcm_den * x.denominator // gcd(lcm_den, x.denominator)
    ints = [int(x * lcm_den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


_LABEL_RE = re.compile(r"^([A-GT])([0-9]+)$")


def parse_label(label: str) -> List[Tuple[str, int]]:
    """Parse a series descriptor like "A2", "A1xA1", "B3xT1"."""
    blocks = []
    for part in label.replace("*", "x").split("x"):
        m = _LABEL_RE.match(part.strip().upper())
        if not m:
            raise UnknownSeries(f"cannot parse series label {part!r}")
        series, n = m.group(1), int(m.group(2))
        if series == "T":
            if n < 1:
                raise UnknownSeries("torus rank must be >= 1")
        elif series == "A" and n < 1:
            raise UnknownSeries("A_n needs n >= 1")
        elif series in "BC" and n < 2:
            raise UnknownSeries(f"{series}_n needs n >= 2")
        elif series == "D" and n < 2:
            raise UnknownSeries("D_n needs n >= 2")
        elif series == "E" and n not in (6, 7, 8):
            raise UnknownSeries("E_n needs n in 6..8")
        elif series == "F" and n != 4:
            raise UnknownSeries("F_n needs n = 4")
        elif series == "G" and n != 2:
            raise UnknownSeries("G_n needs n = 2")
        blocks.append((series, n))
    return blocks


class RootDatum:
    """A root system plus a chosen character lattice X(T).

    Attributes are read-only by convention; instances are immutable after
    construction and safe to share between threads.
    """

    def __init__(
        self,
        cartan_label: str,
        rank: int,
        simple_roots: Sequence[Weight],
        simple_coroots: Sequence[Covector],
        simple_len2: Sequence[int],
        lattice_choice: str,
    ):
        self.cartan_label = cartan_label
        self.rank = rank
        self.simple_roots = tuple(tuple(a) for a in simple_roots)
        self.simple_coroots = tuple(tuple(a) for a in simple_coroots)
        self.simple_len2 = tuple(simple_len2)
        self.lattice_choice = lattice_choice
        self._generate_roots()
        self.rho = RationalWeight(
            [sum(col) for col in zip(*self.positive_roots)] if self.positive_roots else [0] * self.rank,
            2,
        )
        self.key = (cartan_label, self.simple_roots, self.simple_coroots)

    def _generate_roots(self) -> None:
        """Reflection closure of the simple roots, carrying coroots, squared
        lengths and simple-root coordinates along each reflection."""
        records: Dict[Weight, Tuple[Covector, int, Weight]] = {}
        work: List[Weight] = []
        k = len(self.simple_roots)
        for i, (a, av, l2) in enumerate(
            zip(self.simple_roots, self.simple_coroots, self.simple_len2)
        ):
            sc = tuple(1 if j == i else 0 for j in range(k))
            records[a] = (av, l2, sc)
            work.append(a)
        while work:
            b = work.pop()
            bv, l2, sc = records[b]
            for i, (a, av) in enumerate(zip(self.simple_roots, self.simple_coroots)):
                n = dot(av, b)
                if n == 0:
                    continue
                nb = tuple(x - n * y for x, y in zip(b, a))
                if nb in records:
                    continue
                m = dot(bv, a)
                nbv = tuple(x - m * y for x, y in zip(bv, av))
                nsc = tuple(x - n * (1 if j == i else 0) for j, x in enumerate(sc))
                records[nb] = (nbv, l2, nsc)
                work.append(nb)
        pos = []
        for b, (bv, l2, sc) in records.items():
            if all(x >= 0 for x in sc) and any(sc):
                pos.append((sum(sc), sc, b))
        pos.sort()
        self.positive_roots: Tuple[Weight, ...] = tuple(b for _, _, b in pos)
        self.roots: Tuple[Weight, ...] = self.positive_roots + tuple(
            vneg(b) for b in self.positive_roots
        )
        self._records = records
        self.root_set: Set[Weight] = set(records)
        if len(records) != 2 * len(self.positive_roots):
            raise AssertionError("root system not symmetric")

    # --- lookups ---------------------------------------------------------

    def is_root(self, a: Sequence[int]) -> bool:
        return tuple(a) in self.root_set

    def coroot(self, a: Sequence[int]) -> Covector:
        try:
            return self._records[tuple(a)][0]
        except KeyError:
            raise NotARoot(f"{tuple(a)} is not a root of {self.cartan_label}")

    def len2(self, a: Sequence[int]) -> int:
        return self._records[tuple(a)][1]

    def simple_coordinates(self, a: Sequence[int]) -> Weight:
        """Coordinates of a root over the simple basis."""
        return self._records[tuple(a)][2]

    def root_from_simple_coordinates(self, sc: Sequence[int]) -> Weight:
        v = (0,) * self.rank
        for c, a in zip(sc, self.simple_roots):
            if c:
                v = tuple(x + c * y for x, y in zip(v, a))
        if v not in self.root_set:
            raise NotARoot(f"simple coordinates {tuple(sc)} do not name a root")
        return v

    # --- scope protocol (shared with SubgroupDatum) ----------------------

    @property
    def datum(self) -> "RootDatum":
        return self

    @property
    def basis(self) -> Tuple[Weight, ...]:
        return self.simple_roots

    @property
    def basis_coroots(self) -> Tuple[Covector, ...]:
        return self.simple_coroots

    @property
    def positive(self) -> Tuple[Weight, ...]:
        return self.positive_roots

    @property
    def rho_vec(self) -> RationalWeight:
        return self.rho

    def scope_key(self):
        return (self.key, "G")

    def fundamental_group_invariants(self) -> Tuple[int, ...]:
        """Invariant factors of pi_1 = Y(T)/Q(coroots); the free central rank
        appears as zeros.  Torsion-free iff no factor exceeds 1."""
        if not self.simple_coroots:
            return (0,) * self.rank
        d, _, _ = intlinalg.smith_normal_form(list(self.simple_coroots))
        n = self.rank
        m = len(self.simple_coroots)
        facs = [d[i][i] for i in range(min(m, n))]
        facs += [0] * (n - len(facs))
        return tuple(facs)

    def pi1_torsion_free(self) -> bool:
        return all(f <= 1 for f in self.fundamental_group_invariants())

    def __repr__(self):
        return f"RootDatum({self.cartan_label}, lattice={self.lattice_choice})"


def build_root_datum(label: str, lattice_choice="weight") -> RootDatum:
    """Construct a RootDatum for a product of simple series and central tori.

    `lattice_choice` is "weight", "root", or an explicit list of lattice
    generators (integer vectors in fundamental-weight coordinates) spanning
    an intermediate lattice between the root and weight lattices.
    """
    blocks = parse_label(label)
    rank = sum(n for _, n in blocks)
    if rank > RANK_CAP:
        raise RankCapExceeded(f"total rank {rank} exceeds cap {RANK_CAP}")
    order = 1
    for s, n in blocks:
        if s != "T":
            order *= _WEYL_ORDERS[s](n)
    if order > WEYL_ORDER_CAP:
        raise OrderCapExceeded(
            f"projected Weyl order {order} exceeds cap {WEYL_ORDER_CAP}"
        )

    # simple roots in fundamental-weight coordinates, block by block
    simple_cols: List[List[int]] = []
    simple_covs: List[List[int]] = []
    len2s: List[int] = []
    offset = 0
    for s, n in blocks:
        if s == "T":
            offset += n
            continue
        c = _cartan_matrix(s, n)
        d = _symmetrizer(c)
        for j in range(n):
            col = [0] * rank
            cov = [0] * rank
            for i in range(n):
                col[offset + i] = c[i][j]
            cov[offset + j] = 1
            simple_cols.append(col)
            simple_covs.append(cov)
            len2s.append(2 * d[j])
        offset += n

    # lattice basis matrix B (columns in fundamental-weight coordinates)
    if isinstance(lattice_choice, str):
        lc = lattice_choice.lower()
        if lc in ("weight", "spin", "sc"):
            basis_cols = [
                [1 if i == j else 0 for i in range(rank)] for j in range(rank)
            ]
            choice_name = "weight"
        elif lc == "root":
            if len(simple_cols) == rank:
                basis_cols = [list(c) for c in simple_cols]
            else:
                # pad torus coordinates with unit vectors
                basis_cols = [list(c) for c in simple_cols]
                seen = {next(i for i, x in enumerate(cv) if x) for cv in simple_covs}
                for i in range(rank):
                    if i not in seen:
                        basis_cols.append([1 if k == i else 0 for k in range(rank)])
            choice_name = "root"
        else:
            raise LatticeNotIntermediate(f"unknown lattice choice {lattice_choice!r}")
    else:
        basis_cols = [list(map(int, v)) for v in lattice_choice]
        choice_name = "custom"
    if len(basis_cols) != rank:
        raise LatticeNotIntermediate("lattice basis must have full rank")
    b_mat = intlinalg.transpose(basis_cols)  # rows = weight coordinates

    # rebase: roots must stay integral (root lattice inside the new lattice)
    new_simples: List[Weight] = []
    for col in simple_cols:
        sol = intlinalg.solve_integer(b_mat, col)
        if sol is None:
            raise LatticeNotIntermediate(
                "chosen lattice does not contain the root lattice"
            )
        new_simples.append(tuple(sol))
    bt = intlinalg.transpose(b_mat)
    new_covs = [intlinalg.matvec(bt, cov) for cov in simple_covs]

    datum = RootDatum(
        canonical_label(blocks), rank, new_simples, new_covs, len2s, choice_name
    )
    count = sum(_ROOT_COUNTS[s](n) for s, n in blocks if s != "T")
    if len(datum.roots) != count:
        raise AssertionError(
            f"generated {len(datum.roots)} roots for {label}, expected {count}"
        )
    return datum


def canonical_label(blocks: List[Tuple[str, int]]) -> str:
    return "x".join(f"{s}{n}" for s, n in blocks)


class SubgroupDatum:
    """A closed maximal-rank subsystem of a RootDatum, with the induced
    positive system and the complement weights R_M^+."""

    def __init__(self, parent: RootDatum, roots: Iterable[Weight]):
        self.parent = parent
        root_set = {tuple(a) for a in roots}
        self.roots_h = frozenset(root_set)
        self.positive_h = tuple(a for a in parent.positive_roots if a in root_set)
        self.complement_positive = tuple(
            a for a in parent.positive_roots if a not in root_set
        )
        if len(root_set) != 2 * len(self.positive_h):
            raise AssertionError("subsystem is not symmetric")
        # basis = indecomposable positive elements
        basis = []
        pos_h = set(self.positive_h)
        for a in self.positive_h:
            if not any(vsub(a, b) in pos_h for b in self.positive_h if b != a):
                basis.append(a)
        self.basis_h = tuple(basis)
        self.basis_h_coroots = tuple(parent.coroot(a) for a in self.basis_h)
        self.rho_h = RationalWeight(
            [sum(c) for c in zip(*self.positive_h)] if self.positive_h else [0] * parent.rank,
            2,
        )
        self.rho_m = parent.rho - self.rho_h
        self.is_levi = self._levi_test()
        self.key = (parent.key, tuple(sorted(self.positive_h)))
        self._weyl_order: Optional[int] = None

    def _levi_test(self) -> bool:
        """H is a Levi (centralizer of a subtorus) iff its roots are exactly
        the ambient roots inside their rational span."""
        if not self.positive_h:
            return True
        rows = [list(a) for a in self.basis_h]
        for g in self.parent.positive_roots:
            if g in set(self.positive_h):
                continue
            if _in_rational_span(rows, g):
                return False
        return True

    # --- scope protocol ---------------------------------------------------

    @property
    def datum(self) -> RootDatum:
        return self.parent

    @property
    def basis(self) -> Tuple[Weight, ...]:
        return self.basis_h

    @property
    def basis_coroots(self) -> Tuple[Covector, ...]:
        return self.basis_h_coroots

    @property
    def positive(self) -> Tuple[Weight, ...]:
        return self.positive_h

    @property
    def rho_vec(self) -> RationalWeight:
        return self.rho_h

    def scope_key(self):
        return (self.key, "H")

    def __repr__(self):
        return (
            f"SubgroupDatum(|R_H|={2 * len(self.positive_h)}, "
            f"|R_M+|={len(self.complement_positive)}, levi={self.is_levi})"
        )


def _in_rational_span(rows: List[List[int]], v: Weight) -> bool:
    """Whether v lies in the rational span of the given vectors."""
    mat = [list(map(Fraction, r)) for r in rows]
    vec = list(map(Fraction, v))
    n = len(vec)
    basis: List[List[Fraction]] = []
    for r in mat:
        r = r[:]
        for b in basis:
            lead = next((j for j in range(n) if b[j]), None)
            if lead is not None and r[lead]:
                f = r[lead] / b[lead]
                r = [x - f * y for x, y in zip(r, b)]
        if any(r):
            basis.append(r)
    w = vec[:]
    for b in basis:
        lead = next(j for j in range(n) if b[j])
        if w[lead]:
            f = w[lead] / b[lead]
            w = [x - f * y for x, y in zip(w, b)]
    return not any(w)


def subgroup_from_roots(datum: RootDatum, generators: Iterable[Weight]) -> SubgroupDatum:
    """The smallest symmetric, additively and reflection closed subsystem
    containing the generators (Borel-de Siebenthal subgroups included)."""
    gens = [tuple(a) for a in generators]
    for a in gens:
        if not datum.is_root(a):
            raise NotASubsetOfRoots(f"{a} is not a root of the ambient datum")
    s: Set[Weight] = set()
    for a in gens:
        s.add(a)
        s.add(vneg(a))
    changed = True
    while changed:
        changed = False
        current = list(s)
        for a in current:
            av = datum.coroot(a)
            for b in current:
                r = vsub(b, tuple(dot(av, b) * x for x in a))
                if r not in s:
                    s.add(r)
                    changed = True
                c = vadd(a, b)
                if c in datum.root_set and c not in s:
                    s.add(c)
                    s.add(vneg(c))
                    changed = True
    return SubgroupDatum(datum, s)


def rho(scope, which: str = "G") -> RationalWeight:
    """Half-sum of positive roots for G, H or the complement M."""
    which = which.upper()
    if isinstance(scope, RootDatum):
        if which != "G":
            raise ValueError("a RootDatum only has a rho_G")
        return scope.rho
    if which == "G":
        return scope.parent.rho
    if which == "H":
        return scope.rho_h
    if which == "M":
        return scope.rho_m
    raise ValueError(f"unknown rho scope {which!r}")


def pair(datum: RootDatum, lam, alpha: Weight) -> Fraction:
    """Exact coroot pairing <lambda, alpha^vee>."""
    cv = datum.coroot(alpha)
    if isinstance(lam, RationalWeight):
        return lam.pair(cv)
    return Fraction(dot(cv, lam))


def subgroup_character_lattice(sub: SubgroupDatum) -> Lattice:
    """X(H) = weights of T annihilating every coroot of H."""
    rank = sub.parent.rank
    if not sub.basis_h:
        return Lattice.full(rank)
    rows = [list(cv) for cv in sub.basis_h_coroots]
    cols = intlinalg.kernel_basis(rows)
    return Lattice.from_columns(rank, cols)


def solve_in_lattice(
    target: RationalWeight, gens: Lattice, modulus: Lattice
) -> Optional[Weight]:
    """Some x in `gens` with x = target modulo `modulus`, or None.

    The decision is exact (Smith normal form); a non-integral target has no
    solution since both lattices are integral.
    """
    if gens.ambient_rank != modulus.ambient_rank:
        raise DimensionMismatch("lattices live in different ambient spaces")
    if target.rank != gens.ambient_rank:
        raise DimensionMismatch("target has wrong length")
    if not target.is_integral():
        return None
    t = target.ints()
    if not gens.columns:
        return (0,) * gens.ambient_rank if modulus.contains(t) else None
    ka = len(gens.columns)
    stacked = tuple(
        tuple(gens.columns[j][i] for j in range(ka))
        + tuple(col[i] for col in modulus.columns)
        for i in range(gens.ambient_rank)
    )
    sol = intlinalg.solve_integer(stacked, t)
    if sol is None:
        return None
    x = [0] * gens.ambient_rank
    for j in range(ka):
        for i in range(gens.ambient_rank):
            x[i] += sol[j] * gens.columns[j][i]
    return tuple(x)
