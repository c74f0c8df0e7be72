"""Arithmetic in R(T), in shifted modules Z[delta + X(T)], and in the
highest-weight picture of R(G) and R(H).

A twist is stored as the canonical residue of its rational shift modulo
X(T); elements of a shifted module keep integer offsets from that residue.
Coefficients are exact integers throughout; the only floating point lives
in numeric_evaluate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import kernels
from .errors import (
    DatumMismatch,
    NotAntiInvariant,
    NotDominant,
)
from .rootdata import (
    RationalWeight,
    RootDatum,
    SubgroupDatum,
    Weight,
    dot,
    vadd,
    vneg,
)
from .weyl import (
    generate_weyl,
    reflection_matrix,
    shift_adjustment,
)

Scope = Union[RootDatum, SubgroupDatum]


@dataclass(frozen=True)
class TwistClass:
    """A central-extension class, represented by its torus level shift
    delta modulo X(T) (canonical residue, each coordinate in [0,1))."""

    shift: RationalWeight

    @classmethod
    def of(cls, delta: RationalWeight) -> "TwistClass":
        return cls(delta.residue_mod_one())

    @classmethod
    def zero(cls, rank: int) -> "TwistClass":
        return cls(RationalWeight.zero(rank))

    def __add__(self, other: "TwistClass") -> "TwistClass":
        return TwistClass.of(self.shift + other.shift)

    def __sub__(self, other: "TwistClass") -> "TwistClass":
        return TwistClass.of(self.shift - other.shift)

    def __neg__(self) -> "TwistClass":
        return TwistClass.of(-self.shift)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.shift.nums)


class TorusElement:
    """Finitely supported integer combination of e^(shift + offset) with
    integer offsets; models elements of R(T, tau) = Z[delta + X(T)]."""

    __slots__ = ("datum", "shift", "coeffs")

    def __init__(self, datum: RootDatum, shift: RationalWeight, coeffs: Dict[Weight, int]):
        self.datum = datum
        self.shift = shift.residue_mod_one()
        if self.shift != shift:
            # re-express offsets against the canonical residue
            diff = shift - self.shift
            t = diff.ints()
            coeffs = {vadd(k, t): c for k, c in coeffs.items()}
        self.coeffs = {k: c for k, c in coeffs.items() if c}

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, datum: RootDatum, twist: Optional[TwistClass] = None) -> "TorusElement":
        shift = twist.shift if twist else RationalWeight.zero(datum.rank)
        return cls(datum, shift, {})

    @classmethod
    def unit(cls, datum: RootDatum) -> "TorusElement":
        return cls(datum, RationalWeight.zero(datum.rank), {(0,) * datum.rank: 1})

    @classmethod
    def monomial(cls, datum: RootDatum, weight: RationalWeight, coeff: int = 1) -> "TorusElement":
        shift = weight.residue_mod_one()
        offset = (weight - shift).ints()
        return cls(datum, shift, {offset: coeff})

    def replace_coeffs(self, coeffs: Dict[Weight, int]) -> "TorusElement":
        out = TorusElement.__new__(TorusElement)
        out.datum = self.datum
        out.shift = self.shift
        out.coeffs = {k: c for k, c in coeffs.items() if c}
        return out

    # --- views -------------------------------------------------------------

    @property
    def twist(self) -> TwistClass:
        return TwistClass(self.shift)

    def weight_of(self, key: Weight) -> RationalWeight:
        return self.shift + RationalWeight.from_ints(key)

    def terms(self) -> List[Tuple[RationalWeight, int]]:
        return [(self.weight_of(k), c) for k, c in sorted(self.coeffs.items())]

    def support_size(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TorusElement)
            and self.datum.key == other.datum.key
            and self.shift == other.shift
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        n = len(self.coeffs)
        return f"TorusElement({n} terms, twist={self.shift.nums}/{self.shift.den})"

    # --- module operations --------------------------------------------------

    def _check_compatible(self, other: "TorusElement") -> None:
        if self.datum.key != other.datum.key:
            raise DatumMismatch("elements live over different data")

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._check_compatible(other)
        if self.shift != other.shift:
            raise DatumMismatch("cannot add elements of different twists")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return self.replace_coeffs(out)

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + other.scale(-1)

    def __neg__(self) -> "TorusElement":
        return self.scale(-1)

    def scale(self, n: int) -> "TorusElement":
        if n == 0:
            return self.replace_coeffs({})
        return self.replace_coeffs({k: n * c for k, c in self.coeffs.items()})


def multiply(a: TorusElement, b: TorusElement) -> TorusElement:
    """Convolution product; twists add."""
    a._check_compatible(b)
    conv = kernels.convolve(a.coeffs, b.coeffs)
    total = a.shift + b.shift
    canon = total.residue_mod_one()
    t = (total - canon).ints()
    if any(t):
        conv = {vadd(k, t): c for k, c in conv.items()}
    return TorusElement(a.datum, canon, conv)


def dualize(a: TorusElement) -> TorusElement:
    """The duality map e^mu -> e^(-mu); negates the twist."""
    canon = (-a.shift).residue_mod_one()
    t = ((-a.shift) - canon).ints()
    coeffs = {vadd(vneg(k), t): c for k, c in a.coeffs.items()}
    return TorusElement(a.datum, canon, coeffs)


def translate(a: TorusElement, mu: RationalWeight) -> TorusElement:
    """Multiply by the monomial e^mu."""
    return multiply(a, TorusElement.monomial(a.datum, mu))


def is_scope_invariant(a: TorusElement, scope: Scope) -> bool:
    """Whether a is fixed by the scope's Weyl group."""
    rank = a.datum.rank
    for root, cv in zip(scope.basis, scope.basis_coroots):
        m = reflection_matrix(rank, root, cv)
        adj = shift_adjustment(m, a.shift)
        img = kernels.weyl_sum([m], [1], [adj], a.coeffs)
        if img != a.coeffs:
            return False
    return True


def is_scope_anti_invariant(a: TorusElement, scope: Scope) -> bool:
    rank = a.datum.rank
    for root, cv in zip(scope.basis, scope.basis_coroots):
        m = reflection_matrix(rank, root, cv)
        adj = shift_adjustment(m, a.shift)
        img = kernels.weyl_sum([m], [-1], [adj], a.coeffs)
        if img != a.coeffs:
            return False
    return True


# --- denominators and Euler classes ----------------------------------------


_DENOM_CACHE: Dict[object, TorusElement] = {}
_EULER_CACHE: Dict[object, TorusElement] = {}


def _product_over(datum: RootDatum, factors: Iterable[Dict[Weight, int]]) -> Dict[Weight, int]:
    acc = {(0,) * datum.rank: 1}
    for f in factors:
        acc = kernels.convolve(acc, f)
    return acc


def weyl_denominator(scope: Scope) -> TorusElement:
    """d = e^rho * prod over positive roots of (1 - e^(-alpha)).

    Anti-invariant under the scope's Weyl group; twist class [rho]."""
    key = scope.scope_key()
    out = _DENOM_CACHE.get(key)
    if out is None:
        datum = scope.datum
        zero = (0,) * datum.rank
        prod = _product_over(
            datum, ({zero: 1, vneg(a): -1} for a in scope.positive)
        )
        out = multiply(
            TorusElement(datum, RationalWeight.zero(datum.rank), prod),
            TorusElement.monomial(datum, scope.rho_vec),
        )
        _DENOM_CACHE[key] = out
    return out


def euler_class_from_complement(
    datum: RootDatum, complement_positive: Sequence[Weight], rho_m: RationalWeight
) -> TorusElement:
    """e^(-rho_M) * prod over R_M^+ of (1 - e^alpha): the torus restriction
    of the Euler class of the twisted Dirac operator, with the level shift
    normalized away."""
    zero = (0,) * datum.rank
    prod = _product_over(datum, ({zero: 1, a: -1} for a in complement_positive))
    return multiply(
        TorusElement(datum, RationalWeight.zero(datum.rank), prod),
        TorusElement.monomial(datum, -rho_m),
    )


def euler_class(sub: SubgroupDatum) -> TorusElement:
    """Euler class of the twisted Dirac operator of G/H, restricted to T."""
    key = sub.key
    out = _EULER_CACHE.get(key)
    if out is None:
        out = euler_class_from_complement(
            sub.parent, sub.complement_positive, sub.rho_m
        )
        _EULER_CACHE[key] = out
    return out


# --- highest-weight elements -------------------------------------------------


class GroupElement:
    """Virtual module in R(G, sigma) or R(H, tau), stored by highest weight.

    Offsets are relative to the canonical residue of the highest-weight
    lattice class; every supported weight is scope-dominant."""

    __slots__ = ("scope", "shift", "coeffs")

    def __init__(self, scope: Scope, shift: RationalWeight, coeffs: Dict[Weight, int]):
        self.scope = scope
        self.shift = shift.residue_mod_one()
        if self.shift != shift:
            t = (shift - self.shift).ints()
            coeffs = {vadd(k, t): c for k, c in coeffs.items()}
        self.coeffs = {k: c for k, c in coeffs.items() if c}

    @classmethod
    def zero(cls, scope: Scope, twist: Optional[TwistClass] = None) -> "GroupElement":
        rank = scope.datum.rank
        shift = twist.shift if twist else RationalWeight.zero(rank)
        return cls(scope, shift, {})

    @classmethod
    def from_weights(
        cls, scope: Scope, weights: Dict[RationalWeight, int]
    ) -> "GroupElement":
        items = list(weights.items())
        if not items:
            return cls.zero(scope)
        shift = items[0][0].residue_mod_one()
        coeffs: Dict[Weight, int] = {}
        for w, c in items:
            off = (w - shift).ints()
            coeffs[off] = coeffs.get(off, 0) + c
        return cls(scope, shift, coeffs)

    @property
    def twist(self) -> TwistClass:
        return TwistClass(self.shift)

    @property
    def datum(self) -> RootDatum:
        return self.scope.datum

    def weight_of(self, key: Weight) -> RationalWeight:
        return self.shift + RationalWeight.from_ints(key)

    def terms(self) -> List[Tuple[RationalWeight, int]]:
        return [(self.weight_of(k), c) for k, c in sorted(self.coeffs.items())]

    def is_zero(self) -> bool:
        return not self.coeffs

    def support_size(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.scope.scope_key() == other.scope.scope_key()
            and self.shift == other.shift
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"GroupElement({len(self.coeffs)} classes, twist={self.shift.nums}/{self.shift.den})"

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self.scope.scope_key() != other.scope.scope_key():
            raise DatumMismatch("group elements over different scopes")
        if self.shift != other.shift:
            raise DatumMismatch("cannot add group elements of different twists")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return GroupElement(self.scope, self.shift, out)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + other.scale(-1)

    def scale(self, n: int) -> "GroupElement":
        return GroupElement(
            self.scope, self.shift, {k: n * c for k, c in self.coeffs.items()}
        )

    def to_torus(self) -> TorusElement:
        """Restriction to T: expand every class through its full character."""
        datum = self.scope.datum
        out = TorusElement.zero(datum, TwistClass(self.shift))
        for k, c in sorted(self.coeffs.items()):
            ch = irreducible_restriction(self.scope, self.weight_of(k))
            out = out + ch.scale(c)
        return out

    def dimension(self) -> int:
        return dimension(self)


# --- Weyl dimension formula ---------------------------------------------------


def _weight_dimension(scope: Scope, lam: RationalWeight) -> int:
    datum = scope.datum
    rho = scope.rho_vec
    num = Fraction(1)
    lam_rho = lam + rho
    for a in scope.positive:
        cv = datum.coroot(a)
        num *= lam_rho.pair(cv) / rho.pair(cv)
    if num.denominator != 1 or num <= 0:
        raise NotDominant(f"dimension formula gave {num} for weight {lam}")
    return int(num)


def dimension(a: GroupElement) -> int:
    """Z-linear extension of the Weyl dimension formula (the forgetful
    augmentation at a point)."""
    total = 0
    for k, c in a.coeffs.items():
        total += c * _weight_dimension(a.scope, a.weight_of(k))
    return total


# --- characters of irreducibles (Freudenthal) ---------------------------------


_CHAR_CACHE: Dict[object, TorusElement] = {}


def _scope_pairings_ok(scope: Scope, lam: RationalWeight) -> None:
    for cv in scope.basis_coroots:
        p = lam.pair(cv)
        if p.denominator != 1:
            raise NotDominant(
                f"weight {lam} has non-integral pairing {p} with a scope coroot"
            )
        if p < 0:
            raise NotDominant(f"weight {lam} is not dominant for the scope")


def _dominant_rep_scaled(
    x: Sequence[int], basis: Sequence[Weight], coroots: Sequence[Weight]
) -> Weight:
    """Dominant representative of a scaled weight (walls allowed)."""
    y = list(x)
    while True:
        moved = False
        for a, cv in zip(basis, coroots):
            p = dot(cv, y)
            if p < 0:
                for j in range(len(y)):
                    y[j] -= p * a[j]
                moved = True
        if not moved:
            return tuple(y)


def irreducible_restriction(scope: Scope, lam: RationalWeight) -> TorusElement:
    """Full T-character of the irreducible with highest weight lam, by the
    Freudenthal multiplicity recursion; exact multiplicities.

    The result is Weyl-invariant for the scope and has coefficient 1 at
    lam.  Results are cached per (scope, weight).
    """
    key = (scope.scope_key(), lam)
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        return cached
    _scope_pairings_ok(scope, lam)
    datum = scope.datum
    rank = datum.rank
    basis = scope.basis
    coroots = scope.basis_coroots
    positive = scope.positive
    pos_coroots = [datum.coroot(a) for a in positive]
    rho = scope.rho_vec

    # everything below is scaled by a common denominator D; inner products
    # are doubled ((alpha,alpha) = len2) so all arithmetic stays integral
    den = lam.den * rho.den // _gcd(lam.den, rho.den)
    lam_scaled = tuple(v * (den // lam.den) for v in lam.nums)
    rho_scaled = tuple(v * (den // rho.den) for v in rho.nums)
    pos_len2 = [datum.len2(a) for a in positive]

    hvec = [0] * rank
    for cv, l2 in zip(pos_coroots, pos_len2):
        for j in range(rank):
            hvec[j] += l2 * cv[j]

    def height(x: Sequence[int]) -> int:
        return sum(h * v for h, v in zip(hvec, x))

    # enumerate dominant weights lam - sum(c_i * basis_i), c_i >= 0 ints;
    # the height budget prunes since height >= 0 on dominant weights
    dominants: Dict[Weight, Tuple[int, ...]] = {}
    nb = len(basis)
    basis_scaled = [tuple(den * v for v in a) for a in basis]
    bheights = [height(a) for a in basis_scaled]

    def rec(i: int, x: List[int], budget: int, cvec: Tuple[int, ...]) -> None:
        if i == nb:
            if all(dot(cv, x) >= 0 for cv in coroots):
                dominants[tuple(x)] = cvec
            return
        step = basis_scaled[i]
        h = bheights[i]
        c = 0
        cur = list(x)
        b = budget
        while b >= 0:
            rec(i + 1, cur, b, cvec + (c,))
            c += 1
            b -= h
            cur = [u - v for u, v in zip(cur, step)]

    if nb:
        rec(0, list(lam_scaled), height(lam_scaled), ())
    else:
        dominants[lam_scaled] = ()

    # Freudenthal recursion downward by height:
    #   ((lam+rho)^2 - (mu+rho)^2) m(mu) = 2 sum_{alpha>0, k>=1} (mu+k alpha, alpha) m(mu+k alpha)
    order = sorted(dominants, key=lambda x: (-height(x), x))
    mult: Dict[Weight, int] = {order[0]: 1}
    lam_rho = [a + b for a, b in zip(lam_scaled, rho_scaled)]
    for x in order[1:]:
        x_rho = [a + b for a, b in zip(x, rho_scaled)]
        s = [a + b for a, b in zip(lam_rho, x_rho)]  # D*(lam + mu + 2 rho)
        cvec = dominants[x]
        denom = 0
        for ci, a in zip(cvec, basis):
            if ci:
                denom += ci * datum.len2(a) * dot(datum.coroot(a), s)
        num = 0
        for a, cv, l2 in zip(positive, pos_coroots, pos_len2):
            a_scaled = tuple(den * v for v in a)
            k = 1
            while True:
                y = tuple(u + k * v for u, v in zip(x, a_scaled))
                rep = _dominant_rep_scaled(y, basis, coroots)
                m = mult.get(rep)
                if m is None:
                    break
                num += m * l2 * dot(cv, y)
                k += 1
        q, r = divmod(2 * num, denom)
        if r:
            raise AssertionError("Freudenthal produced a non-integer multiplicity")
        mult[x] = q

    expanded = kernels.orbit_expand(list(mult.items()), basis, coroots)

    shift = lam.residue_mod_one()
    shift_scaled = tuple(v * (den // shift.den) for v in shift.nums)
    coeffs: Dict[Weight, int] = {}
    for x, m in expanded.items():
        off = []
        for u, sv in zip(x, shift_scaled):
            q, r = divmod(u - sv, den)
            if r:
                raise AssertionError("weight left its coset during expansion")
            off.append(q)
        coeffs[tuple(off)] = m
    out = TorusElement(datum, shift, coeffs)
    _CHAR_CACHE[key] = out
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# --- anti-invariants ------------------------------------------------------------


def anti_invariant_decompose(
    a: TorusElement, scope: Optional[Scope] = None
) -> Dict[RationalWeight, int]:
    """Coefficients c_lam with a = sum of c_lam J(e^lam) over strictly
    dominant lam; exact and unique.  Raises NotAntiInvariant when a is not
    anti-invariant (or has the wrong twist class)."""
    scope = scope or a.datum
    rho = scope.rho_vec
    if a.shift != rho.residue_mod_one():
        raise NotAntiInvariant("twist class must be [rho] for decomposition")
    w_order = generate_weyl(scope).order if scope.basis else 1
    den = a.shift.den
    shift_scaled = a.shift.nums
    collected = kernels.dominant_collect(
        {
            tuple(sv + den * o for sv, o in zip(shift_scaled, k)): c
            for k, c in a.coeffs.items()
        },
        scope.basis,
        scope.basis_coroots,
        4 * max(1, len(scope.positive)) ** 2,
    )
    # in an anti-invariant element every monomial is regular and each orbit
    # contributes |W| monomials collecting to |W| * c_lambda
    result: Dict[RationalWeight, int] = {}
    key_coeffs: Dict[Weight, int] = {}
    for x, c in sorted(collected.items()):
        if c % w_order:
            raise NotAntiInvariant("orbit coefficients are inconsistent")
        clam = c // w_order
        if clam:
            lam = RationalWeight(x, den)
            result[lam] = clam
            key_coeffs[(lam - a.shift).ints()] = clam
    # complete verification: rebuild sum of c_lam J(e^lam) and compare
    grp = generate_weyl(scope)
    mats = [e.matrix for e in grp.elements]
    dets = [e.det for e in grp.elements]
    adjusts = [shift_adjustment(m, a.shift) for m in mats]
    rebuilt = kernels.weyl_sum(mats, dets, adjusts, key_coeffs)
    if rebuilt != a.coeffs:
        raise NotAntiInvariant("element is not in the span of J(e^lambda)")
    return result


# --- numeric evaluation -----------------------------------------------------------


def numeric_evaluate(a: TorusElement, angles: Sequence[float]) -> complex:
    """Evaluate at the torus point with the given angle coordinates:
    sum of coeff * exp(2 pi i <weight, angles>).

    Real and imaginary parts accumulate through compensated summation, so
    heavy cancellation (Euler classes near walls) stays near machine
    precision."""
    if len(angles) != a.datum.rank:
        raise DatumMismatch("angle vector has wrong length")
    base = [n / a.shift.den for n in a.shift.nums]
    reals: List[float] = []
    imags: List[float] = []
    two_pi = 2.0 * math.pi
    for k, c in a.coeffs.items():
        phase = 0.0
        for j, th in enumerate(angles):
            phase += (base[j] + k[j]) * th
        z = cmath.exp(1j * (two_pi * phase))
        reals.append(c * z.real)
        imags.append(c * z.imag)
    return complex(math.fsum(reals), math.fsum(imags))
