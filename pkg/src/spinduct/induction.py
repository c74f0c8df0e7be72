"""Induction maps for a maximal-rank pair (G, H): the chamber-collection
operators, twisted Spin^c induction and its classical specializations,
Borel-Weil-Bott closed form, branching, the duality pairing, and the
fixed-point numeric oracle."""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import kernels
from .charring import (
    GroupElement,
    TorusElement,
    TwistClass,
    euler_class,
    irreducible_restriction,
    is_scope_invariant,
    multiply,
    numeric_evaluate,
    weyl_denominator,
)
from .errors import (
    BadTwist,
    BadTwistPairing,
    DatumMismatch,
    DegenerateSample,
    InexactDivision,
    InternalInconsistency,
    NotCSpinorial,
    NotHDominant,
    NotLevi,
    NotSpin,
    NotWHInvariant,
    ShiftNotStable,
    WrongBasisSize,
)
from .rootdata import (
    RationalWeight,
    RootDatum,
    SubgroupDatum,
    Weight,
    dot,
    vneg,
)
from .weyl import (
    SINGULAR,
    CosetReps,
    WeylElement,
    coset_representatives,
    generate_weyl,
    reflection_matrix,
    shift_adjustment,
    to_dominant_chamber,
)

Scope = Union[RootDatum, SubgroupDatum]


class InductionProblem:
    """The standing data of a pair (G, H) with a G-side twist sigma:
    Weyl group, minimal coset representatives, denominators and the Euler
    class, all precomputed once and shared."""

    def __init__(self, datum: RootDatum, sub: SubgroupDatum, sigma: Optional[TwistClass] = None):
        if sub.parent is not datum and sub.parent.key != datum.key:
            raise DatumMismatch("subgroup belongs to a different datum")
        self.datum = datum
        self.sub = sub
        self.sigma = sigma or TwistClass.zero(datum.rank)
        self.weyl = generate_weyl(datum)
        self.weyl_h = generate_weyl(sub)
        self.reps: CosetReps = coset_representatives(self.weyl, sub)
        self.d_g = weyl_denominator(datum)
        self.d_h = weyl_denominator(sub)
        self.euler = euler_class(sub)
        self.rho_m = sub.rho_m

    @property
    def w_h_order(self) -> int:
        return self.weyl_h.order

    def twist_rho(self, which: str) -> TwistClass:
        if which == "G":
            return TwistClass.of(self.datum.rho)
        if which == "H":
            return TwistClass.of(self.sub.rho_h)
        if which == "M":
            return TwistClass.of(self.sub.rho_m)
        raise ValueError(which)

    def __repr__(self):
        return (
            f"InductionProblem({self.datum.cartan_label}, |W^H|={len(self.reps.reps)})"
        )


_PROBLEM_CACHE: Dict[object, InductionProblem] = {}


def make_problem(datum: RootDatum, sub: SubgroupDatum, sigma: Optional[TwistClass] = None) -> InductionProblem:
    key = (datum.key, sub.key, sigma.shift if sigma else None)
    p = _PROBLEM_CACHE.get(key)
    if p is None:
        p = InductionProblem(datum, sub, sigma)
        _PROBLEM_CACHE[key] = p
    return p


# --- chamber collection (the partial / boundary operators) -----------------


def _check_partial_twist(scope: Scope, a: TorusElement) -> None:
    """The shifted-module typing: the shift must be stable under the scope
    group and pair integrally with scope coroots."""
    for root, cv in zip(scope.basis, scope.basis_coroots):
        m = reflection_matrix(a.datum.rank, root, cv)
        try:
            shift_adjustment(m, a.shift)
        except ShiftNotStable as exc:
            raise BadTwist(str(exc))
        if a.shift.pair(cv).denominator != 1:
            raise BadTwist(
                "shift pairs non-integrally with a scope coroot; "
                "the module has no chamber structure"
            )


def collect_to_chamber(scope: Scope, a: TorusElement) -> GroupElement:
    """Per-monomial Borel-Weil-Bott reduction: drop singular monomials and
    send regular e^mu to det(w) times the class of w(mu) - rho.

    This is the operator a -> J(a)/d in the highest-weight basis."""
    _check_partial_twist(scope, a)
    rho = scope.rho_vec
    den = _lcm(a.shift.den, rho.den)
    shift_scaled = tuple(v * (den // a.shift.den) for v in a.shift.nums)
    scaled = {
        tuple(sv + den * o for sv, o in zip(shift_scaled, k)): c
        for k, c in a.coeffs.items()
    }
    collected = kernels.dominant_collect(
        scaled, scope.basis, scope.basis_coroots, 4 * max(1, len(scope.positive)) ** 2
    )
    rho_scaled = tuple(v * (den // rho.den) for v in rho.nums)
    out_shift = (a.shift - rho).residue_mod_one()
    out_scaled = tuple(v * (den // out_shift.den) for v in out_shift.nums)
    coeffs: Dict[Weight, int] = {}
    for x, c in collected.items():
        off = []
        for u, rv, sv in zip(x, rho_scaled, out_scaled):
            q, r = divmod(u - rv - sv, den)
            if r:
                raise AssertionError("collected weight left its coset")
            off.append(q)
        coeffs[tuple(off)] = c
    return GroupElement(scope, out_shift, coeffs)


def partial(problem: InductionProblem, scope: str, a: TorusElement) -> GroupElement:
    """The boundary operator: restriction-then-induction through T,
    computed monomial by monomial.  `scope` is "G" or "H"."""
    sc = scope.upper()
    if sc == "G":
        return collect_to_chamber(problem.datum, a)
    if sc == "H":
        return collect_to_chamber(problem.sub, a)
    raise ValueError(f"partial scope must be G or H, got {scope!r}")


def _lcm(a: int, b: int) -> int:
    g = a
    x = b
    while x:
        g, x = x, g % x
    return a * b // g


# --- twisted Spin^c induction ------------------------------------------------


def induce_between(big: Scope, small: Scope, a: TorusElement) -> GroupElement:
    """Twisted Spin^c induction from the small scope to the big one,
    computed as chamber collection of d_small * a divided by |W_small|.

    The exactness of the final division is asserted; a failure indicates
    inconsistent input (wrong twist, or not invariant)."""
    d_small = weyl_denominator(small)
    b = multiply(d_small, a)
    ge = collect_to_chamber(big, b)
    order = generate_weyl(small).order
    if order == 1:
        return ge
    coeffs = {}
    for k, c in ge.coeffs.items():
        q, r = divmod(c, order)
        if r:
            raise InexactDivision(
                "collected multiplicities are not divisible by |W_H|"
            )
        coeffs[k] = q
    return GroupElement(big, ge.shift, coeffs)


def induce_twisted_spinc(
    problem: InductionProblem, a: TorusElement, check_invariant: bool = True
) -> GroupElement:
    """i_*: R(H, sigma + omega_M) -> R(G, sigma)."""
    expected = problem.sigma + problem.twist_rho("M")
    if TwistClass(a.shift) != expected:
        raise BadTwist(
            f"input twist {a.shift.nums}/{a.shift.den} is not sigma + [rho_M]"
        )
    if check_invariant and not is_scope_invariant(a, problem.sub):
        raise NotWHInvariant("input is not W_H-invariant")
    return induce_between(problem.datum, problem.sub, a)


def induce_classical(
    problem: InductionProblem,
    kind: str,
    a: TorusElement,
    gamma: Optional[Weight] = None,
) -> GroupElement:
    """Holomorphic, Spin, or Spin^c(gamma) induction of an untwisted class.

    Each case multiplies by the generator of the shifted module singled
    out by the geometry and applies twisted induction."""
    if not TwistClass(a.shift).is_zero():
        raise BadTwist("classical induction expects an untwisted input")
    kind = kind.lower()
    datum = problem.datum
    if kind == "holomorphic":
        if not problem.sub.is_levi:
            raise NotLevi("holomorphic induction needs a Levi subgroup")
        m = TorusElement.monomial(datum, problem.rho_m)
    elif kind == "spin":
        if not problem.rho_m.is_integral():
            raise NotSpin("rho_M is not a character; no invariant Spin structure")
        m = TorusElement(
            datum, problem.rho_m.residue_mod_one(), {(0,) * datum.rank: 1}
        )
    elif kind == "spinc":
        if gamma is None:
            raise NotCSpinorial("spinc induction needs a character gamma")
        half = RationalWeight(gamma, 2)
        nu = half - problem.rho_m
        if not nu.is_integral():
            raise NotCSpinorial("gamma is not c-spinorial: nu(gamma) not in X(T)")
        m = TorusElement.monomial(datum, half)
    else:
        raise ValueError(f"unknown classical induction kind {kind!r}")
    return induce_twisted_spinc(problem, multiply(m, a), check_invariant=False)


def bwb_irreducible(problem: InductionProblem, mu: RationalWeight) -> GroupElement:
    """Closed form of i_* on a single irreducible with highest weight mu:
    zero when mu + rho_H is singular, otherwise det(w) times the class of
    w(mu + rho_H) - rho_G."""
    sub = problem.sub
    for cv in sub.basis_h_coroots:
        p = mu.pair(cv)
        if p.denominator != 1 or p < 0:
            raise NotHDominant(f"{mu} is not H-dominant")
    expected = problem.sigma + problem.twist_rho("M")
    if TwistClass.of(mu) != expected:
        raise BadTwist("mu is not in the sigma + [rho_M] coset")
    lam = mu + sub.rho_h
    res = to_dominant_chamber(problem.datum, lam)
    out_twist = TwistClass.of(lam - problem.datum.rho)
    if res == SINGULAR:
        return GroupElement.zero(problem.datum, out_twist)
    hw = res.image - problem.datum.rho
    return GroupElement.from_weights(problem.datum, {hw: res.w.det})


# --- branching ---------------------------------------------------------------


def extract_highest_weights(
    scope: Scope, t: TorusElement, allow_negative: bool = True
) -> GroupElement:
    """Decompose a scope-invariant torus element into highest-weight
    classes by repeatedly peeling the maximal dominant weight.

    Virtual elements extract with signed coefficients; pass
    allow_negative=False when the input is an honest module, where a
    negative intermediate proves an inconsistency."""
    datum = scope.datum
    hcov = [0] * datum.rank
    for a in scope.positive:
        cv = datum.coroot(a)
        for j in range(datum.rank):
            hcov[j] += cv[j]
    remaining = dict(t.coeffs)
    out: Dict[Weight, int] = {}
    prev = None
    while remaining:
        key = max(remaining, key=lambda k: (dot(hcov, k), k))
        # every subtraction only introduces strictly lower monomials, so the
        # peeled key must strictly decrease; anything else is a bug
        if prev is not None and (dot(hcov, key), key) >= prev:
            raise InternalInconsistency("extraction failed to make progress")
        prev = (dot(hcov, key), key)
        c = remaining[key]
        mu = t.weight_of(key)
        for cv in scope.basis_coroots:
            if mu.pair(cv) < 0:
                raise InternalInconsistency(
                    "maximal weight is not dominant; input not invariant"
                )
        if c < 0 and not allow_negative:
            raise InternalInconsistency("negative extraction multiplicity")
        ch = irreducible_restriction(scope, mu)
        for k, cc in ch.coeffs.items():
            v = remaining.get(k, 0) - c * cc
            if v:
                remaining[k] = v
            elif k in remaining:
                del remaining[k]
        out[key] = out.get(key, 0) + c
    return GroupElement(scope, t.shift, out)


def branch(problem: InductionProblem, a: GroupElement) -> GroupElement:
    """Restriction R(G, sigma) -> R(H, sigma): expand over T and extract
    H-highest weights; multiplicities are exact.  Branching an honest
    module (all coefficients positive) must never produce a negative
    intermediate, and that is enforced."""
    if a.scope is not problem.datum and a.scope.scope_key() != problem.datum.scope_key():
        raise DatumMismatch("branch expects a G-side element")
    honest = all(c > 0 for c in a.coeffs.values())
    return extract_highest_weights(problem.sub, a.to_torus(), allow_negative=not honest)


def group_multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    """Product in R(G, .): expand both factors over T and re-extract."""
    if x.scope.scope_key() != y.scope.scope_key():
        raise DatumMismatch("product of elements over different scopes")
    return extract_highest_weights(x.scope, multiply(x.to_torus(), y.to_torus()))


# --- exact Laurent division ---------------------------------------------------


def divide_exact(a: TorusElement, b: TorusElement) -> TorusElement:
    """Exact division in the shifted Laurent modules; raises
    InexactDivision when b does not divide a."""
    if b.is_zero():
        raise InexactDivision("division by zero")
    if a.is_zero():
        return TorusElement.zero(a.datum, TwistClass(a.shift) - TwistClass(b.shift))
    den = _lcm(a.shift.den, b.shift.den)

    def scaled(t: TorusElement) -> Dict[Weight, int]:
        sv = tuple(v * (den // t.shift.den) for v in t.shift.nums)
        return {
            tuple(s + den * o for s, o in zip(sv, k)): c for k, c in t.coeffs.items()
        }

    ra = scaled(a)
    rb = scaled(b)
    ltb = max(rb)
    cb = rb[ltb]
    q: Dict[Weight, int] = {}
    steps = 0
    # quotients can be much larger than both operands, so this is a plain
    # resource bound; an inexact division descends forever otherwise
    cap = 2_000_000
    while ra:
        steps += 1
        if steps > cap:
            raise InexactDivision("division did not terminate; not divisible")
        lta = max(ra)
        ca = ra[lta]
        if ca % cb:
            raise InexactDivision("leading coefficient does not divide")
        qc = ca // cb
        qk = tuple(x - y for x, y in zip(lta, ltb))
        q[qk] = q.get(qk, 0) + qc
        for k, c in rb.items():
            nk = tuple(x + y for x, y in zip(qk, k))
            v = ra.get(nk, 0) - qc * c
            if v:
                ra[nk] = v
            elif nk in ra:
                del ra[nk]
    out_twist = TwistClass(a.shift) - TwistClass(b.shift)
    out_scaled = tuple(v * (den // out_twist.shift.den) for v in out_twist.shift.nums)
    coeffs: Dict[Weight, int] = {}
    for k, c in q.items():
        off = []
        for u, sv in zip(k, out_scaled):
            qq, rr = divmod(u - sv, den)
            if rr:
                raise InexactDivision("quotient left the twist coset")
            off.append(qq)
        coeffs[tuple(off)] = c
    return TorusElement(a.datum, out_twist.shift, coeffs)


# --- duality pairing -----------------------------------------------------------


@dataclass
class PairingReport:
    basis_a: Tuple[TorusElement, ...]
    basis_b: Tuple[TorusElement, ...]
    gram: Tuple[Tuple[GroupElement, ...], ...]
    determinant_character: TorusElement
    is_unit: bool


def pairing_report(
    problem: InductionProblem,
    tau: TwistClass,
    basis_a: Sequence[TorusElement],
    basis_b: Sequence[TorusElement],
) -> PairingReport:
    """Gram matrix of the induction pairing P(a, b) = i_*(ab) and the
    unit test for its determinant expanded over T."""
    n = len(problem.reps.reps)
    if len(basis_a) != n or len(basis_b) != n:
        raise WrongBasisSize(f"bases must have size |W^H| = {n}")
    if not problem.sigma.is_zero():
        raise BadTwistPairing("the pairing is defined for sigma = 0")
    omega = problem.twist_rho("M")
    for x in basis_a:
        if TwistClass(x.shift) != tau:
            raise BadTwistPairing("a-side basis has wrong twist")
    for y in basis_b:
        if TwistClass(y.shift) != omega - tau:
            raise BadTwistPairing("b-side basis has wrong twist")
    for x in list(basis_a) + list(basis_b):
        if not is_scope_invariant(x, problem.sub):
            raise NotWHInvariant("pairing basis elements must be W_H-invariant")
    gram = tuple(
        tuple(
            induce_twisted_spinc(problem, multiply(x, y), check_invariant=False)
            for y in basis_b
        )
        for x in basis_a
    )
    tor = [[entry.to_torus() for entry in row] for row in gram]
    det = _torus_determinant(problem.datum, tor)
    is_unit = _is_unit_character(problem.datum, det)
    return PairingReport(tuple(basis_a), tuple(basis_b), gram, det, is_unit)


def _torus_determinant(datum: RootDatum, m: List[List[TorusElement]]) -> TorusElement:
    """Determinant of a matrix of torus elements by memoized Laplace
    expansion along rows."""
    n = len(m)
    if n == 0:
        return TorusElement.unit(datum)
    memo: Dict[Tuple[int, ...], TorusElement] = {}

    def minor(cols: Tuple[int, ...]) -> TorusElement:
        row = n - len(cols)
        if not cols:
            return TorusElement.unit(datum)
        got = memo.get(cols)
        if got is not None:
            return got
        acc: Optional[TorusElement] = None
        for idx, col in enumerate(cols):
            sub = minor(tuple(c for c in cols if c != col))
            term = multiply(m[row][col], sub)
            if idx % 2:
                term = term.scale(-1)
            acc = term if acc is None else acc + term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def _is_unit_character(datum: RootDatum, det: TorusElement) -> bool:
    """Units of R(G) restricted to T: plus or minus a single monomial whose
    exponent is fixed by the whole Weyl group."""
    if len(det.coeffs) != 1:
        return False
    (key, c), = det.coeffs.items()
    if c not in (1, -1):
        return False
    mu = det.weight_of(key)
    for e in generate_weyl(datum).generators:
        if e.apply_rational(mu) != mu:
            return False
    return True


# --- Lefschetz fixed-point oracle ----------------------------------------------


@dataclass
class LefschetzReport:
    trials: int
    max_rel_error: float
    samples: Tuple[Tuple[complex, complex], ...] = field(default_factory=tuple)


def lefschetz_check(
    problem: InductionProblem,
    euler: TorusElement,
    a: TorusElement,
    trials: int = 20,
    seed: int = 0,
) -> LefschetzReport:
    """Numerically compare the symbolic induction against the fixed-point
    sum over W^H at random torus points.

    The symbolic side factors the operator's Euler class through the Dirac
    Euler class; the numeric side divides by the tangent-weight product and
    sums over the coset representatives."""
    sub = problem.sub
    datum = problem.datum
    a_d = divide_exact(euler, problem.euler)
    payload = multiply(a_d, a)
    ind = induce_twisted_spinc(problem, payload, check_invariant=False)
    lhs_torus = ind.to_torus()

    # the fixed-point numerator e(D) a = e(Dirac) (a_D a); the Dirac factor
    # evaluates through its product form, which stays stable near walls
    rho_f = [n / sub.rho_m.den for n in sub.rho_m.nums]
    comp = sub.complement_positive

    def dirac_eval(ang: Sequence[float]) -> complex:
        z = cmath.exp(-2j * cmath.pi * sum(x * t for x, t in zip(rho_f, ang)))
        for alpha in comp:
            z *= 1 - cmath.exp(
                2j * cmath.pi * sum(x * t for x, t in zip(alpha, ang))
            )
        return z

    r_m = list(sub.complement_positive) + [vneg(x) for x in sub.complement_positive]
    denom_factors = r_m
    rng = random.Random(seed)
    rank = datum.rank
    samples = []
    max_err = 0.0
    # wall margin: keeping every |1 - e^alpha| above this bounds the
    # cancellation magnification so the 1e-8 tolerance holds at rank 4
    margin = 5e-2
    for _ in range(trials):
        for attempt in range(256):
            angles = [rng.random() for _ in range(rank)]
            ok = True
            for e in problem.reps.reps:
                ang_w = _transform_angles(e, angles)
                for alpha in denom_factors:
                    z = 1 - cmath.exp(
                        2j * cmath.pi * sum(x * t for x, t in zip(alpha, ang_w))
                    )
                    if abs(z) < margin:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                break
        else:
            raise DegenerateSample("could not sample away from singular denominators")
        lhs = numeric_evaluate(lhs_torus, angles)
        rhs = 0j
        for e in problem.reps.reps:
            ang_w = _transform_angles(e, angles)
            num = dirac_eval(ang_w) * numeric_evaluate(payload, ang_w)
            den = 1 + 0j
            for alpha in denom_factors:
                den *= 1 - cmath.exp(
                    2j * cmath.pi * sum(x * t for x, t in zip(alpha, ang_w))
                )
            rhs += num / den
        err = abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
        max_err = max(max_err, err)
        samples.append((lhs, rhs))
    return LefschetzReport(trials, max_err, tuple(samples))


def _transform_angles(e: WeylElement, angles: Sequence[float]) -> List[float]:
    """(w f)(t) = f(w^{-1} t): evaluating w(e^lambda) at angles theta equals
    evaluating e^lambda at M^T theta."""
    m = e.matrix
    n = len(angles)
    return [sum(m[i][j] * angles[i] for i in range(n)) for j in range(n)]
