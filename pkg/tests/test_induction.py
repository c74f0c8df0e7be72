import random

import pytest

from spinduct.charring import (
    GroupElement,
    TorusElement,
    TwistClass,
    dimension,
    dualize,
    irreducible_restriction,
    multiply,
    weyl_denominator,
)
from spinduct.errors import (
    BadTwist,
    BadTwistPairing,
    InexactDivision,
    NotHDominant,
    NotLevi,
    NotSpin,
    NotWHInvariant,
    WrongBasisSize,
)
from spinduct.induction import (
    branch,
    bwb_irreducible,
    divide_exact,
    group_multiply,
    induce_between,
    induce_classical,
    induce_twisted_spinc,
    lefschetz_check,
    make_problem,
    pairing_report,
    partial,
)
from spinduct.rootdata import RationalWeight, build_root_datum, subgroup_from_roots
from spinduct.spinc import classify
from spinduct.zoo import (
    chain_triples,
    random_dominant_weight,
    random_torus_element,
    random_wh_invariant,
    steinberg_pairing_bases,
    zoo_problem,
    zoo_problems,
)


def trivial_class(p, n=1):
    return GroupElement.from_weights(
        p.datum, {RationalWeight.zero(p.datum.rank): n}
    )


def test_partial_basics():
    p = zoo_problem("A1", "t")
    a1 = p.datum
    one = trivial_class(p)
    assert partial(p, "G", TorusElement.monomial(a1, a1.rho)) == one
    assert partial(p, "G", TorusElement.monomial(a1, RationalWeight([0]))).is_zero()
    assert partial(p, "G", TorusElement.monomial(a1, RationalWeight([-1]))) == one.scale(-1)
    with pytest.raises(BadTwist):
        partial(p, "G", TorusElement(a1, RationalWeight([1], 3), {(0,): 1}))


def test_unit_induction_everywhere():
    for name, p in zoo_problems():
        spinor = irreducible_restriction(p.sub, p.rho_m)
        assert induce_twisted_spinc(p, spinor) == trivial_class(p), name


def test_euler_characteristic_everywhere():
    for name, p in zoo_problems():
        got = induce_twisted_spinc(p, dualize(p.euler))
        assert got == trivial_class(p, len(p.reps.reps)), name


def test_h_equals_g_identity():
    a2 = build_root_datum("A2")
    full = subgroup_from_roots(a2, list(a2.roots))
    p = make_problem(a2, full)
    ch = irreducible_restriction(a2, a2.rho)
    assert induce_twisted_spinc(p, ch).terms() == [(a2.rho, 1)]


def test_twist_and_invariance_errors():
    p = zoo_problem("A2", "levi1")
    with pytest.raises(BadTwist):
        induce_twisted_spinc(p, TorusElement.unit(p.datum))
    # right twist class but moved by the Levi reflection
    bad = TorusElement.monomial(p.datum, p.rho_m + RationalWeight([1, 0]))
    with pytest.raises(NotWHInvariant):
        induce_twisted_spinc(p, bad, check_invariant=True)


def test_bwb_agreement_random():
    rng = random.Random(17)
    for name, p in zoo_problems():
        twist = TwistClass((p.sigma + p.twist_rho("M")).shift)
        for _ in range(15):
            mu = random_dominant_weight(p.sub, rng, twist=twist)
            lhs = bwb_irreducible(p, mu)
            rhs = induce_twisted_spinc(p, irreducible_restriction(p.sub, mu))
            assert lhs == rhs, (name, mu)


def test_bwb_examples():
    for name, p in zoo_problems():
        assert bwb_irreducible(p, p.rho_m) == trivial_class(p), name
    p = zoo_problem("A2", "t")
    # H = T: mu + rho_H = mu, so a wall weight must induce to zero
    mu = RationalWeight([0, 3])
    assert bwb_irreducible(p, mu).is_zero()
    pl = zoo_problem("A2", "levi1")
    alpha1 = RationalWeight.from_ints(pl.datum.simple_roots[0])
    with pytest.raises(NotHDominant):
        bwb_irreducible(pl, pl.rho_m - alpha1)


def test_bwb_torus_case_is_holomorphic_bwb():
    p = zoo_problem("A2", "t")
    rng = random.Random(23)
    for _ in range(20):
        kappa = RationalWeight([rng.randint(-3, 3), rng.randint(-3, 3)])
        # holomorphic induction of e^kappa equals i_* of e^(kappa + rho_G)
        lhs = induce_classical(p, "holomorphic", TorusElement.monomial(p.datum, kappa))
        rhs = bwb_irreducible(p, kappa + p.rho_m)
        assert lhs == rhs


def test_classical_kinds():
    p1 = zoo_problem("A1", "t")
    assert induce_classical(p1, "spin", TorusElement.unit(p1.datum)).is_zero()
    p2 = zoo_problem("A2", "t")
    lam = RationalWeight([2, 1])
    assert induce_classical(
        p2, "holomorphic", TorusElement.monomial(p2.datum, lam)
    ).terms() == [(lam, 1)]
    # spin induction refuses when rho_M is not a weight
    pl = zoo_problem("A2", "levi1")
    with pytest.raises(NotSpin):
        induce_classical(pl, "spin", TorusElement.unit(pl.datum))
    # holomorphic induction refuses non-Levi subgroups
    pg = zoo_problem("G2", "a2long")
    with pytest.raises(NotLevi):
        induce_classical(pg, "holomorphic", TorusElement.unit(pg.datum))
    # spinc with the complex-structure character matches holomorphic
    rng = random.Random(5)
    gam = classify(pl).gamma
    for _ in range(5):
        a = random_wh_invariant(pl, rng, max_support=2, dim_cap=60)
        assert induce_classical(pl, "holomorphic", a) == induce_classical(
            pl, "spinc", a, gamma=gam
        )


def test_functoriality_chains():
    rng = random.Random(29)
    for name, p, t in chain_triples():
        twist = TwistClass.of(p.datum.rho)
        for _ in range(10):
            a = random_torus_element(
                make_problem(p.datum, t), rng, twist=twist,
                max_support=6 if p.datum.rank <= 3 else 3,
            )
            direct = induce_between(p.datum, t, a)
            staged = induce_between(
                p.datum, p.sub, induce_between(p.sub, t, a).to_torus()
            )
            assert direct == staged, name


def test_rg_linearity():
    rng = random.Random(31)
    for name, p in zoo_problems():
        if p.datum.rank > 2:
            continue
        twist = TwistClass((p.sigma + p.twist_rho("M")).shift)
        for _ in range(5):
            b = GroupElement.from_weights(
                p.datum,
                {random_dominant_weight(p.datum, rng, dim_cap=40): rng.randint(1, 3)},
            )
            a = random_wh_invariant(p, rng, twist=twist, max_support=2, dim_cap=40)
            lhs = induce_twisted_spinc(p, multiply(b.to_torus(), a), check_invariant=False)
            rhs = group_multiply(b, induce_twisted_spinc(p, a, check_invariant=False))
            assert lhs == rhs, name


def test_branch():
    p = zoo_problem("A2", "levi1")
    adj = GroupElement.from_weights(p.datum, {p.datum.rho: 1})
    br = branch(p, adj)
    assert len(br.coeffs) == 4
    assert dimension(br) == 8
    assert br.to_torus() == adj.to_torus()
    # H = G is the identity
    a2 = p.datum
    full = subgroup_from_roots(a2, list(a2.roots))
    pg = make_problem(a2, full)
    assert branch(pg, adj).terms() == [(a2.rho, 1)]
    # dimension preserved on random inputs
    rng = random.Random(37)
    for name, q in zoo_problems():
        lam = random_dominant_weight(q.datum, rng, dim_cap=150)
        a = GroupElement.from_weights(q.datum, {lam: 2})
        assert dimension(branch(q, a)) == dimension(a)


def test_problem_caches_consistent():
    from spinduct.charring import euler_class, weyl_denominator
    from spinduct.induction import InductionProblem

    p = zoo_problem("G2", "a2long")
    fresh = InductionProblem(p.datum, p.sub)
    assert fresh.d_g == weyl_denominator(p.datum) == p.d_g
    assert fresh.d_h == weyl_denominator(p.sub) == p.d_h
    assert fresh.euler == euler_class(p.sub) == p.euler
    assert [e.matrix for e in fresh.reps.reps] == [e.matrix for e in p.reps.reps]


def test_extraction_of_bare_orbit_sum():
    # a virtual combination whose extraction walks far below the top weight
    from spinduct import kernels
    from spinduct.induction import extract_highest_weights

    g2 = build_root_datum("G2")
    lam = RationalWeight([6, 4])
    orbit = kernels.orbit_expand(
        [(lam.nums, 1)], g2.simple_roots, g2.simple_coroots
    )
    t = TorusElement(g2, RationalWeight.zero(2), orbit)
    ge = extract_highest_weights(g2, t)
    assert ge.to_torus() == t


def test_divide_exact():
    a2 = build_root_datum("A2")
    d = weyl_denominator(a2)
    chi = irreducible_restriction(a2, RationalWeight([1, 1]))
    prod = multiply(d, chi)
    assert divide_exact(prod, d) == chi
    assert divide_exact(prod, chi) == d
    with pytest.raises(InexactDivision):
        divide_exact(d, TorusElement.unit(a2) + TorusElement.monomial(a2, RationalWeight([1, 0]), 2))


def test_divide_exact_long_quotient():
    # the quotient can dwarf both operands: (1 - x^500) / (1 - x)
    a1 = build_root_datum("A1")
    one = TorusElement.unit(a1)
    num = one - TorusElement.monomial(a1, RationalWeight([500]))
    den = one - TorusElement.monomial(a1, RationalWeight([1]))
    q = divide_exact(num, den)
    assert len(q.coeffs) == 500
    assert multiply(q, den) == num


def test_pairing_units_and_errors():
    for label in ("A1", "A2"):
        p = zoo_problem(label, "t")
        for tau_name in ("0", "rhoM"):
            basis_a, basis_b, tau = steinberg_pairing_bases(p, tau_name)
            rep = pairing_report(p, tau, basis_a, basis_b)
            assert rep.is_unit
            det = rep.determinant_character
            assert len(det.coeffs) == 1
    p = zoo_problem("A1", "t")
    ba, bb, _ = steinberg_pairing_bases(p, "0")
    with pytest.raises(WrongBasisSize):
        pairing_report(p, TwistClass.zero(1), ba[:1], bb)
    # on the Levi the orientation class is nonzero, so plain units have
    # the wrong twist for tau = [rho_M]
    pl = zoo_problem("A2", "levi1")
    units = [TorusElement.unit(pl.datum)] * len(pl.reps.reps)
    with pytest.raises(BadTwistPairing):
        pairing_report(pl, TwistClass.of(pl.rho_m), units, units)


def test_pairing_h_equals_g():
    a2 = build_root_datum("A2")
    full = subgroup_from_roots(a2, list(a2.roots))
    p = make_problem(a2, full)
    rep = pairing_report(
        p, TwistClass.zero(2), [TorusElement.unit(a2)], [TorusElement.unit(a2)]
    )
    assert rep.is_unit
    assert rep.gram[0][0].terms() == [(RationalWeight.zero(2), 1)]


def test_lefschetz_reports():
    p = zoo_problem("G2", "a2long")
    spinor = irreducible_restriction(p.sub, p.rho_m)
    rep = lefschetz_check(p, p.euler, spinor, trials=6, seed=1)
    assert rep.max_rel_error <= 1e-8
    assert all(abs(l - 1) < 1e-6 for l, _ in rep.samples)
    hodge = multiply(p.euler, dualize(p.euler))
    rep = lefschetz_check(p, hodge, TorusElement.unit(p.datum), trials=6, seed=2)
    assert rep.max_rel_error <= 1e-8
    assert all(abs(l - 2) < 1e-6 for l, _ in rep.samples)
    # H = G: the sum degenerates to a single restriction, symbolically equal
    a2 = build_root_datum("A2")
    full = subgroup_from_roots(a2, list(a2.roots))
    pg = make_problem(a2, full)
    rep = lefschetz_check(
        pg, pg.euler, irreducible_restriction(a2, a2.rho), trials=4, seed=3
    )
    assert rep.max_rel_error <= 1e-10
