"""Shifted modules over a root-lattice datum, where [rho] is genuinely
half-integral: the antisymmetrizer factorizations, unit induction and the
closed Borel-Weil-Bott form must all hold with fractional shift residues."""

import random

from spinduct.charring import TorusElement, TwistClass, irreducible_restriction
from spinduct.induction import bwb_irreducible, induce_twisted_spinc, make_problem
from spinduct.rootdata import RationalWeight, build_root_datum, subgroup_from_roots
from spinduct.weyl import apply_antisymmetrizer
from spinduct.zoo import random_dominant_weight


def so7_problem():
    so7 = build_root_datum("B3", "root")
    sub = subgroup_from_roots(
        so7,
        [so7.root_from_simple_coordinates(sc) for sc in [(1, 1, 1), (0, 1, 0), (0, 1, 2)]],
    )
    return make_problem(so7, sub)


def test_rho_is_fractional_on_the_root_lattice():
    p = so7_problem()
    assert not p.datum.rho.is_integral()
    assert not TwistClass.of(p.datum.rho).is_zero()


def test_antisymmetrizer_identities_at_half_shift():
    p = so7_problem()
    rng = random.Random(3)
    tw = TwistClass.of(p.datum.rho)
    for _ in range(40):
        ks = {
            tuple(rng.randint(-3, 3) for _ in range(3)): rng.randint(-9, 9) or 1
            for _ in range(rng.randint(1, 8))
        }
        a = TorusElement(p.datum, tw.shift, ks)
        jg = apply_antisymmetrizer("J_G", a)
        assert jg == apply_antisymmetrizer(
            "J_M", apply_antisymmetrizer("J_H", a, p.sub), p.sub
        )
        assert jg == apply_antisymmetrizer(
            "J_H", apply_antisymmetrizer("J_M_OP", a, p.sub), p.sub
        )


def test_unit_induction_at_half_shift():
    p = so7_problem()
    spinor = irreducible_restriction(p.sub, p.rho_m)
    assert induce_twisted_spinc(p, spinor).terms() == [(RationalWeight.zero(3), 1)]


def test_bwb_agreement_at_half_shift():
    p = so7_problem()
    rng = random.Random(5)
    twm = TwistClass.of(p.rho_m)
    for _ in range(20):
        mu = random_dominant_weight(p.sub, rng, twist=twm)
        lhs = bwb_irreducible(p, mu)
        rhs = induce_twisted_spinc(p, irreducible_restriction(p.sub, mu))
        assert lhs == rhs
