import random

from fractions import Fraction as F

import pytest

from hyperlab.phase import (
    ArcSet,
    PHASE_ONE,
    PHASE_ZERO,
    PhaseError,
    _Builder,
    arcset_of,
    parse_phase,
    phase,
    phase_hyperfield,
)

P = phase_hyperfield()
e = P.element
z = P.zero


def test_element_basics():
    assert phase(F(5, 4)) == phase(F(1, 4))
    assert str(e(F(1, 3))) == "e(1/3)"
    assert str(z) == "0"
    assert parse_phase("e(1/4)") == e(F(1, 4))
    assert parse_phase("0") is PHASE_ZERO or parse_phase("0") == PHASE_ZERO
    with pytest.raises(PhaseError):
        parse_phase("quarter")
    assert P.mul(e(F(3, 4)), e(F(1, 2))) == e(F(1, 4))
    assert P.inv(e(F(1, 3))) == e(F(2, 3))
    assert P.neg(e(F(1, 8))) == e(F(5, 8))
    assert P.mul(z, e(F(1, 3))) == z
    with pytest.raises(PhaseError):
        P.inv(z)
    assert sorted([e(F(1, 2)), z, PHASE_ONE]) == [z, PHASE_ONE, e(F(1, 2))]


def test_finite_sums():
    x, y = e(F(1, 4)), e(F(3, 4))
    assert P.finite_sum(x, y) == frozenset({z, x, y})
    assert P.finite_sum(x, x) == frozenset({x})
    assert P.finite_sum(z, x) == frozenset({x})
    assert P.finite_sum(x, z) == frozenset({x})
    assert P.finite_sum(e(0), e(F(1, 4))) is None


def test_membership_open_arc():
    a, b = e(0), e(F(1, 4))
    assert P.member(e(F(1, 8)), a, b)
    assert P.member(e(F(1, 100)), a, b)
    assert not P.member(a, a, b)        # endpoints excluded
    assert not P.member(b, a, b)
    assert not P.member(z, a, b)
    assert not P.member(e(F(1, 2)), a, b)
    # shorter arc goes the other way around when the gap exceeds a half turn
    c, d = e(0), e(F(7, 8))
    assert P.member(e(F(15, 16)), c, d)
    assert not P.member(e(F(1, 2)), c, d)


def test_membership_antipodal_and_equal():
    x = e(F(1, 3))
    assert P.member(z, x, P.neg(x))
    assert P.member(x, x, P.neg(x))
    assert not P.member(e(F(1, 12)), x, P.neg(x))
    assert P.member(x, x, x)
    assert not P.member(z, x, x)


def test_arcset_normalization():
    b = _Builder()
    b.add_arc(F(3, 4), F(1, 4))
    b.add_arc(F(0), F(1, 4))
    b.add_point(F(0))
    got = b.build()
    assert got.arcs == ((F(3, 4), F(1, 2)),)
    assert not got.points and not got.full

    b = _Builder()
    b.add_arc(F(0), F(1, 2))
    b.add_arc(F(1, 2), F(1, 2))
    b.add_point(F(0))
    b.add_point(F(1, 2))
    full = b.build()
    assert full.full and full.member(e(F(9, 17))) and not full.member(z)

    # adjacent arcs with the junction point missing stay separate
    b = _Builder()
    b.add_arc(F(0), F(1, 4))
    b.add_arc(F(1, 4), F(1, 4))
    got = b.build()
    assert got.arcs == ((F(0), F(1, 4)), (F(1, 4), F(1, 4)))
    assert not got.member(e(F(1, 4)))
    assert got.member(e(F(1, 5)))


def test_sum_point_cases():
    # {0, 1/4, 3/4} (+) e(0): zero gives the point, the pair gives arcs
    A = arcset_of(P.finite_sum(e(F(1, 4)), e(F(3, 4))))
    C = P.sum_point(A, e(0))
    assert C.member(e(F(1, 8))) and C.member(e(F(7, 8))) and C.member(e(0))
    assert not C.member(e(F(1, 4))) and not C.member(z)

    # summing with the zero element changes nothing
    assert P.sum_point(A, z) == A

    # arc split at an interior antipode reintroduces zero
    B = P.pair_arcset(e(0), e(F(1, 4)))      # open (0, 1/4)
    D = P.sum_point(B, e(F(5, 8)))           # -c = 1/8 lies inside
    assert D.zero
    assert D.member(e(F(1, 8))) and D.member(e(F(5, 8)))


def test_associativity_and_reversibility_sweep():
    rng = random.Random(97)
    for _ in range(2000):
        x, y, w = (P.sample(rng) for _ in range(3))
        left = P.sum_point(P.pair_arcset(x, y), w)
        right = P.sum_point(P.pair_arcset(y, w), x)
        assert left == right, (x, y, w)
        t = P.sample(rng)
        assert P.member(t, x, y) == P.member(P.neg(x), P.neg(t), y), (t, x, y)


def test_nary_arcset():
    with pytest.raises(PhaseError):
        P.nary_arcset([])
    got = P.nary_arcset([e(0), e(F(1, 4)), e(F(1, 2))])
    assert got == ArcSet(False, False, frozenset(), ((F(0), F(1, 2)),))
