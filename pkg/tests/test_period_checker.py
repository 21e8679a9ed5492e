from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from stratumforge.errors import FormatError, NotInAbsoluteImage, SingularMatrix, SizeMismatch
from stratumforge.exact import RealBasis
from stratumforge.figures import fixture_text
from stratumforge.oracle import naive_minmax
from stratumforge.period_checker import (cocycle_from_json, cocycle_of_surface, cocycle_to_json,
                                         gl2_act, is_lattice, make_cocycle, minmax_assignment,
                                         point_push, psi_of_cocycle, restrict, realizability_check,
                                         volume)

SQ2 = RealBasis(("1", "sqrt2"), ("1", "sqrt(2)"))
Z = (0, 0)


def test_volumes():
    assert volume(make_cocycle(2, [2], [(1, 0), Z], [(0, 1), Z])) == 1
    N = 5
    psi = make_cocycle(2, [2], [(1 - F(1, N), 0), (F(1, N), 0)], [(0, 1), (0, 1)])
    assert volume(psi) == 1
    r, one, zero = SQ2.real("sqrt2"), SQ2.const(1), SQ2.const(0)
    chi = make_cocycle(2, [2], [(one, zero), (zero, one)], [(r, one), (-one, zero)], basis=SQ2)
    assert volume(chi) == 2


def test_lattice_detection():
    lat = is_lattice(make_cocycle(2, [2], [(1, 0), Z], [(0, 1), Z]))
    assert lat and lat.covolume == 1
    r, one, zero = SQ2.real("sqrt2"), SQ2.const(1), SQ2.const(0)
    chi = make_cocycle(2, [2], [(one, zero), (r, zero)], [(zero, one), (zero, zero)], basis=SQ2)
    lat = is_lattice(chi)
    assert not lat and lat.rank == 3
    assert not is_lattice(make_cocycle(2, [2], [(1, 0), (3, 0)], [(2, 0), Z]))


def test_psi_examples():
    base = ([(1, 0), Z], [(0, 1), Z])
    assert psi_of_cocycle(make_cocycle(2, [1, 1], *base, [(F(1, 2), 0)])).shape == (1, 1)
    assert psi_of_cocycle(make_cocycle(2, [1, 1], *base, [(3, 2)])).shape == (2,)
    assert psi_of_cocycle(make_cocycle(2, [2], *base)).shape == (1,)


def test_minmax_examples():
    assert minmax_assignment([3], [2, 3, 4])[1] == 9
    assert minmax_assignment([1, 1, 1], [2, 5, 3])[1] == 5
    assert minmax_assignment([2, 2], [2, 2, 4, 6]) == (((0, 2), (1, 3)), 8)
    with pytest.raises(SizeMismatch):
        minmax_assignment([2], [1, 1, 1])


@given(st.lists(st.integers(2, 9), min_size=1, max_size=6), st.data())
def test_minmax_matches_brute_force(weights, data):
    k = len(weights)
    sizes = []
    left = k
    while left:
        s = data.draw(st.integers(1, left))
        sizes.append(s)
        left -= s
    classes, value = minmax_assignment(sizes, weights)
    assert value == naive_minmax(sizes, weights)
    assert sorted(len(c) for c in classes) == sorted(sizes)
    assert max(sum(weights[j] for j in c) for c in classes) == value


def _lattice_cocycle(d, orders, rel):
    g = sum(orders) // 2 + 1
    a = [(1, 0), (d - 1, 0)] + [Z] * (g - 2)
    b = [(0, 1), (0, 1)] + [Z] * (g - 2)
    return make_cocycle(g, orders, a, b, rel)


def test_realizability_thresholds():
    assert realizability_check(_lattice_cocycle(8, [3, 3], [(0, 0)])).realizable
    v = realizability_check(_lattice_cocycle(7, [3, 3], [(0, 0)]))
    assert not v.realizable and v.failing == "inequality"
    assert realizability_check(_lattice_cocycle(4, [3, 3], [(F(1, 2), 0)])).realizable
    assert not realizability_check(_lattice_cocycle(3, [3, 3], [(F(1, 2), 0)])).realizable
    v = realizability_check(make_cocycle(2, [2], [(1, 0), (-1, 0)], [(0, 1), (0, 1)]))
    assert not v.realizable and v.failing == "volume"


def test_non_lattice_is_realizable():
    r, one, zero = SQ2.real("sqrt2"), SQ2.const(1), SQ2.const(0)
    chi = make_cocycle(2, [1, 1], [(one, zero), (r, zero)], [(zero, one), (zero, one)],
                       [(zero, zero)], basis=SQ2)
    v = realizability_check(chi)
    assert v.realizable and v.degree is None


def test_actions():
    chi = _lattice_cocycle(4, [3, 3], [(F(1, 2), 0)])
    assert gl2_act([[1, 0], [0, 1]], chi) == chi
    assert volume(gl2_act([[2, 0], [0, 1]], chi)) == 2 * volume(chi)
    assert volume(gl2_act([[0, -1], [1, 0]], chi)) == volume(chi)
    with pytest.raises(SingularMatrix):
        gl2_act([[1, 1], [1, 1]], chi)
    assert point_push(chi, [(0, 0)]) == chi
    pushed = point_push(chi, [(1, 1)])
    assert pushed.rel[0][0] == F(3, 2) and psi_of_cocycle(pushed) == psi_of_cocycle(chi)
    with pytest.raises(NotInAbsoluteImage):
        point_push(chi, [(F(1, 2), 0)])
    assert volume(restrict(chi)) == volume(chi)


def test_surface_cocycle(figure):
    chi = cocycle_of_surface(figure("fig2"))
    assert is_lattice(chi).covolume == 1
    assert chi.rel[0][0].rational().denominator == 2
    v = realizability_check(chi)
    assert v.realizable and v.degree == 4


def test_json():
    chi = cocycle_from_json(fixture_text("fig2_cocycle.json"))
    assert cocycle_from_json(cocycle_to_json(chi)) == chi
    data = {"genus": 2, "orders": [2], "basis_reals": ["sqrt2=sqrt(2)"],
            "a": [[1, 0], [[0, 1], 0]], "b": [[0, 1], [0, "1/2"]]}
    chi = cocycle_from_json(data)
    assert volume(chi) == chi.basis.const(1) + chi.basis.real("sqrt2") / 2
    with pytest.raises(FormatError):
        cocycle_from_json('{"genus": 2, "orders": [2], "a": [[1, 0]], "b": []}')
    with pytest.raises(FormatError):
        cocycle_from_json('{"genus": 2, "orders": [3], "a": [[1,0],[0,0]], "b": [[0,1],[0,0]]}')


rat = st.fractions(-4, 4, max_denominator=4)


@st.composite
def rational_cocycles(draw):
    g = draw(st.integers(2, 3))
    orders = draw(st.sampled_from([[2 * g - 2], [1] * (2 * g - 2), [g - 1, g - 1]]))
    vec = st.tuples(rat, rat)
    a = [draw(vec) for _ in range(g)]
    b = [draw(vec) for _ in range(g)]
    rel = [draw(vec) for _ in range(len(orders) - 1)]
    return make_cocycle(g, orders, a, b, rel)


@given(rational_cocycles(), st.tuples(rat, rat, rat, rat))
def test_gl2_scales_volume(chi, m):
    A = [[m[0], m[1]], [m[2], m[3]]]
    det = m[0] * m[3] - m[1] * m[2]
    if det <= 0:
        with pytest.raises(SingularMatrix):
            gl2_act(A, chi)
        return
    moved = gl2_act(A, chi)
    assert volume(moved) == det * volume(chi)
    assert psi_of_cocycle(moved).shape == psi_of_cocycle(chi).shape


@given(rational_cocycles())
def test_lattice_degree_is_integral(chi):
    lat = is_lattice(chi)
    if lat and volume(chi).sign() > 0:
        v = realizability_check(chi)
        assert v.degree * lat.covolume == volume(chi)
