from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stratumforge.errors import BadPermutation, FormatError, NotPrimitive
from stratumforge.flat_core import (GridSurface, Stratum, canonical_pair, commutator, compose,
                                    cycle_type, from_cycles, inverse, is_transitive,
                                    new_grid_surface,
                                    parse_origami, parse_origami_json)


def origami(n, r, u):
    return GridSurface(from_cycles(r, n), from_cycles(u, n))


TORUS = GridSurface((0,), (0,))
THREE = origami(3, "(1 2 3)", "(1 2)")


@st.composite
def pairs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    r = tuple(draw(st.permutations(range(n))))
    u = tuple(draw(st.permutations(range(n))))
    return n, r, u


@st.composite
def connected_origamis(draw, max_n=7):
    n, r, u = draw(pairs(max_n))
    if not is_transitive((r, u), n):
        r = tuple((i + 1) % n for i in range(n))
    return GridSurface(r, u)


def test_permutation_helpers():
    p = (1, 2, 0)
    assert compose(p, inverse(p)) == (0, 1, 2)
    assert cycle_type((1, 0, 2)) == (2, 1)
    assert commutator(p, p) == (0, 1, 2)


def test_torus():
    assert not TORUS.zeros
    assert TORUS.genus == 1
    assert TORUS.stratum == Stratum(())


def test_three_square_h2():
    assert THREE.stratum == Stratum((2,))
    assert THREE.genus == 2
    assert cycle_type(commutator(THREE.r, THREE.u))[0] == 3


def test_bad_permutation():
    with pytest.raises(BadPermutation):
        new_grid_surface(2, [1, 0], [0, 2])


def test_stratum_parse_and_print():
    s = Stratum.parse("H(1, 3,3,5)")
    assert s.orders == (5, 3, 3, 1) and s.genus == 7
    assert str(s) == "H(5,3,3,1)"
    with pytest.raises(FormatError):
        Stratum.parse("K(2)")


def test_cylinders(figure):
    fig1 = figure("fig1").cylinder_decomposition()
    assert len(fig1) == 1
    cyl = fig1.cylinders[0]
    assert len(cyl.top) == 5 and len(cyl.bottom) == 5
    torus = TORUS.cylinder_decomposition()
    assert len(torus) == 1 and torus.cylinders[0].top == ()
    widths = sorted(c.circumference for c in figure("fig3").cylinder_decomposition().cylinders)
    assert widths == [1, 7]


def test_homology_small_cases():
    b = TORUS.homology_symplectic_basis()
    assert len(b.a) == 1 and TORUS.intersection(b.a[0].chain, b.b[0].chain) == 1
    b = THREE.homology_symplectic_basis()
    cyc = b.cycles
    assert len(cyc) == 4
    gram = [[THREE.intersection(x.chain, y.chain) for y in cyc] for x in cyc]
    assert gram == [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]


def test_lattices(figure):
    lat = TORUS.absolute_period_lattice
    assert lat.is_standard and lat.covolume == 1
    assert figure("fig2").absolute_period_lattice.is_standard
    double = GridSurface((1, 0), (0, 1))
    lat = double.absolute_period_lattice
    assert not lat.is_standard and lat.covolume == 2
    with pytest.raises(NotPrimitive):
        double.branch_profile()


def test_branch_profiles(figure):
    p3 = figure("fig3").branch_profile()
    assert p3.psi == (2,) and p3.branch_data == ((4, 4),) and p3.degree == 8
    p2 = figure("fig2").branch_profile()
    assert p2.psi == (1, 1)
    assert sorted(p2.zero_positions.values()) == [(0, 0), (Fraction(1, 2), 0)]
    assert TORUS.branch_profile().classes == ()


def test_text_round_trip(figure):
    s = figure("fig7")
    assert parse_origami(s.to_text()) == s
    assert parse_origami_json(s.to_json()) == s
    with pytest.raises(FormatError):
        parse_origami("n=2\nr=1 2")


@given(connected_origamis())
def test_gauss_bonnet(s):
    orders = [o for _, o in s.zero_marks]
    assert sum(orders) == 2 * s.genus - 2
    assert s.area == s.n


@given(connected_origamis(), st.randoms(use_true_random=False))
def test_relabel_invariance(s, rnd):
    perm = list(range(s.n))
    rnd.shuffle(perm)
    t = s.relabel(perm)
    assert t.canonical() == s.canonical()
    assert t.stratum == s.stratum
    assert canonical_pair(t.r, t.u) == canonical_pair(s.r, s.u)
    assert t.absolute_period_lattice.covolume == s.absolute_period_lattice.covolume


@given(connected_origamis())
def test_symplectic_basis_gram(s):
    b = s.homology_symplectic_basis()
    cyc = b.cycles
    assert len(cyc) == 2 * s.genus
    for i, x in enumerate(cyc):
        for j, y in enumerate(cyc):
            want = 1 if (i % 2 == 0 and j == i + 1) else -1 if (j % 2 == 0 and i == j + 1) else 0
            assert s.intersection(x.chain, y.chain) == want


@given(connected_origamis())
def test_cylinders_tile_the_surface(s):
    cyls = s.cylinder_decomposition().cylinders
    assert sum(c.area for c in cyls) == s.area
    cells = sorted(x for c in cyls for row in c.rows for x in row)
    assert cells == list(range(s.n))


def test_scaled_cells_area():
    s = new_grid_surface(2, [1, 0], [0, 1], Fraction(1, 2), 1)
    assert s.area == 1
    assert s.absolute_period_lattice.is_standard
