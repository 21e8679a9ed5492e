import random

import pytest
from hypothesis import given, strategies as st

from stratumforge.builders.construct import build_component
from stratumforge.errors import OddOrderZero
from stratumforge.flat_core import GridSurface, Stratum
from stratumforge.invariants import (EdgePath, arf_invariant, component_of,
                                     hyperelliptic_involution, involution_search, kz_components,
                                     normalize_label, random_symplectic_change,
                                     single_cylinder_hyperelliptic_check, winding_index,
                                     winding_parity)
from stratumforge.oracle import enumerate_origamis

THREE = GridSurface((1, 2, 0), (1, 0, 2))


@pytest.mark.parametrize("stratum,labels", [
    ("H(2)", ["conn"]), ("H(1,1)", ["conn"]), ("H(4)", ["hyp", "odd"]),
    ("H(2,2)", ["hyp", "odd"]), ("H(3,3)", ["hyp", "nonhyp"]), ("H(6)", ["hyp", "even", "odd"]),
    ("H(3,1)", ["conn"]), ("H(2,2,2)", ["even", "odd"]), ("H(4,4)", ["hyp", "even", "odd"]),
])
def test_kz_table(stratum, labels):
    assert kz_components(stratum) == labels


def test_label_aliases():
    assert normalize_label(Stratum((2, 2)), "even") == "hyp"
    assert normalize_label(Stratum((1, 1)), "hyp") == "conn"


def test_straight_loop_has_index_zero():
    torus = GridSurface((0,), (0,))
    assert winding_index(torus, EdgePath(0, "R")) == 0
    row = [(c, 0) for c in (0, 1, 2)]
    assert winding_index(THREE, row) == 0
    assert winding_parity(THREE.relabel((0, 1, 2)), row) == 0


def test_parity_needs_even_orders():
    h11 = enumerate_origamis(4, "H(1,1)")[0]
    with pytest.raises(OddOrderZero):
        arf_invariant(h11)


def test_spin_of_figures(figure):
    assert arf_invariant(figure("fig4")) == 1
    assert arf_invariant(figure("fig6")) == 0


def test_arf_stable_under_basis_changes(rng):
    b = THREE.homology_symplectic_basis()
    basis = list(zip(b.a, b.b))
    ref = arf_invariant(THREE, basis)
    for _ in range(50):
        basis = random_symplectic_change(THREE, basis, rng)
        assert arf_invariant(THREE, basis) == ref
    assert arf_invariant(THREE) == ref


def test_arf_independent_of_spanning_tree(figure):
    s = figure("fig6")
    for seed in range(10):
        assert arf_invariant(s, rng=random.Random(seed)) == 0


def _random_closed_paths(s, rng, count, length=10):
    out = []
    tries = 0
    while len(out) < count and tries < 5000:
        tries += 1
        moves = "".join(rng.choice("RLUD") for _ in range(rng.randint(2, length)))
        path = EdgePath(rng.randrange(s.n), moves)
        try:
            winding_index(s, path)
        except (ValueError, AssertionError):
            continue
        out.append(path)
    return out


@given(st.integers(0, 10 ** 6))
def test_detours_agree_on_parity(seed):
    rng = random.Random(seed)
    s = build_component([4], "odd", [[0]], 5)
    for path in _random_closed_paths(s, rng, 5):
        assert winding_parity(s, path, "left") == winding_parity(s, path, "right")


def test_involutions(figure):
    inv = hyperelliptic_involution(figure("fig1"))
    assert inv is not None and inv.fixed_point_count == 8 and inv.quotient_genus == 0
    s3 = figure("fig3")
    inv = hyperelliptic_involution(s3)
    assert inv.fixed_point_count == 10 and inv.swaps(*s3.zeros)
    assert all(f.quotient_genus != 0 for f in involution_search(figure("fig4")))


def test_single_cylinder_criterion(figure):
    fig1 = figure("fig1").cylinder_decomposition()
    assert single_cylinder_hyperelliptic_check(fig1)
    odd = build_component([6], "odd", [[0]], 7).cylinder_decomposition()
    assert len(odd) == 1 and not single_cylinder_hyperelliptic_check(odd)
    assert single_cylinder_hyperelliptic_check(GridSurface((0,), (0,)).cylinder_decomposition())


def test_components(figure):
    assert component_of(figure("fig2")).tag == "hyp"
    assert component_of(figure("fig7")).tag == "conn"
    assert component_of(THREE).tag == "conn"
    assert component_of(figure("fig4")).tag == "odd"
    assert component_of(figure("fig6")).tag == "even"
