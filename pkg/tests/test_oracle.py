import random

import pytest
from hypothesis import assume, given, strategies as st

from stratumforge.errors import BadPermutation, BoundExceeded, CertificationFailed, NotTransitive
from stratumforge.flat_core import Stratum, commutator, compose, inverse, is_transitive
from stratumforge.oracle import (MonodromyDatum, braid, census, census_csv, certify,
                                 datum_of_origami, enumerate_origamis, hurwitz_orbit,
                                 invariants_of, max_cells, moves, translate)

# counts of connected origamis with exactly N squares, up to relabeling,
# computed once by this enumeration and frozen
CENSUS = {
    1: {("H()", "conn"): 1},
    2: {("H()", "conn"): 3},
    3: {("H()", "conn"): 4, ("H(2)", "conn"): 3},
    4: {("H()", "conn"): 7, ("H(1,1)", "conn"): 10, ("H(2)", "conn"): 9},
    5: {("H()", "conn"): 6, ("H(1,1)", "conn"): 24, ("H(2)", "conn"): 27,
        ("H(4)", "hyp"): 18, ("H(4)", "odd"): 22},
    6: {("H()", "conn"): 12, ("H(1,1)", "conn"): 88, ("H(2)", "conn"): 45,
        ("H(2,2)", "hyp"): 57, ("H(2,2)", "odd"): 69, ("H(3,1)", "conn"): 128,
        ("H(4)", "hyp"): 70, ("H(4)", "odd"): 155},
}


@pytest.mark.parametrize("N", sorted(CENSUS))
def test_frozen_census(N):
    got = {(str(s), lab): c for (s, lab), c in census(N).items()}
    assert got == CENSUS[N]


def test_small_enumerations():
    assert [s.n for s in enumerate_origamis(1)] == [1]
    h2 = enumerate_origamis(3, "H(2)")
    assert len(h2) == 3 and all(s.stratum == Stratum((2,)) for s in h2)
    assert enumerate_origamis(2, "H(1,1)") == []


def test_census_csv():
    text = census_csv(5)
    assert text.splitlines()[0] == "stratum,label,N,count"
    assert '"H(4)",hyp,5,18' in text and '"H(4)",odd,5,22' in text


def test_bounds(monkeypatch):
    monkeypatch.delenv("STRATUMFORGE_MAX_CELLS", raising=False)
    with pytest.raises(BoundExceeded):
        census(9)
    monkeypatch.setenv("STRATUMFORGE_MAX_CELLS", "3")
    assert max_cells("census") == 3
    with pytest.raises(BoundExceeded):
        enumerate_origamis(4)


def test_datum_validation():
    with pytest.raises(BadPermutation):
        MonodromyDatum(2, (0, 1), (0, 1), ((1, 0),))
    with pytest.raises(NotTransitive):
        MonodromyDatum(2, (0, 1), (0, 1), ())


@st.composite
def data(draw):
    d = draw(st.integers(2, 5))
    m = draw(st.integers(1, 3))
    perm = st.permutations(range(d)).map(tuple)
    r, u = draw(perm), draw(perm)
    sig = [draw(perm) for _ in range(m - 1)]
    prod = tuple(range(d))
    for s in sig:
        prod = compose(s, prod)
    last = compose(commutator(r, u), inverse(prod))
    gens = (r, u) + tuple(sig) + (last,)
    assume(is_transitive(gens, d))
    return MonodromyDatum(d, r, u, tuple(sig) + (last,))


@given(data())
def test_surface_realizes_the_datum(m):
    s = m.to_surface()
    assert s.area == m.d
    zeros = sorted(o for ct in m.branch_data for o in (k - 1 for k in ct) if o)
    assert sorted(o for _, o in s.zero_marks) == zeros
    if s.absolute_period_lattice.is_standard:
        prof = s.branch_profile()
        want = sorted(ct for ct in m.branch_data if ct[0] > 1)
        assert sorted(prof.branch_data) == want


@given(data())
def test_moves_preserve_invariants(m):
    inv = invariants_of(m)
    for y in moves(m):
        assert invariants_of(y) == inv


def test_orbits():
    one = datum_of_origami(enumerate_origamis(5, "H(4)")[0])
    labels = {invariants_of(x).label for x in hurwitz_orbit(one)}
    assert len(labels) == 1
    two = MonodromyDatum(2, (0, 1), (0, 1), ((1, 0), (1, 0)))
    orbit = hurwitz_orbit(two)
    assert braid(two, 0).canonical() in orbit and translate(two).canonical() in orbit
    assert invariants_of(two).stratum == Stratum((1, 1))


def test_certificates():
    c = certify("H(2)", "conn", (1,), 3, True)
    assert c.exists and c.surface.n == 3 and c.surface.stratum == Stratum((2,))
    c = certify("H(3,3)", "hyp", (1, 1), 3, False)
    assert not c.exists and c.infeasible[0][1] == (4, 4)
    assert "witness" not in c.to_json()
    c = certify("H(1,1)", "conn", (1, 1), 2, True)
    assert c.d == 2 and len(c.witness.sigmas) == 2
    assert c.to_json()["monodromy"]["sigmas"] == [[1, 0], [1, 0]]
    with pytest.raises(CertificationFailed):
        certify("H(1,1)", "conn", (2,), 3, True)


def test_witness_invariants_match():
    rng = random.Random(4)
    for stratum, label, shape, d in [("H(4)", "odd", (1,), 5), ("H(2,2)", "hyp", (2,), 6),
                                     ("H(3,1)", "conn", (1, 1), 4)]:
        c = certify(stratum, label, shape, d, True, seed=rng.randrange(100))
        s = c.surface
        assert s.stratum == Stratum.parse(stratum)
        assert s.branch_profile().psi == shape and s.area == d
