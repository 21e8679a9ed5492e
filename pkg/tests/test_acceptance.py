"""Acceptance criteria, one test each.

Every criterion prints a single PASS/FAIL line (collected into the pytest
terminal summary, or printed directly when this file is run as a script).
"""
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction as F
import random
import time

import pytest

from stratumforge.builders.construct import build_component, minimum_width
from stratumforge.builders.polygons import build_genus2, check_normalization, verify_polygon_surface
from stratumforge.errors import NotNormalized
from stratumforge.exact import RATIONALS, RealBasis
from stratumforge.figures import FIGURES, fixture_text
from stratumforge.flat_core import GridSurface, Stratum, is_transitive, parse_origami
from stratumforge.invariants import (EdgePath, arf_invariant, component_of,
                                     hyperelliptic_involution, kz_components, normalize_label,
                                     random_symplectic_change, winding_index, winding_parity)
from stratumforge.oracle import (candidate_branch_data, census, certify_branch_data, find_witness,
                                 int_partitions, stratum_of_data)
from stratumforge.period_checker import (gl2_act, is_lattice, make_cocycle, point_push,
                                         psi_of_cocycle, restrict, realizability_check, volume)

RESULTS = []


def record(number, title, ok, detail, elapsed, budget=None):
    within = budget is None or elapsed <= budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" (limit {budget}s)" if budget else ""
    line = f"[{status}] criterion {number}: {title} -- {detail}; {elapsed:.1f}s{limit}"
    RESULTS.append(line)
    print(line)
    return ok and within


def set_partitions(k):
    if k == 0:
        yield []
        return
    for rest in set_partitions(k - 1):
        for i in range(len(rest)):
            yield rest[:i] + [rest[i] + [k - 1]] + rest[i + 1:]
        yield rest + [[k - 1]]


def strata(max_genus, min_genus=2):
    for g in range(min_genus, max_genus + 1):
        for orders in int_partitions(2 * g - 2):
            yield Stratum(orders)


# ---------------------------------------------------------------------------
# 1. figure fixtures


def criterion_figures():
    bad = []
    for fig in FIGURES:
        s = parse_origami(fixture_text(f"{fig.name}.origami"))
        want = Stratum.parse(fig.stratum)
        prof = s.branch_profile() if s.absolute_period_lattice.is_standard else None
        ok = (s.stratum == want and prof is not None and prof.degree == fig.d
              and s.area == fig.d
              and component_of(s).tag == normalize_label(want, fig.label))
        if fig.hyperelliptic:
            inv = hyperelliptic_involution(s)
            ok = ok and inv is not None and inv.fixed_point_count == 2 * s.genus + 2
        if not ok:
            bad.append(fig.name)
    return not bad, f"{len(FIGURES) - len(bad)}/{len(FIGURES)} figures verified" + (
        f", failing {bad}" if bad else "")


# ---------------------------------------------------------------------------
# 2. builder sweep


def _labels(st):
    labels = list(kz_components(st))
    if st.orders == (2, 2):
        labels.append("even")
    return labels


def criterion_builders(max_genus=5):
    count, bad = 0, []
    for st in strata(max_genus):
        orders = list(st.orders)
        for P in set_partitions(len(orders)):
            for label in _labels(st):
                m = minimum_width(orders, label, P)
                for d in (m, m + 1, m + 2):
                    count += 1
                    try:
                        build_component(orders, label, P, d, verify=True)
                    except Exception as e:  # noqa: BLE001 - reported as a failure
                        bad.append((str(st), label, P, d, type(e).__name__))
    return not bad, f"{count - len(bad)}/{count} builds verified (g <= {max_genus})" + (
        f", first failure {bad[0]}" if bad else "")


# ---------------------------------------------------------------------------
# 3. branch data completeness


def _certify_one(args):
    D, label = args
    try:
        _, s, _ = certify_branch_data(D, label)
    except Exception as e:  # noqa: BLE001
        return D, label, f"no witness: {e}"
    st, _ = stratum_of_data(D)
    got = sorted(p for p in s.branch_profile().branch_data)
    want = sorted(tuple(p) for p in D)
    if s.stratum != st or got != want or component_of(s).tag != normalize_label(st, label):
        return D, label, "witness invariants differ"
    return None


def criterion_branch_data(max_degree=6, max_genus=8, jobs=4):
    tasks = []
    for d in range(2, max_degree + 1):
        for D in candidate_branch_data(d, 2 * max_genus - 2, max_genus):
            st, _ = stratum_of_data(D)
            tasks += [(D, label) for label in kz_components(st)]
    with ProcessPoolExecutor(jobs) as ex:
        bad = [r for r in ex.map(_certify_one, tasks, chunksize=16) if r]
    return not bad, (f"{len(tasks) - len(bad)}/{len(tasks)} (branch data, component) pairs "
                     f"certified, d <= {max_degree}, g <= {max_genus}") + (
        f", first failure {bad[0]}" if bad else "")


# ---------------------------------------------------------------------------
# 4. checker vs oracle


def lattice_cocycle(st, shape, d):
    """Periods Z + iZ, volume d, zeros grouped by ``shape`` over distinct
    points (c / l, 0)."""
    g, l = st.genus, len(shape)
    pos = []
    for c, size in enumerate(shape):
        pos += [F(c, l)] * size
    a = [(1, 0), (d - 1, 0)] + [(0, 0)] * (g - 2)
    b = [(0, 1), (0, 1)] + [(0, 0)] * (g - 2)
    rel = [(x - pos[0], 0) for x in pos[1:]]
    return make_cocycle(g, st.orders, a, b, rel)


def criterion_checker_oracle(max_genus=5, max_degree=6):
    cases = []
    for st in strata(max_genus):
        for shape in int_partitions(len(st.orders)):
            for d in range(2, max_degree + 1):
                cases.append((st, shape, d))
    h33 = Stratum((3, 3))
    cases += [(h33, (2,), 7), (h33, (2,), 8), (h33, (1, 1), 3), (h33, (1, 1), 4)]
    bad, count = [], 0
    for st, shape, d in cases:
        verdict = realizability_check(lattice_cocycle(st, shape, d))
        for label in kz_components(st):
            count += 1
            witness, *_ = find_witness(st, label, shape, d)
            if verdict.realizable != (witness is not None):
                bad.append((str(st), label, shape, d, verdict.realizable))
    thresholds = (not realizability_check(lattice_cocycle(h33, (2,), 7)).realizable
                  and realizability_check(lattice_cocycle(h33, (2,), 8)).realizable
                  and not realizability_check(lattice_cocycle(h33, (1, 1), 3)).realizable
                  and realizability_check(lattice_cocycle(h33, (1, 1), 4)).realizable)
    ok = not bad and thresholds
    return ok, (f"{count - len(bad)}/{count} (stratum, component, psi, d) cases agree, "
                f"H(3,3) thresholds {'hold' if thresholds else 'WRONG'}") + (
        f", first disagreement {bad[0]}" if bad else "")


# ---------------------------------------------------------------------------
# 5. Arf invariance


def random_even_origamis(count, rng, max_n=8):
    out = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        r = tuple(rng.sample(range(n), n))
        u = tuple(rng.sample(range(n), n))
        if not is_transitive((r, u), n):
            continue
        s = GridSurface(r, u)
        if s.genus >= 2 and all(o % 2 == 0 for _, o in s.zero_marks):
            out.append(s)
    return out


def random_closed_paths(s, rng, count):
    out = []
    for _ in range(4000):
        if len(out) == count:
            break
        moves = "".join(rng.choice("RLUD") for _ in range(rng.randint(2, 12)))
        path = EdgePath(rng.randrange(s.n), moves)
        try:
            winding_index(s, path)
        except (ValueError, AssertionError):
            continue
        out.append(path)
    return out


def criterion_arf(surfaces=20, changes=200, seed=7):
    rng = random.Random(seed)
    bad_arf = bad_detour = paths = 0
    for s in random_even_origamis(surfaces, rng):
        b = s.homology_symplectic_basis()
        basis = list(zip(b.a, b.b))
        ref = arf_invariant(s)
        for _ in range(changes):
            basis = random_symplectic_change(s, basis, rng, steps=1)
            if arf_invariant(s, basis) != ref:
                bad_arf += 1
        for path in random_closed_paths(s, rng, 10):
            paths += 1
            if winding_parity(s, path, "left") != winding_parity(s, path, "right"):
                bad_detour += 1
    ok = bad_arf == 0 and bad_detour == 0 and paths > 0
    return ok, (f"{surfaces} origamis x {changes} basis changes, {bad_arf} Arf changes; "
                f"{paths} closed paths, {bad_detour} detour disagreements")


# ---------------------------------------------------------------------------
# 6. exact algebra


def _random_cocycle(rng):
    g = rng.randint(2, 4)
    orders = rng.choice([[2 * g - 2], [1] * (2 * g - 2), [g - 1, g - 1]])

    def q():
        return F(rng.randint(-6, 6), rng.choice([1, 1, 1, 2, 3]))
    a = [(q(), q()) for _ in range(g)]
    b = [(q(), q()) for _ in range(g)]
    rel = [(q(), q()) for _ in orders[1:]]
    return make_cocycle(g, orders, a, b, rel)


def criterion_algebra(count=1000, seed=11):
    rng = random.Random(seed)
    failures = []
    lattices = 0
    for i in range(count):
        chi = _random_cocycle(rng)
        V = volume(chi)
        lat = is_lattice(chi)
        psi = psi_of_cocycle(chi)
        if lat:
            lattices += 1
            q = V.rational() / lat.covolume.rational()
            if q.denominator != 1:
                failures.append((i, "V/Area not integral"))
        while True:
            A = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
            det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
            if det > 0:
                break
        moved = gl2_act(A, chi)
        if volume(moved) != V * det:
            failures.append((i, "V(A chi) != det(A) V(chi)"))
        if psi_of_cocycle(moved).shape != psi.shape:
            failures.append((i, "psi changed under GL2"))
        absolute = chi.absolute_values
        shifts = []
        for _ in chi.rel:
            v = (RATIONALS.const(0), RATIONALS.const(0))
            for x in absolute:
                k = rng.randint(-2, 2)
                v = (v[0] + x[0] * k, v[1] + x[1] * k)
            shifts.append(v)
        pushed = point_push(chi, shifts)
        if psi_of_cocycle(pushed).classes != psi.classes:
            failures.append((i, "psi changed under point pushing"))
        if restrict(pushed) != restrict(chi):
            failures.append((i, "restrict changed under point pushing"))
    return not failures, (f"{count} cocycles ({lattices} lattices), {len(failures)} failures"
                          + (f", first {failures[0]}" if failures else ""))


# ---------------------------------------------------------------------------
# 7. KZ census


def criterion_kz_census(max_n=7):
    seen = {}
    for n in range(1, max_n + 1):
        for (st, label), _ in census(n).items():
            seen.setdefault(st, set()).add(label)
    bad = []
    for st, labels in sorted(seen.items()):
        want = {normalize_label(st, x) for x in kz_components(st)}
        if labels != want:
            bad.append((str(st), sorted(labels), sorted(want)))
    return not bad, (f"{len(seen)} strata observed for N <= {max_n}, "
                     f"{len(seen) - len(bad)} match the component table") + (
        f", mismatches {bad}" if bad else "")


# ---------------------------------------------------------------------------
# 8. genus-two polygons


SQ2 = RealBasis(("1", "sqrt2"), ("1", "sqrt(2)"))


def _random_genus2(rng, stratum):
    r = SQ2.real("sqrt2")

    def x(lo=-2, hi=2):
        return SQ2.const(F(rng.randint(lo * 4, hi * 4), 4)) + r * F(rng.randint(-2, 2), 4)
    while True:
        a = [(x(1, 3), x(-1, 1)) for _ in range(2)]
        b = [(x(), x(1, 3)) for _ in range(2)]
        rel = [(x(-1, 1), x(-1, 1))] if stratum.orders == (1, 1) else []
        chi = make_cocycle(2, stratum.orders, a, b, rel, basis=SQ2)
        try:
            check_normalization(chi, stratum)
        except NotNormalized:
            continue
        return chi


def criterion_genus2(count=50, seed=5):
    rng = random.Random(seed)
    bad = []
    irrational = 0
    for i in range(count):
        stratum = Stratum((2,)) if i % 2 == 0 else Stratum((1, 1))
        chi = _random_genus2(rng, stratum)
        if not volume(chi).is_rational():
            irrational += 1
        try:
            got, area = verify_polygon_surface(build_genus2(chi, stratum))
        except Exception as e:  # noqa: BLE001
            bad.append((i, type(e).__name__, str(e)))
            continue
        if got != stratum or area != volume(chi):
            bad.append((i, str(got), str(area)))
    return not bad, (f"{count - len(bad)}/{count} cocycles rebuilt with exact area "
                     f"({irrational} with irrational volume)") + (
        f", first failure {bad[0]}" if bad else "")


# ---------------------------------------------------------------------------

CRITERIA = [
    (1, "figure fixtures", criterion_figures, 10),
    (2, "builder soundness sweep", criterion_builders, 120),
    (3, "branch data completeness", criterion_branch_data, 600),
    (4, "checker and oracle agree", criterion_checker_oracle, 600),
    (5, "Arf invariance", criterion_arf, None),
    (6, "exact algebra properties", criterion_algebra, 30),
    (7, "KZ census", criterion_kz_census, None),
    (8, "genus-two polygon builders", criterion_genus2, 30),
]


def run_criterion(number):
    _, title, fn, budget = CRITERIA[number - 1]
    t = time.perf_counter()
    ok, detail = fn()
    return record(number, title, ok, detail, time.perf_counter() - t, budget)


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA],
                         ids=[f"{c[0]}-{c[1].replace(' ', '_')}" for c in CRITERIA])
def test_criterion(number):
    assert run_criterion(number)


if __name__ == "__main__":
    results = [run_criterion(n) for n, *_ in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
