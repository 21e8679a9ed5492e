"""Brute-force ground truth.

* exhaustive enumeration of origamis (pairs of permutations up to
  simultaneous conjugacy) and a census of their component labels;
* monodromy data of torus covers branched over several points, realized as
  grid surfaces with one column per branch point, and their orbits under
  braid moves, translations and Dehn twists of the base;
* existence / nonexistence certificates for (stratum, label, Psi shape, d).

A datum ``(r, u, s_1, ..., s_m)`` has branch points at ``((t-1)/m, 0)``;
``r`` is the monodromy along a horizontal loop crossing ``x = 0``, ``u``
along a vertical loop in the last column and ``s_t`` around the t-th point,
with ``s_m ... s_1 = u r u^-1 r^-1`` (rightmost applied first).
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
import os
import random

from .errors import (BadPermutation, BoundExceeded, CertificationFailed,
                     NotTransitive)
from .flat_core import (GridSurface, Stratum, canonical_pair, check_permutation, commutator,
                        compose, cycle_type, inverse, is_transitive)
from .invariants import CONN, component_of, kz_components, normalize_label

DEFAULT_BOUNDS = {"enumerate": 10, "census": 8, "exhaust": 6, "search": 8}


def max_cells(kind):
    """Enumeration bound; STRATUMFORGE_MAX_CELLS overrides every default."""
    env = os.environ.get("STRATUMFORGE_MAX_CELLS")
    return int(env) if env else DEFAULT_BOUNDS[kind]


def _check_bound(n, kind):
    bound = max_cells(kind)
    if n > bound:
        raise BoundExceeded(f"{n} cells exceeds the {kind} bound {bound} "
                            "(set STRATUMFORGE_MAX_CELLS to raise it)")


# ---------------------------------------------------------------------------
# permutations by cycle type


def int_partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in int_partitions(n - k, k):
            yield (k,) + rest


def representative(ctype):
    """The permutation (0 1 .. k1-1)(k1 .. ) of a given cycle type."""
    p = []
    start = 0
    for k in ctype:
        p += [start + (i + 1) % k for i in range(k)]
        start += k
    return tuple(p)


def conjugacy_class(ctype):
    n = sum(ctype)
    rep = representative(ctype)
    seen = set()
    for g in permutations(range(n)):
        seen.add(compose(compose(g, rep), inverse(g)))
    return sorted(seen)


_CLASS_CACHE = {}


def _class(ctype):
    if ctype not in _CLASS_CACHE:
        _CLASS_CACHE[ctype] = conjugacy_class(ctype)
    return _CLASS_CACHE[ctype]


def _orders_of(ctype):
    return tuple(sorted((k - 1 for k in ctype if k > 1), reverse=True))


# ---------------------------------------------------------------------------
# origamis


def _origamis_for_r(args):
    ctype, n, orders = args
    r = representative(ctype)
    found = set()
    for u in permutations(range(n)):
        if orders is not None and _orders_of(cycle_type(commutator(r, u))) != orders:
            continue
        if not is_transitive((r, u), n):
            continue
        found.add(canonical_pair(r, u))
    return found


def enumerate_origamis(N, stratum=None, jobs=1):
    """All connected origamis with N squares up to relabeling, in canonical
    form and sorted, optionally only those in ``stratum``."""
    _check_bound(N, "enumerate")
    if N < 1:
        return []
    if isinstance(stratum, str):
        stratum = Stratum.parse(stratum)
    orders = stratum.orders if stratum is not None else None
    tasks = [(ct, N, orders) for ct in int_partitions(N)]
    found = set()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            for part in ex.map(_origamis_for_r, tasks):
                found |= part
    else:
        for t in tasks:
            found |= _origamis_for_r(t)
    return [GridSurface(r, u) for r, u in sorted(found)]


def label_of(s):
    if s.genus < 2:
        return CONN
    return component_of(s).tag


def census(N, jobs=1):
    """Counter {(stratum, label): count} over origamis with exactly N squares."""
    _check_bound(N, "census")
    out = Counter()
    for s in enumerate_origamis(N, jobs=jobs):
        out[(s.stratum, label_of(s))] += 1
    return out


def census_csv(N, jobs=1):
    """CSV rows for every n <= N."""
    _check_bound(N, "census")
    lines = ["stratum,label,N,count"]
    for n in range(1, N + 1):
        table = census(n, jobs)
        for (st, lab), c in sorted(table.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
            lines.append(f"\"{st}\",{lab},{n},{c}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# monodromy data


@dataclass(frozen=True)
class MonodromyDatum:
    d: int
    r: tuple
    u: tuple
    sigmas: tuple

    def __post_init__(self):
        d = self.d
        check_permutation(self.r, d)
        check_permutation(self.u, d)
        for s in self.sigmas:
            check_permutation(s, d)
        prod = tuple(range(d))
        for s in self.sigmas:
            prod = compose(s, prod)
        if prod != commutator(self.r, self.u):
            raise BadPermutation("branch monodromies do not multiply to [r, u]")
        if not is_transitive((self.r, self.u) + tuple(self.sigmas), d):
            raise NotTransitive("monodromy group is not transitive")

    @property
    def m(self):
        return len(self.sigmas)

    @property
    def positions(self):
        m = max(self.m, 1)
        return tuple((Fraction(t, m), Fraction(0)) for t in range(self.m))

    @property
    def branch_data(self):
        return tuple(cycle_type(s) for s in self.sigmas)

    def columns(self):
        """Monodromy of the vertical loop in each column."""
        m, r, u = self.m, self.r, self.u
        if m == 0:
            return (u,)
        mu = [None] * m
        mu[0] = compose(self.sigmas[0], compose(compose(r, u), inverse(r)))
        for t in range(1, m):
            mu[t] = compose(self.sigmas[t], mu[t - 1])
        assert mu[-1] == u
        return tuple(mu)

    def to_surface(self):
        """Grid surface with one column of cells per branch point."""
        d = self.d
        mu = self.columns()
        m = len(mu)

        def cell(t, s):
            return s * m + t
        rr = [0] * (d * m)
        uu = [0] * (d * m)
        for t in range(m):
            for s in range(d):
                rr[cell(t, s)] = cell(t + 1, s) if t < m - 1 else cell(0, self.r[s])
                uu[cell(t, s)] = cell(t, mu[t][s])
        return GridSurface(tuple(rr), tuple(uu), Fraction(1, m), Fraction(1))

    def canonical(self):
        """Canonical form under simultaneous relabeling of the sheets."""
        gens = (self.r, self.u) + tuple(self.sigmas)
        d = self.d
        best = None
        for start in range(d):
            label = [-1] * d
            label[start] = 0
            order = [start]
            k = 0
            while k < len(order):
                c = order[k]
                k += 1
                for g in gens:
                    x = g[c]
                    if label[x] < 0:
                        label[x] = len(order)
                        order.append(x)
            cand = tuple(tuple(label[g[c]] for c in order) for g in gens)
            if best is None or cand < best:
                best = cand
        return MonodromyDatum(d, best[0], best[1], best[2:])


def datum_of_origami(s):
    """Single-branch-point datum of a plain origami (cells = sheets)."""
    c = commutator(s.r, s.u)
    sig = (c,) if any(c[i] != i for i in range(s.n)) else ()
    return MonodromyDatum(s.n, s.r, s.u, sig)


# moves -----------------------------------------------------------------------


def braid(m, t, inverse_move=False):
    """Swap branch points t and t+1 (0-based)."""
    s = list(m.sigmas)
    a, b = s[t], s[t + 1]
    if not inverse_move:
        s[t], s[t + 1] = b, compose(compose(b, a), inverse(b))
    else:
        s[t], s[t + 1] = compose(compose(inverse(a), b), a), a
    return MonodromyDatum(m.d, m.r, m.u, tuple(s))


def translate(m):
    """Translate the base left by one column: the first branch point crosses
    x = 0 and its monodromy is conjugated by r."""
    if not m.sigmas:
        return m
    r, ri = m.r, inverse(m.r)
    s0 = m.sigmas[0]
    u = compose(ri, compose(s0, compose(r, m.u)))
    s = m.sigmas[1:] + (compose(ri, compose(s0, r)),)
    return MonodromyDatum(m.d, r, u, s)


def twist_h(m, sign=1):
    """Dehn twist along a horizontal curve missing the branch points."""
    rp = m.r if sign > 0 else inverse(m.r)
    return MonodromyDatum(m.d, m.r, compose(m.u, rp), m.sigmas)


def twist_v(m, sign=1):
    """Dehn twist along a vertical curve in the last column."""
    up = m.u if sign > 0 else inverse(m.u)
    return MonodromyDatum(m.d, compose(m.r, up), m.u, m.sigmas)


def moves(m):
    out = []
    for t in range(m.m - 1):
        out.append(braid(m, t))
        out.append(braid(m, t, True))
    out.append(translate(m))
    for sg in (1, -1):
        out.append(twist_h(m, sg))
        out.append(twist_v(m, sg))
    return out


def hurwitz_orbit(m, max_states=10 ** 5):
    """Breadth-first closure under the moves, as sorted canonical data."""
    start = m.canonical()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for y in moves(x):
                y = y.canonical()
                if y not in seen:
                    seen.add(y)
                    if len(seen) > max_states:
                        raise BoundExceeded(f"orbit exceeds {max_states} states")
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda x: (x.r, x.u, x.sigmas))


@dataclass(frozen=True)
class DatumInvariants:
    stratum: Stratum
    label: str
    branch_data: tuple       # sorted cycle types of the branch monodromies
    psi: tuple               # zeros per branch point, sorted
    primitive: bool          # absolute periods span Z + iZ


def invariants_of(m, with_label=True):
    s = m.to_surface()
    data = tuple(sorted(m.branch_data))
    psi = tuple(sorted((sum(1 for k in ct if k > 1) for ct in m.branch_data), reverse=True))
    psi = tuple(x for x in psi if x)
    lab = label_of(s) if with_label else None
    return DatumInvariants(s.stratum, lab, data, psi, s.absolute_period_lattice.is_standard)


# ---------------------------------------------------------------------------
# certification


def branch_data_for(orders, shape, d):
    """All ways to hang the zeros over len(shape) branch points with the given
    numbers of zeros per point, as branch data (partitions of d).

    Returns (feasible, infeasible): lists of (assignment, data); an
    assignment is infeasible when some point needs more than d sheets.
    """
    orders = list(orders)
    shape = sorted(shape, reverse=True)
    k = len(orders)
    feasible, infeasible = [], []
    seen = set()

    def rec(j, groups):
        if j == k:
            if sorted((len(g) for g in groups), reverse=True) != shape:
                return
            key = tuple(sorted(tuple(sorted(orders[i] for i in g)) for g in groups))
            if key in seen:
                return
            seen.add(key)
            parts = [sorted([orders[i] + 1 for i in g], reverse=True) for g in groups]
            sums = [sum(p) for p in parts]
            if max(sums) > d:
                infeasible.append((key, tuple(sums)))
            else:
                data = tuple(tuple(p + [1] * (d - sum(p))) for p in parts)
                feasible.append((key, data))
            return
        for g in groups:
            if len(g) < shape[0]:
                g.append(j)
                rec(j + 1, groups)
                g.pop()
        if len(groups) < len(shape):
            groups.append([j])
            rec(j + 1, groups)
            groups.pop()
    rec(0, [])
    return feasible, infeasible


def naive_minmax(sizes, weights):
    """Reference value by listing every assignment of items to classes."""
    best = None
    l = len(sizes)
    for assign in _assignments(len(weights), sizes):
        loads = [0] * l
        for j, c in enumerate(assign):
            loads[c] += weights[j]
        v = max(loads) if loads else 0
        best = v if best is None else min(best, v)
    return best


def _assignments(k, sizes):
    room = list(sizes)
    pick = [0] * k

    def rec(j):
        if j == k:
            yield tuple(pick)
            return
        for c in range(len(sizes)):
            if room[c]:
                room[c] -= 1
                pick[j] = c
                yield from rec(j + 1)
                room[c] += 1
    yield from rec(0)


def _matches(m, label, stratum):
    s = m.to_surface()
    if s.stratum != stratum:
        return None
    if not s.absolute_period_lattice.is_standard:
        return None
    if label is not None and label_of(s) != label:
        return None
    return s


def _search_data(data, stratum, label, rng, samples):
    """Random search for a datum with branch cycle types ``data``."""
    d = sum(data[0])
    classes = [_class(ct) for ct in data]
    last = data[-1]
    for _ in range(samples):
        r = tuple(rng.sample(range(d), d))
        u = tuple(rng.sample(range(d), d))
        sig = [rng.choice(c) for c in classes[:-1]]
        prod = tuple(range(d))
        for s in sig:
            prod = compose(s, prod)
        s_last = compose(commutator(r, u), inverse(prod))
        if cycle_type(s_last) != last:
            continue
        gens = (r, u) + tuple(sig) + (s_last,)
        if not is_transitive(gens, d):
            continue
        m = MonodromyDatum(d, r, u, tuple(sig) + (s_last,))
        s = _matches(m, label, stratum)
        if s is not None:
            return m, s
    return None


def _exhaust_data(data, stratum, label, limit):
    """Systematic search: r over cycle-type representatives, every u, every
    choice of all but the last branch monodromy."""
    d = sum(data[0])
    classes = [_class(ct) for ct in data]
    last = data[-1]
    count = 0

    def tuples(i):
        if i == len(classes) - 1:
            yield ()
            return
        for s in classes[i]:
            for rest in tuples(i + 1):
                yield (s,) + rest
    for ct in int_partitions(d):
        r = representative(ct)
        for u in permutations(range(d)):
            c = commutator(r, u)
            for sig in tuples(0):
                count += 1
                if count > limit:
                    raise BoundExceeded(f"exhaustive search exceeds {limit} tuples")
                prod = tuple(range(d))
                for s in sig:
                    prod = compose(s, prod)
                s_last = compose(c, inverse(prod))
                if cycle_type(s_last) != last:
                    continue
                if not is_transitive((r, u) + sig + (s_last,), d):
                    continue
                m = MonodromyDatum(d, r, u, sig + (s_last,))
                s = _matches(m, label, stratum)
                if s is not None:
                    return m, s
    return None


@dataclass(frozen=True)
class Certificate:
    exists: bool
    stratum: Stratum
    label: str
    shape: tuple
    d: int
    witness: object          # MonodromyDatum or None
    surface: object          # GridSurface or None
    branch_data: tuple       # feasible branch data examined
    infeasible: tuple        # (assignment, class sheet counts) that overflow d
    method: str

    def to_json(self):
        out = {"exists": self.exists, "stratum": str(self.stratum), "label": self.label,
               "psi": list(self.shape), "d": self.d, "method": self.method,
               "branch_data": [[list(p) for p in D] for D in self.branch_data],
               "infeasible": [{"classes": [list(g) for g in a], "sheets": list(s)}
                              for a, s in self.infeasible]}
        if self.surface is not None:
            out["witness"] = self.surface.to_text()
            out["monodromy"] = {"r": list(self.witness.r), "u": list(self.witness.u),
                                "sigmas": [list(s) for s in self.witness.sigmas]}
        return out


def find_witness(stratum, label, shape, d, seed=0, samples=20000, exhaust_limit=2 * 10 ** 6):
    """Search all branch data compatible with (stratum, shape, d).

    Returns (witness datum, surface, feasible data, infeasible, method);
    witness is None when nothing was found.  ``label=None`` accepts any
    component.
    """
    if isinstance(stratum, str):
        stratum = Stratum.parse(stratum)
    feasible, infeasible = branch_data_for(stratum.orders, shape, d)
    datas = [D for _, D in feasible]
    if not datas:
        return None, None, (), tuple(infeasible), "no branch data fits"
    if label is not None:
        label = normalize_label(stratum, label)
    rng = random.Random(seed)
    for D in datas:
        hit = _search_data(D, stratum, label, rng, samples)
        if hit:
            return hit[0], hit[1], tuple(datas), tuple(infeasible), "random search"
    for D in datas:
        hit = _exhaust_data(D, stratum, label, exhaust_limit)
        if hit:
            return hit[0], hit[1], tuple(datas), tuple(infeasible), "exhaustive search"
    return None, None, tuple(datas), tuple(infeasible), "exhaustive search"


def certify(stratum, label, shape, d, expect_exists, **kw):
    """Witness or exhaustion certificate; CertificationFailed if the
    expectation is contradicted."""
    if isinstance(stratum, str):
        stratum = Stratum.parse(stratum)
    shape = tuple(sorted(shape, reverse=True))
    if sum(shape) != len(stratum.orders):
        raise CertificationFailed(f"Psi shape {shape} does not partition the zeros of {stratum}")
    if label is not None and normalize_label(stratum, label) not in kz_components(stratum):
        raise CertificationFailed(f"{stratum} has no component {label}")
    feasible, _ = branch_data_for(stratum.orders, shape, d)
    _check_bound(d, "search" if expect_exists or not feasible else "exhaust")
    m, s, datas, infeasible, method = find_witness(stratum, label, shape, d, **kw)
    cert = Certificate(m is not None, stratum, label, shape, d, m, s, datas, infeasible, method)
    if cert.exists != bool(expect_exists):
        raise CertificationFailed(
            f"{stratum} {label} Psi={shape} d={d}: expected "
            f"{'existence' if expect_exists else 'nonexistence'}, found "
            f"{'a witness' if cert.exists else 'none'} ({method})")
    return cert


def exists(stratum, shape, d, **kw):
    """Whether some surface (any component) has the given data."""
    m, *_ = find_witness(stratum, None, tuple(sorted(shape, reverse=True)), d, **kw)
    return m is not None


def candidate_branch_data(d, max_points, max_genus=None):
    """Multisets of nontrivial partitions of d with even total ramification."""
    parts = [p for p in int_partitions(d) if p[0] > 1]
    out = []

    def rec(start, chosen, ram):
        if chosen and ram % 2 == 0 and (max_genus is None or ram // 2 + 1 <= max_genus):
            out.append(tuple(chosen))
        if len(chosen) == max_points:
            return
        for i in range(start, len(parts)):
            rec(i, chosen + [parts[i]], ram + sum(k - 1 for k in parts[i]))
    rec(0, [], 0)
    return out


def stratum_of_data(D):
    orders = [k - 1 for p in D for k in p if k > 1]
    shape = tuple(sorted((sum(1 for k in p if k > 1) for p in D), reverse=True))
    return Stratum(orders), shape


def certify_branch_data(D, label, seed=0, samples=20000):
    """Existence of a cover with exactly branch data D in the component."""
    st, _ = stratum_of_data(D)
    lab = normalize_label(st, label)
    rng = random.Random(seed)
    D = tuple(tuple(p) for p in D)
    hit = _search_data(D, st, lab, rng, samples)
    method = "random search"
    if hit is None:
        hit = _exhaust_data(D, st, lab, 2 * 10 ** 6)
        method = "exhaustive search"
    if hit is None:
        raise CertificationFailed(f"no cover with branch data {D} in {st} {label}")
    return hit[0], hit[1], method


__all__ = ["MonodromyDatum", "Certificate", "enumerate_origamis", "census", "census_csv",
           "hurwitz_orbit", "certify", "find_witness", "exists", "branch_data_for",
           "naive_minmax", "candidate_branch_data", "certify_branch_data", "invariants_of",
           "datum_of_origami", "stratum_of_data", "moves", "braid", "translate", "twist_h", "twist_v", "label_of",
           "max_cells", "int_partitions"]
