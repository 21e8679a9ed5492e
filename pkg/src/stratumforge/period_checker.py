"""Relative period cocycles in exact arithmetic and the realizability test.

A cocycle is given on a symplectic basis ``a_i, b_i`` of absolute homology
and on paths ``delta_j`` from the first zero to the j-th one.  Every value is
a pair of :class:`ExactScalar` coordinates.

The realizability test: a cocycle is the period map of some surface in a
given component of ``H(n_1, ..., n_k)`` iff its volume is positive and, when
the absolute periods form a lattice, the volume is at least the covolume
times the smallest achievable ``max_i sum_{j in A_i} (n_j + 1)`` over
partitions ``A`` of the zeros whose class sizes are the sizes of Psi.
The answer never depends on the component.
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
import json

from . import linalg
from .errors import (FormatError, NotInAbsoluteImage, SingularMatrix, SizeMismatch,
                     StratumForgeError)
from .exact import RATIONALS, ExactScalar, RealBasis, _fstr, det, vadd

# ---------------------------------------------------------------------------
# cocycles


@dataclass(frozen=True)
class AbsoluteCocycle:
    genus: int
    a: tuple
    b: tuple
    basis: RealBasis = field(default=RATIONALS, compare=False)


@dataclass(frozen=True)
class ExactCocycle:
    genus: int
    orders: tuple
    a: tuple            # chi(a_i), pairs of ExactScalar
    b: tuple            # chi(b_i)
    rel: tuple          # chi(delta_j) for j = 2..k
    basis: RealBasis = field(default=RATIONALS, compare=False)

    def __post_init__(self):
        if len(self.a) != self.genus or len(self.b) != self.genus:
            raise FormatError(f"need {self.genus} values on each of a_i and b_i")
        if sum(self.orders) != 2 * self.genus - 2:
            raise FormatError(f"orders {self.orders} do not sum to 2g-2 = {2 * self.genus - 2}")
        if any(n < 1 for n in self.orders):
            raise FormatError("zero orders must be positive")
        if len(self.rel) != max(len(self.orders) - 1, 0):
            raise FormatError(f"need {len(self.orders) - 1} relative values")

    @property
    def k(self):
        return len(self.orders)

    @property
    def absolute_values(self):
        return tuple(self.a) + tuple(self.b)

    def positions(self):
        """Developed positions of the zeros, the first one at the origin."""
        zero = (self.basis.const(0), self.basis.const(0))
        return (zero,) + tuple(self.rel) if self.orders else ()


def _vec(basis, v):
    return tuple(x if isinstance(x, ExactScalar) else basis.const(x) for x in v)


def make_cocycle(genus, orders, a, b, rel=(), basis=RATIONALS):
    """Cocycle from plain values; rationals and ExactScalars both accepted."""
    return ExactCocycle(genus, tuple(orders), tuple(_vec(basis, v) for v in a),
                        tuple(_vec(basis, v) for v in b), tuple(_vec(basis, v) for v in rel),
                        basis)


def restrict(chi):
    """Drop the relative values."""
    return AbsoluteCocycle(chi.genus, tuple(chi.a), tuple(chi.b), chi.basis)


def volume(chi):
    """V(chi) = sum of det(chi(a_i), chi(b_i))."""
    total = chi.basis.const(0)
    for x, y in zip(chi.a, chi.b):
        total = total + det(x, y)
    return total


# ---------------------------------------------------------------------------
# the absolute image as a subgroup of R^2


@dataclass(frozen=True)
class LatticeInfo:
    basis: tuple             # two generators
    covolume: ExactScalar


@dataclass(frozen=True)
class NotLattice:
    rank: int
    reason: str

    def __bool__(self):
        return False


class _Module:
    """The Z-module generated by some plane vectors, as integer rows."""

    def __init__(self, basis, gens, extra=()):
        monos = set()
        for v in list(gens) + list(extra):
            for x in v:
                monos.update(m for m, _ in x.terms)
        self.basis = basis
        self.monos = sorted(monos)
        rows = [self.coords(v) for v in gens]
        extra_rows = [self.coords(v) for v in extra]
        _, den = linalg.integerize(rows + extra_rows) if rows or extra_rows else ([], 1)
        self.den = den
        self.hnf = linalg.hermite_normal_form([self._int(r) for r in rows]) if rows else []

    def coords(self, v):
        out = []
        for x in v:
            d = dict(x.terms)
            out += [d.get(m, Fraction(0)) for m in self.monos]
        return out

    def _int(self, row):
        return [int(Fraction(x) * self.den) for x in row]

    def contains(self, v):
        row = [Fraction(x) * self.den for x in self.coords(v)]
        if any(x.denominator != 1 for x in row):
            return False
        if not self.hnf:
            return not any(row)
        return linalg.hnf_contains(self.hnf, row)

    def vector(self, row):
        m = len(self.monos)
        xs = {mono: Fraction(c, self.den) for mono, c in zip(self.monos, row[:m])}
        ys = {mono: Fraction(c, self.den) for mono, c in zip(self.monos, row[m:])}
        return (ExactScalar(self.basis, xs), ExactScalar(self.basis, ys))


def _absolute_module(chi, extra=()):
    return _Module(chi.basis, chi.absolute_values, extra)


def is_lattice(chi):
    """LatticeInfo when the absolute periods form a lattice, else NotLattice.

    Under the independence assumption the subgroup is isomorphic to the
    Z-module of coefficient vectors, so it is a lattice iff that module has
    rank 2 and its two generators are not parallel.
    """
    mod = _absolute_module(chi)
    rank = len(mod.hnf)
    if rank != 2:
        why = "rank above 2: not discrete" if rank > 2 else "rank below 2: not cocompact"
        return NotLattice(rank, why)
    v, w = mod.vector(mod.hnf[0]), mod.vector(mod.hnf[1])
    d = det(v, w)
    s = d.sign()
    if s == 0:
        return NotLattice(2, "generators are parallel: real span has dimension 1")
    if s < 0:
        w = (-w[0], -w[1])
        d = -d
    return LatticeInfo((v, w), d)


# ---------------------------------------------------------------------------
# Psi


@dataclass(frozen=True)
class PsiPartition:
    classes: tuple           # tuples of 0-based zero indices

    @property
    def shape(self):
        return tuple(sorted((len(c) for c in self.classes), reverse=True))


def psi_of_cocycle(chi):
    """Zeros i ~ j iff chi(delta_i) - chi(delta_j) lies in the absolute image."""
    pos = chi.positions()
    diffs = [(p[0] - q[0], p[1] - q[1]) for p in pos for q in pos]
    mod = _absolute_module(chi, diffs)
    classes = []
    for j, p in enumerate(pos):
        for cl in classes:
            q = pos[cl[0]]
            if mod.contains((p[0] - q[0], p[1] - q[1])):
                cl.append(j)
                break
        else:
            classes.append([j])
    return PsiPartition(tuple(tuple(c) for c in classes))


# ---------------------------------------------------------------------------
# min-max assignment


def minmax_assignment(sizes, weights):
    """Partition item indices into classes of the given sizes minimizing the
    largest class weight.

    Returns ``(classes, value)``; classes follow the order of ``sizes`` and
    among optimal assignments the one whose class-of-item vector is
    lexicographically smallest is returned.
    """
    sizes = [int(c) for c in sizes]
    weights = [int(w) for w in weights]
    if sum(sizes) != len(weights) or any(c <= 0 for c in sizes):
        raise SizeMismatch(f"class sizes {sizes} do not partition {len(weights)} items")
    if any(w <= 0 for w in weights):
        raise SizeMismatch("weights must be positive")
    if not weights:
        return (), 0
    value = _minmax_value(sizes, weights)
    classes = _lex_smallest(sizes, weights, value)
    return classes, value


def _minmax_value(sizes, weights):
    items = sorted(weights, reverse=True)
    l = len(sizes)
    total = sum(items)
    # lower bounds: the heaviest item, and the best conceivable spread
    lower = max(items[0], -(-total // l))
    best = [sum(items[:max(sizes)]) if l == 1 else _greedy(sizes, items)]
    load = [0] * l
    room = list(sizes)

    def dfs(i, cur):
        if cur >= best[0]:
            return
        if i == len(items):
            best[0] = cur
            return
        w = items[i]
        seen = set()
        for c in range(l):
            if not room[c]:
                continue
            key = (load[c], room[c])
            if key in seen:        # interchangeable classes
                continue
            seen.add(key)
            # equal weights go to classes in nondecreasing order
            if i and items[i - 1] == w and c < last[i - 1]:
                continue
            load[c] += w
            room[c] -= 1
            last[i] = c
            dfs(i + 1, max(cur, load[c]))
            load[c] -= w
            room[c] += 1
            if best[0] == lower:
                return
    last = [0] * len(items)
    dfs(0, 0)
    return best[0]


def _greedy(sizes, items):
    load = [0] * len(sizes)
    room = list(sizes)
    for w in items:
        c = min((c for c in range(len(sizes)) if room[c]), key=lambda c: (load[c], -room[c]))
        load[c] += w
        room[c] -= 1
    return max(load)


def _lex_smallest(sizes, weights, value):
    l, k = len(sizes), len(weights)
    load = [0] * l
    room = list(sizes)
    pick = [0] * k
    # suffix data for pruning: remaining items must fit
    suffix_max = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_max[i] = max(suffix_max[i + 1], weights[i])

    def dfs(i):
        if i == k:
            return True
        free = sum(value - load[c] for c in range(l) if room[c])
        if free < sum(weights[i:]):
            return False
        for c in range(l):
            if room[c] and load[c] + weights[i] <= value:
                load[c] += weights[i]
                room[c] -= 1
                pick[i] = c
                if dfs(i + 1):
                    return True
                load[c] -= weights[i]
                room[c] += 1
        return False
    if not dfs(0):
        raise StratumForgeError("internal error: optimal value not attained")
    return tuple(tuple(j for j in range(k) if pick[j] == c) for c in range(l))


# ---------------------------------------------------------------------------
# the decision procedure


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    failing: str                 # None, "volume" or "inequality"
    volume: ExactScalar
    lattice: object              # LatticeInfo or NotLattice
    area: ExactScalar            # covolume, None if not a lattice
    degree: int                  # V / Area in the lattice case
    psi: PsiPartition
    witness: tuple               # classes of zero indices (lattice case)
    witness_value: int
    component_independent: bool = True

    def to_json(self):
        lat = self.lattice
        out = {
            "realizable": self.realizable,
            "failing_condition": self.failing,
            "V": self.volume.to_json(),
            "V_approx": float(self.volume),
            "lattice": bool(lat),
            "psi": list(self.psi.shape),
            "psi_classes": [[j + 1 for j in c] for c in self.psi.classes],
            "component_independent": True,
        }
        if lat:
            out["area"] = self.area.to_json()
            out["lattice_basis"] = [[x.to_json() for x in v] for v in lat.basis]
            out["d"] = self.degree
            out["witness_partition"] = [[j + 1 for j in c] for c in self.witness]
            out["witness_value"] = self.witness_value
        else:
            out["lattice_rank"] = lat.rank
            out["lattice_reason"] = lat.reason
        return out


def _ratio(v, area):
    """Exact rational v / area, or None when v is not a rational multiple."""
    if area.is_zero():
        return None
    m, c = area.terms[0]
    q = v.coefficient(m) / c
    return q if v == area * q else None


def realizability_check(chi):
    V = volume(chi)
    psi = psi_of_cocycle(chi)
    lat = is_lattice(chi)
    if V.sign() <= 0:
        return RealizabilityVerdict(False, "volume", V, lat, getattr(lat, "covolume", None),
                                    None, psi, (), None)
    if not lat:
        return RealizabilityVerdict(True, None, V, lat, None, None, psi, (), None)
    q = _ratio(V, lat.covolume)
    if q is None or q.denominator != 1:
        raise StratumForgeError(f"V / Area = {V} / {lat.covolume} is not an integer")
    d = int(q)
    sizes = [len(c) for c in psi.classes]
    weights = [n + 1 for n in chi.orders]
    classes, value = minmax_assignment(sizes, weights)
    ok = d >= value
    return RealizabilityVerdict(ok, None if ok else "inequality", V, lat, lat.covolume, d,
                                psi, classes, value)


# ---------------------------------------------------------------------------
# group actions


def _matrix(A):
    (p, q), (r, s) = A
    A = ((Fraction(p), Fraction(q)), (Fraction(r), Fraction(s)))
    dA = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    if dA <= 0:
        raise SingularMatrix(f"det A = {dA}; need a positive determinant")
    return A


def _apply(A, v):
    return (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])


def gl2_act(A, chi):
    """Postcompose every value with the rational matrix A (det A > 0)."""
    A = _matrix(A)
    return replace(chi, a=tuple(_apply(A, v) for v in chi.a),
                   b=tuple(_apply(A, v) for v in chi.b),
                   rel=tuple(_apply(A, v) for v in chi.rel))


def point_push(chi, psi):
    """chi + psi for a relative-only cocycle psi with values in the absolute
    image; ``psi`` is a list of vectors (one per delta_j) or an ExactCocycle
    vanishing on a_i, b_i."""
    if isinstance(psi, ExactCocycle):
        if any(x for v in psi.absolute_values for x in v):
            raise NotInAbsoluteImage("psi does not vanish on absolute homology")
        shifts = psi.rel
    else:
        shifts = tuple(_vec(chi.basis, v) for v in psi)
    if len(shifts) != len(chi.rel):
        raise SizeMismatch(f"need {len(chi.rel)} relative shifts")
    mod = _absolute_module(chi, shifts)
    for j, v in enumerate(shifts):
        if not mod.contains(v):
            raise NotInAbsoluteImage(f"psi(delta_{j + 2}) = {v} is not an absolute period")
    return replace(chi, rel=tuple(vadd(x, y) for x, y in zip(chi.rel, shifts)))


# ---------------------------------------------------------------------------
# surfaces


def cocycle_of_surface(s):
    """Periods of a grid surface on its computed symplectic basis, and on
    paths from the first zero to the others."""
    basis = s.homology_symplectic_basis()
    a = tuple(s.chain_period(c.chain) for c in basis.a)
    b = tuple(s.chain_period(c.chain) for c in basis.b)
    pos = s.cell_positions
    marks = s.zero_marks
    corner = {}
    for c in range(s.n):
        corner.setdefault(s.vertex(c), pos[c])
    p0 = corner[marks[0][0]] if marks else None
    rel = tuple((corner[v][0] - p0[0], corner[v][1] - p0[1]) for v, _ in marks[1:])
    return make_cocycle(s.genus, [o for _, o in marks], a, b, rel)


# ---------------------------------------------------------------------------
# JSON


def _scalar_from(basis, x):
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return basis.const(Fraction(x))
    if isinstance(x, list):
        try:
            return basis.scalar([Fraction(c) for c in x])
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(f"bad scalar {x!r}: {e}") from None
    if isinstance(x, dict):
        try:
            return basis.scalar(x)
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(f"bad scalar {x!r}: {e}") from None
    raise FormatError(f"bad scalar {x!r}")


def _basis_from(spec):
    if spec is None:
        return RATIONALS
    names, values = [], []
    for item in spec:
        if isinstance(item, dict):
            names.append(str(item["name"]))
            values.append(str(item.get("value", item["name"])))
        elif isinstance(item, str) and "=" in item:
            n, v = item.split("=", 1)
            names.append(n.strip())
            values.append(v.strip())
        elif isinstance(item, str):
            names.append(item)
            values.append(item)
        else:
            raise FormatError(f"bad basis real {item!r}")
    try:
        return RealBasis(names, values)
    except Exception as e:   # sympy parse errors come in several types
        raise FormatError(f"bad basis reals: {e}") from None


def cocycle_from_json(text):
    try:
        data = json.loads(text) if isinstance(text, str) else text
        basis = _basis_from(data.get("basis_reals"))

        def vecs(key):
            out = []
            for v in data.get(key, []):
                if len(v) != 2:
                    raise FormatError(f"{key}: each value needs two coordinates")
                out.append(tuple(_scalar_from(basis, x) for x in v))
            return tuple(out)
        return ExactCocycle(int(data["genus"]), tuple(int(n) for n in data["orders"]),
                            vecs("a"), vecs("b"), vecs("rel"), basis)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise FormatError(f"cocycle JSON: {e}") from None


def cocycle_to_json(chi):
    basis = chi.basis

    def vec(v):
        return [x.to_coords() for x in v]
    return json.dumps({
        "genus": chi.genus,
        "orders": list(chi.orders),
        "basis_reals": [{"name": n, "value": v} for n, v in zip(basis.names, basis.values)],
        "a": [vec(v) for v in chi.a],
        "b": [vec(v) for v in chi.b],
        "rel": [vec(v) for v in chi.rel],
    }, indent=1)


__all__ = ["ExactCocycle", "AbsoluteCocycle", "LatticeInfo", "NotLattice", "PsiPartition",
           "RealizabilityVerdict", "make_cocycle", "restrict", "volume", "is_lattice",
           "psi_of_cocycle", "minmax_assignment", "realizability_check", "gl2_act", "point_push",
           "cocycle_of_surface", "cocycle_from_json", "cocycle_to_json", "_fstr"]
