"""Genus-two surfaces with prescribed (possibly irrational) periods, glued
from polygons with exact vertex coordinates.

H(2): a torus with lattice ``chi(a_1), chi(b_1)`` is slit along a segment of
holonomy ``chi(a_2)`` and a cylinder (the parallelogram on ``chi(a_2),
chi(b_2)`` with its ``b_2`` sides glued) is sewn into the slit.

H(1,1): the tori of ``(a_1, b_1)`` and ``(a_2, b_2)`` are both slit along a
segment of holonomy ``chi(delta)`` and the slits are glued crosswise.

A torus slit along ``w`` is triangulated so that the slit is an edge: a basis
``f_1, f_2`` of the lattice is found (by the Farey / subtractive Euclid
descent) in which ``w`` lies inside the parallelogram on ``f_1, f_2``, and the
parallelogram is coned off from ``w``.
"""
from dataclasses import dataclass, field
import math

from ..errors import InconsistentGluing, NotNormalized, WrongGenus
from ..exact import RATIONALS, det, vadd, vneg, vsub
from ..flat_core import Stratum


@dataclass(frozen=True)
class PolygonSurface:
    polygons: tuple          # vertex tuples, counterclockwise
    gluing: dict = field(hash=False)   # (poly, edge) -> (poly, edge); edge i runs v_i -> v_{i+1}
    basis: object = field(default=RATIONALS, compare=False)

    def edge(self, p, i):
        poly = self.polygons[p]
        return vsub(poly[(i + 1) % len(poly)], poly[i])

    @property
    def edges(self):
        return [(p, i) for p, poly in enumerate(self.polygons) for i in range(len(poly))]


class _Builder:
    def __init__(self, basis):
        self.basis = basis
        self.polygons = []
        self.gluing = {}

    def add(self, verts):
        self.polygons.append(tuple(verts))
        return len(self.polygons) - 1

    def glue(self, x, y):
        self.gluing[x] = y
        self.gluing[y] = x

    def surface(self):
        return PolygonSurface(tuple(self.polygons), dict(self.gluing), self.basis)


# ---------------------------------------------------------------------------
# slit tori


def _coords(f1, f2, w):
    """(A, B, D) with w = (A f1 + B f2) / D and D > 0."""
    D = det(f1, f2)
    if D.sign() < 0:
        return -det(w, f2), -det(f1, w), -D
    return det(w, f2), det(f1, w), D


def _quotient(x, y):
    """floor(x / y) for positive exact x, y."""
    lo, hi = x.interval(30)
    lo2, hi2 = y.interval(30)
    q = max(int(math.floor(lo / hi2)) if hi2 > 0 else 0, 0)
    while (x - y * (q + 1)).sign() >= 0:
        q += 1
    while q and (x - y * q).sign() < 0:
        q -= 1
    return q


def _slit_torus(bld, e1, e2, w, origin):
    """Add a torus with lattice <e1, e2> slit along a segment of holonomy w.

    Returns the two slit sides ``(plus, minus)``: ``plus`` runs along +w with
    the torus on its left, ``minus`` along -w.
    """
    if w[0].is_zero() and w[1].is_zero():
        raise NotNormalized("slit of zero length")
    f1, f2 = e1, e2
    A, B, D = _coords(f1, f2, w)
    if A.sign() < 0:
        f1 = vneg(f1)
    if B.sign() < 0:
        f2 = vneg(f2)
    A, B, D = _coords(f1, f2, w)
    for _ in range(10000):
        if A.is_zero() or B.is_zero():
            g, h, t = (f2, f1, B) if A.is_zero() else (f1, f2, A)
            if (t - D).sign() >= 0:
                raise NotNormalized("the slit closes up on a lattice vector: not embedded")
            return _degenerate(bld, g, h, w, origin)
        if (A - D).sign() < 0 and (B - D).sign() < 0:
            return _generic(bld, f1, f2, w, origin)
        if (A - B).sign() >= 0:
            q = _quotient(A, B)
            f2 = vadd(f2, tuple(q * x for x in f1))
        else:
            q = _quotient(B, A)
            f1 = vadd(f1, tuple(q * x for x in f2))
        A, B, D = _coords(f1, f2, w)
    raise NotNormalized("slit reduction did not terminate")


def _shift(origin, v):
    return vadd(origin, v)


def _generic(bld, f1, f2, w, o):
    if det(f1, f2).sign() < 0:
        f1, f2 = f2, f1
    O, P, Q, R, X = o, _shift(o, f1), _shift(o, vadd(f1, f2)), _shift(o, f2), _shift(o, w)
    t0 = bld.add((O, P, X))
    t1 = bld.add((P, Q, X))
    t2 = bld.add((Q, R, X))
    t3 = bld.add((R, O, X))
    bld.glue((t0, 0), (t2, 0))
    bld.glue((t1, 0), (t3, 0))
    bld.glue((t0, 1), (t1, 2))
    bld.glue((t1, 1), (t2, 2))
    bld.glue((t2, 1), (t3, 2))
    return (t3, 1), (t0, 2)


def _degenerate(bld, g, h, w, o):
    """w = t g with 0 < t < 1 along a primitive lattice vector g."""
    if det(g, h).sign() < 0:
        h = vneg(h)
    O, W, G = o, _shift(o, w), _shift(o, g)
    q1 = bld.add((O, W, vadd(W, h), _shift(o, h)))
    q2 = bld.add((W, G, vadd(G, h), vadd(W, h)))
    bld.glue((q1, 1), (q2, 3))
    bld.glue((q1, 3), (q2, 1))
    bld.glue((q2, 0), (q2, 2))
    return (q1, 0), (q1, 2)


# ---------------------------------------------------------------------------
# builders


def _re(v):
    return abs(v[0])


def check_normalization(chi, stratum):
    """Raise NotNormalized unless the positivity and real-part inequalities
    required by the two genus-two constructions hold."""
    for i in range(2):
        if det(chi.a[i], chi.b[i]).sign() <= 0:
            raise NotNormalized(f"det(chi(a_{i + 1}), chi(b_{i + 1})) must be positive")
    if stratum.orders == (2,):
        if not _re(chi.b[1]) < _re(chi.a[0]):
            raise NotNormalized("need |Re chi(b_2)| < |Re chi(a_1)|")
    else:
        d = chi.rel[0]
        if d[0].is_zero() or not (_re(d) < _re(chi.a[0]) and _re(d) < _re(chi.a[1])):
            raise NotNormalized("need 0 < |Re chi(delta)| < min |Re chi(a_i)|")


def build_genus2(chi, stratum, strict=True):
    """Polygon surface in H(2) or H(1,1) with period map chi.

    With ``strict`` the normalization inequalities are enforced up front;
    otherwise only what the construction needs (positive determinants and an
    embedded slit) is required.
    """
    if isinstance(stratum, str):
        stratum = Stratum.parse(stratum)
    if chi.genus != 2 or stratum.genus != 2:
        raise WrongGenus(f"genus-two construction, got genus {chi.genus}")
    if tuple(sorted(chi.orders, reverse=True)) != stratum.orders:
        raise WrongGenus(f"cocycle orders {chi.orders} do not match {stratum}")
    if strict:
        check_normalization(chi, stratum)
    else:
        for i in range(2):
            if det(chi.a[i], chi.b[i]).sign() <= 0:
                raise NotNormalized(f"det(chi(a_{i + 1}), chi(b_{i + 1})) must be positive")
    bld = _Builder(chi.basis)
    zero = chi.basis.const(0)
    o = (zero, zero)
    a1, b1, a2, b2 = chi.a[0], chi.b[0], chi.a[1], chi.b[1]
    if stratum.orders == (2,):
        plus, minus = _slit_torus(bld, a1, b1, a2, o)
        # the cylinder, placed to the right of the torus pieces
        off = (_re(a1) + _re(b1) + _re(a2) + 1, zero)
        c = bld.add((off, vadd(off, a2), vadd(vadd(off, a2), b2), vadd(off, b2)))
        bld.glue((c, 1), (c, 3))
        bld.glue((c, 0), minus)
        bld.glue((c, 2), plus)
    else:
        delta = chi.rel[0]
        p1, m1 = _slit_torus(bld, a1, b1, delta, o)
        off = (_re(a1) + _re(b1) + _re(delta) + 1, zero)
        p2, m2 = _slit_torus(bld, a2, b2, delta, off)
        bld.glue(p1, m2)
        bld.glue(m1, p2)
    return bld.surface()


# ---------------------------------------------------------------------------
# verification


def _upper(v):
    s = v[1].sign()
    return s > 0 or (s == 0 and v[0].sign() > 0)


def _before(v, w):
    """Angle of v strictly less than angle of w, both taken in [0, 2 pi)."""
    uv, uw = _upper(v), _upper(w)
    if uv != uw:
        return uv
    return det(v, w).sign() > 0


def _is_east(v):
    return v[1].is_zero() and v[0].sign() > 0


def _crosses_east(d_out, d_back):
    """Whether the half-open sector [d_out, d_back) contains the east direction."""
    if _is_east(d_out):
        return True
    return not _is_east(d_back) and _before(d_back, d_out)


def verify_polygon_surface(p):
    """(Stratum, exact area) of a polygon surface; checks the gluing."""
    edges = p.edges
    g = p.gluing
    for e in edges:
        if e not in g or g[e] == e or g.get(g[e]) != e:
            raise InconsistentGluing(f"edge {e} is not paired by a fixed-point-free involution")
        v, w = p.edge(*e), p.edge(*g[e])
        if not ((v[0] + w[0]).is_zero() and (v[1] + w[1]).is_zero()):
            raise InconsistentGluing(f"edges {e} and {g[e]} have different holonomy")
    if len(g) != len(edges):
        raise InconsistentGluing("gluing mentions unknown edges")
    area = p.basis.const(0)
    for k, poly in enumerate(p.polygons):
        m = len(poly)
        twice = p.basis.const(0)
        for i in range(m):
            twice = twice + det(poly[i], poly[(i + 1) % m])
        if twice.sign() <= 0:
            raise InconsistentGluing(f"polygon {k} is not counterclockwise")
        for i in range(m):
            turn = det(p.edge(k, i - 1 if i else m - 1), p.edge(k, i))
            if turn.sign() < 0:
                raise InconsistentGluing(f"polygon {k} is not convex")
        area = area + twice / 2
    # corners: corner (k, i) sits at vertex i of polygon k
    seen = set()
    counts = []
    for k, poly in enumerate(p.polygons):
        for i in range(len(poly)):
            if (k, i) in seen:
                continue
            turns = 0
            c = (k, i)
            while c not in seen:
                seen.add(c)
                q, j = c
                m = len(p.polygons[q])
                d_out = p.edge(q, j)
                d_back = vneg(p.edge(q, (j - 1) % m))
                turns += _crosses_east(d_out, d_back)
                c = g[(q, (j - 1) % m)]
            counts.append(turns)
    if any(t == 0 for t in counts):
        raise InconsistentGluing("a vertex with no total angle")
    V, E, F = len(counts), len(edges) // 2, len(p.polygons)
    chi_top = V - E + F
    if chi_top % 2:
        raise InconsistentGluing("odd Euler characteristic")
    genus = (2 - chi_top) // 2
    orders = [t - 1 for t in counts if t > 1]
    if sum(orders) != 2 * genus - 2 and not (genus == 1 and not orders):
        raise InconsistentGluing(f"cone angles {counts} disagree with genus {genus}")
    return Stratum(orders), area


def torus_of_squares(k):
    """k unit squares in a row glued into a flat torus (area k)."""
    bld = _Builder(RATIONALS)
    one, zero = RATIONALS.const(1), RATIONALS.const(0)
    for i in range(k):
        x = RATIONALS.const(i)
        bld.add(((x, zero), (x + one, zero), (x + one, one), (x, one)))
    for i in range(k):
        bld.glue((i, 0), (i, 2))
        bld.glue((i, 1), ((i + 1) % k, 3))
    return bld.surface()


__all__ = ["PolygonSurface", "build_genus2", "verify_polygon_surface", "check_normalization",
           "torus_of_squares"]
