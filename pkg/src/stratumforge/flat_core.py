"""Grid surfaces: square-tiled surfaces over a refined rectangular grid.

A :class:`GridSurface` is given by two permutations of its cells, ``r`` (the
cell to the right) and ``u`` (the cell above), plus the width and height of a
cell.  Cells are numbered from 0 in the Python API and from 1 in the text
formats.  Vertices are classes of cell corners; a vertex whose corner cycle
has length ``4(n + 1)`` is a zero of order ``n``.

Homology is computed on the dual graph (cell centres joined across edges),
whose cycles never meet a vertex.  Dual edge ``R_i`` goes from cell ``i`` to
``r[i]`` and has index ``i``; dual edge ``U_i`` goes from ``i`` to ``u[i]``
and has index ``n + i``.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import json
import re

from . import linalg
from .errors import (BadPermutation, FormatError, NotPrimitive, NotTransitive,
                     RankDeficient)

# corner types
BL, BR, TR, TL = range(4)


# ---------------------------------------------------------------------------
# permutations

def check_permutation(p, n):
    p = tuple(int(x) for x in p)
    if len(p) != n or sorted(p) != list(range(n)):
        raise BadPermutation(f"not a permutation of {n} cells: {p}")
    return p


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def compose(p, q):
    """(p o q)(i) = p(q(i))."""
    return tuple(p[x] for x in q)


def commutator(r, u):
    """The permutation u r u^-1 r^-1 (rightmost applied first).

    Its cycles on cells are exactly the bottom-left corners around each
    vertex of the origami (r, u).
    """
    ri, ui = inverse(r), inverse(u)
    return tuple(u[r[ui[ri[i]]]] for i in range(len(r)))


def cycle_type(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            out.append(k)
    return tuple(sorted(out, reverse=True))


def from_cycles(text, n):
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"``."""
    p = list(range(n))
    for cyc in re.findall(r"\(([^)]*)\)", text):
        items = [int(x) - 1 for x in re.split(r"[\s,]+", cyc.strip()) if x]
        for a, b in zip(items, items[1:] + items[:1]):
            p[a] = b
    return check_permutation(p, n)


def is_transitive(perms, n):
    if n == 0:
        return False
    seen = {0}
    todo = [0]
    while todo:
        c = todo.pop()
        for p in perms:
            x = p[c]
            if x not in seen:
                seen.add(x)
                todo.append(x)
    return len(seen) == n


# ---------------------------------------------------------------------------
# small value types

@dataclass(frozen=True, order=True)
class Stratum:
    orders: tuple

    def __post_init__(self):
        o = tuple(sorted((int(x) for x in self.orders), reverse=True))
        if any(x < 1 for x in o) or sum(o) % 2:
            raise FormatError(f"not a stratum: {self.orders}")
        object.__setattr__(self, "orders", o)

    @property
    def genus(self):
        return sum(self.orders) // 2 + 1

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*H\s*\(([\d,\s]*)\)\s*", text)
        if not m:
            raise FormatError(f"bad stratum string {text!r}")
        body = m.group(1).strip()
        return cls(tuple(int(x) for x in body.split(",")) if body else ())

    def __str__(self):
        return "H(" + ",".join(map(str, self.orders)) + ")"


@dataclass(frozen=True)
class Cylinder:
    rows: tuple          # tuple of rows (each a tuple of cells in r-order), bottom to top
    circumference: Fraction
    height: Fraction
    top: tuple           # saddle-connection ids along the top, left to right
    bottom: tuple        # saddle-connection ids along the bottom

    @property
    def area(self):
        return self.circumference * self.height


@dataclass(frozen=True)
class CylinderDiagram:
    cylinders: tuple
    lengths: dict = field(default_factory=dict)   # saddle connection id -> length

    def __len__(self):
        return len(self.cylinders)


@dataclass(frozen=True)
class Lattice:
    basis: tuple         # two generators, each a pair of Fractions
    covolume: Fraction

    @property
    def is_standard(self):
        return self.covolume == 1 and all(
            x.denominator == 1 for v in self.basis for x in v)

    def contains(self, v):
        (a, b), (c, d) = self.basis
        det = a * d - b * c
        x = (Fraction(v[0]) * d - Fraction(v[1]) * c) / det
        y = (a * Fraction(v[1]) - b * Fraction(v[0])) / det
        return x.denominator == 1 and y.denominator == 1


@dataclass(frozen=True)
class HomologyCycle:
    """A closed dual chain: integer coefficients over the 2n dual edges."""
    chain: tuple

    def __add__(self, other):
        return HomologyCycle(tuple(a + b for a, b in zip(self.chain, other.chain)))

    def __sub__(self, other):
        return HomologyCycle(tuple(a - b for a, b in zip(self.chain, other.chain)))

    def __neg__(self):
        return HomologyCycle(tuple(-a for a in self.chain))

    def __rmul__(self, k):
        return HomologyCycle(tuple(k * a for a in self.chain))


@dataclass(frozen=True)
class SymplecticHomologyBasis:
    a: tuple             # HomologyCycle per handle
    b: tuple
    gram: tuple          # intersection matrix in the order a1, b1, a2, b2, ...

    @property
    def cycles(self):
        out = []
        for x, y in zip(self.a, self.b):
            out += [x, y]
        return out


@dataclass(frozen=True)
class BranchProfile:
    zero_positions: dict     # vertex id -> base point (x, y) mod Z^2
    classes: tuple           # tuple of tuples of zero vertex ids sharing a base point
    branch_data: tuple       # per branch point: partition of the degree
    degree: int

    @property
    def psi(self):
        return tuple(sorted((len(c) for c in self.classes), reverse=True))


# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GridSurface:
    r: tuple
    u: tuple
    scale_x: Fraction = Fraction(1)
    scale_y: Fraction = Fraction(1)

    def __post_init__(self):
        n = len(self.r)
        object.__setattr__(self, "r", check_permutation(self.r, n))
        object.__setattr__(self, "u", check_permutation(self.u, n))
        sx, sy = Fraction(self.scale_x), Fraction(self.scale_y)
        if sx <= 0 or sy <= 0:
            raise ValueError("cell scales must be positive")
        object.__setattr__(self, "scale_x", sx)
        object.__setattr__(self, "scale_y", sy)
        if not is_transitive((self.r, self.u), n):
            raise NotTransitive("cells are not connected by r and u")

    def __eq__(self, other):
        return (isinstance(other, GridSurface) and self.r == other.r and self.u == other.u
                and self.scale_x == other.scale_x and self.scale_y == other.scale_y)

    def __hash__(self):
        return hash((self.r, self.u, self.scale_x, self.scale_y))

    def __repr__(self):
        return (f"GridSurface(n={self.n}, r={self.r}, u={self.u}, "
                f"scale=({self.scale_x}, {self.scale_y}))")

    @property
    def n(self):
        return len(self.r)

    @cached_property
    def r_inv(self):
        return inverse(self.r)

    @cached_property
    def u_inv(self):
        return inverse(self.u)

    @property
    def area(self):
        return self.n * self.scale_x * self.scale_y

    # -- vertices ------------------------------------------------------------

    def next_corner(self, corner):
        """Counterclockwise successor of a corner around its vertex."""
        c, k = divmod(corner, 4)
        if k == BL:
            return 4 * self.r_inv[c] + BR
        if k == BR:
            return 4 * self.u_inv[c] + TR
        if k == TR:
            return 4 * self.r[c] + TL
        return 4 * self.u[c] + BL

    def first_half_edge(self, corner):
        """Half-edge bounding a corner on its clockwise side.

        Half-edges are ``(kind, cell, end)`` with kind ``'H'`` for the bottom
        edge of ``cell`` (oriented east) and ``'V'`` for its left edge
        (oriented north); ``end`` is 0 at the start and 1 at the end.
        """
        c, k = divmod(corner, 4)
        if k == BL:
            return ("H", c, 0)
        if k == BR:
            return ("V", self.r[c], 0)
        if k == TR:
            return ("H", self.u[c], 1)
        return ("V", c, 1)

    @cached_property
    def _vertex_data(self):
        n = self.n
        vid = [-1] * (4 * n)
        cycles = []
        for start in range(4 * n):
            if vid[start] >= 0:
                continue
            cyc = []
            c = start
            while vid[c] < 0:
                vid[c] = len(cycles)
                cyc.append(c)
                c = self.next_corner(c)
            cycles.append(tuple(cyc))
        # rename each vertex by the smallest cell whose bottom-left corner it is
        names = []
        for cyc in cycles:
            names.append(min(c // 4 for c in cyc if c % 4 == BL))
        order = sorted(range(len(cycles)), key=lambda i: names[i])
        remap = {old: names[old] for old in order}
        vid = tuple(remap[v] for v in vid)
        cyc_by_name = {names[i]: cycles[i] for i in range(len(cycles))}
        half_pos = {}
        for name, cyc in cyc_by_name.items():
            for pos, corner in enumerate(cyc):
                half_pos[self.first_half_edge(corner)] = (name, pos)
        return vid, cyc_by_name, half_pos

    def vertex_of_corner(self, cell, corner_type):
        return self._vertex_data[0][4 * cell + corner_type]

    def vertex(self, cell):
        """Vertex at the bottom-left corner of ``cell``."""
        return self._vertex_data[0][4 * cell]

    @property
    def vertices(self):
        return sorted(self._vertex_data[1])

    def corner_cycle(self, v):
        return self._vertex_data[1][v]

    def vertex_order(self, v):
        return len(self._vertex_data[1][v]) // 4 - 1

    def half_edge_position(self, half_edge):
        """(vertex, index) of a half-edge in its vertex's ccw rotation."""
        return self._vertex_data[2][half_edge]

    @cached_property
    def zero_marks(self):
        return tuple((v, self.vertex_order(v)) for v in self.vertices
                     if self.vertex_order(v) >= 1)

    @property
    def zeros(self):
        return tuple(v for v, _ in self.zero_marks)

    @property
    def genus(self):
        chi = len(self._vertex_data[1]) - self.n
        return 1 - chi // 2

    @property
    def stratum(self):
        return Stratum(tuple(o for _, o in self.zero_marks))

    # -- developing map -----------------------------------------------------

    def spanning_tree(self, rng=None):
        """Spanning tree of the dual graph rooted at cell 0.

        Breadth first by default; with ``rng`` (a ``random.Random``) the
        neighbour order is shuffled, giving a different tree.  Returns
        ``(parent, order)`` with ``parent[c] = (edge, sign, parent_cell)``.
        """
        n = self.n
        parent = [None] * n
        seen = [False] * n
        seen[0] = True
        order = [0]
        q = deque([0])
        while q:
            c = q.popleft() if rng is None else q.pop()
            nbrs = [(self.r[c], c, 1), (self.r_inv[c], self.r_inv[c], -1),
                    (self.u[c], n + c, 1), (self.u_inv[c], n + self.u_inv[c], -1)]
            if rng is not None:
                rng.shuffle(nbrs)
            for nb, e, sgn in nbrs:
                if not seen[nb]:
                    seen[nb] = True
                    parent[nb] = (e, sgn, c)
                    order.append(nb)
                    q.append(nb)
        return parent, order

    @cached_property
    def dual_tree(self):
        return self.spanning_tree()

    @cached_property
    def cell_positions(self):
        """Exact positions of cell bottom-left corners developed from cell 0."""
        n = self.n
        parent, order = self.dual_tree
        pos = [None] * n
        pos[0] = (Fraction(0), Fraction(0))
        for c in order[1:]:
            e, sgn, p = parent[c]
            dx, dy = (self.scale_x, 0) if e < n else (0, self.scale_y)
            pos[c] = (pos[p][0] + sgn * dx, pos[p][1] + sgn * dy)
        return tuple(pos)

    def tree_path_chain(self, a, b, tree=None):
        """Dual chain of the tree path from cell ``a`` to cell ``b``."""
        parent, _ = tree or self.dual_tree
        chain = [0] * (2 * self.n)

        def to_root(c, sign):
            while c != 0:
                e, sgn, p = parent[c]
                chain[e] += sign * sgn
                c = p
        to_root(b, 1)
        to_root(a, -1)
        return chain

    # -- homology --------------------------------------------------------------

    def edge_period(self, e):
        return (self.scale_x, Fraction(0)) if e < self.n else (Fraction(0), self.scale_y)

    def chain_period(self, chain):
        n = self.n
        return (self.scale_x * sum(chain[:n]), self.scale_y * sum(chain[n:]))

    def is_cycle(self, chain):
        n = self.n
        bd = [0] * n
        for i in range(n):
            bd[self.r[i]] += chain[i]
            bd[i] -= chain[i]
            bd[self.u[i]] += chain[n + i]
            bd[i] -= chain[n + i]
        return not any(bd)

    def intersection(self, alpha, beta):
        """Algebraic intersection number of two closed dual chains.

        ``beta`` is pushed onto the primal grid through bottom-left corners;
        a dual edge heading east then crosses a north-oriented primal edge
        positively.
        """
        n = self.n
        a = alpha.chain if isinstance(alpha, HomologyCycle) else alpha
        b = beta.chain if isinstance(beta, HomologyCycle) else beta
        r, u = self.r, self.u
        s = 0
        for i in range(n):
            if a[i]:
                s += a[i] * b[n + r[i]]
            if a[n + i]:
                s -= a[n + i] * b[u[i]]
        return s

    @cached_property
    def fundamental_cycles(self):
        return self.cycles_of_tree(self.dual_tree)

    def cycles_of_tree(self, tree):
        """Fundamental cycles of a dual spanning tree, one per non-tree edge.

        Returns a list of ``(chain, walk)``; ``walk`` lists the
        ``(cell, direction)`` steps of the simple cycle, directions
        0=E, 1=N, 2=W, 3=S.  The coefficient of a cycle ``z`` on the cycle of
        non-tree edge ``e`` is simply ``z[e]``.
        """
        n = self.n
        parent, _ = tree
        in_tree = {p[0] for p in parent if p is not None}
        out = []
        for e in range(2 * n):
            if e in in_tree:
                continue
            a = e if e < n else e - n
            b = self.r[a] if e < n else self.u[a]
            there = self.tree_path_chain(0, a, tree)
            back = self.tree_path_chain(0, b, tree)
            chain = [x - y for x, y in zip(there, back)]
            chain[e] += 1
            out.append((e, tuple(chain), self._cycle_walk(a, e, b, parent)))
        return [(c, w) for _, c, w in out]

    def non_tree_edges(self, tree=None):
        parent, _ = tree or self.dual_tree
        in_tree = {p[0] for p in parent if p is not None}
        return [e for e in range(2 * self.n) if e not in in_tree]

    def _cycle_walk(self, a, e, b, parent):
        """Steps of the cycle lca -> a -(e)-> b -> lca through the tree."""
        n = self.n

        def ancestors(c):
            out = [c]
            while c != 0:
                c = parent[c][2]
                out.append(c)
            return out

        def direction(ed, sgn):
            return (0 if ed < n else 1) if sgn > 0 else (2 if ed < n else 3)
        pa, pb = ancestors(a), ancestors(b)
        common = set(pa) & set(pb)
        lca = next(c for c in pa if c in common)
        down = pa[:pa.index(lca) + 1][::-1]     # lca ... a
        up = pb[:pb.index(lca) + 1]              # b ... lca
        steps = []
        for x, y in zip(down, down[1:]):
            ed, sgn, _ = parent[y]
            steps.append((x, direction(ed, sgn)))
        steps.append((a, 0 if e < n else 1))
        for x in up[:-1]:
            ed, sgn, _ = parent[x]
            steps.append((x, (direction(ed, sgn) + 2) % 4))
        return steps

    @cached_property
    def intersection_gram(self):
        cyc = [c for c, _ in self.fundamental_cycles]
        return [[self.intersection(a, b) for b in cyc] for a in cyc]

    def homology_symplectic_basis(self):
        cyc = [c for c, _ in self.fundamental_cycles]
        pairs, _ = linalg.symplectic_reduction(self.intersection_gram)
        m = 2 * self.n

        def combine(coeffs):
            out = [0] * m
            for k, c in enumerate(coeffs):
                if c:
                    for t, x in enumerate(cyc[k]):
                        if x:
                            out[t] += c * x
            return HomologyCycle(tuple(out))
        a = tuple(combine(x) for x, _ in pairs)
        b = tuple(combine(y) for _, y in pairs)
        basis = []
        for x, y in zip(a, b):
            basis += [x, y]
        gram = tuple(tuple(self.intersection(x, y) for y in basis) for x in basis)
        return SymplecticHomologyBasis(a, b, gram)

    # -- lattices --------------------------------------------------------------

    @cached_property
    def absolute_period_lattice(self):
        vecs = [self.chain_period(c) for c, _ in self.fundamental_cycles]
        rows, den = linalg.integerize(vecs)
        h = linalg.hermite_normal_form(rows)
        if len(h) < 2:
            raise RankDeficient("absolute periods do not span a lattice")
        basis = tuple((Fraction(x, den), Fraction(y, den)) for x, y in h)
        (a, b), (c, d) = basis
        return Lattice(basis, abs(a * d - b * c))

    # -- cylinders -------------------------------------------------------------

    @cached_property
    def rows(self):
        seen = set()
        out = []
        for c in range(self.n):
            if c in seen:
                continue
            row = [c]
            seen.add(c)
            x = self.r[c]
            while x != c:
                row.append(x)
                seen.add(x)
                x = self.r[x]
            out.append(tuple(row))
        return out

    def is_singular(self, v):
        return self.vertex_order(v) >= 1

    def cylinder_decomposition(self):
        n = self.n
        row_of = {}
        for k, row in enumerate(self.rows):
            for c in row:
                row_of[c] = k

        def top_regular(k):
            return not any(self.is_singular(self.vertex_of_corner(c, TL)) for c in self.rows[k])

        def row_above(k):
            return row_of[self.u[self.rows[k][0]]]

        # rows whose bottom is singular start a cylinder
        below_regular = {}
        for k in range(len(self.rows)):
            if top_regular(k):
                below_regular[row_above(k)] = k
        starts = [k for k in range(len(self.rows)) if k not in below_regular]
        if not starts:
            # no singular boundary at all: a single cylinder closed on itself
            rows = tuple(self.rows)
            circ = len(rows[0]) * self.scale_x
            cyl = Cylinder(rows, circ, len(rows) * self.scale_y, (), ())
            return CylinderDiagram((cyl,), {})
        cylinders = []
        lengths = {}
        for k in sorted(starts, key=lambda k: min(self.rows[k])):
            stack = [k]
            while top_regular(stack[-1]):
                stack.append(row_above(stack[-1]))
            bottom_row = self._aligned_row(self.rows[stack[0]])
            top_row = self._aligned_row(self.rows[stack[-1]], top=True)
            bottom = self._saddles(bottom_row, top=False, lengths=lengths)
            top = self._saddles(top_row, top=True, lengths=lengths)
            rows = tuple(self.rows[j] for j in stack)
            cylinders.append(Cylinder(rows, len(rows[0]) * self.scale_x,
                                      len(rows) * self.scale_y, top, bottom))
        return CylinderDiagram(tuple(cylinders), lengths)

    def _aligned_row(self, row, top=False):
        """Rotate a row so it starts just right of a singular vertex."""
        k = TL if top else BL
        for i, c in enumerate(row):
            if self.is_singular(self.vertex_of_corner(c, k)):
                return row[i:] + row[:i]
        return row

    def _saddles(self, row, top, lengths):
        # a saddle connection is named by the horizontal edge (bottom of a
        # cell) that leaves its left endpoint
        out = []
        for c in row:
            v = self.vertex_of_corner(c, TL if top else BL)
            if self.is_singular(v):
                out.append(self.u[c] if top else c)
                lengths[out[-1]] = Fraction(0)
            lengths[out[-1]] += self.scale_x
        return tuple(out)

    # -- branch profile ------------------------------------------------------

    def branch_profile(self):
        lat = self.absolute_period_lattice
        if not lat.is_standard:
            raise NotPrimitive("absolute periods do not span Z + iZ")
        pos = self.cell_positions
        base = {}
        for c in range(self.n):
            v = self.vertex(c)
            p = (pos[c][0] % 1, pos[c][1] % 1)
            if v in base and base[v] != p:
                raise NotPrimitive("inconsistent developing map")
            base[v] = p
        zeros = self.zeros
        zpos = {v: base[v] for v in zeros}
        by_point = {}
        for v in zeros:
            by_point.setdefault(zpos[v], []).append(v)
        classes = tuple(sorted(tuple(sorted(vs)) for vs in by_point.values()))
        degree = self.area
        if degree.denominator != 1:
            raise NotPrimitive("area is not an integer")
        data = []
        for p in sorted(by_point):
            parts = [self.vertex_order(v) + 1 for v in base if base[v] == p]
            data.append(tuple(sorted(parts, reverse=True)))
        return BranchProfile(zpos, classes, tuple(data), int(degree))

    # -- canonical form --------------------------------------------------------

    def relabel(self, perm):
        """Surface with cell ``c`` renamed ``perm[c]``."""
        n = self.n
        r = [0] * n
        u = [0] * n
        for c in range(n):
            r[perm[c]] = perm[self.r[c]]
            u[perm[c]] = perm[self.u[c]]
        return GridSurface(tuple(r), tuple(u), self.scale_x, self.scale_y)

    def canonical(self):
        r, u = canonical_pair(self.r, self.u)
        return GridSurface(r, u, self.scale_x, self.scale_y)

    # -- serialisation -----------------------------------------------------------

    def to_text(self, marks=True):
        lines = [f"n={self.n} sx={_frac(self.scale_x)} sy={_frac(self.scale_y)}",
                 "r=" + " ".join(str(x + 1) for x in self.r),
                 "u=" + " ".join(str(x + 1) for x in self.u)]
        if marks:
            lines.append("marks=" + ",".join(f"{v + 1}:{o}" for v, o in self.zero_marks))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({"n": self.n, "sx": _frac(self.scale_x), "sy": _frac(self.scale_y),
                           "r": [x + 1 for x in self.r], "u": [x + 1 for x in self.u],
                           "marks": [[v + 1, o] for v, o in self.zero_marks]})


def _frac(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def new_grid_surface(n, r, u, scale_x=1, scale_y=1):
    r = check_permutation(r, n)
    u = check_permutation(u, n)
    return GridSurface(r, u, Fraction(scale_x), Fraction(scale_y))


def canonical_pair(r, u):
    """Lexicographically least relabelling over BFS orders (right, then up)."""
    n = len(r)
    best = None
    for s in range(n):
        label = [-1] * n
        label[s] = 0
        order = [s]
        k = 0
        while k < len(order):
            c = order[k]
            k += 1
            for x in (r[c], u[c]):
                if label[x] < 0:
                    label[x] = len(order)
                    order.append(x)
        cand = (tuple(label[r[c]] for c in order), tuple(label[u[c]] for c in order))
        if best is None or cand < best:
            best = cand
    return best


def _check_marks(s, marks):
    expected = tuple((v + 1, o) for v, o in s.zero_marks)
    if tuple(marks) != expected:
        raise FormatError(f"marks {marks} disagree with computed {expected}")


def parse_origami(text):
    """Read the one-surface text format (1-based images)."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()
             and not ln.lstrip().startswith("#")]
    if len(lines) < 3:
        raise FormatError("origami text needs at least three lines")
    head = dict(tok.split("=", 1) for tok in lines[0].split())
    try:
        n = int(head["n"])
        sx = Fraction(head.get("sx", "1"))
        sy = Fraction(head.get("sy", "1"))
        fields = {}
        for ln in lines[1:]:
            key, val = ln.split("=", 1)
            fields[key.strip()] = val.strip()
        r = [int(x) - 1 for x in fields["r"].split()]
        u = [int(x) - 1 for x in fields["u"].split()]
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed origami text: {exc}") from exc
    s = new_grid_surface(n, r, u, sx, sy)
    if "marks" in fields:
        marks = []
        if fields["marks"]:
            for tok in fields["marks"].split(","):
                v, o = tok.split(":")
                marks.append((int(v), int(o)))
        _check_marks(s, marks)
    return s


def parse_origami_json(text):
    d = json.loads(text)
    try:
        s = new_grid_surface(d["n"], [x - 1 for x in d["r"]], [x - 1 for x in d["u"]],
                             Fraction(d.get("sx", "1")), Fraction(d.get("sy", "1")))
    except KeyError as exc:
        raise FormatError(f"missing key {exc}") from exc
    if "marks" in d:
        _check_marks(s, [tuple(m) for m in d["marks"]])
    return s


def stratum_of(s):
    return s.stratum, s.genus


def cylinder_decomposition(s):
    return s.cylinder_decomposition()


def homology_symplectic_basis(s):
    return s.homology_symplectic_basis()


def absolute_period_lattice(s):
    return s.absolute_period_lattice


def branch_profile(s):
    return s.branch_profile()
