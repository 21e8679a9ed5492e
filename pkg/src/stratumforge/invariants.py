"""Invariants that tell connected components of a stratum apart.

* winding indices of closed paths and the spin parity (Arf invariant) of the
  quadratic form ``q(gamma) = Ind(gamma) + 1 mod 2``;
* rotations by pi of a grid surface (cell maps ``s`` with
  ``s r = r^-1 s`` and ``s u = u^-1 s``) and their fixed points;
* the single-cylinder criterion for hyperellipticity;
* the final component label, read off the Kontsevich-Zorich table.
"""
from dataclasses import dataclass

from . import linalg
from .errors import NotSingleCylinder, OddOrderZero, RankDeficient, VerificationFailed
from .flat_core import TR, HomologyCycle, Stratum

HYP, EVEN, ODD, NONHYP, CONN = "hyp", "even", "odd", "nonhyp", "conn"
LABELS = (HYP, EVEN, ODD, NONHYP, CONN)


@dataclass(frozen=True)
class ComponentLabel:
    tag: str
    stratum: Stratum

    def __str__(self):
        return f"{self.stratum} {self.tag}"


# ---------------------------------------------------------------------------
# the component table

def is_hyp_type(stratum):
    o = stratum.orders
    return stratum.genus >= 2 and (len(o) == 1 or (len(o) == 2 and o[0] == o[1]))


def kz_components(stratum):
    """Component labels of a stratum, in the order hyp, even, odd, nonhyp, conn."""
    if isinstance(stratum, str):
        stratum = Stratum.parse(stratum)
    g = stratum.genus
    if g <= 2:
        return [CONN]
    out = []
    if is_hyp_type(stratum):
        out.append(HYP)
    if all(n % 2 == 0 for n in stratum.orders):
        if g >= 4:
            out.append(EVEN)
        out.append(ODD)
    elif is_hyp_type(stratum):
        out.append(NONHYP)
    return out or [CONN]


def normalize_label(stratum, label):
    """Resolve the low-genus aliases: the even component of H(2,2) is the
    hyperelliptic one, and every label of a connected stratum is 'conn'."""
    comps = kz_components(stratum)
    if comps == [CONN] and label in (HYP, CONN):
        return CONN
    if stratum.orders == (2, 2) and label == EVEN:
        return HYP
    return label


# ---------------------------------------------------------------------------
# winding indices

@dataclass(frozen=True)
class EdgePath:
    """Closed path along grid edges.

    ``start`` is a cell whose bottom-left corner is the initial vertex and
    ``moves`` is a string over ``R, L, U, D`` (one grid edge per letter).
    """
    start: int
    moves: str


def _walk_half_edges(s, path):
    """Yield (back, out) half-edge pairs at each visited vertex."""
    c = path.start
    outs, backs = [], []
    for m in path.moves:
        if m == "R":
            outs.append(("H", c, 0))
            backs.append(("H", c, 1))
            c = s.r[c]
        elif m == "L":
            c = s.r_inv[c]
            outs.append(("H", c, 1))
            backs.append(("H", c, 0))
        elif m == "U":
            outs.append(("V", c, 0))
            backs.append(("V", c, 1))
            c = s.u[c]
        elif m == "D":
            c = s.u_inv[c]
            outs.append(("V", c, 1))
            backs.append(("V", c, 0))
        else:
            raise ValueError(f"bad move {m!r}")
    if s.vertex(c) != s.vertex(path.start):
        raise ValueError("path is not closed")
    k = len(outs)
    return [(backs[i - 1], outs[i]) for i in range(k)]


def edge_path_turning(s, path, detour="left"):
    """Total turning of a closed edge path, in quarter turns.

    At a vertex of cone angle ``N`` quarter turns the path is pushed off the
    vertex: the left detour passes through the sector on its left, the right
    detour through the sector on its right.
    """
    total = 0
    for back, out in _walk_half_edges(s, path):
        v, pb = s.half_edge_position(back)
        _, po = s.half_edge_position(out)
        big_n = len(s.corner_cycle(v))
        k = (po - pb) % big_n          # sector on the right, in quarter turns
        total += (k - 2) if detour == "right" else (k + 2 - big_n)
    return total


def dual_walk_turning(steps):
    """Total turning of a closed walk through cell centres (quarter turns)."""
    total = 0
    for i in range(len(steps)):
        d = (steps[i][1] - steps[i - 1][1]) % 4
        if d == 2:
            raise ValueError("walk backtracks")
        total += (0, 1, 0, -1)[d]
    return total


def winding_index(s, cycle, detour="left"):
    if isinstance(cycle, EdgePath):
        t = edge_path_turning(s, cycle, detour)
    else:
        t = dual_walk_turning(cycle)
    assert t % 4 == 0
    return t // 4


def _require_even(s):
    odd = [o for _, o in s.zero_marks if o % 2]
    if odd:
        raise OddOrderZero(f"zeros of odd order {odd}: spin parity undefined")


def winding_parity(s, cycle, detour="left"):
    _require_even(s)
    return winding_index(s, cycle, detour) % 2


# ---------------------------------------------------------------------------
# spin parity

def _quadratic_data(s, rng=None):
    """(non-tree edges, q values mod 2, Gram mod 2) for a spanning tree."""
    tree = s.dual_tree if rng is None else s.spanning_tree(rng)
    cycles = s.cycles_of_tree(tree)
    edges = s.non_tree_edges(tree)
    q = [(winding_index(s, walk) + 1) % 2 for _, walk in cycles]
    chains = [c for c, _ in cycles]
    gram = [[s.intersection(a, b) % 2 for b in chains] for a in chains]
    return edges, q, gram


def arf_invariant(s, basis=None, rng=None):
    """Spin parity ``sum (Ind(a_i)+1)(Ind(b_i)+1) mod 2``.

    Without ``basis`` the Arf invariant of the form on the fundamental
    cycles is computed by symplectic reduction over F_2.  With a basis (a
    list of ``(a_i, b_i)`` cycle pairs) the form is extended quadratically
    from the fundamental cycles and evaluated on that basis directly.
    ``rng`` selects a random spanning tree.
    """
    _require_even(s)
    edges, q, gram = _quadratic_data(s, rng)
    if basis is None:
        bits = [sum(1 << j for j, x in enumerate(row) if x) for row in gram]
        arf, _ = linalg.arf_mod2(bits, q)
        return arf
    m = len(edges)

    def qform(z):
        chain = z.chain if isinstance(z, HomologyCycle) else z
        c = [chain[e] % 2 for e in edges]
        val = sum(ci * qi for ci, qi in zip(c, q))
        on = [k for k in range(m) if c[k]]
        for i, k in enumerate(on):
            for l in on[i + 1:]:
                val += gram[k][l]
        return val % 2
    return sum(qform(a) * qform(b) for a, b in basis) % 2


def transvect(s, basis, v):
    """Apply the symplectic transvection x -> x + (x . v) v to a basis."""
    out = []
    for a, b in basis:
        out.append((a + s.intersection(a, v) * v, b + s.intersection(b, v) * v))
    return out


def random_symplectic_change(s, basis, rng, steps=3):
    """Random integer symplectic change of basis through transvections."""
    flat = [x for pair in basis for x in pair]
    for _ in range(steps):
        v = HomologyCycle((0,) * len(flat[0].chain))
        for x in flat:
            k = rng.randint(-2, 2)
            if k:
                v = v + k * x
        basis = transvect(s, basis, v)
        flat = [x for pair in basis for x in pair]
    return basis


# ---------------------------------------------------------------------------
# rotations by pi

@dataclass(frozen=True)
class FlatInvolution:
    perm: tuple
    shift: tuple             # base rotation centre sum c, mod Z^2 (None if not primitive)
    fixed_cells: tuple
    fixed_h_edges: tuple     # cells whose bottom edge has a fixed midpoint
    fixed_v_edges: tuple     # cells whose left edge has a fixed midpoint
    fixed_vertices: tuple
    vertex_map: dict
    quotient_genus: int

    @property
    def fixed_point_count(self):
        return (len(self.fixed_cells) + len(self.fixed_h_edges)
                + len(self.fixed_v_edges) + len(self.fixed_vertices))

    def swaps(self, v, w):
        return self.vertex_map[v] == w and self.vertex_map[w] == v


def _propagate(s, image0):
    n = s.n
    perm = [-1] * n
    perm[0] = image0
    todo = [0]
    while todo:
        c = todo.pop()
        x = perm[c]
        for nc, nx in ((s.r[c], s.r_inv[x]), (s.r_inv[c], s.r[x]),
                       (s.u[c], s.u_inv[x]), (s.u_inv[c], s.u[x])):
            if perm[nc] < 0:
                perm[nc] = nx
                todo.append(nc)
            elif perm[nc] != nx:
                return None
    if len(set(perm)) != n:
        return None
    if any(perm[perm[c]] != c for c in range(n)):
        return None
    return tuple(perm)


def _census(s, perm):
    n = s.n
    fixed_cells = tuple(c for c in range(n) if perm[c] == c)
    fixed_h = tuple(c for c in range(n) if s.u[perm[c]] == c)
    fixed_v = tuple(c for c in range(n) if s.r[perm[c]] == c)
    vmap = {}
    for c in range(n):
        vmap[s.vertex(c)] = s.vertex_of_corner(perm[c], TR)
    fixed_vertices = tuple(sorted(v for v, w in vmap.items() if v == w))
    f = len(fixed_cells) + len(fixed_h) + len(fixed_v) + len(fixed_vertices)
    chi = 2 - 2 * s.genus
    chi_q = (chi + f) // 2
    shift = None
    try:
        if s.absolute_period_lattice.is_standard:
            p, q = s.cell_positions[0], s.cell_positions[perm[0]]
            shift = ((p[0] + q[0] + s.scale_x) % 1, (p[1] + q[1] + s.scale_y) % 1)
    except RankDeficient:
        shift = None
    return FlatInvolution(perm, shift, fixed_cells, fixed_h, fixed_v, fixed_vertices,
                          vmap, (2 - chi_q) // 2)


def involution_search(s):
    """All rotations by pi of ``s`` that map cells to cells, sorted by permutation."""
    out = []
    for x in range(s.n):
        perm = _propagate(s, x)
        if perm is not None:
            out.append(_census(s, perm))
    out.sort(key=lambda f: f.perm)
    return out


def hyperelliptic_involution(s):
    """The involution with sphere quotient (swapping the two zeros in the
    H(g-1, g-1) case), or None."""
    zeros = s.zeros
    for f in involution_search(s):
        if f.quotient_genus != 0:
            continue
        if len(zeros) == 2 and not f.swaps(*zeros):
            continue
        return f
    return None


# ---------------------------------------------------------------------------
# single cylinder surfaces

def single_cylinder_hyperelliptic_check(diagram):
    """True iff, after rotating the top, bottom i is glued to top k-1-i."""
    if len(diagram.cylinders) != 1:
        raise NotSingleCylinder(f"{len(diagram.cylinders)} cylinders")
    cyl = diagram.cylinders[0]
    top, bottom = cyl.top, cyl.bottom
    k = len(top)
    if k != len(bottom):
        return False
    if k == 0:
        return True
    for rot in range(k):
        if all(bottom[i] == top[(k - 1 - i + rot) % k] for i in range(k)):
            return True
    return False


# ---------------------------------------------------------------------------

def component_of(s):
    stratum = s.stratum
    comps = kz_components(stratum)
    if comps == [CONN]:
        return ComponentLabel(CONN, stratum)
    if HYP in comps and hyperelliptic_involution(s) is not None:
        return ComponentLabel(HYP, stratum)
    if NONHYP in comps:
        return ComponentLabel(NONHYP, stratum)
    tag = ODD if arf_invariant(s) else EVEN
    if tag not in comps:
        raise VerificationFailed(
            f"{stratum}: even spin but no hyperelliptic involution found")
    return ComponentLabel(tag, stratum)


__all__ = ["ComponentLabel", "EdgePath", "FlatInvolution", "kz_components", "normalize_label",
           "winding_index", "winding_parity", "arf_invariant", "involution_search",
           "hyperelliptic_involution", "single_cylinder_hyperelliptic_check", "component_of",
           "random_symplectic_change", "transvect"]
