"""Exact integer and rational linear algebra.

Hermite normal form is the one lattice primitive used across the package:
period lattices, subgroup membership and homology reductions all go through
it.  Everything works on plain Python ints / Fractions.
"""
from fractions import Fraction
from math import lcm

from .errors import StratumForgeError


def hermite_normal_form(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows of the echelon basis: pivots are positive and
    entries above each pivot are reduced into ``[0, pivot)``.
    """
    rows = [list(map(int, r)) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        # Euclid on column `col` until a single nonzero entry remains
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(col, ncols):
                    r[k] -= q * piv[k]
            nz = [r for r in nz if r[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        rows = [r for r in rows if r is not piv and any(r)]
        basis.append(piv)
        col += 1
    # reduce above pivots
    for i, row in enumerate(basis):
        pc = _pivot(row)
        for j in range(i):
            q = basis[j][pc] // row[pc]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], row)]
    return basis


def _pivot(row):
    for k, x in enumerate(row):
        if x:
            return k
    return None


def hnf_contains(basis, vector):
    """True when ``vector`` is an integer combination of the HNF ``basis``."""
    v = [int(x) for x in vector]
    for row in basis:
        pc = _pivot(row)
        if v[pc] % row[pc]:
            return False
        q = v[pc] // row[pc]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def hnf_coordinates(basis, vector):
    """Integer coordinates of ``vector`` in the HNF ``basis`` (or None)."""
    v = [int(x) for x in vector]
    coords = []
    for row in basis:
        pc = _pivot(row)
        if v[pc] % row[pc]:
            return None
        q = v[pc] // row[pc]
        coords.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return coords if not any(v) else None


def integerize(rows):
    """Scale rational rows by one common denominator; returns (int rows, D)."""
    den = 1
    for r in rows:
        for x in r:
            den = lcm(den, Fraction(x).denominator)
    return [[int(Fraction(x) * den) for x in r] for r in rows], den


def rational_rank(rows):
    """Rank over Q of a list of rational rows."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def det2(a, b, c, d):
    return a * d - b * c


class _SkewWorkspace:
    """Vectors together with their skew Gram matrix, updated by congruence."""

    def __init__(self, gram):
        m = len(gram)
        self.G = [list(row) for row in gram]
        self.V = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def add(self, k, l, c):
        """v_k <- v_k + c * v_l."""
        if not c:
            return
        G, V = self.G, self.V
        V[k] = [a + c * b for a, b in zip(V[k], V[l])]
        G[k] = [a + c * b for a, b in zip(G[k], G[l])]
        for row in G:
            row[k] += c * row[l]


def symplectic_reduction(gram):
    """Integer symplectic basis for a skew form given by its Gram matrix.

    ``gram`` is the pairing on a generating set whose quotient by the radical
    is unimodular (an intersection form).  Returns ``(pairs, radical)`` where
    each pair ``(x, y)`` holds coefficient vectors over the generators with
    ``x . y = 1``, distinct pairs are orthogonal, and ``radical`` spans the
    kernel of the form.
    """
    ws = _SkewWorkspace(gram)
    G = ws.G
    active = list(range(len(gram)))
    pairs = []
    while True:
        best = None
        for a in active:
            row = G[a]
            for b in active:
                x = row[b]
                if x > 0 and (best is None or x < best[2]):
                    best = (a, b, x)
                    if x == 1:
                        break
            if best is not None and best[2] == 1:
                break
        if best is None:
            break
        i, j, m = best
        if m != 1:
            progressed = False
            for k in active:
                if k in (i, j):
                    continue
                if G[k][i] % m:
                    ws.add(k, j, G[k][i] // m)
                    progressed = True
                    break
                if G[k][j] % m:
                    ws.add(k, i, -(G[k][j] // m))
                    progressed = True
                    break
            if progressed:
                continue
            raise StratumForgeError("skew form is not unimodular modulo its radical")
        for k in active:
            if k in (i, j):
                continue
            a, b = G[k][i], G[k][j]
            ws.add(k, i, -b)
            ws.add(k, j, a)
        pairs.append((ws.V[i], ws.V[j]))
        active = [k for k in active if k not in (i, j)]
    radical = [ws.V[k] for k in active]
    return pairs, radical


def arf_mod2(gram_bits, q):
    """Arf invariant of a quadratic refinement over F_2.

    ``gram_bits[i]`` is the i-th row of the (alternating) Gram matrix mod 2 as
    an int bitmask and ``q[i]`` the value of the form on generator i.  The
    form must vanish on the radical; returns ``(arf, rank)``.
    """
    G = list(gram_bits)
    q = [x & 1 for x in q]
    m = len(G)
    alive = (1 << m) - 1

    def add(k, l):
        # v_k += v_l
        q[k] ^= q[l] ^ ((G[k] >> l) & 1)
        G[k] ^= G[l]
        bit_l, bit_k = 1 << l, 1 << k
        for t in range(m):
            if G[t] & bit_l:
                G[t] ^= bit_k
        G[k] &= ~bit_k

    arf = 0
    rank = 0
    while True:
        i = next((a for a in range(m) if alive >> a & 1 and G[a] & alive), None)
        if i is None:
            break
        row = G[i] & alive
        j = (row & -row).bit_length() - 1
        for k in range(m):
            if k in (i, j) or not alive >> k & 1:
                continue
            if G[k] >> j & 1:
                add(k, i)
            if G[k] >> i & 1:
                add(k, j)
        arf ^= q[i] & q[j]
        rank += 2
        alive &= ~((1 << i) | (1 << j))
    for k in range(m):
        if alive >> k & 1 and q[k]:
            raise StratumForgeError("quadratic form does not vanish on the radical")
    return arf, rank
