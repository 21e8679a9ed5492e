"""Slit patterns placed on one horizontal line of the standard torus.

A :class:`Piece` is a list of slits (coordinates relative to its left end)
together with the gluing of their sides.  Pieces on the same line are laid
out left to right; two pieces that touch share their extreme zero.
"""
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Piece:
    slits: tuple         # (x0, x1) relative to the left end of the piece
    glue: tuple          # (i, j): bottom side of slit i meets top side of slit j
    width: Fraction
    orders: tuple        # zero orders the piece creates, left to right

    def then(self, other):
        """``other`` placed directly at the right end of ``self``.

        The two end zeros merge, their orders add up.
        """
        k = len(self.slits)
        w = self.width
        slits = self.slits + tuple((a + w, b + w) for a, b in other.slits)
        glue = self.glue + tuple((i + k, j + k) for i, j in other.glue)
        if not self.orders:
            orders = other.orders
        elif not other.orders:
            orders = self.orders
        else:
            orders = (self.orders[:-1] + (self.orders[-1] + other.orders[0],)
                      + other.orders[1:])
        return Piece(slits, glue, w + other.width, orders)


def unit_permutation_piece(perm):
    """Unit slits on the columns moved by ``perm``; bottom of column c meets
    the top of column perm[c]."""
    cols = [c for c, x in enumerate(perm) if x != c]
    idx = {c: k for k, c in enumerate(cols)}
    slits = tuple((Fraction(c), Fraction(c + 1)) for c in cols)
    glue = tuple((idx[c], idx[perm[c]]) for c in cols)
    return slits, glue


POINT = Piece((), (), Fraction(0), (0,))


def odd_piece(n):
    """Single zero of order n (n even): two touching unit slits, then the
    others each one unit to the right of the previous, glued cyclically."""
    if n == 0:
        return POINT
    if n < 2 or n % 2:
        raise ValueError("odd_piece needs an even order >= 2")
    m = n // 2 + 1
    xs = [(0, 1), (1, 2)] + [(2 * k - 1, 2 * k) for k in range(2, m)]
    slits = tuple((Fraction(a), Fraction(b)) for a, b in xs)
    glue = tuple((i, (i + 1) % m) for i in range(m))
    return Piece(slits, glue, Fraction(n), (n,))


def hyp_piece(g):
    """Zero of order 2g-2: 2g-2 contiguous unit slits, slit i glued to 2g-3-i."""
    k = 2 * g - 2
    slits = tuple((Fraction(i), Fraction(i + 1)) for i in range(k))
    glue = tuple((i, k - 1 - i) for i in range(k))
    return Piece(slits, glue, Fraction(k), (k,))


def double_piece(g, unit=Fraction(1, 2)):
    """Two zeros of order g-1: g-1 touching slits of length ``unit``, a gap of
    ``unit``, g-1 more; slit i glued to 2g-3-i.

    With half slits the zeros lie over different base points; with unit
    slits (g = 3) this is the two-zero pattern of H(2,2) with one class.
    """
    unit = Fraction(unit)
    h = g - 1
    xs = [(i * unit, (i + 1) * unit) for i in range(h)]
    xs += [((h + 1 + i) * unit, (h + 2 + i) * unit) for i in range(h)]
    k = 2 * h
    glue = tuple((i, k - 1 - i) for i in range(k))
    return Piece(tuple(xs), glue, (2 * h + 1) * unit, (g - 1, g - 1))


def swap_pair():
    """Two unit slits one unit apart, glued crosswise: two simple zeros."""
    slits = ((Fraction(0), Fraction(1)), (Fraction(2), Fraction(3)))
    return Piece(slits, ((0, 1), (1, 0)), Fraction(3), (1, 1))


def pair_piece(n, m):
    """Two zeros of odd orders n <= m in the same class."""
    n, m = sorted((n, m))
    piece = odd_piece(n - 1).then(swap_pair()) if n > 1 else swap_pair()
    if m > 1:
        piece = piece.then(odd_piece(m - 1))
    return piece


def even_min_piece(n):
    """Zero of order n >= 4 with even spin: the hyperelliptic H(4) pattern
    followed directly by the odd pattern of order n - 4."""
    if n < 4 or n % 2:
        raise ValueError("even_min_piece needs an even order >= 4")
    p = hyp_piece(3)
    return p.then(odd_piece(n - 4)) if n > 4 else p


# four simple zeros on one line; slits on [0, 3] and [4, 7]
FOUR_ONES_PERM = (2, 6, 5, 3, 1, 0, 4)


def four_ones_piece():
    slits, glue = unit_permutation_piece(FOUR_ONES_PERM)
    return Piece(slits, glue, Fraction(7), (1, 1, 1, 1))


# two simple zeros on one line whose gluing moves a column by one; used when
# the swap pair alone would leave the periods in an index-2 sublattice
TWO_ONES_PERM = (2, 3, 1, 0)


def two_ones_piece():
    slits, glue = unit_permutation_piece(TWO_ONES_PERM)
    return Piece(slits, glue, Fraction(4), (1, 1))


def lay_out(diag, line, pieces, start=Fraction(0), gap=Fraction(1)):
    """Place pieces on ``line`` from ``start``, separated by ``gap``.

    Returns the x coordinate of the right end of the last piece.
    """
    x = Fraction(start)
    end = x
    for k, p in enumerate(pieces):
        if k:
            x += gap
        ids = [diag.add_hslit(line, x + a, x + b) for a, b in p.slits]
        for i, j in p.glue:
            diag.glue_h(ids[i], ids[j])
        x += p.width
        end = x
    return end


def content_width(pieces, gap=Fraction(1)):
    if not pieces:
        return Fraction(0)
    return sum((p.width for p in pieces), Fraction(0)) + gap * (len(pieces) - 1)
