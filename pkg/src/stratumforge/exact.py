"""Exact real scalars over a declared basis of Q-independent reals.

A :class:`RealBasis` names the reals (element 0 is always the number 1) and
knows how to approximate them.  An :class:`ExactScalar` is a rational
combination of monomials in those reals; a monomial is a sorted tuple of
basis indices, the empty tuple standing for 1.  Products of basis reals are
kept as formal monomials, so ``sqrt2 * sqrt2`` is *not* simplified to 2: the
independence assumption is trusted, never checked.

Signs are decided exactly when a scalar is rational, and otherwise by
interval evaluation at increasing precision.
"""
from fractions import Fraction
import re

import mpmath
import sympy

from .errors import UncertifiedSign

_PRECISIONS = (30, 60, 120, 240, 480, 960)


class RealBasis:
    """Declared basis reals; ``values`` are sympy-readable expressions.

    A value written as a plain decimal (``"1.41421356"``) is taken as known
    only up to its last digit, so sign certification cannot go beyond it.
    """

    def __init__(self, names=("1",), values=None):
        names = tuple(names)
        if not names or names[0] != "1":
            names = ("1",) + names
            if values is not None:
                values = ("1",) + tuple(values)
        if values is None:
            values = names
        values = tuple(str(v) for v in values)
        if len(values) != len(names):
            raise ValueError("one value per basis real")
        if len(set(names)) != len(names):
            raise ValueError("duplicate basis names")
        self.names = names
        self.values = values
        self._exprs = [sympy.sympify(v) for v in values]
        self._cache = {}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, RealBasis) and self.names == other.names \
            and self.values == other.values

    def __hash__(self):
        return hash((self.names, self.values))

    def __repr__(self):
        return f"RealBasis({self.names!r})"

    def index(self, name):
        return self.names.index(name)

    def interval(self, i, dps):
        key = (i, dps)
        if key not in self._cache:
            text = self.values[i]
            if re.fullmatch(r"[+-]?\d*\.\d+", text.strip()):
                digits = len(text.split(".")[1])
                rad = mpmath.mpf(10) ** (-digits)
            else:
                rad = mpmath.mpf(10) ** (-dps)
            with mpmath.workdps(dps + 10):
                mid = mpmath.mpf(str(self._exprs[i].evalf(dps + 10)))
                self._cache[key] = (mid - rad, mid + rad)
        return self._cache[key]

    def scalar(self, coords):
        """Linear scalar from a coefficient list (one per basis real) or a
        ``{name: coefficient}`` mapping."""
        if isinstance(coords, dict):
            items = {(): Fraction(0)}
            for name, c in coords.items():
                i = self.index(name)
                items[(i,) if i else ()] = items.get((i,) if i else (), 0) + Fraction(c)
            return ExactScalar(self, items)
        coords = list(coords)
        if len(coords) != len(self.names):
            raise ValueError(f"expected {len(self.names)} coefficients, got {len(coords)}")
        items = {}
        for i, c in enumerate(coords):
            items[(i,) if i else ()] = Fraction(c)
        return ExactScalar(self, items)

    def const(self, q):
        return ExactScalar(self, {(): Fraction(q)})

    def real(self, name):
        i = self.index(name)
        return ExactScalar(self, {(i,) if i else (): Fraction(1)})


RATIONALS = RealBasis()


class ExactScalar:
    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms):
        self.basis = basis
        self.terms = tuple(sorted((tuple(m), Fraction(c)) for m, c in dict(terms).items() if c))

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other.basis is not self.basis and other.basis != self.basis:
                raise ValueError("scalars over different bases")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.basis, {(): Fraction(other)})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return ExactScalar(self.basis, d)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.basis, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(sorted(m1 + m2))
                d[m] = d.get(m, 0) + c1 * c2
        return ExactScalar(self.basis, d)

    __rmul__ = __mul__

    def __truediv__(self, q):
        if isinstance(q, ExactScalar):
            if not q.is_rational():
                raise ZeroDivisionError("division by an irrational scalar is not exact")
            q = q.rational()
        q = Fraction(q)
        return ExactScalar(self.basis, {m: c / q for m, c in self.terms})

    # -- comparisons --------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_rational(self):
        return all(m == () for m, _ in self.terms)

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms[0][1] if self.terms else Fraction(0)

    def degree(self):
        return max((len(m) for m, _ in self.terms), default=0)

    def coefficient(self, monomial):
        return dict(self.terms).get(tuple(monomial), Fraction(0))

    def interval(self, dps):
        with mpmath.workdps(dps + 10):
            lo = hi = mpmath.mpf(0)
            for m, c in self.terms:
                a, b = mpmath.mpf(1), mpmath.mpf(1)
                for i in m:
                    x0, x1 = self.basis.interval(i, dps)
                    cands = (a * x0, a * x1, b * x0, b * x1)
                    a, b = min(cands), max(cands)
                cq = mpmath.mpf(c.numerator) / c.denominator
                lo += min(cq * a, cq * b)
                hi += max(cq * a, cq * b)
            return lo, hi

    def sign(self):
        if not self.terms:
            return 0
        if self.is_rational():
            return 1 if self.terms[0][1] > 0 else -1
        for dps in _PRECISIONS:
            lo, hi = self.interval(dps)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
        raise UncertifiedSign(f"cannot certify the sign of {self}")

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        lo, hi = self.interval(30)
        return float((lo + hi) / 2)

    # -- text -----------------------------------------------------------------------

    def _mono_name(self, m):
        return "*".join(self.basis.names[i] for i in m) if m else "1"

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            parts.append(str(c) if m == () else f"{c}*{self._mono_name(m)}")
        return " + ".join(parts)

    def to_coords(self):
        """Coefficient strings, one per basis real (linear scalars only)."""
        if self.degree() > 1:
            raise ValueError("product monomials have no coordinate form")
        d = dict(self.terms)
        return [_fstr(d.get((i,) if i else (), Fraction(0))) for i in range(len(self.basis))]

    def to_json(self):
        return {self._mono_name(m): _fstr(c) for m, c in self.terms}


def _fstr(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def det(v, w):
    """Determinant of two plane vectors with exact coordinates."""
    return v[0] * w[1] - v[1] * w[0]


def vadd(v, w):
    return (v[0] + w[0], v[1] + w[1])


def vsub(v, w):
    return (v[0] - w[0], v[1] - w[1])


def vscale(k, v):
    return (k * v[0], k * v[1])


def vneg(v):
    return (-v[0], -v[1])
