"""Surfaces in every connected component, built from slit patterns.

Partitions ``P`` are lists of classes, each a list of 0-based indices into
the zero orders of the stratum (in the order the stratum lists them).  The
classes become horizontal lines of the standard torus, so zeros of one class
lie over one base point.
"""
from fractions import Fraction

from ..errors import NoSuchComponent, VerificationFailed, WidthTooSmall
from ..flat_core import GridSurface, Stratum
from ..invariants import (CONN, EVEN, HYP, NONHYP, ODD, component_of, kz_components,
                          normalize_label)
from .diagram import SlitTorusDiagram, compile_diagram
from .patterns import (POINT, content_width, double_piece, even_min_piece, four_ones_piece,
                       hyp_piece, lay_out, odd_piece, pair_piece, two_ones_piece)


def as_orders(stratum):
    """Zero orders in the caller's order (a Stratum is already sorted)."""
    if isinstance(stratum, Stratum):
        return list(stratum.orders)
    if isinstance(stratum, str):
        body = stratum.strip()[2:-1]
        return [int(x) for x in body.split(",")] if body.strip() else []
    return [int(x) for x in stratum]


def _classes(orders, P):
    if P is None:
        P = [list(range(len(orders)))]
    P = [list(A) for A in P]
    flat = sorted(j for A in P for j in A)
    if flat != list(range(len(orders))) or any(not A for A in P):
        raise ValueError(f"{P} is not a partition of the zeros of {orders}")
    return P, [[orders[j] for j in A] for A in P]


def _check_sums(classes, d):
    for cl in classes:
        need = sum(n + 1 for n in cl)
        if need > d:
            raise WidthTooSmall(f"class {cl} needs d >= {need} (sum of n_j + 1), got d = {d}")


def _compile(diag):
    return compile_diagram(diag)


# ---------------------------------------------------------------------------
# hyperelliptic components

def hyp_minimal_diagram(g, d):
    if g < 2:
        raise ValueError("genus must be at least 2")
    if d < 2 * g - 1:
        raise WidthTooSmall(f"H^hyp({2 * g - 2}) needs d >= 2g-1 = {2 * g - 1}, got d = {d}")
    diag = SlitTorusDiagram(d)
    lay_out(diag, 0, [hyp_piece(g)])
    return diag


def build_hyp_minimal(g, d):
    return _compile(hyp_minimal_diagram(g, d))


def hyp_double_diagram(g, d):
    """Two zeros over different base points (half-length slits)."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    if d < g:
        raise WidthTooSmall(f"H^hyp({g - 1},{g - 1}) with two classes needs d >= g = {g}, "
                            f"got d = {d}")
    diag = SlitTorusDiagram(d)
    lay_out(diag, 0, [double_piece(g, Fraction(1, 2))])
    return diag


def hyp_double_same_class(g, d):
    """Square-tiled surface with both zeros over one point (needs d >= 2g)."""
    if d < 2 * g:
        raise WidthTooSmall(f"H^hyp({g - 1},{g - 1}) with one class needs d >= 2g = {2 * g}, "
                            f"got d = {d}")
    k = 2 * g - 1            # 1-based labels 1..d become 0..d-1
    r = [(i + 1) % k if i < k else i for i in range(d)]
    u = [0] * d
    for i in range(1, d + 1):
        if i <= 2 * g - 2:
            img = 2 * g - 1 - i
        elif i < d:
            img = i + 1
        else:
            img = 2 * g - 1
        u[i - 1] = img - 1
    return GridSurface(tuple(r), tuple(u))


def build_hyp_double(g, d, same_class):
    if same_class:
        return hyp_double_same_class(g, d)
    return _compile(hyp_double_diagram(g, d))


# ---------------------------------------------------------------------------
# spin components

def odd_diagram(stratum, P, d):
    orders = as_orders(stratum)
    if any(n % 2 for n in orders):
        raise NoSuchComponent("spin components need all zero orders even")
    st = Stratum(orders)
    P, classes = _classes(orders, P)
    _check_sums(classes, d)
    if st.genus > 2 and ODD not in kz_components(st):
        raise NoSuchComponent(f"{st} has no odd component")
    diag = SlitTorusDiagram(d, len(classes))
    for t, cl in enumerate(classes):
        lay_out(diag, t, [odd_piece(n) for n in sorted(cl, reverse=True)])
    return diag


def build_odd(stratum, P, d):
    return _compile(odd_diagram(stratum, P, d))


def even_diagram(stratum, P, d):
    orders = as_orders(stratum)
    st = Stratum(orders)
    if any(n % 2 for n in orders) or EVEN not in kz_components(st) and st.orders != (2, 2):
        raise NoSuchComponent(f"{st} has no even component")
    P, classes = _classes(orders, P)
    _check_sums(classes, d)
    if all(n == 2 for n in orders):
        big = [t for t, cl in enumerate(classes) if len(cl) >= 2]
        if not big:
            # one line carries two classes with the half-slit pattern
            diag = SlitTorusDiagram(d, len(classes) - 1)
            lay_out(diag, 0, [double_piece(3, Fraction(1, 2))])
            for t in range(1, len(classes) - 1):
                lay_out(diag, t, [odd_piece(2)])
            return diag
        first = big[0]
        diag = SlitTorusDiagram(d, len(classes))
        for t, cl in enumerate(classes):
            if t == first:
                pieces = [double_piece(3, 1)] + [odd_piece(2)] * (len(cl) - 2)
            else:
                pieces = [odd_piece(2)] * len(cl)
            lay_out(diag, t, pieces)
        return diag
    # some zero of order >= 4 carries the even pattern
    top = max(range(len(orders)), key=lambda j: (orders[j], -j))
    diag = SlitTorusDiagram(d, len(classes))
    for t, A in enumerate(P):
        rest = sorted((orders[j] for j in A if j != top), reverse=True)
        pieces = [odd_piece(n) for n in rest]
        if top in A:
            pieces = [even_min_piece(orders[top])] + pieces
        lay_out(diag, t, pieces)
    return diag


def build_even(stratum, P, d):
    return _compile(even_diagram(stratum, P, d))


# ---------------------------------------------------------------------------
# connected strata and the non-hyperelliptic component

def _even_line_pieces(cl):
    """Pieces for a class with an even number of odd zeros."""
    odds = sorted((n for n in cl if n % 2), reverse=True)
    evens = sorted((n for n in cl if n % 2 == 0), reverse=True)
    if not evens and len(odds) >= 4 and all(n == 1 for n in odds):
        return [four_ones_piece()] + [pair_piece(1, 1)] * ((len(odds) - 4) // 2)
    pieces = [(n, odd_piece(n)) for n in evens]
    pieces += [(odds[i], pair_piece(odds[i + 1], odds[i])) for i in range(0, len(odds), 2)]
    pieces.sort(key=lambda t: -t[0])
    return [p for _, p in pieces]


def _pairs_only_diagram(lines, d):
    """Every class is a pair of simple zeros and d is even.

    The swap pair shifts columns by 2, so on its own it only reaches an
    index-2 lattice.  For d = 4 there is no room for anything else: a
    width-one cylinder is cut out by two vertical loops and each line carries
    a crosswise pair across it.  For larger d the first line uses a pattern
    that shifts a column by one.
    """
    diag = SlitTorusDiagram(d, lines)
    if d == 4:
        a = diag.add_vslit(0, 0, lines)
        b = diag.add_vslit(1, 0, lines)
        diag.glue_v(a, b)
        diag.glue_v(b, a)
        for t in range(lines):
            for x, y in ((0, 2), (1, 3)):
                i = diag.add_hslit(t, x, x + 1)
                j = diag.add_hslit(t, y, y + 1)
                diag.glue_h(i, j)
                diag.glue_h(j, i)
        return diag
    lay_out(diag, 0, [two_ones_piece()])
    for t in range(1, lines):
        lay_out(diag, t, [pair_piece(1, 1)])
    return diag


def general_diagram(stratum, P, d):
    orders = as_orders(stratum)
    P, classes = _classes(orders, P)
    if d < 2:
        raise WidthTooSmall("d must be at least 2")
    _check_sums(classes, d)
    if d % 2 == 0 and all(sorted(cl) == [1, 1] for cl in classes):
        return _pairs_only_diagram(len(classes), d)
    # lines: (orders on the line, decremented order placed last or None)
    plan = []
    odd_ids = [t for t, cl in enumerate(classes) if sum(cl) % 2]
    partner = {}
    for a, b in zip(odd_ids[::2], odd_ids[1::2]):
        partner[a] = b
    placed = set()
    for t, cl in enumerate(classes):
        if t in placed:
            continue
        if t in partner:
            for x in (t, partner[t]):
                c = sorted(classes[x], reverse=True)
                j = max(i for i, n in enumerate(c) if n % 2)   # smallest odd zero
                plan.append((c[:j] + c[j + 1:], c[j] - 1))
                placed.add(x)
        else:
            plan.append((cl, None))
            placed.add(t)
    diag = SlitTorusDiagram(d, len(plan))
    t = 0
    while t < len(plan):
        cl, last = plan[t]
        if last is None:
            pieces = _even_line_pieces(cl)
            if content_width(pieces) > d - 1:
                raise WidthTooSmall(f"line {cl} does not fit in d = {d}")
            lay_out(diag, t, pieces)
            t += 1
            continue
        # two odd lines joined by a pair of vertical slits at x = d-2, d-1
        for k in (t, t + 1):
            cl, last = plan[k]
            pieces = _even_line_pieces(cl) + [odd_piece(last) if last else POINT]
            w = content_width(pieces)
            if w > d - 2:
                raise WidthTooSmall(f"odd line {cl} does not fit in d = {d}")
            lay_out(diag, k, pieces, start=d - 2 - w)
        a = diag.add_vslit(d - 2, t, t + 1)
        b = diag.add_vslit(d - 1, t, t + 1)
        diag.glue_v(a, b)
        diag.glue_v(b, a)
        t += 2
    return diag


def build_general(stratum, P, d):
    return _compile(general_diagram(stratum, P, d))


# ---------------------------------------------------------------------------

def _class_signature(orders, P):
    return sorted(tuple(sorted(orders[j] for j in A)) for A in P)


def verify_build(s, stratum, label, P, d):
    """Run the invariant pipeline on a built surface; raise on any mismatch."""
    orders = as_orders(stratum)
    st = Stratum(orders)
    P, _ = _classes(orders, P)
    problems = []
    if s.area != d:
        problems.append(f"area {s.area} != {d}")
    if s.stratum != st:
        problems.append(f"stratum {s.stratum} != {st}")
    if not s.absolute_period_lattice.is_standard:
        problems.append("absolute periods do not span Z + iZ")
    else:
        prof = s.branch_profile()
        got = sorted(tuple(sorted(s.vertex_order(v) for v in c)) for c in prof.classes)
        if got != _class_signature(orders, P):
            problems.append(f"zero classes {got} != {_class_signature(orders, P)}")
    if not problems:
        want = normalize_label(st, label)
        got = component_of(s).tag
        if got != want:
            problems.append(f"component {got} != {want}")
    if problems:
        raise VerificationFailed("; ".join(problems))
    return s


def build_component(stratum, label, P, d, verify=True):
    orders = as_orders(stratum)
    st = Stratum(orders)
    P, classes = _classes(orders, P)
    comps = kz_components(st)
    want = normalize_label(st, label)
    if want not in comps:
        raise NoSuchComponent(f"{st} has no {label} component (components: {', '.join(comps)})")
    g = st.genus
    if want == CONN:
        if st.orders == (2,):
            s = build_hyp_minimal(2, d)
        else:
            s = build_general(orders, P, d)
    elif want == HYP:
        if label == EVEN and len(P) > 1:
            s = build_even(orders, P, d)
        elif len(orders) == 1:
            s = build_hyp_minimal(g, d)
        else:
            s = build_hyp_double(g, d, same_class=len(P) == 1)
    elif want == ODD:
        s = build_odd(orders, P, d)
    elif want == EVEN:
        s = build_even(orders, P, d)
    elif want == NONHYP:
        s = build_general(orders, P, d)
    else:
        raise NoSuchComponent(label)
    if verify:
        verify_build(s, orders, label, P, d)
    return s


def minimum_width(stratum, label, P):
    """Smallest d for which :func:`build_component` is expected to succeed."""
    orders = as_orders(stratum)
    st = Stratum(orders)
    P, classes = _classes(orders, P)
    base = max(sum(n + 1 for n in cl) for cl in classes)
    want = normalize_label(st, label)
    if want == HYP and label != EVEN:
        g = st.genus
        if len(orders) == 1:
            return 2 * g - 1
        return 2 * g if len(P) == 1 else g
    return max(base, 2)
