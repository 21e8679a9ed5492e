"""Slit diagrams on the standard torus of length d and their compilation.

A diagram lives on the rectangle ``[0, d] x [0, 1]`` with opposite sides
glued.  It has ``lines`` horizontal levels at heights ``t / lines``;
horizontal slits sit on a level, vertical slits join levels.  Cutting a slit
creates two sides; the gluing pairs the bottom side of one horizontal slit
with the top side of another (and the left side of a vertical slit with the
right side of another).

Compilation refines the torus into a grid of cells of width 1 (or 1/2 when
some endpoint is a half integer) and height ``1 / lines`` and rewires the
``r`` / ``u`` permutations across the slits.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import re

from ..errors import FormatError, OverlappingSlits, UnmatchedSides
from ..flat_core import GridSurface


@dataclass(frozen=True)
class HSlit:
    line: int
    x0: Fraction
    x1: Fraction


@dataclass(frozen=True)
class VSlit:
    x: Fraction
    level0: int
    level1: int


@dataclass
class SlitTorusDiagram:
    d: int
    lines: int = 1
    hslits: list = field(default_factory=list)
    vslits: list = field(default_factory=list)
    hglue: list = field(default_factory=list)   # (i, j): bottom side of i meets top side of j
    vglue: list = field(default_factory=list)   # (i, j): left side of i meets right side of j

    def add_hslit(self, line, x0, x1):
        self.hslits.append(HSlit(line, Fraction(x0), Fraction(x1)))
        return len(self.hslits) - 1

    def add_vslit(self, x, level0, level1):
        self.vslits.append(VSlit(Fraction(x), level0, level1))
        return len(self.vslits) - 1

    def glue_h(self, i, j):
        self.hglue.append((i, j))

    def glue_v(self, i, j):
        self.vglue.append((i, j))

    # -- text format -----------------------------------------------------------

    def to_text(self):
        out = [f"d={self.d} lines={self.lines}"]
        for t in range(self.lines):
            items = [f"slit {_fmt(s.x0)}-{_fmt(s.x1)}" for s in self.hslits if s.line == t]
            if items:
                out.append(f"line {t}: " + " ".join(items))
        for v in self.vslits:
            out.append(f"vslit {_fmt(v.x)} {v.level0}-{v.level1}")
        # horizontal slits are numbered in the order the text lists them
        order = sorted(range(len(self.hslits)), key=lambda i: (self.hslits[i].line, i))
        num = {i: k + 1 for k, i in enumerate(order)}
        for i, j in self.hglue:
            out.append(f"glue h{num[i]} h{num[j]}")
        for i, j in self.vglue:
            out.append(f"glue v{i + 1} v{j + 1}")
        return "\n".join(out) + "\n"


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_diagram(text):
    diag = None
    pending = []
    for raw in text.splitlines():
        ln = raw.split("#", 1)[0].strip()
        if not ln:
            continue
        if ln.startswith("d="):
            head = dict(tok.split("=", 1) for tok in ln.split())
            diag = SlitTorusDiagram(int(head["d"]), int(head.get("lines", 1)))
            continue
        if diag is None:
            raise FormatError("diagram text must start with d=<int>")
        m = re.fullmatch(r"line\s+(\d+)\s*:(.*)", ln)
        if m:
            t = int(m.group(1))
            diag.lines = max(diag.lines, t + 1)
            for a, b in re.findall(r"slit\s+([\d/]+)-([\d/]+)", m.group(2)):
                diag.add_hslit(t, Fraction(a), Fraction(b))
            continue
        m = re.fullmatch(r"vslit\s+([\d/]+)\s+(\d+)-(\d+)", ln)
        if m:
            diag.add_vslit(Fraction(m.group(1)), int(m.group(2)), int(m.group(3)))
            continue
        m = re.fullmatch(r"glue\s+([hv])(\d+)\s+([hv])(\d+)", ln)
        if m and m.group(1) == m.group(3):
            pending.append((m.group(1), int(m.group(2)) - 1, int(m.group(4)) - 1))
            continue
        raise FormatError(f"cannot parse diagram line {raw!r}")
    if diag is None:
        raise FormatError("empty diagram")
    for kind, i, j in pending:
        (diag.hglue if kind == "h" else diag.vglue).append((i, j))
    return diag


# ---------------------------------------------------------------------------

def _check_overlaps(diag):
    by_line = {}
    for s in diag.hslits:
        if not (0 <= s.x0 < s.x1 <= diag.d):
            raise OverlappingSlits(f"slit {s} does not fit in [0, {diag.d})")
        if not 0 <= s.line < diag.lines:
            raise OverlappingSlits(f"slit {s} on a missing line")
        by_line.setdefault(s.line, []).append(s)
    for slits in by_line.values():
        slits.sort(key=lambda s: s.x0)
        for a, b in zip(slits, slits[1:]):
            if b.x0 < a.x1:
                raise OverlappingSlits(f"slits {a} and {b} overlap")
    by_x = {}
    for v in diag.vslits:
        if not (0 <= v.x < diag.d) or not v.level0 < v.level1 <= v.level0 + diag.lines:
            raise OverlappingSlits(f"bad vertical slit {v}")
        by_x.setdefault(v.x, []).append(v)
    for vs in by_x.values():
        vs.sort(key=lambda v: v.level0)
        for a, b in zip(vs, vs[1:]):
            if b.level0 < a.level1:
                raise OverlappingSlits(f"vertical slits {a} and {b} overlap")


def _check_pairing(pairs, count, kind):
    if sorted(i for i, _ in pairs) != list(range(count)) or \
            sorted(j for _, j in pairs) != list(range(count)):
        raise UnmatchedSides(f"{kind} slit sides are not paired bijectively")


def compile_diagram(diag):
    _check_overlaps(diag)
    _check_pairing(diag.hglue, len(diag.hslits), "horizontal")
    _check_pairing(diag.vglue, len(diag.vslits), "vertical")
    half = any(x.denominator != 1 for s in diag.hslits for x in (s.x0, s.x1)) or \
        any(v.x.denominator != 1 for v in diag.vslits)
    sx = Fraction(1, 2) if half else Fraction(1)
    lines = max(diag.lines, 1)
    sy = Fraction(1, lines)
    width = int(diag.d / sx)
    def cell(col, row):
        return (row % lines) * width + col % width

    n = width * lines
    r = [0] * n
    u = [0] * n
    for row in range(lines):
        for col in range(width):
            r[cell(col, row)] = cell(col + 1, row)
            u[cell(col, row)] = cell(col, row + 1)

    def hsides(s):
        cols = range(int(s.x0 / sx), int(s.x1 / sx))
        return [cell(c, s.line - 1) for c in cols], [cell(c, s.line) for c in cols]

    def vsides(v):
        col = int(v.x / sx)
        rows = range(v.level0, v.level1)
        return [cell(col - 1, t) for t in rows], [cell(col, t) for t in rows]

    for i, j in diag.hglue:
        below, _ = hsides(diag.hslits[i])
        _, above = hsides(diag.hslits[j])
        if len(below) != len(above):
            raise UnmatchedSides(f"horizontal slits {i} and {j} differ in length")
        for a, b in zip(below, above):
            u[a] = b
    for i, j in diag.vglue:
        left, _ = vsides(diag.vslits[i])
        _, right = vsides(diag.vslits[j])
        if len(left) != len(right):
            raise UnmatchedSides(f"vertical slits {i} and {j} differ in length")
        for a, b in zip(left, right):
            r[a] = b
    return GridSurface(tuple(r), tuple(u), sx, sy)
