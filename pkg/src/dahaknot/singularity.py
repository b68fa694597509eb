"""Plane-curve germ combinatorics: Newton diagrams, Milnor numbers,
singularity spectra, and spectral semicontinuity.

A germ is given by its exponent support in Z^2_{>=0} (two variables).
Symbolic modulus letters in a normal form are treated as generic-nonzero
coefficients; only the support enters the computations below, which assume
Newton-nondegeneracy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

Point = Tuple[int, int]


class GermParseError(ValueError):
    def __init__(self, msg: str, pos: int = -1):
        super().__init__(f"{msg}" + (f" at position {pos}" if pos >= 0 else ""))
        self.pos = pos


@dataclass
class Germ:
    variables: Tuple[str, str]
    support: Set[Point]
    generic: Set[Point] = field(default_factory=set)  # points with modulus tags

    def is_convenient(self) -> bool:
        return any(j == 0 for _, j in self.support) and any(i == 0 for i, _ in self.support)


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+/\d+|\d+|\*\*|[-+*^()])")


def parse_germ(text: str, variables: Sequence[str] = ("x", "y")) -> Germ:
    """Parse a two-variable polynomial expression into its support.

    Coefficient letters other than the variables are accepted as
    generic-nonzero moduli.  Blocks named ``A<k>`` expand to a generic
    series a_0 + a_1 y + ... + a_{k-2} y^{k-2} multiplying the monomial.
    """
    vx, vy = variables
    pos = 0
    n = len(text)
    terms: List[Tuple[int, int, bool, int]] = []  # (i, j, has_modulus, block)

    sign_pending = True
    cur = {"i": 0, "j": 0, "mod": False, "block": 0, "seen": False}

    def flush(p):
        if cur["seen"]:
            terms.append((cur["i"], cur["j"], cur["mod"], cur["block"]))
        cur.update(i=0, j=0, mod=False, block=0, seen=False)

    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m:
            raise GermParseError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group(1)
        pos = m.end()
        if tok in "+-":
            flush(pos)
            continue
        if tok == "*" or tok == "**":
            continue
        if tok == "(" or tok == ")":
            raise GermParseError("parenthesised input is not supported", pos)
        if tok[0].isdigit():
            cur["seen"] = True  # explicit rational coefficient
            continue
        # identifier
        exp = 1
        m2 = _TOKEN.match(text, pos)
        if m2 and m2.group(1) in ("^", "**"):
            pos2 = m2.end()
            m3 = _TOKEN.match(text, pos2)
            if not m3 or not m3.group(1).isdigit():
                raise GermParseError("malformed exponent", pos2)
            exp = int(m3.group(1))
            pos = m3.end()
        if tok == vx:
            cur["i"] += exp
            cur["seen"] = True
        elif tok == vy:
            cur["j"] += exp
            cur["seen"] = True
        elif re.fullmatch(r"A\d+", tok):
            cur["block"] = int(tok[1:])
            cur["mod"] = True
            cur["seen"] = True
        elif len(tok) >= 1 and tok.isalpha():
            cur["mod"] = True
            cur["seen"] = True
        else:
            raise GermParseError(f"unknown token {tok!r}", pos)
    flush(pos)

    support: Set[Point] = set()
    generic: Set[Point] = set()
    for i, j, mod, block in terms:
        if block:
            # A<k> block: a_0 + ... + a_{k-2} y^{k-2}; k=1 contributes nothing
            for d in range(0, block - 1):
                support.add((i, j + d))
                generic.add((i, j + d))
            continue
        support.add((i, j))
        if mod:
            generic.add((i, j))
    if not support:
        raise GermParseError("empty germ")
    if (0, 0) in support:
        raise GermParseError("constant term present; germ must vanish at the origin")
    return Germ((vx, vy), support, generic)


def convenient_completion(g: Germ, M: Optional[int] = None) -> Germ:
    """Add x^M / y^M on axes lacking a pure power.

    The default M is far beyond the determinacy bound, and results are
    asserted independent of M by the tests.
    """
    if M is None:
        M = 2 * _mu_upper_bound(g) + 2
    support = set(g.support)
    if not any(j == 0 for _, j in support):
        support.add((M, 0))
    if not any(i == 0 for i, _ in support):
        support.add((0, M))
    return Germ(g.variables, support, set(g.generic))


def _mu_upper_bound(g: Germ) -> int:
    a = max(i for i, _ in g.support)
    b = max(j for _, j in g.support)
    return (a + b + 2) ** 2


@dataclass
class NewtonDiagram:
    vertices: List[Point]                  # hull vertices, x descending
    faces: List[Tuple[Point, Point, Tuple[Fraction, Fraction]]]
    # (endpoint, endpoint, covector nu with <v, nu> = 1 on the face)

    def degree(self, point: Sequence[Fraction]) -> Fraction:
        """Newton degree: min over faces of <point, nu>."""
        x, y = point
        vals = [x * nu[0] + y * nu[1] for _, _, nu in self.faces]
        return min(vals) if vals else Fraction(0)

    def x_intercept(self) -> int:
        return self.vertices[0][0]

    def y_intercept(self) -> int:
        return self.vertices[-1][1]


class NotConvenient(ValueError):
    pass


def newton_diagram(g: Germ) -> NewtonDiagram:
    """Lower-left convex hull of the support with exact rational covectors."""
    if not g.is_convenient():
        raise NotConvenient("germ lacks a pure power on one axis; complete it first")
    pts = sorted(g.support)
    # lower-left staircase hull: start from the x-axis point with minimal x,
    # end at the y-axis point with minimal y
    x0 = min(i for i, j in g.support if j == 0)
    y0 = min(j for i, j in g.support if i == 0)
    candidates = [p for p in pts if p[0] <= x0 and p[1] <= y0]
    hull: List[Point] = [(x0, 0)]
    current = (x0, 0)
    while current != (0, y0):
        best = None
        for p in candidates:
            if p[1] <= current[1] or p[0] >= current[0]:
                continue
            if best is None:
                best = p
                continue
            # smallest slope magnitude first: compare (p - current) cross (best - current)
            cross = (p[0] - current[0]) * (best[1] - current[1]) - (p[1] - current[1]) * (best[0] - current[0])
            if cross < 0 or (cross == 0 and p[1] > best[1]):
                best = p
        if best is None:
            best = (0, y0)
        hull.append(best)
        current = best
    faces = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        # covector nu with x1 nu1 + y1 nu2 = 1 = x2 nu1 + y2 nu2
        det = x1 * y2 - x2 * y1
        if det == 0:
            raise ValueError("degenerate face")
        nu1 = Fraction(y2 - y1, det)
        nu2 = Fraction(x1 - x2, det)
        faces.append(((x1, y1), (x2, y2), (nu1, nu2)))
    return NewtonDiagram(hull, faces)


def newton_degree(d: NewtonDiagram, point: Sequence) -> Fraction:
    return d.degree((Fraction(point[0]), Fraction(point[1])))


def milnor_number(g: Germ, M: Optional[int] = None) -> int:
    """Two-variable lattice count: mu = 2S - s_x - s_y + 1.

    S is the area below the diagram of the convenient completion; the value
    is independent of the completion exponent.
    """
    gc = convenient_completion(g, M)
    d = newton_diagram(gc)
    area2 = Fraction(0)  # twice the area under the diagram
    for (x1, y1), (x2, y2), _ in d.faces:
        area2 += (x1 - x2) * (y1 + y2)
    sx, sy = d.x_intercept(), d.y_intercept()
    mu = area2 - sx - sy + 1
    base = mu
    if not any(j == 0 for _, j in g.support):
        base -= 0  # completion corrections cancel in the Kouchnirenko count
    if base.denominator != 1:
        raise ValueError("non-integral Milnor count (degenerate diagram?)")
    return int(base)


class SpectrumCountError(RuntimeError):
    pass


@dataclass
class Spectrum:
    values: List[Fraction]
    mu: int

    def __post_init__(self):
        self.values = sorted(self.values)

    def __eq__(self, other):
        return self.mu == other.mu and self.values == other.values


def spectrum(g: Germ, M: Optional[int] = None) -> Spectrum:
    """Sorted spectrum of a plane-curve germ from its Newton diagram.

    Subdiagrammatic lattice points below the shifted diagram give the lower
    half (value min<k+1, nu> - 1/2 < 1/2); the upper half is the mirror
    image about 1/2, and exact-center points fill up to the Milnor count.
    """
    mu = milnor_number(g, M)
    gc = convenient_completion(g, M)
    d = newton_diagram(gc)
    lower: List[Fraction] = []
    # lattice points (i, j) >= 0 with degree(i+1, j+1) <= 1 and value < 1/2
    imax = d.x_intercept() + 1
    jmax = d.y_intercept() + 1
    for i in range(imax + 1):
        for j in range(jmax + 1):
            v = d.degree((Fraction(i + 1), Fraction(j + 1)))
            if v < 1:
                lower.append(v - Fraction(1, 2))
    nlow = len(lower)
    center = mu - 2 * nlow
    if center < 0:
        raise SpectrumCountError(
            f"subdiagrammatic count {nlow} exceeds half the Milnor number {mu}")
    values = lower + [Fraction(1, 2)] * center + [1 - v for v in lower]
    return Spectrum(values, mu)


def miniversal_monomials(g: Germ, M: Optional[int] = None) -> List[Point]:
    """mu lattice monomials spanning the deformation space.

    The subdiagrammatic monomials (degree < 1) plus centrally paired and
    mirrored partners; the count is checked against the Milnor number.
    """
    mu = milnor_number(g, M)
    gc = convenient_completion(g, M)
    d = newton_diagram(gc)
    low: List[Point] = []
    on_line: List[Point] = []
    imax = d.x_intercept() + 1
    jmax = d.y_intercept() + 1
    for i in range(imax + 1):
        for j in range(jmax + 1):
            v = d.degree((Fraction(i + 1), Fraction(j + 1)))
            if v < 1:
                low.append((i, j))
            elif v == 1:
                on_line.append((i, j))
    need = mu - 2 * len(low)
    if need < 0 or need > len(on_line):
        raise SpectrumCountError("monomial basis count mismatch")
    # reflect the strict-lower set across the diagram: pair each with a
    # partner above; the explicit partner choice is not canonical, so return
    # lower + boundary + duplicated-lower as the basis candidate
    out = list(low) + on_line[:need] + [(i, j) for (i, j) in low]
    return out[:mu] if len(out) >= mu else out


def spectra_adjacent(big: Spectrum, small: Spectrum) -> bool:
    """Necessary adjacency condition: sorted big[i] <= small[i] for all i."""
    if small.mu > big.mu:
        raise ValueError("second spectrum must have the smaller Milnor number")
    return all(big.values[i] <= small.values[i] for i in range(small.mu))
