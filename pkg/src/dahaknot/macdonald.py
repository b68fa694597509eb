"""Symmetric Macdonald polynomials and their special values.

Minuscule weights get the fast path (the bare Weyl-orbit sum).  General
dominant weights are computed as eigenfunctions of the symmetrized
translation operator ``L = sum_{v in W omega} Y_v`` by a triangular solve
in the orbit-sum basis; the coefficients live in the fraction field of
Z[q^{1/2m}, t^{1/2}] and are carried as sympy rational functions in scaled
variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from .qtcoeff import QT
from .polyrep import PolyRep, XPoly, xp_add, xp_add_term, xp_monomial
from .rootsys import RootSystem, Weight, build_root_system


# scaled symbols: QS = q^(1/qden), TS = t^(1/tden) for a given ring scale
_QS, _TS = sp.symbols("QS TS", positive=True)


class ScaledRing:
    """Converts QT scalars to sympy Laurent polynomials in scaled variables."""

    def __init__(self, qden: int, tden: int):
        self.qden = qden
        self.tden = tden

    def to_expr(self, x: QT) -> sp.Expr:
        total = sp.Integer(0)
        for (eq, et), c in x.terms.items():
            a = eq * self.qden
            b = et * self.tden
            if a.denominator != 1 or b.denominator != 1:
                raise ValueError(f"exponent ({eq},{et}) outside 1/{self.qden}, 1/{self.tden} lattice")
            total += sp.Rational(c.numerator, c.denominator) * _QS ** int(a) * _TS ** int(b)
        return total

    def mono_expr(self, eq: Fraction, et: Fraction) -> sp.Expr:
        a = Fraction(eq) * self.qden
        b = Fraction(et) * self.tden
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError("exponent outside the scaled lattice")
        return _QS ** int(a) * _TS ** int(b)


def common_ring(rs: RootSystem, extra_qden: int = 1, extra_tden: int = 1) -> ScaledRing:
    return ScaledRing(lcm(2 * rs.m, extra_qden), lcm(2, extra_tden))


# ---------------------------------------------------------------------------
# orbit sums and dominance ideals
# ---------------------------------------------------------------------------

def orbit_sum(rs: RootSystem, c: Weight) -> XPoly:
    return {w: QT.one() for w in rs.weyl_orbit(c)}


def dominant_ideal(rs: RootSystem, top: Weight) -> List[Weight]:
    """Dominant weights d with top - d a nonnegative sum of simple roots.

    Sorted by decreasing (d, rho), so dominance order is refined.
    """
    top = tuple(top)
    found = {top}
    frontier = [top]
    # walk the full saturated weight set, recording dominant members
    seen = {top}
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                ji = w[i]
                if ji > 0:
                    v = w
                    for _ in range(ji):
                        v = tuple(x - y for x, y in zip(v, rs.simple_roots[i]))
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
        frontier = nxt
    dominants = [w for w in seen if rs.is_dominant(w)]
    dominants.sort(key=lambda d: (-rs.inner(d, rs.rho), d))
    return dominants


def weight_multiplicity_support(rs: RootSystem, top: Weight) -> int:
    """Number of distinct lattice points in the saturated hull of top."""
    return len(_saturated_set(rs, top))


def _saturated_set(rs: RootSystem, top: Weight):
    top = tuple(top)
    seen = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                if w[i] > 0:
                    v = w
                    for _ in range(w[i]):
                        v = tuple(x - y for x, y in zip(v, rs.simple_roots[i]))
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# evaluation product formula
# ---------------------------------------------------------------------------

def evaluation_value_factored(rs: RootSystem, b: Weight):
    """P_b(principal point) as (t-power, numerator factors, denominator factors).

    The value is t^{-(b,rho)} * prod_{alpha>0} prod_{j=0}^{(alpha^vee,b)-1}
    (1 - q^j t^{h+1}) / (1 - q^j t^{h}) with h the height of alpha.
    Factors are returned as (j, h) exponent pairs for 1 - q^j t^h.
    """
    num: List[Tuple[int, int]] = []
    den: List[Tuple[int, int]] = []
    for alpha in rs.positive_roots:
        kb = rs.pair_coroot(b, alpha)
        assert kb.denominator == 1
        kb = int(kb)
        if kb <= 0:
            continue
        h = rs.height(alpha)
        assert h.denominator == 1
        h = int(h)
        for j in range(kb):
            num.append((j, h + 1))
            den.append((j, h))
    # cancel identical factors
    from collections import Counter

    cn, cd = Counter(num), Counter(den)
    common = cn & cd
    cn -= common
    cd -= common
    tpow = -rs.inner(b, rs.rho)
    return tpow, sorted(cn.elements()), sorted(cd.elements())


def evaluation_value_qt(rs: RootSystem, b: Weight) -> Tuple[QT, QT]:
    """Evaluation as an exact (numerator, denominator) pair of QT scalars."""
    tpow, num, den = evaluation_value_factored(rs, b)
    nval = QT.mono(1, 0, tpow)
    for (j, h) in num:
        nval = nval * (QT.one() - QT.mono(1, j, h))
    dval = QT.one()
    for (j, h) in den:
        dval = dval * (QT.one() - QT.mono(1, j, h))
    return nval, dval


def evaluation_value(rs: RootSystem, b: Weight) -> QT:
    """Exact evaluation value; requires the denominator to divide out."""
    nval, dval = evaluation_value_qt(rs, b)
    return nval.exact_div(dval)


def evaluation_expr(rs: RootSystem, b: Weight, ring: ScaledRing) -> sp.Expr:
    tpow, num, den = evaluation_value_factored(rs, b)
    e = ring.mono_expr(Fraction(0), tpow)
    for (j, h) in num:
        e *= 1 - ring.mono_expr(Fraction(j), Fraction(h))
    for (j, h) in den:
        e /= 1 - ring.mono_expr(Fraction(j), Fraction(h))
    return e


# ---------------------------------------------------------------------------
# the symmetrized translation operator and its eigenvalues
# ---------------------------------------------------------------------------

class MacdonaldEngine:
    """Caches operator data for one root system."""

    def __init__(self, rs: RootSystem, sym_index: Optional[int] = None):
        self.rs = rs
        self.rep = PolyRep(rs)
        self.sym_index = sym_index or rs.minuscule_indices[0]
        self.sym_orbit = sorted(rs.weyl_orbit(rs.fund_weights[self.sym_index - 1]))
        self._lf_cache: Dict[Weight, XPoly] = {}

    def eigenvalue_expr(self, c: Weight, ring: ScaledRing) -> sp.Expr:
        """Eigenvalue of L on P_c.

        The realized Y operators have spectral vector -(c + rho_k) on the
        symmetric eigenfunction with top weight c, so the eigenvalue is
        sum over the orbit of q^{-(v,c)} t^{-(v,rho)}.
        """
        rs = self.rs
        total = sp.Integer(0)
        for v in self.sym_orbit:
            total += ring.mono_expr(-rs.inner(v, c), -rs.inner(v, rs.rho))
        return total

    def apply_lf(self, f: XPoly) -> XPoly:
        out: XPoly = {}
        for v in self.sym_orbit:
            g = self.rep.apply_Y(v, f)
            for b, c in g.items():
                xp_add_term(out, b, c)
        return out

    def lf_on_orbit_sum(self, d: Weight) -> XPoly:
        if d not in self._lf_cache:
            self._lf_cache[d] = self.apply_lf(orbit_sum(self.rs, d))
        return self._lf_cache[d]


@dataclass
class MacdonaldPoly:
    """P_c in the orbit-sum basis: P_c = sum_d coeff[d] * m_d (coeff[c] = 1)."""

    weight: Weight
    m_coeffs: Dict[Weight, sp.Expr]
    ring: ScaledRing

    def support_weights(self) -> List[Weight]:
        return list(self.m_coeffs)

    def eval_at_shifted_point(self, rs: RootSystem, shift: Weight) -> sp.Expr:
        """Value at the point X_a -> q^{(a, shift)} t^{-(a, rho)}."""
        total = sp.Integer(0)
        for d, coeff in self.m_coeffs.items():
            msum = sp.Integer(0)
            for w in rs.weyl_orbit(d):
                msum += self.ring.mono_expr(rs.inner(w, shift), -rs.inner(w, rs.rho))
            total += coeff * msum
        return total

    def eval_principal(self, rs: RootSystem) -> sp.Expr:
        return self.eval_at_shifted_point(rs, (0,) * rs.rank)


class EigenvalueCollision(RuntimeError):
    pass


@dataclass
class MacdonaldTable:
    """All P_c and the m-to-P transition on a dominance ideal."""

    rs: RootSystem
    top: Weight
    ideal: List[Weight]
    ring: ScaledRing
    polys: Dict[Weight, MacdonaldPoly]
    lf_matrix: Dict[Tuple[Weight, Weight], sp.Expr]

    def expand_orbit_sum(self, d: Weight) -> Dict[Weight, sp.Expr]:
        """Coefficients g with m_d = sum_c g[c] P_c."""
        if d not in self.polys:
            raise KeyError(f"{d} not inside the computed ideal")
        order = [c for c in self.ideal]
        g: Dict[Weight, sp.Expr] = {}
        target = {c: sp.Integer(1 if c == d else 0) for c in order}
        for c in order:  # descending
            val = target[c]
            for e, ge in g.items():
                val -= ge * self.polys[e].m_coeffs.get(c, sp.Integer(0))
            val = sp.cancel(val)
            if val != 0:
                g[c] = val
        return g


def macdonald_table(rs: RootSystem, top: Weight,
                    engine: Optional[MacdonaldEngine] = None,
                    ring: Optional[ScaledRing] = None) -> MacdonaldTable:
    """Compute every P_c for c in the dominance ideal below top."""
    engine = engine or MacdonaldEngine(rs)
    ring = ring or common_ring(rs)
    ideal = dominant_ideal(rs, top)
    # operator matrix in the orbit-sum basis
    M: Dict[Tuple[Weight, Weight], sp.Expr] = {}
    for d in ideal:
        img = engine.lf_on_orbit_sum(d)
        for e in ideal:
            coeff = img.get(e)
            if coeff is not None and coeff.terms:
                M[(e, d)] = ring.to_expr(coeff)
    # consistency: diagonal entries equal the eigenvalue formula
    for d in ideal:
        diag = M.get((d, d), sp.Integer(0))
        want = engine.eigenvalue_expr(d, ring)
        if sp.expand(diag - want) != 0:
            raise AssertionError(f"operator diagonal mismatch at {d}")

    polys: Dict[Weight, MacdonaldPoly] = {}
    chi = {d: engine.eigenvalue_expr(d, ring) for d in ideal}
    for ci, c in enumerate(ideal):
        coeffs: Dict[Weight, sp.Expr] = {c: sp.Integer(1)}
        for e in ideal[ci + 1:]:
            rhs = sp.Integer(0)
            for d in coeffs:
                entry = M.get((e, d))
                if entry is not None:
                    rhs += entry * coeffs[d]
            if rhs == 0:
                continue
            denom = sp.expand(chi[c] - chi[e])
            if denom == 0:
                raise EigenvalueCollision(f"degenerate spectrum between {c} and {e}")
            val = sp.cancel(rhs / denom)
            if val != 0:
                coeffs[e] = val
        polys[c] = MacdonaldPoly(c, coeffs, ring)
    return MacdonaldTable(rs, tuple(top), ideal, ring, polys, M)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

class NotMinuscule(ValueError):
    pass


def macdonald_minuscule(rs: RootSystem, b: Weight) -> XPoly:
    """P_b for minuscule b: the bare orbit sum."""
    b = tuple(b)
    nz = [i for i, x in enumerate(b) if x]
    if len(nz) != 1 or b[nz[0]] != 1 or (nz[0] + 1) not in rs.minuscule_indices:
        raise NotMinuscule(
            f"{b} is not a minuscule fundamental weight; use macdonald_general")
    return orbit_sum(rs, b)


def macdonald_general(rs: RootSystem, b: Weight) -> MacdonaldPoly:
    table = macdonald_table(rs, tuple(b))
    return table.polys[tuple(b)]


def check_duality(rs: RootSystem, b: Weight, c: Weight) -> bool:
    """P_b(q^{c - rho_k}) P_c(q^{-rho_k}) == P_c(q^{b - rho_k}) P_b(q^{-rho_k})."""
    b, c = tuple(b), tuple(c)
    top = tuple(x + y for x, y in zip(b, c))
    table = macdonald_table(rs, top) if not _both_minuscule(rs, b, c) else None
    ring = common_ring(rs)
    if table is None:
        pb = MacdonaldPoly(b, {b: sp.Integer(1)}, ring)
        pc = MacdonaldPoly(c, {c: sp.Integer(1)}, ring)
    else:
        ring = table.ring
        pb, pc = table.polys[b], table.polys[c]
    lhs = pb.eval_at_shifted_point(rs, c) * pc.eval_principal(rs)
    rhs = pc.eval_at_shifted_point(rs, b) * pb.eval_principal(rs)
    return sp.cancel(sp.together(lhs - rhs)) == 0


def _both_minuscule(rs: RootSystem, b: Weight, c: Weight) -> bool:
    def ok(w):
        nz = [i for i, x in enumerate(w) if x]
        return len(nz) == 1 and w[nz[0]] == 1 and (nz[0] + 1) in rs.minuscule_indices
    return ok(b) and ok(c)
