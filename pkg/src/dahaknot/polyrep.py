"""Difference-operator engine on weight-lattice Laurent polynomials.

An ``XPoly`` is a finite map from lattice weights (integer tuples in the
fundamental-weight basis) to ``QT`` scalars.  This module realizes the
standard Hecke-type operators on that space:

* multiplication by a lattice monomial,
* the lattice-permuting operators ``pi_r``,
* Demazure-Lusztig operators ``T_i`` for the finite and affine nodes,
* the commuting family ``Y_b`` built from translation words,
* evaluation at the principal specialization point.

All divided differences are performed via closed geometric sums, so the
arithmetic stays inside the Laurent polynomial ring (exactness is asserted
by the quadratic-relation tests, not by runtime division).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .qtcoeff import QT
from .rootsys import RootSystem, Weight

XPoly = Dict[Weight, QT]

_HALF = Fraction(1, 2)
T_HALF = QT.mono(1, 0, _HALF)
T_MHALF = QT.mono(1, 0, -_HALF)
T_DIFF = T_HALF - T_MHALF  # t^{1/2} - t^{-1/2}


def xp_zero() -> XPoly:
    return {}

def xp_one() -> XPoly:
    return {(): QT.one()}  # placeholder; use xp_monomial with the right rank


def xp_monomial(b: Weight, coeff: QT = None) -> XPoly:
    return {tuple(b): coeff.copy() if coeff is not None else QT.one()}


def xp_add_term(f: XPoly, b: Weight, c: QT) -> None:
    cur = f.get(b)
    if cur is None:
        if c.terms:
            f[b] = c
        return
    s = cur + c
    if s.terms:
        f[b] = s
    else:
        del f[b]


def xp_add(f: XPoly, g: XPoly) -> XPoly:
    out = {k: v.copy() for k, v in f.items()}
    for b, c in g.items():
        xp_add_term(out, b, c)
    return out


def xp_sub(f: XPoly, g: XPoly) -> XPoly:
    out = {k: v.copy() for k, v in f.items()}
    for b, c in g.items():
        xp_add_term(out, b, -c)
    return out


def xp_scale(f: XPoly, c: QT) -> XPoly:
    if not c.terms:
        return {}
    return {b: v * c for b, v in f.items()}


def xp_mul(f: XPoly, g: XPoly) -> XPoly:
    out: XPoly = {}
    for b, cb in f.items():
        for c, cc in g.items():
            key = tuple(x + y for x, y in zip(b, c))
            xp_add_term(out, key, cb * cc)
    return out


def xp_equal(f: XPoly, g: XPoly) -> bool:
    return xp_sub(f, g) == {}


class PolyRep:
    """Operator algebra acting on XPoly for a fixed root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        self._trow_cache: Dict[Tuple[int, Weight], List[Tuple[Weight, QT]]] = {}
        self._y_words: Dict[int, Tuple[int, Tuple[int, ...]]] = {}

    # -- plain lattice operators -------------------------------------------
    def one(self) -> XPoly:
        return {(0,) * self.rank: QT.one()}

    def apply_x(self, b: Weight, f: XPoly) -> XPoly:
        b = tuple(b)
        return {tuple(x + y for x, y in zip(b, w)): c.copy() for w, c in f.items()}

    def apply_s(self, i: int, f: XPoly) -> XPoly:
        """Finite simple reflection s_i (1-based index) on the support."""
        out: XPoly = {}
        for w, c in f.items():
            xp_add_term(out, self.rs.reflect(i - 1, w), c.copy())
        return out

    def apply_pi(self, r: int, f: XPoly) -> XPoly:
        """pi_r: X_b -> q^{(omega_iota(r), b)} X_{u_r^{-1}(b)}."""
        if r == 0:
            return {k: v.copy() for k, v in f.items()}
        rs = self.rs
        omega_i = rs.fund_weights[rs.iota(r) - 1]
        out: XPoly = {}
        for w, c in f.items():
            e = rs.inner(omega_i, w)
            xp_add_term(out, rs.apply_u_inv(r, w), c * QT.mono(1, e, 0))
        return out

    def apply_pi_inv(self, r: int, f: XPoly) -> XPoly:
        if r == 0:
            return {k: v.copy() for k, v in f.items()}
        rs = self.rs
        omega_i = rs.fund_weights[rs.iota(r) - 1]
        u = rs.u_word(r)
        out: XPoly = {}
        for w, c in f.items():
            v = w
            for j in u:
                v = rs.reflect(j, v)
            e = -rs.inner(omega_i, v)
            xp_add_term(out, v, c * QT.mono(1, e, 0))
        return out

    # -- Demazure-Lusztig rows ----------------------------------------------
    def _t_row(self, i: int, b: Weight) -> List[Tuple[Weight, QT]]:
        """Image of the monomial X_b under T_i, as a sparse row."""
        key = (i, b)
        row = self._trow_cache.get(key)
        if row is not None:
            return row
        rs = self.rs
        if i == 0:
            theta = rs.theta
            jf = rs.inner(b, theta)
            assert jf.denominator == 1
            j = int(jf)
            terms: Dict[Weight, QT] = {}
            if j == 0:
                terms[b] = T_HALF.copy()
            elif j > 0:
                # s_0(X_b) = q^j X_{b - j theta}; geometric sum in q X_{-theta}
                def shift(l):
                    return tuple(x - l * y for x, y in zip(b, theta))
                terms[shift(j)] = QT.mono(1, j, _HALF)
                for l in range(1, j):
                    terms[shift(l)] = T_DIFF * QT.mono(1, l, 0)
                terms[b] = T_DIFF.copy()
            else:
                k = -j

                def shift(l):
                    return tuple(x + l * y for x, y in zip(b, theta))
                terms[shift(k)] = QT.mono(1, -k, -_HALF)
                for l in range(1, k):
                    terms[shift(l)] = -(T_DIFF * QT.mono(1, -l, 0))
        else:
            alpha = rs.simple_roots[i - 1]
            j = b[i - 1]
            terms = {}
            if j == 0:
                terms[b] = T_HALF.copy()
            elif j > 0:
                def shift(l):
                    return tuple(x - l * y for x, y in zip(b, alpha))
                terms[shift(j)] = T_MHALF.copy()
                for l in range(1, j):
                    terms[shift(l)] = -T_DIFF
            else:
                k = -j

                def shift(l):
                    return tuple(x + l * y for x, y in zip(b, alpha))
                terms[shift(k)] = T_HALF.copy()
                for l in range(0, k):
                    cur = terms.get(shift(l), QT.zero()) + T_DIFF
                    if cur.terms:
                        terms[shift(l)] = cur
                    elif shift(l) in terms:
                        del terms[shift(l)]
        row = [(w, c) for w, c in terms.items() if c.terms]
        self._trow_cache[key] = row
        return row

    def apply_T(self, i: int, f: XPoly) -> XPoly:
        """Demazure-Lusztig operator for node i (0 = affine)."""
        out: XPoly = {}
        for b, c in f.items():
            for w, rc in self._t_row(i, b):
                xp_add_term(out, w, c * rc)
        return out

    def apply_T_inv(self, i: int, f: XPoly) -> XPoly:
        """T_i^{-1} = T_i - t^{1/2} + t^{-1/2} (from the quadratic relation)."""
        out = self.apply_T(i, f)
        corr = T_DIFF
        for b, c in f.items():
            xp_add_term(out, b, -(c * corr))
        return out

    # -- Y operators ----------------------------------------------------------
    def _y_word(self, r: int) -> Tuple[int, Tuple[int, ...]]:
        if r not in self._y_words:
            self._y_words[r] = self.rs.translation_word(r)
        return self._y_words[r]

    def apply_Y_fund(self, r: int, f: XPoly) -> XPoly:
        """Y_{omega_r} for a minuscule index r."""
        pi, letters = self._y_word(r)
        for i in letters:
            f = self.apply_T(i, f)
        return self.apply_pi(pi, f)

    def apply_Y_fund_inv(self, r: int, f: XPoly) -> XPoly:
        pi, letters = self._y_word(r)
        f = self.apply_pi_inv(pi, f)
        for i in reversed(letters):
            f = self.apply_T_inv(i, f)
        return f

    def apply_Y(self, b: Sequence[int], f: XPoly) -> XPoly:
        """Y_b for b in the span of minuscule fundamental weights."""
        for r0, l in enumerate(b):
            r = r0 + 1
            if l > 0:
                for _ in range(l):
                    f = self.apply_Y_fund(r, f)
            elif l < 0:
                for _ in range(-l):
                    f = self.apply_Y_fund_inv(r, f)
        return f

    # -- evaluation ------------------------------------------------------------
    def evaluate_at_rho(self, f: XPoly) -> QT:
        """Substitute X_b -> t^{-(b, rho)} and sum."""
        rs = self.rs
        total = QT.zero()
        for b, c in f.items():
            total = total + c * QT.mono(1, 0, -rs.inner(b, rs.rho))
        return total
