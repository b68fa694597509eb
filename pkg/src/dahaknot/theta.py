"""Ground-truth evaluation engine based on lattice theta series.

The two modular generators act by conjugation with theta elements: the
upper one by multiplication with the X-lattice theta, the lower one by a
theta series in the commuting translation operators Y.  For a two-sided
word gamma = U^a L^b (U upper, L lower, first column (1 + ab, b)) applied
to a symmetric polynomial P and followed by the principal evaluation, the
vacuum expression collapses to

    value  =  ev[ theta^a * T_Y^b ( P * T_Y^{-b}( theta^{-a} ) ) ]

where theta = sum_{l in P} q^{(l,l)/2} X_l and T_Y = sum_l q^{(l,l)/2} Y_l,
everything truncated at a fixed q-adic order.  This is exponentially slow
in rank but exact, and serves as the oracle that calibrates and verifies
the production evaluation path on small root systems.

Truncation bookkeeping: a term q^e X_mu (e in (1/2m)Z) is kept while
e + minexp(mu) <= N where minexp(mu) = -(mu, rho) k-part lower bound is
handled conservatively by tracking both q and t exponents; in practice we
keep all terms with plain q-exponent <= N and validate N-stability.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .qtcoeff import QT
from .polyrep import PolyRep, XPoly, xp_add_term
from .rootsys import RootSystem, Weight


def lattice_ball(rs: RootSystem, max_norm2: Fraction) -> List[Weight]:
    """All weight-lattice points with (l, l)/2 <= max_norm2 (BFS)."""
    zero = (0,) * rs.rank
    seen = {zero}
    frontier = [zero]
    out = [zero]
    steps = [tuple(1 if i == j else 0 for j in range(rs.rank)) for i in range(rs.rank)]
    steps += [tuple(-x for x in s) for s in steps]
    while frontier:
        nxt = []
        for w in frontier:
            for s in steps:
                v = tuple(a + b for a, b in zip(w, s))
                if v in seen:
                    continue
                if rs.inner(v, v) / 2 <= max_norm2:
                    seen.add(v)
                    nxt.append(v)
                    out.append(v)
        frontier = nxt
    return out


class ThetaEngine:
    """Exact q-adically truncated evaluation of two-run modular words."""

    def __init__(self, rs: RootSystem, qmax: Fraction):
        self.rs = rs
        self.rep = PolyRep(rs)
        self.qmax = Fraction(qmax)
        self.ball = lattice_ball(rs, self.qmax)
        self._y_eigen_cache: Dict[Weight, QT] = {}

    # -- series plumbing -------------------------------------------------
    def prune(self, f: XPoly) -> XPoly:
        out: XPoly = {}
        for w, c in f.items():
            kept = {k: v for k, v in c.terms.items() if k[0] <= self.qmax}
            if kept:
                q = QT()
                q.terms = kept
                out[w] = q
        return out

    def series_mul(self, f: XPoly, g: XPoly) -> XPoly:
        out: XPoly = {}
        for wf, cf in f.items():
            for wg, cg in g.items():
                prod = cf * cg
                kept = {k: v for k, v in prod.terms.items() if k[0] <= self.qmax}
                if not kept:
                    continue
                q = QT()
                q.terms = kept
                xp_add_term(out, tuple(a + b for a, b in zip(wf, wg)), q)
        return self.prune(out)

    def theta_x(self, power_sign: int = 1) -> XPoly:
        """theta or its series inverse (power_sign = -1)."""
        rs = self.rs
        th: XPoly = {}
        for l in self.ball:
            e = rs.inner(l, l) / 2
            xp_add_term(th, l, QT.mono(1, e, 0))
        if power_sign == 1:
            return th
        # invert 1 + h by geometric series; h has strictly positive q-order
        zero = (0,) * rs.rank
        h = {w: c.copy() for w, c in th.items()}
        one = h.pop(zero) - QT.one()
        if one.terms:
            h[zero] = one
        elif zero in h:
            del h[zero]
        inv: XPoly = {zero: QT.one()}
        term: XPoly = {zero: QT.one()}
        # minimal q-order of h
        minord = min(min(k[0] for k in c.terms) for c in h.values())
        if minord <= 0:
            raise ValueError("theta tail must have positive q-order")
        reps = int(self.qmax / minord) + 1
        for _ in range(reps):
            term = self.series_mul(term, h)
            if not term:
                break
            for w, c in term.items():
                xp_add_term(inv, w, -c if _ % 2 == 0 else c.copy())
        return self.prune(inv)

    # -- Y-theta operator --------------------------------------------------
    def y_eigen_on_one(self, l: Weight) -> QT:
        """Y_l(1) eigenvalue t^{(l, rho)}."""
        if l not in self._y_eigen_cache:
            self._y_eigen_cache[l] = QT.mono(1, 0, self.rs.inner(l, self.rs.rho))
        return self._y_eigen_cache[l]

    def _theta_y_coeffs(self, inverse: bool) -> Dict[Weight, QT]:
        rs = self.rs
        if not inverse:
            return {l: QT.mono(1, rs.inner(l, l) / 2, 0) for l in self.ball}
        return dict(self.theta_x(-1))

    def theta_y_apply(self, f: XPoly, inverse: bool = False) -> XPoly:
        """Apply the Y-theta operator (or its inverse) to a series.

        The operator is a function of the commuting Y family; its inverse is
        the same construction with the inverted coefficient series.
        """
        coeffs = self._theta_y_coeffs(inverse)
        out: XPoly = {}
        for l, cl in coeffs.items():
            g = self.rep.apply_Y(l, f)
            for w, c in g.items():
                prod = c * cl
                kept = {k: v for k, v in prod.terms.items() if k[0] <= self.qmax}
                if kept:
                    q = QT()
                    q.terms = kept
                    xp_add_term(out, w, q)
        return self.prune(out)

    # -- main entry -------------------------------------------------------
    def evaluate_two_run(self, P: XPoly, a: int, b: int,
                         flip_x: bool = False, flip_y: bool = False) -> QT:
        """ev[ G^a T^b ( P  T^{-b} G^{-a} (1) ) ] truncated.

        G is multiplication by the X-theta (or its inverse when flip_x),
        T the Y-theta operator (direction set by flip_y); a, b >= 0.
        """
        rs = self.rs
        sx = -1 if flip_x else 1
        # u = G^{-a}(1)
        u: XPoly = {(0,) * rs.rank: QT.one()}
        g_for, g_inv = self.theta_x(-sx), self.theta_x(sx)
        for _ in range(a):
            u = self.series_mul(u, g_for)
        # v = T^{-b}(u)
        v = u
        for _ in range(b):
            v = self.theta_y_apply(v, inverse=not flip_y)
        # w = P * v
        w = self.series_mul(self.prune({k: c.copy() for k, c in P.items()}), v)
        # z = T^{b}(w)
        z = w
        for _ in range(b):
            z = self.theta_y_apply(z, inverse=flip_y)
        # multiply by G^{a} and evaluate
        for _ in range(a):
            z = self.series_mul(z, g_inv)
        return self.rep.evaluate_at_rho(z)
