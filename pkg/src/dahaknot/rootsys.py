"""Root systems of types A, D, E6 with exact rational inner products.

Weights are stored intrinsically as integer tuples in the fundamental-weight
basis; the inner product comes from the inverse Cartan matrix (all three
types are simply laced, normalized so every root has squared length 2).
Reflections then act by integer arithmetic only, which keeps Weyl-orbit
saturation fast even for the 51840-element E6 group.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

Weight = Tuple[int, ...]


class UnsupportedRootSystem(ValueError):
    pass


def _cartan_matrix(ctype: str, rank: int) -> List[List[int]]:
    A = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def join(i, j):
        A[i][j] = A[j][i] = -1

    if ctype == "A":
        for i in range(rank - 1):
            join(i, i + 1)
    elif ctype == "D":
        for i in range(rank - 3):
            join(i, i + 1)
        join(rank - 3, rank - 2)
        join(rank - 3, rank - 1)
    elif ctype == "E6":
        # Bourbaki numbering: chain 1-3-4-5-6 with 2 attached to 4.
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            join(i, j)
    else:
        raise UnsupportedRootSystem(f"unsupported Cartan type {ctype!r}")
    return A


def _invert_rational(A: List[List[int]]) -> List[List[Fraction]]:
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col])
        M[col], M[piv] = M[piv], M[col]
        inv = Fraction(1) / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


_HIGHEST_ROOT = {
    # coordinates in the fundamental-weight basis (highest weight of the
    # adjoint representation)
    "A": lambda n: tuple(1 if i in (0, n - 1) else 0 for i in range(n)),
    "D": lambda n: tuple(1 if i == 1 else 0 for i in range(n)),
    "E6": lambda n: (0, 1, 0, 0, 0, 0),
}


class RootSystem:
    """Simply-laced root system with cached Weyl data."""

    def __init__(self, cartan_type: str, rank: int):
        ctype = cartan_type.upper()
        if ctype == "E":
            if rank != 6:
                raise UnsupportedRootSystem("only E6 is supported in type E")
            ctype = "E6"
        if ctype == "A" and rank < 1:
            raise UnsupportedRootSystem("type A needs rank >= 1")
        if ctype == "D" and rank < 4:
            raise UnsupportedRootSystem("type D needs rank >= 4")
        if ctype == "E6" and rank != 6:
            raise UnsupportedRootSystem("type E6 has rank 6")
        if ctype not in ("A", "D", "E6"):
            raise UnsupportedRootSystem(f"unsupported Cartan type {cartan_type!r}")

        self.cartan_type = ctype
        self.rank = rank
        self.cartan = _cartan_matrix(ctype, rank)
        self.gram = _invert_rational(self.cartan)  # (omega_i, omega_j)
        # simple roots in the fundamental-weight basis: alpha_j = sum_i C_ij omega_i
        self.simple_roots: List[Weight] = [
            tuple(self.cartan[i][j] for i in range(rank)) for j in range(rank)
        ]
        self.fund_weights: List[Weight] = [
            tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank)
        ]
        self.rho: Weight = (1,) * rank
        if ctype == "A" and rank == 1:
            self.theta: Weight = (2,)
        else:
            self.theta = _HIGHEST_ROOT[ctype](rank)
        self.positive_roots = self._positive_roots()
        self.m = self._lattice_denominator()
        self._weyl_order: Optional[int] = None
        self._translation_words: Dict[int, Tuple[int, Tuple[int, ...]]] = {}
        self._u_words: Dict[int, Tuple[int, ...]] = {}

    # ------------------------------------------------------------------
    # basic linear algebra on weights
    # ------------------------------------------------------------------
    def inner(self, b: Sequence, c: Sequence) -> Fraction:
        """Euclidean pairing (b, c) of two weight-basis vectors."""
        g = self.gram
        total = Fraction(0)
        for i, bi in enumerate(b):
            if bi:
                row = g[i]
                for j, cj in enumerate(c):
                    if cj:
                        total += bi * cj * row[j]
        return total

    def pair_coroot(self, b: Sequence, alpha: Weight) -> Fraction:
        """(b, alpha^vee); equals (b, alpha) since all roots have norm 2."""
        return self.inner(b, alpha)

    def reflect(self, i: int, b: Weight) -> Weight:
        """Simple reflection s_i acting on a weight (integer arithmetic)."""
        bi = b[i]
        if not bi:
            return b
        col = self.cartan
        return tuple(b[j] - bi * col[j][i] for j in range(self.rank))

    def reflect_root(self, alpha: Weight, b: Weight) -> Weight:
        """Reflection in an arbitrary root alpha (norm 2)."""
        j = self.inner(b, alpha)
        if j.denominator != 1:
            raise ValueError("non-integral coroot pairing")
        j = int(j)
        return tuple(x - j * a for x, a in zip(b, alpha))

    def apply_word(self, word: Sequence[int], b: Weight) -> Weight:
        for i in word:
            b = self.reflect(i, b)
        return b

    def is_dominant(self, b: Weight) -> bool:
        return all(x >= 0 for x in b)

    def dominant_rep(self, b: Weight) -> Weight:
        while True:
            for i in range(self.rank):
                if b[i] < 0:
                    b = self.reflect(i, b)
                    break
            else:
                return b

    def height(self, root: Weight) -> Fraction:
        """(root, rho); for a positive root this is its height."""
        return self.inner(root, self.rho)

    # ------------------------------------------------------------------
    # enumeration
    # ------------------------------------------------------------------
    def _positive_roots(self) -> List[Weight]:
        pos: Set[Weight] = set(self.simple_roots)
        frontier = list(pos)
        while frontier:
            nxt = []
            for a in frontier:
                for i in range(self.rank):
                    b = self.reflect(i, a)
                    if b not in pos and self.height(b) > 0:
                        pos.add(b)
                        nxt.append(b)
            frontier = nxt
        return sorted(pos, key=lambda r: (self.height(r), r))

    def weyl_orbit(self, b: Weight) -> Set[Weight]:
        b = tuple(b)
        seen = {b}
        frontier = [b]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    if w[i]:
                        v = self.reflect(i, w)
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
            frontier = nxt
        return seen

    @property
    def weyl_order(self) -> int:
        if self._weyl_order is None:
            self._weyl_order = len(self.weyl_orbit(self.rho))
        return self._weyl_order

    def _lattice_denominator(self) -> int:
        from math import lcm

        m = 1
        for row in self.gram:
            for x in row:
                m = lcm(m, x.denominator)
        return m

    # ------------------------------------------------------------------
    # minuscule structure
    # ------------------------------------------------------------------
    @property
    def minuscule_indices(self) -> Tuple[int, ...]:
        """1-based indices r with 0 <= (omega_r, alpha^vee) <= 1 for all alpha > 0."""
        out = []
        for r in range(1, self.rank + 1):
            w = self.fund_weights[r - 1]
            if all(0 <= self.pair_coroot(w, a) <= 1 for a in self.positive_roots):
                out.append(r)
        return tuple(out)

    def coset_class(self, b: Weight) -> Weight:
        """Representative data for the class of b in P/Q (exact)."""
        # solve b = sum c_i alpha_i over Q; the fractional parts classify P/Q
        n = self.rank
        M = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(b[i])]
             for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if M[r][col])
            M[col], M[piv] = M[piv], M[col]
            inv = Fraction(1) / M[col][col]
            M[col] = [x * inv for x in M[col]]
            for r in range(n):
                if r != col and M[r][col]:
                    f = M[r][col]
                    M[r] = [a - f * c for a, c in zip(M[r], M[col])]
        coeffs = [M[i][n] for i in range(n)]
        return tuple(c - (c.numerator // c.denominator) for c in coeffs)

    def same_coset(self, b: Weight, c: Weight) -> bool:
        diff = tuple(x - y for x, y in zip(b, c))
        return self.coset_class(diff) == (Fraction(0),) * self.rank

    def minuscule_rep_index(self, b: Weight) -> int:
        """Index r in O with omega_r in the P/Q class of b (0 for the trivial class)."""
        if self.same_coset(b, (0,) * self.rank):
            return 0
        for r in self.minuscule_indices:
            if self.same_coset(b, self.fund_weights[r - 1]):
                return r
        raise ValueError("no minuscule representative found (should not happen)")

    def iota(self, r: int) -> int:
        """The involution with pi_r^{-1} = pi_{iota(r)} on P/Q."""
        if r == 0:
            return 0
        neg = tuple(-x for x in self.fund_weights[r - 1])
        return self.minuscule_rep_index(neg)

    def u_word(self, r: int) -> Tuple[int, ...]:
        """Reduced word for u_r, the shortest w with w(omega_r) antidominant."""
        if r in self._u_words:
            return self._u_words[r]
        if r == 0:
            self._u_words[0] = ()
            return ()
        # Greedy descent: repeatedly reflect at an index where the coordinate
        # is positive.  For minuscule weights this reaches the antidominant
        # representative along a shortest path.
        b = self.fund_weights[r - 1]
        word: List[int] = []
        while any(x > 0 for x in b):
            i = next(i for i in range(self.rank) if b[i] > 0)
            b = self.reflect(i, b)
            word.append(i)
        self._u_words[r] = tuple(word)
        return tuple(word)

    def apply_u_inv(self, r: int, b: Weight) -> Weight:
        """u_r^{-1} acting on a weight."""
        for i in reversed(self.u_word(r)):
            b = self.reflect(i, b)
        return b

    # ------------------------------------------------------------------
    # affine machinery
    # ------------------------------------------------------------------
    def affine_simple_root(self, i: int) -> Tuple[Weight, int]:
        """Affine simple root [alpha, k]: alpha_0 = [-theta, 1], else [alpha_i, 0]."""
        if i == 0:
            return (tuple(-x for x in self.theta), 1)
        return (self.simple_roots[i - 1], 0)

    def _affine_reflect(self, i: int, ar: Tuple[Weight, int]) -> Tuple[Weight, int]:
        """Simple affine reflection s_i on an affine root [v, k]."""
        v, k = ar
        if i == 0:
            j = self.inner(v, self.theta)
            vv = self.reflect_root(self.theta, v)
            return (vv, k + int(j))
        return (self.reflect(i - 1, v), k)

    @staticmethod
    def _affine_negative(ar: Tuple[Weight, int], height) -> bool:
        v, k = ar
        if k != 0:
            return k < 0
        return height(v) < 0

    def translation_word(self, r: int) -> Tuple[int, Tuple[int, ...]]:
        """(pi_index, reduced word) with pi s_{i_l} ... s_{i_1} = t_{omega_r}.

        Found by greedy descent on the affine-root action, lowest index first.
        """
        if r in self._translation_words:
            return self._translation_words[r]
        if r == 0:
            self._translation_words[0] = (0, ())
            return (0, ())
        out = self.translation_word_weight(self.fund_weights[r - 1])
        self._translation_words[r] = out
        return out

    def translation_word_weight(self, omega: Weight) -> Tuple[int, Tuple[int, ...]]:
        """Reduced word data for the translation by any dominant weight."""
        if not self.is_dominant(omega):
            raise ValueError("translation words require a dominant weight")

        # The element acts on affine roots [v, k] -> [w(v), k - (omega, w(v))]
        # for t_omega * w; we peel simple reflections off the right.
        # Represent the current element g by its action on the affine simple
        # roots, maintained as (linear word, accumulated translation).
        word: List[int] = []

        def g_image(i: int, right_word: List[int]) -> Tuple[Weight, int]:
            # image of affine simple root alpha_i under t_omega * (s_word)
            ar = self.affine_simple_root(i)
            for j in reversed(right_word):
                ar = self._affine_reflect(j, ar)
            v, k = ar
            shift = self.inner(omega, v)
            if shift.denominator != 1:
                raise ValueError("non-integral translation shift")
            return (v, k - int(shift))

        guard = 4 * int(2 * self.inner(omega, self.rho)) + 16
        while True:
            desc = None
            for i in range(0, self.rank + 1):
                img = g_image(i, word)
                if self._affine_negative(img, self.height):
                    desc = i
                    break
            if desc is None:
                break
            word.append(desc)
            guard -= 1
            if guard < 0:
                raise RuntimeError("translation word descent failed to terminate")

        # t_omega = pi * s_{i_l} ... s_{i_1} with the descent-discovery order
        # giving (i_1, ..., i_l); letters are listed in application order
        # (first letter acts first in the operator realization).
        pi_index = self.minuscule_rep_index(omega)
        return (pi_index, tuple(word))

    # ------------------------------------------------------------------
    # descriptive output
    # ------------------------------------------------------------------
    def describe(self) -> str:
        lines = [
            f"root system {self.cartan_type}{self.rank}",
            f"weyl order {self.weyl_order}",
            f"positive roots {len(self.positive_roots)}",
            f"lattice denominator m = {self.m}",
            f"minuscule indices {list(self.minuscule_indices)}",
            "simple roots (fundamental-weight coordinates):",
        ]
        for j, a in enumerate(self.simple_roots, 1):
            lines.append(f"  alpha_{j} = {list(a)}")
        lines.append("positive roots sorted by height:")
        for a in self.positive_roots:
            lines.append(f"  {list(a)}  height {self.height(a)}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def build_root_system(cartan_type: str, rank: int) -> RootSystem:
    """Cached constructor; RootSystem instances are immutable in practice."""
    return RootSystem(cartan_type, rank)


def rho_pairing(rs: RootSystem, b: Weight) -> Fraction:
    """(b, rho) as an exact rational."""
    return rs.inner(b, rs.rho)


def minuscule_indices(rs: RootSystem) -> Set[int]:
    return set(rs.minuscule_indices)


def weyl_orbit(rs: RootSystem, b: Weight) -> Set[Weight]:
    return rs.weyl_orbit(b)


def cominuscule_poincare(rs: RootSystem, r: int) -> List[int]:
    """Rank generating function of the minuscule weight poset for omega_r.

    Returns coefficient list [c_0, c_1, ...] with c_h the number of orbit
    weights at height h; heights come from covering steps mu -> mu - alpha_i
    starting at omega_r.
    """
    if r not in rs.minuscule_indices:
        raise ValueError(f"index {r} is not minuscule")
    top = rs.fund_weights[r - 1]
    depth: Dict[Weight, int] = {top: 0}
    frontier = [top]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                if w[i] > 0:
                    v = rs.reflect(i, w)  # equals w - w[i]*alpha_i; minuscule => w[i]=1
                    if v not in depth:
                        depth[v] = depth[w] + 1
                        nxt.append(v)
        frontier = nxt
    hmax = max(depth.values())
    coeffs = [0] * (hmax + 1)
    for h in depth.values():
        coeffs[h] += 1
    return coeffs
