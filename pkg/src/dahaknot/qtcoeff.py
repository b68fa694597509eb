"""Exact scalar and polynomial arithmetic.

Two coefficient carriers are provided:

* ``QT`` -- Laurent "scalars" in q, t with rational exponents and rational
  coefficients.  These appear inside the Hecke-operator engine, where
  half-integral powers of t and fractional powers of q are unavoidable.
* ``TriPoly`` -- integer-coefficient Laurent polynomials in q, t, a with
  integer exponents.  Knot polynomials and their three-variable lifts are
  carried in this form.

All arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

Exp = Tuple[Fraction, Fraction]
Coeff = Fraction


class InexactDivision(ArithmeticError):
    """Raised when an exact Laurent division leaves a remainder."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QT:
    """Laurent polynomial in q, t with Fraction exponents and coefficients.

    Terms are stored as ``{(e_q, e_t): coeff}`` with no zero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exp, Coeff]] = None):
        self.terms: Dict[Exp, Coeff] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[(_frac(k[0]), _frac(k[1]))] = _frac(v)

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "QT":
        return QT()

    @staticmethod
    def one() -> "QT":
        return QT({(Fraction(0), Fraction(0)): Fraction(1)})

    @staticmethod
    def mono(coeff, eq=0, et=0) -> "QT":
        c = _frac(coeff)
        if not c:
            return QT()
        return QT({(_frac(eq), _frac(et)): c})

    def copy(self) -> "QT":
        out = QT()
        out.terms = dict(self.terms)
        return out

    # -- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(Fraction(0), Fraction(0)): Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QT):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == QT.mono(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- ring operations ------------------------------------------------
    def __add__(self, other: "QT") -> "QT":
        if not isinstance(other, QT):
            other = QT.mono(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = v
            else:
                s = s + v
                if s:
                    out[k] = s
                else:
                    del out[k]
        r = QT()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self) -> "QT":
        r = QT()
        r.terms = {k: -v for k, v in self.terms.items()}
        return r

    def __sub__(self, other: "QT") -> "QT":
        if not isinstance(other, QT):
            other = QT.mono(other)
        return self + (-other)

    def __rsub__(self, other) -> "QT":
        return QT.mono(other) - self

    def __mul__(self, other: Union["QT", int, Fraction]) -> "QT":
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return QT()
            r = QT()
            r.terms = {k: v * c for k, v in self.terms.items()}
            return r
        out: Dict[Exp, Coeff] = {}
        for (aq, at), av in self.terms.items():
            for (bq, bt), bv in other.terms.items():
                k = (aq + bq, at + bt)
                s = out.get(k)
                s = av * bv if s is None else s + av * bv
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        r = QT()
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QT":
        if n < 0:
            if not self.is_monomial():
                raise InexactDivision("negative power of a non-monomial")
            ((eq, et), c), = self.terms.items()
            return QT.mono(Fraction(1) / c, -eq, -et) ** (-n)
        out = QT.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- division -------------------------------------------------------
    def _lowest_key(self) -> Exp:
        return min(self.terms)

    def exact_div(self, other: "QT") -> "QT":
        """Exact division in the Laurent ring; raises InexactDivision."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if other.is_monomial():
            ((eq, et), c), = other.terms.items()
            r = QT()
            r.terms = {(kq - eq, kt - et): v / c for (kq, kt), v in self.terms.items()}
            return r
        rem = self.copy()
        quo = QT()
        corner = other._lowest_key()
        cc = other.terms[corner]
        while rem.terms:
            k = rem._lowest_key()
            qk = (k[0] - corner[0], k[1] - corner[1])
            qc = rem.terms[k] / cc
            quo.terms[qk] = quo.terms.get(qk, Fraction(0)) + qc
            rem = rem - QT.mono(qc, qk[0], qk[1]) * other
            if len(quo.terms) > 4 * (len(self.terms) + len(other.terms)) + 64:
                raise InexactDivision("inexact division")
        quo.terms = {k: v for k, v in quo.terms.items() if v}
        return quo

    # -- queries ----------------------------------------------------------
    def lowest_term(self, order: str = "qt") -> Tuple[Exp, Coeff]:
        """Lowest term under lex order; ``order='tq'`` sorts by (e_t, e_q)."""
        if not self.terms:
            raise ValueError("zero scalar has no lowest term")
        if order == "tq":
            k = min(self.terms, key=lambda e: (e[1], e[0]))
        else:
            k = min(self.terms)
        return k, self.terms[k]

    def subs_numeric(self, qv: Fraction, tv: Fraction) -> Fraction:
        """Evaluate at rational q, t values (exponents must be integral)."""
        total = Fraction(0)
        for (eq, et), c in self.terms.items():
            if eq.denominator != 1 or et.denominator != 1:
                raise ValueError("fractional exponent in numeric substitution")
            total += c * qv ** int(eq) * tv ** int(et)
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (eq, et) in sorted(self.terms):
            c = self.terms[(eq, et)]
            mono = []
            if eq:
                mono.append(f"q^{eq}" if eq != 1 else "q")
            if et:
                mono.append(f"t^{et}" if et != 1 else "t")
            body = "*".join(mono) or "1"
            if c == 1 and mono:
                bits.append(body)
            elif c == -1 and mono:
                bits.append(f"-{body}")
            elif not mono:
                bits.append(str(c))
            else:
                bits.append(f"{c}*{body}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")


T_HALF = QT.mono(1, 0, Fraction(1, 2))
T_MHALF = QT.mono(1, 0, Fraction(-1, 2))


# ---------------------------------------------------------------------------
# TriPoly: integer Laurent polynomials in q, t, a
# ---------------------------------------------------------------------------

Key3 = Tuple[int, int, int]


def _canon_key(k: Key3) -> Tuple[int, int, int]:
    # canonical term order: lexicographic in (e_a, e_q, e_t)
    return (k[2], k[0], k[1])


class TriPoly:
    """Integer-coefficient Laurent polynomial in q, t, a.

    Keys are ``(e_q, e_t, e_a)`` integer triples; values are nonzero ints.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Key3, int]] = None):
        self.terms: Dict[Key3, int] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[(int(k[0]), int(k[1]), int(k[2]))] = int(v)

    @staticmethod
    def zero() -> "TriPoly":
        return TriPoly()

    @staticmethod
    def one() -> "TriPoly":
        return TriPoly({(0, 0, 0): 1})

    @staticmethod
    def mono(coeff: int, eq: int = 0, et: int = 0, ea: int = 0) -> "TriPoly":
        return TriPoly({(eq, et, ea): coeff})

    def copy(self) -> "TriPoly":
        out = TriPoly()
        out.terms = dict(self.terms)
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TriPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = TriPoly.mono(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        r = TriPoly()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = TriPoly()
        r.terms = {k: -v for k, v in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = TriPoly.mono(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return TriPoly()
            r = TriPoly()
            r.terms = {k: v * other for k, v in self.terms.items()}
            return r
        out: Dict[Key3, int] = {}
        for (aq, at, aa), av in self.terms.items():
            for (bq, bt, ba), bv in other.terms.items():
                k = (aq + bq, at + bt, aa + ba)
                s = out.get(k, 0) + av * bv
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        r = TriPoly()
        r.terms = out
        return r

    __rmul__ = __mul__

    # -- structure queries ---------------------------------------------
    def a_degree(self) -> int:
        return max((k[2] for k in self.terms), default=0)

    def num_terms(self) -> int:
        return len(self.terms)

    def coeff_sum(self) -> int:
        return sum(self.terms.values())

    def all_positive(self) -> bool:
        return all(v > 0 for v in self.terms.values())

    def items(self) -> Iterator[Tuple[Key3, int]]:
        return iter(self.terms.items())

    # -- substitutions ----------------------------------------------------
    def subs_a_monomial(self, coeff: int, eq, et) -> "TriPoly":
        """Substitute a -> coeff * q^eq * t^et (rational exponents allowed).

        Every resulting exponent must be integral, else ValueError.
        """
        eqf, etf = _frac(eq), _frac(et)
        out = TriPoly()
        acc: Dict[Key3, int] = {}
        for (kq, kt, ka), v in self.terms.items():
            nq = kq + eqf * ka
            nt = kt + etf * ka
            if nq.denominator != 1 or nt.denominator != 1:
                raise ValueError(
                    f"substitution produces fractional exponent on term {(kq, kt, ka)}"
                )
            key = (int(nq), int(nt), 0)
            s = acc.get(key, 0) + v * (coeff ** ka)
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
        out.terms = acc
        return out

    def subs_qt_monomials(self, q_to: Tuple[Fraction, Fraction, int],
                          t_to: Tuple[Fraction, Fraction, int],
                          a_to: Tuple[Fraction, Fraction, int]) -> "TriPoly":
        """Monomial change of variables.

        Each argument gives the image exponent vector (e_q, e_t, e_a) of the
        corresponding variable; e.g. q -> q*t^2 is ``(1, 2, 0)``.
        """
        out: Dict[Key3, int] = {}
        for (kq, kt, ka), v in self.terms.items():
            nq = kq * q_to[0] + kt * t_to[0] + ka * a_to[0]
            nt = kq * q_to[1] + kt * t_to[1] + ka * a_to[1]
            na = kq * q_to[2] + kt * t_to[2] + ka * a_to[2]
            if _frac(nq).denominator != 1 or _frac(nt).denominator != 1:
                raise ValueError("fractional exponent under variable change")
            key = (int(nq), int(nt), int(na))
            s = out.get(key, 0) + v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        r = TriPoly()
        r.terms = out
        return r

    def subs_numeric(self, qv: int, tv: int, av: int) -> Fraction:
        total = Fraction(0)
        for (kq, kt, ka), v in self.terms.items():
            total += v * Fraction(qv) ** kq * Fraction(tv) ** kt * Fraction(av) ** ka
        return total

    def t_to_q(self) -> "TriPoly":
        """Collapse t -> q; result still carried as a TriPoly (t-degree 0)."""
        out: Dict[Key3, int] = {}
        for (kq, kt, ka), v in self.terms.items():
            key = (kq + kt, 0, ka)
            s = out.get(key, 0) + v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        r = TriPoly()
        r.terms = out
        return r

    # -- serialization -----------------------------------------------------
    def canonical_str(self, a_name: str = "a") -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=_canon_key)
        bits = []
        for i, k in enumerate(keys):
            c = self.terms[k]
            mono = []
            for name, e in (("q", k[0]), ("t", k[1]), (a_name, k[2])):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            body = "*".join(mono)
            mag = abs(c)
            if body and mag == 1:
                frag = body
            elif body:
                frag = f"{mag}*{body}"
            else:
                frag = str(mag)
            if i == 0:
                bits.append(frag if c > 0 else f"-{frag}")
            else:
                bits.append(f"+ {frag}" if c > 0 else f"- {frag}")
        return " ".join(bits)

    def __repr__(self):
        return self.canonical_str()


class TriParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def parse_tri(text: str, a_name: str = "a") -> TriPoly:
    """Parse the canonical TriPoly string format.

    Accepts terms like ``1``, ``-q*t^2``, ``2*q^3*t^8*a^2``, ``+ q``, with
    ``u`` accepted for the a-variable when ``a_name='u'``.
    """
    s = text
    n = len(s)
    i = 0
    terms: Dict[Key3, int] = {}

    def skip_ws(j):
        while j < n and s[j] in " \t\n":
            j += 1
        return j

    i = skip_ws(i)
    if i == n:
        raise TriParseError("empty polynomial", 0)
    first = True
    while i < n:
        i = skip_ws(i)
        sign = 1
        if not first or s[i] in "+-":
            if i >= n or s[i] not in "+-":
                raise TriParseError("expected '+' or '-'", i)
            if s[i] == "-":
                sign = -1
            i = skip_ws(i + 1)
        first = False
        coeff = 1
        exps = {"q": 0, "t": 0, a_name: 0}
        saw_factor = False
        if i < n and s[i].isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            coeff = int(s[i:j])
            i = j
            saw_factor = True
            if i < n and s[i] == "*":
                i += 1
        while i < n and s[i] in ("q", "t", a_name[0]):
            name = s[i]
            if name not in exps:
                raise TriParseError(f"unknown variable {name!r}", i)
            i += 1
            e = 1
            if i < n and s[i] == "^":
                i += 1
                j = i
                if j < n and s[j] == "-":
                    j += 1
                while j < n and s[j].isdigit():
                    j += 1
                if j == i or s[i:j] == "-":
                    raise TriParseError("malformed exponent", i)
                e = int(s[i:j])
                i = j
            exps[name] += e
            saw_factor = True
            if i < n and s[i] == "*":
                i += 1
        if not saw_factor:
            raise TriParseError("expected a term", i)
        key = (exps["q"], exps["t"], exps[a_name])
        val = terms.get(key, 0) + sign * coeff
        if val:
            terms[key] = val
        elif key in terms:
            del terms[key]
        i = skip_ws(i)
    return TriPoly(terms)


def tri_to_json(p: TriPoly) -> dict:
    keys = sorted(p.terms, key=_canon_key)
    return {
        "vars": ["q", "t", "a"],
        "terms": [{"e": list(k), "c": p.terms[k]} for k in keys],
    }


def tri_from_json(obj: dict) -> TriPoly:
    return TriPoly({tuple(t["e"]): t["c"] for t in obj["terms"]})
