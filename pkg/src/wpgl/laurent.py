"""Laurent polynomials over Q in a few named symbols.

Used as a coefficient ring when conjugation formulas have to be reproduced as
identities in indeterminate parameters (a translation parameter ``a``, torus
parameters ``l1, l2, ...``). Monomials are units, so diagonal matrices with
symbolic entries can be inverted; everything else follows ring arithmetic.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, NotInvertibleError
from .fields import Field


class Laurent:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    def _lift(self, other):
        if isinstance(other, Laurent):
            if other.ring != self.ring:
                raise FieldMismatchError("different Laurent rings")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.coerce(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(self.ring, out)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> Laurent:
        if not self.is_unit():
            raise NotInvertibleError(f"{self} is not a unit")
        (e, c), = self.terms.items()
        return Laurent(self.ring, {tuple(-x for x in e): 1 / Fraction(c)})

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def monomial_exponents(self) -> tuple[int, ...]:
        """Exponent vector of a single-term element."""
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not a monomial")
        return next(iter(self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.ring.symbols, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


class LaurentRing(Field):
    """Q[s1^±1, ..., sn^±1]; not a field, only monomials are units."""

    is_field = False

    def __init__(self, symbols):
        self.symbols = tuple(symbols)
        self.name = "Q[" + ",".join(f"{s}^±1" for s in self.symbols) + "]"

    def coerce(self, x):
        if isinstance(x, Laurent):
            if x.ring != self:
                raise FieldMismatchError("different Laurent rings")
            return x
        return Laurent(self, {(0,) * len(self.symbols): Fraction(x)})

    def contains(self, x) -> bool:
        return isinstance(x, Laurent) and x.ring == self

    def gen(self, name: str) -> Laurent:
        i = self.symbols.index(name)
        e = [0] * len(self.symbols)
        e[i] = 1
        return Laurent(self, {tuple(e): Fraction(1)})

    def gens(self):
        return tuple(self.gen(s) for s in self.symbols)

    def is_unit(self, x) -> bool:
        return self.coerce(x).is_unit()

    def inverse(self, x):
        return self.coerce(x).inverse()

    def format(self, x):
        return str(self.coerce(x))

    def to_json(self):
        return {"laurent": list(self.symbols)}

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.symbols == self.symbols

    def __hash__(self):
        return hash(("laurent", self.symbols))
