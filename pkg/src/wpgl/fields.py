"""Exact coefficient fields: the rationals and prime fields.

Rational elements are plain :class:`fractions.Fraction` values. Prime-field
elements are :class:`FpElement` instances tagged with their modulus, so that
mixing two different fields raises :class:`FieldMismatchError` instead of
silently coercing.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatchError, NotInvertibleError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FpElement:
    """Residue class modulo a prime ``p``, stored reduced in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"F_{self.p} vs Q")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def inverse(self) -> FpElement:
        if self.value == 0:
            raise NotInvertibleError(f"division by zero in F_{self.p}")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * FpElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Common interface of coefficient domains.

    A domain knows its zero and one, converts integers and strings into its
    elements, decides units, and formats elements canonically. Arithmetic on
    elements uses the ordinary Python operators.
    """

    is_field = True
    name = "?"

    def __call__(self, x):
        return self.coerce(x)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        return bool(x)

    def inverse(self, x):
        if not x:
            raise NotInvertibleError("division by zero")
        return self.one / x

    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise FieldMismatchError(f"{x!r} is not an element of {self.name}")

    # the four field operations, with membership checks
    def add(self, a, b):
        self.check(a, b)
        return a + b

    def sub(self, a, b):
        self.check(a, b)
        return a - b

    def mul(self, a, b):
        self.check(a, b)
        return a * b

    def div(self, a, b):
        self.check(a, b)
        return a * self.inverse(b)

    def format(self, x) -> str | int:
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"

    def coerce(self, x):
        if isinstance(x, FpElement):
            raise FieldMismatchError("cannot coerce a prime-field element into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def inverse(self, x):
        if x == 0:
            raise NotInvertibleError("division by zero in Q")
        return 1 / Fraction(x)

    def format(self, x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, s):
        if isinstance(s, bool):
            raise ValueError("boolean is not a coefficient")
        if isinstance(s, int):
            return Fraction(s)
        if not isinstance(s, str) or "." in s or "e" in s.lower():
            raise ValueError(f"not an exact rational: {s!r}")
        return Fraction(s.strip())

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F_{p}"

    def coerce(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise NotInvertibleError(f"{x} has no image in F_{self.p}")
            return FpElement(x.numerator, self.p) / x.denominator
        if isinstance(x, str):
            return self.parse(x)
        return FpElement(int(x), self.p)

    def contains(self, x) -> bool:
        return isinstance(x, FpElement) and x.p == self.p

    def inverse(self, x):
        return self.coerce(x).inverse()

    def format(self, x):
        return self.coerce(x).value

    def parse(self, s):
        if isinstance(s, bool):
            raise ValueError("boolean is not a coefficient")
        if isinstance(s, int):
            return FpElement(s, self.p)
        return self.coerce(Fraction(s.strip()))

    def to_json(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(obj) -> Field:
    """Decode ``"Q"`` or ``{"Fp": p}``."""
    if obj == "Q" or obj == "q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"} and isinstance(obj["Fp"], int):
        return GF(obj["Fp"])
    raise ValueError(f"unknown field {obj!r}")


def field_from_flag(flag: str) -> Field:
    """Decode the CLI spelling ``q`` or ``fp:<p>``."""
    f = flag.strip().lower()
    if f in ("q", "qq"):
        return QQ
    if f.startswith("fp:"):
        return GF(int(f[3:]))
    raise ValueError(f"unknown field flag {flag!r}")
