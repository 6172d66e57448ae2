"""Sparse weighted-graded multivariate polynomials with exact coefficients.

A polynomial is a map from exponent vectors (one entry per variable x^i_j,
flattened in signature order) to nonzero coefficients. Values are immutable;
every operation returns a new polynomial.
"""
from __future__ import annotations

import re
from typing import Mapping

from .errors import FieldMismatchError, SignatureError
from .fields import Field
from .signature import WeightSignature

Exps = tuple[int, ...]

_VAR_RE = re.compile(r"^x_(\d+)_(\d+)$")


def weighted_degree(sig: WeightSignature, exps: Exps) -> int:
    return sum(w * e for w, e in zip(sig.var_weights, exps))


class GradedPolynomial:
    __slots__ = ("sig", "ring", "terms", "_hash")

    def __init__(self, sig: WeightSignature, ring: Field, terms: Mapping[Exps, object] = ()):
        self.sig = sig
        self.ring = ring
        clean = {}
        n = sig.nvars
        for e, c in dict(terms).items():
            if len(e) != n:
                raise SignatureError(f"exponent vector {e} has wrong length for {sig}")
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, sig, ring):
        return cls(sig, ring, {})

    @classmethod
    def constant(cls, sig, ring, c):
        return cls(sig, ring, {(0,) * sig.nvars: ring.coerce(c)})

    @classmethod
    def var(cls, sig, ring, i: int, j: int, coeff=1):
        e = [0] * sig.nvars
        e[sig.var_index(i, j)] = 1
        return cls(sig, ring, {tuple(e): ring.coerce(coeff)})

    @classmethod
    def monomial(cls, sig, ring, exps: Exps, coeff=1):
        return cls(sig, ring, {tuple(exps): ring.coerce(coeff)})

    def _new(self, terms):
        return GradedPolynomial(self.sig, self.ring, terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: GradedPolynomial):
        if other.sig != self.sig:
            raise SignatureError(f"signature mismatch {self.sig} vs {other.sig}")
        if other.ring != self.ring:
            raise FieldMismatchError(f"coefficient mismatch {self.ring} vs {other.ring}")

    def _as_poly(self, other):
        if isinstance(other, GradedPolynomial):
            self._check(other)
            return other
        return GradedPolynomial.constant(self.sig, self.ring, other)

    def __add__(self, other):
        other = self._as_poly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._as_poly(other))

    def __rsub__(self, other):
        return self._as_poly(other) - self

    def scale(self, c):
        c = self.ring.coerce(c)
        return self._new({e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GradedPolynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return self._new(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = GradedPolynomial.constant(self.sig, self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- queries ------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.sig == other.sig and self.ring == other.ring and self.terms == other.terms
        if not self.terms:
            return other == 0
        return False

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, frozenset(self.terms.items())))
        return self._hash

    def coefficient(self, exps: Exps):
        return self.terms.get(tuple(exps), self.ring.zero)

    def sorted_terms(self) -> list[tuple[Exps, object]]:
        """Terms in canonical order: descending weighted degree, then descending exponents."""
        key = lambda item: (weighted_degree(self.sig, item[0]), item[0])
        return sorted(self.terms.items(), key=key, reverse=True)

    def degrees(self) -> set[int]:
        return {weighted_degree(self.sig, e) for e in self.terms}

    def is_weighted_homogeneous(self, w: int) -> bool:
        return all(weighted_degree(self.sig, e) == w for e in self.terms)

    def groups_used(self) -> set[int]:
        groups = self.sig.var_groups
        return {groups[k] for e in self.terms for k, x in enumerate(e) if x}

    def substitute(self, assignment) -> GradedPolynomial:
        """Replace every variable by a polynomial and expand.

        ``assignment`` maps ``(i, j)`` pairs to polynomials, or is a sequence
        indexed like the flattened variables. The images may live over a
        different signature, as long as they share the coefficient ring.
        """
        images = _normalize_assignment(self, assignment)
        if not images:
            raise SignatureError("empty substitution")
        target = next(iter(im for im in images if im is not None))
        out = GradedPolynomial.zero(target.sig, self.ring)
        cache: list[dict[int, GradedPolynomial]] = [dict() for _ in images]

        def power(k, e):
            c = cache[k]
            if e not in c:
                c[e] = images[k] if e == 1 else power(k, e - 1) * images[k]
            return c[e]

        acc: dict = {}
        one_exps = (0,) * target.sig.nvars
        for exps, coeff in self.terms.items():
            term = None
            for k, e in enumerate(exps):
                if not e:
                    continue
                if images[k] is None:
                    x = self.sig.variables[k]
                    raise SignatureError(f"no assignment for x_{x[0]}_{x[1]}")
                p = power(k, e)
                term = p if term is None else term * p
            if term is None:
                acc[one_exps] = acc.get(one_exps, self.ring.zero) + coeff
                continue
            for te, tc in term.terms.items():
                s = acc.get(te)
                acc[te] = coeff * tc if s is None else s + coeff * tc
        return GradedPolynomial(out.sig, self.ring, acc)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for (i, j), k in zip(self.sig.variables, e):
                if k == 1:
                    factors.append(f"x_{i}_{j}")
                elif k:
                    factors.append(f"x_{i}_{j}^{k}")
            mono = "*".join(factors)
            cs = str(self.ring.format(c))
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif " " in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"GradedPolynomial({self}; {self.sig}, {self.ring})"


def _normalize_assignment(p: GradedPolynomial, assignment) -> list:
    n = p.sig.nvars
    if isinstance(assignment, Mapping):
        images = [None] * n
        for key, im in assignment.items():
            if isinstance(key, str):
                m = _VAR_RE.match(key)
                if not m:
                    raise SignatureError(f"bad variable name {key!r}")
                key = (int(m.group(1)), int(m.group(2)))
            images[p.sig.var_index(*key)] = im
    else:
        images = list(assignment)
        if len(images) != n:
            raise SignatureError(f"need {n} images, got {len(images)}")
    for im in images:
        if im is not None and im.ring != p.ring:
            raise FieldMismatchError("substitution over a different coefficient ring")
    return images


def poly_add(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    p._check(q)
    return p + q


def poly_mul(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    p._check(q)
    return p * q


def poly_scale(c, p: GradedPolynomial) -> GradedPolynomial:
    return p.scale(c)


def substitute(p: GradedPolynomial, assignment) -> GradedPolynomial:
    return p.substitute(assignment)


def variable_name(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def parse_variable(name: str) -> tuple[int, int]:
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"bad variable name {name!r}")
    return int(m.group(1)), int(m.group(2))


def enumerate_monomials(
    sig: WeightSignature,
    w: int,
    below_group: int | None = None,
    excluded_group: int | None = None,
) -> list[Exps]:
    """All exponent vectors of weighted degree exactly ``w``.

    Only variables with group index ``< below_group`` are used when a bound is
    given, and group ``excluded_group`` is left out. Vectors come in
    descending lexicographic order.
    """
    n = sig.nvars
    allowed = [
        k
        for k in range(n)
        if (below_group is None or sig.var_groups[k] < below_group)
        and sig.var_groups[k] != excluded_group
    ]
    out: list[Exps] = []
    if w < 0:
        return out
    exps = [0] * n

    def rec(pos: int, remaining: int):
        if pos == len(allowed):
            if remaining == 0:
                out.append(tuple(exps))
            return
        k = allowed[pos]
        wk = sig.var_weights[k]
        for e in range(remaining // wk, -1, -1):
            exps[k] = e
            rec(pos + 1, remaining - e * wk)
        exps[k] = 0

    rec(0, w)
    return out
