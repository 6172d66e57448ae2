"""Weight signatures (n_0, ..., n_r) and their normalized form."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from .errors import SignatureError


@dataclass(frozen=True)
class WeightSignature:
    """A weight multiset, at least two positive integers.

    The normalized view groups equal weights: ``weights`` holds the distinct
    values m_1 < ... < m_t and ``mults`` their multiplicities r_1, ..., r_t.
    Variables are x^i_j with group index 1 <= i <= t and slot 1 <= j <= r_i,
    flattened in (i, j) order.
    """

    raw_weights: tuple[int, ...]
    weights: tuple[int, ...] = field(init=False, repr=False)
    mults: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        raw = tuple(self.raw_weights)
        if len(raw) < 2:
            raise SignatureError("a signature needs at least two weights")
        if any(not isinstance(w, int) or isinstance(w, bool) or w <= 0 for w in raw):
            raise SignatureError(f"weights must be positive integers: {raw}")
        distinct = sorted(set(raw))
        object.__setattr__(self, "raw_weights", raw)
        object.__setattr__(self, "weights", tuple(distinct))
        object.__setattr__(self, "mults", tuple(raw.count(m) for m in distinct))

    @classmethod
    def parse(cls, text: str) -> WeightSignature:
        try:
            ws = tuple(int(s) for s in text.replace(" ", "").split(",") if s)
        except ValueError:
            raise SignatureError(f"bad weight list {text!r}") from None
        return cls(ws)

    @property
    def t(self) -> int:
        return len(self.weights)

    @property
    def d(self) -> int:
        g = 0
        for w in self.raw_weights:
            g = gcd(g, w)
        return g

    @property
    def nvars(self) -> int:
        return len(self.raw_weights)

    @cached_property
    def variables(self) -> tuple[tuple[int, int], ...]:
        return tuple((i + 1, j + 1) for i, r in enumerate(self.mults) for j in range(r))

    @cached_property
    def var_weights(self) -> tuple[int, ...]:
        return tuple(self.weights[i - 1] for i, _ in self.variables)

    @cached_property
    def var_groups(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.variables)

    def var_index(self, i: int, j: int) -> int:
        try:
            return self.variables.index((i, j))
        except ValueError:
            raise SignatureError(f"no variable x_{i}_{j} in {self}") from None

    def group_slice(self, i: int) -> range:
        start = sum(self.mults[: i - 1])
        return range(start, start + self.mults[i - 1])

    def weight_of_group(self, i: int) -> int:
        if not 1 <= i <= self.t:
            raise SignatureError(f"group index {i} out of range 1..{self.t}")
        return self.weights[i - 1]

    def divided(self, a: int) -> WeightSignature:
        return WeightSignature(tuple(w // a for w in self.raw_weights))

    def __str__(self):
        return "(" + ",".join(map(str, self.raw_weights)) + ")"
