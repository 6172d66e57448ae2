"""Homotopy-group data of PGL(n_0, ..., n_r) computed from the weights."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .counting import count_d, count_k
from .errors import SignatureError
from .signature import WeightSignature


def pi1_order(sig: WeightSignature) -> int:
    """Order d of pi_1 = mu_d, d the gcd of all weights."""
    return sig.d


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, u) with s*a + u*b == g == gcd(a, b) >= 0."""
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, u = extended_gcd(b, a % b)
    return g, u, s - (a // b) * u


def splitting_matrix(weights) -> list[list[int]]:
    """Integer matrix of determinant 1 whose first column is weights/gcd.

    Built by unimodular completion: complete the prefix recursively, then
    border with the last weight using a Bezout relation g'q - v_t p = 1
    between the prefix gcd g' and the last entry v_t.
    """
    ws = [int(w) for w in weights]
    if not ws or any(w <= 0 for w in ws):
        raise SignatureError("weights must be positive")
    if len(set(ws)) != len(ws):
        raise SignatureError(f"weights must be pairwise distinct: {ws}")
    g = 0
    for w in ws:
        g = gcd(g, w)
    return _complete([w // g for w in ws])


def _complete(v: list[int]) -> list[list[int]]:
    t = len(v)
    if t == 1:
        if v[0] != 1:
            raise ValueError("vector is not primitive")
        return [[1]]
    prefix, last = v[:-1], v[-1]
    gp = 0
    for x in prefix:
        gp = gcd(gp, x)
    inner = _complete([x // gp for x in prefix])
    _, s, _ = extended_gcd(gp, last)
    # smallest nonnegative q with gp*q == 1 (mod last)
    q = s % last
    p = (gp * q - 1) // last
    m = [[gp * row[0]] + row[1:] + [p * row[0]] for row in inner]
    m.append([last] + [0] * (t - 2) + [q])
    return m


@dataclass
class Pi0Report:
    """Structural description of pi_0 and pi_1 for one signature."""

    signature: tuple[int, ...]
    weights: tuple[int, ...]
    ranks: tuple[int, ...]
    k: tuple[int, ...]
    unipotent_dims: tuple[int, ...]
    pi1_order: int
    split: bool | None
    split_witness: object
    pi0_tag: str
    group_shape: str
    pi0_shape: str
    d_tables: dict = field(default_factory=dict)
    scalar_exponents: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "signature": list(self.signature),
            "weights": list(self.weights),
            "reductive_ranks": list(self.ranks),
            "k": list(self.k),
            "unipotent_dims": list(self.unipotent_dims),
            "pi1_order": self.pi1_order,
            "split": self.split,
            "split_witness": self.split_witness,
            "pi0_tag": self.pi0_tag,
            "group_shape": self.group_shape,
            "pi0_shape": self.pi0_shape,
            "d_tables": self.d_tables,
            "scalar_exponents": list(self.scalar_exponents),
        }


def _linear_factor(r: int) -> str:
    return "Gm" if r == 1 else f"GL({r})"


def _unipotent_shape(dims) -> list[str]:
    parts = []
    for a in range(len(dims), 1, -1):
        n = dims[a - 1]
        if n:
            parts.append("A" if n == 1 else f"A^{n}")
    return parts


def _shape(unip, linear) -> str:
    return " x| ".join(unip + [linear]) if unip else linear


def d_tables(sig: WeightSignature) -> dict:
    """d_l(a, b) for every pair a < b, keyed "a,b"."""
    out = {}
    for b in range(2, sig.t + 1):
        for a in range(1, b):
            top = sig.weights[b - 1] // sig.weights[a - 1]
            out[f"{a},{b}"] = [count_d(sig, a, b, l) for l in range(top + 1)]
    return out


def pi0_report(sig: WeightSignature) -> Pi0Report:
    t = sig.t
    ranks = sig.mults
    k = tuple(count_k(sig, a) for a in range(1, t + 1))
    dims = tuple(r * x for r, x in zip(ranks, k))
    d = sig.d
    unip = _unipotent_shape(dims)

    factors = [_linear_factor(r) for r in ranks]
    if all(r == 1 for r in ranks):
        linear_g = f"Gm^{t}"
    else:
        linear_g = " x ".join(factors)
    if len(factors) > 1 and unip:
        linear_g = f"({linear_g})"
    group_shape = _shape(unip, linear_g)

    split: bool | None
    witness: object
    if t == 1:
        pi0_tag = f"PGL({ranks[0]})"
        pi0_shape = pi0_tag
        split = True if d == 1 else None
        witness = "pi1 trivial" if d == 1 else None
    elif all(r == 1 for r in ranks):
        torus = "Gm" if t == 2 else f"Gm^{t - 1}"
        pi0_shape = _shape(unip, torus)
        pi0_tag = "split"
        split = True
        witness = splitting_matrix(sig.weights)
    else:
        pi0_shape = _shape(unip, "L")
        pi0_tag = "U x| L"
        split = True if d == 1 else None
        witness = "pi1 trivial" if d == 1 else None
    return Pi0Report(
        signature=sig.raw_weights,
        weights=sig.weights,
        ranks=ranks,
        k=k,
        unipotent_dims=dims,
        pi1_order=d,
        split=split,
        split_witness=witness,
        pi0_tag=pi0_tag,
        group_shape=group_shape,
        pi0_shape=pi0_shape,
        d_tables=d_tables(sig),
        scalar_exponents=sig.weights,
    )
