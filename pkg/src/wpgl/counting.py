"""Monomial counts: unipotent level dimensions and global section counts."""
from __future__ import annotations

from math import comb

from .errors import SignatureError
from .signature import WeightSignature


def count_solutions(weights, target: int) -> int:
    """Number of nonnegative integer vectors z with sum(w_i * z_i) == target."""
    if target < 0:
        return 0
    ways = [1] + [0] * target
    for w in weights:
        for s in range(w, target + 1):
            ways[s] += ways[s - w]
    return ways[target]


def _group_weights(sig: WeightSignature, groups) -> list[int]:
    return [sig.weights[i - 1] for i in groups for _ in range(sig.mults[i - 1])]


def count_k(sig: WeightSignature, a: int) -> int:
    """Monomials of weight m_a in the variables of groups 1..a-1."""
    if not 1 <= a <= sig.t:
        raise SignatureError(f"group index {a} out of range 1..{sig.t}")
    return count_solutions(_group_weights(sig, range(1, a)), sig.weights[a - 1])


def count_d(sig: WeightSignature, a: int, b: int, l: int) -> int:
    """Monomials of weight m_b - l*m_a in groups below b, group a left out."""
    if not 1 <= a < b <= sig.t:
        raise SignatureError(f"need 1 <= a < b <= {sig.t}, got a={a}, b={b}")
    ma, mb = sig.weights[a - 1], sig.weights[b - 1]
    if not 0 <= l <= mb // ma:
        raise SignatureError(f"l={l} outside 0..{mb // ma}")
    groups = [i for i in range(1, b) if i != a]
    return count_solutions(_group_weights(sig, groups), mb - l * ma)


def level_dimensions(sig: WeightSignature) -> list[int]:
    """Dimension r_a * k_a of each unipotent level, a = 1..t."""
    return [sig.mults[a - 1] * count_k(sig, a) for a in range(1, sig.t + 1)]


def k_from_d(sig: WeightSignature, a: int, b: int) -> int:
    """Recount k_b by splitting monomials according to their degree l in group a.

    Each degree-l part in the r_a group-a variables contributes
    C(l + r_a - 1, r_a - 1) monomials times the d_l complementary ones.
    """
    ra = sig.mults[a - 1]
    top = sig.weights[b - 1] // sig.weights[a - 1]
    return sum(count_d(sig, a, b, l) * comb(l + ra - 1, ra - 1) for l in range(top + 1))


def global_section_count(sig: WeightSignature, degree: int) -> int:
    """Nonnegative solutions of a_0 n_0 + ... + a_r n_r = degree."""
    return count_solutions(sig.raw_weights, degree)


def section_series(sig: WeightSignature, upto: int) -> list[int]:
    return [global_section_count(sig, d) for d in range(upto + 1)]


def series_product(weights, upto: int) -> list[int]:
    """Coefficients of prod 1/(1 - q^w) truncated at q^upto, by series multiplication."""
    coeffs = [1] + [0] * upto
    for w in weights:
        geometric = [1 if k % w == 0 else 0 for k in range(upto + 1)]
        coeffs = [sum(coeffs[i] * geometric[k - i] for i in range(k + 1)) for k in range(upto + 1)]
    return coeffs
