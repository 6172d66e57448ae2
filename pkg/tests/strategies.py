"""Hypothesis strategies for signatures, coefficients and polynomials."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from wpgl.fields import GF, QQ
from wpgl.poly import GradedPolynomial
from wpgl.signature import WeightSignature

SMALL_SIGS = [(1, 2), (1, 2, 3), (1, 2, 4), (2, 4), (1, 1, 2), (1, 1), (2, 3), (1, 3, 3), (2, 2, 4)]

signatures = st.sampled_from(SMALL_SIGS).map(WeightSignature)
fields = st.sampled_from([QQ, GF(7), GF(2)])

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def elements(ring):
    if ring is QQ:
        return rationals
    return st.integers(0, ring.p - 1).map(ring.coerce)


@st.composite
def polynomials(draw, sig, ring, max_terms=5, max_exp=3):
    n = sig.nvars
    exps = st.tuples(*[st.integers(0, max_exp) for _ in range(n)])
    terms = draw(st.dictionaries(exps, elements(ring), max_size=max_terms))
    return GradedPolynomial(sig, ring, terms)


@st.composite
def weight_lists(draw, min_size=2, max_size=5, max_weight=8):
    return tuple(draw(st.lists(st.integers(1, max_weight), min_size=min_size, max_size=max_size)))


def as_fraction(x):
    return Fraction(x)
