from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from wpgl.automorphism import (
    BlockLinear,
    EquivariantMap,
    Unipotent,
    compose,
    conj,
    decompose,
    invert,
    is_automorphism,
    level_basis,
    linear_part,
    random_automorphism,
    random_endomorphism,
    random_unipotent,
    recompose,
    scalar,
    unipotent_factorize,
)
from wpgl.errors import HomogeneityError, NotAutomorphismError, SignatureError
from wpgl.fields import GF, QQ
from wpgl.poly import GradedPolynomial
from wpgl.signature import WeightSignature

SIGS = [(1, 2), (1, 2, 3), (1, 2, 4), (2, 4), (1, 1, 2), (1, 3, 3), (1, 1)]
seeds = st.integers(0, 2**32 - 1)
cases = st.tuples(st.sampled_from(SIGS).map(WeightSignature), st.sampled_from([QQ, GF(7), GF(3)]), seeds)


def xyz(sig, ring=QQ):
    return [GradedPolynomial.var(sig, ring, i, j) for i, j in sig.variables]


def sympy_compose(F, G):
    """F∘G computed by sympy substitution, as an independent oracle."""
    xs = sympy.symbols(f"v0:{F.sig.nvars}")

    def expr(p):
        return sum((sympy.Rational(c.numerator, c.denominator) * sympy.prod([x ** k for x, k in zip(xs, e)])
                    for e, c in p.terms.items()), sympy.Integer(0))

    g_exprs = [expr(p) for p in G.images]
    return [sympy.expand(expr(p).subs(dict(zip(xs, g_exprs)), simultaneous=True)) for p in F.images], expr


@given(cases)
def test_decompose_recompose(case):
    sig, ring, seed = case
    F = random_automorphism(sig, ring, random.Random(seed))
    u, ell = decompose(F)
    assert compose(u.as_map(), ell.as_map()) == F
    factors = unipotent_factorize(u)
    assert recompose(factors, sig, ring) == u.as_map()
    for f in factors:
        assert len(f.levels()) == 1
    assert [f.levels()[0] for f in factors] == sorted(f.levels()[0] for f in factors)


@given(cases)
def test_inverse_is_two_sided(case):
    sig, ring, seed = case
    F = random_automorphism(sig, ring, random.Random(seed))
    G = invert(F)
    ident = EquivariantMap.identity(sig, ring)
    assert compose(F, G) == ident and compose(G, F) == ident


@given(cases)
def test_linear_part_is_multiplicative(case):
    sig, ring, seed = case
    rng = random.Random(seed)
    F, G = random_endomorphism(sig, ring, rng), random_endomorphism(sig, ring, rng)
    assert linear_part(compose(F, G)) == linear_part(F) * linear_part(G)


@given(st.sampled_from([(1, 2, 3), (1, 1, 2), (1, 2, 4)]).map(WeightSignature), seeds)
def test_composition_against_sympy(sig, seed):
    rng = random.Random(seed)
    F, G = random_automorphism(sig, QQ, rng), random_automorphism(sig, QQ, rng)
    want, expr = sympy_compose(F, G)
    got = [expr(p) for p in compose(F, G).images]
    assert all(sympy.expand(a - b) == 0 for a, b in zip(got, want))


@given(cases)
def test_unipotent_group_laws(case):
    sig, ring, seed = case
    rng = random.Random(seed)
    u, v = random_unipotent(sig, ring, rng), random_unipotent(sig, ring, rng)
    assert compose(u.as_map(), u.inverse().as_map()).is_identity()
    uv = Unipotent.from_map(compose(u.as_map(), v.as_map()))
    assert linear_part(uv.as_map()).is_identity()
    g = random_automorphism(sig, ring, rng)
    c = conj(g, u)
    assert compose(compose(g, u.as_map()), invert(g)) == c.as_map()


@given(st.sampled_from(SIGS).map(WeightSignature), st.sampled_from([QQ, GF(7)]), seeds)
def test_scalars_are_central(sig, ring, seed):
    rng = random.Random(seed)
    F = random_automorphism(sig, ring, rng)
    s = scalar(sig, 3, ring)
    assert compose(s, F) == compose(F, s)


def test_level_bases():
    assert level_basis(WeightSignature((1, 2, 3)), 3) == [(3, 0, 0), (1, 1, 0)]
    assert level_basis(WeightSignature((1, 2, 4)), 3) == [(4, 0, 0), (2, 1, 0), (0, 2, 0)]
    assert level_basis(WeightSignature((2, 3)), 2) == []


def test_general_element_of_123():
    sig = WeightSignature((1, 2, 3))
    x, y, z = xyz(sig)
    F = EquivariantMap(sig, QQ, [x, y + x ** 2, z + x ** 3 + x * y])
    u, ell = decompose(F)
    assert ell.is_identity()
    u2, u3 = unipotent_factorize(u)
    assert u2.coordinates(2) == [1]
    # u = u3∘u2, so u3 = u∘u2⁻¹ and the x³ term cancels
    assert u3.coordinates(3) == [0, 1]
    assert compose(u3.as_map(), u2.as_map()) == F


def test_identity_has_no_factors():
    sig = WeightSignature((1, 2, 3))
    u, ell = decompose(EquivariantMap.identity(sig, QQ))
    assert ell.is_identity() and unipotent_factorize(u) == []


def test_singular_block_rejected():
    sig = WeightSignature((1, 2, 3))
    x, y, z = xyz(sig)
    F = EquivariantMap(sig, QQ, [x.scale(0), y, z])
    assert not is_automorphism(F)
    with pytest.raises(NotAutomorphismError, match="not an automorphism"):
        decompose(F)
    one = GF(2).one
    ell = BlockLinear(WeightSignature((1, 1)), GF(2), [[[one, one], [one, one]]])
    assert not ell.is_invertible()


def test_validation_errors():
    sig = WeightSignature((1, 2, 3))
    x, y, z = xyz(sig)
    with pytest.raises(HomogeneityError):
        EquivariantMap(sig, QQ, [x, y + x, z])
    with pytest.raises(SignatureError):
        EquivariantMap(sig, QQ, [x, y])
    with pytest.raises(HomogeneityError):
        Unipotent(sig, QQ, [x.scale(0), x * x.scale(0), z])


def test_block_linear_on_equal_weights():
    sig = WeightSignature((1, 1, 2))
    h = Fraction(1, 2)
    ell = BlockLinear(sig, QQ, [[[1, 2], [3, 4]], [[h]]])
    assert ell.determinants() == [-2, h]
    assert ell * ell.inverse() == BlockLinear.identity(sig, QQ)
    assert linear_part(ell.as_map()) == ell
