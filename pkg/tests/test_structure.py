from __future__ import annotations

from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st

from strategies import weight_lists
from wpgl.automorphism import EquivariantMap, scalar
from wpgl.errors import SignatureError
from wpgl.fields import GF
from wpgl.signature import WeightSignature
from wpgl.structure import extended_gcd, pi0_report, pi1_order, splitting_matrix


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_extended_gcd(a, b):
    g, s, u = extended_gcd(a, b)
    assert g == gcd(a, b) and s * a + u * b == g


@given(weight_lists(max_size=6, max_weight=60))
def test_pi1_order_is_gcd(ws):
    g = 0
    for w in ws:
        g = gcd(g, w)
    assert pi1_order(WeightSignature(ws)) == g


distinct_weights = st.lists(st.integers(1, 50), min_size=1, max_size=5, unique=True)


@given(distinct_weights)
def test_splitting_matrix_is_unimodular(ws):
    m = splitting_matrix(ws)
    g = 0
    for w in ws:
        g = gcd(g, w)
    assert sympy.Matrix(m).det() == 1
    assert [row[0] for row in m] == [w // g for w in ws]


def test_splitting_matrix_rejects_repeats():
    with pytest.raises(SignatureError):
        splitting_matrix([2, 2, 3])


@pytest.mark.parametrize("p", [5, 7, 11, 13])
@pytest.mark.parametrize("ws", [(1, 2), (2, 4), (3, 6, 9), (2, 2), (4, 6), (5, 10), (1, 1, 2)])
def test_scalar_kernel_is_mu_d(p, ws):
    sig = WeightSignature(ws)
    F = GF(p)
    ident = EquivariantMap.identity(sig, F)
    for lam in range(1, p):
        trivial = scalar(sig, lam, F) == ident
        assert trivial == (F.coerce(lam) ** sig.d == F.one)


@pytest.mark.parametrize(
    "ws, k, dims, d, pi0",
    [
        ((1, 2, 3), (0, 1, 2), (0, 1, 2), 1, "A^2 x| A x| Gm^2"),
        ((5, 5), (0,), (0,), 5, "PGL(2)"),
        ((2, 4), (0, 1), (0, 1), 2, "A x| Gm"),
        ((2, 3), (0, 0), (0, 0), 1, "Gm"),
        ((1, 1, 2), (0, 3), (0, 3), 1, "A^3 x| L"),
    ],
)
def test_pi0_reports(ws, k, dims, d, pi0):
    rep = pi0_report(WeightSignature(ws))
    assert rep.k == k and rep.unipotent_dims == dims
    assert rep.pi1_order == d and rep.pi0_shape == pi0


def test_split_flags():
    assert pi0_report(WeightSignature((2, 3))).split is True
    assert pi0_report(WeightSignature((2, 3))).split_witness == [[2, 1], [3, 2]]
    assert pi0_report(WeightSignature((5, 5))).split is None
    assert pi0_report(WeightSignature((1, 1))).split is True
    assert pi0_report(WeightSignature((2, 2, 4))).split is None
