from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, strategies as st

from corpus import central_extensions, strict_butterflies
from wpgl.automorphism import random_automorphism
from wpgl.errors import HomogeneityError, MalformedError
from wpgl.fields import GF, QQ
from wpgl.serialize import (
    butterfly_from_json,
    butterfly_to_json,
    dumps,
    extension_from_json,
    extension_to_json,
    map_from_json,
    map_to_json,
    poly_from_json,
    poly_to_json,
)
from wpgl.signature import WeightSignature

SIGS = [(1, 2, 3), (1, 1, 2), (2, 4), (1, 2, 4)]


@given(st.sampled_from(SIGS), st.sampled_from([QQ, GF(7)]), st.integers(0, 10**6))
def test_map_roundtrip(ws, ring, seed):
    sig = WeightSignature(ws)
    F = random_automorphism(sig, ring, random.Random(seed))
    text = dumps(map_to_json(F))
    G = map_from_json(json.loads(text))
    assert G == F
    assert dumps(map_to_json(G)) == text
    for p in F.images:
        assert poly_from_json(poly_to_json(p)) == p


def test_map_flags_must_agree():
    sig = WeightSignature((1, 2))
    obj = map_to_json(random_automorphism(sig, QQ, random.Random(1)))
    with pytest.raises(MalformedError):
        map_from_json(obj, WeightSignature((1, 3)), QQ)
    with pytest.raises(MalformedError):
        map_from_json(obj, sig, GF(5))


def test_inhomogeneous_component_rejected():
    obj = {"signature": [1, 2], "field": "Q",
           "components": [[[{"exps": {"x_1_1": 1}, "coeff": 1}]],
                          [[{"exps": {"x_2_1": 1}, "coeff": 1}, {"exps": {"x_1_1": 1}, "coeff": "1/2"}]]]}
    with pytest.raises(HomogeneityError):
        map_from_json(obj)


@pytest.mark.parametrize("bad", [
    {"signature": [1, 2], "field": "Q"},
    {"signature": [1, 2], "field": "Q", "components": [[[{"exps": {"x_3_1": 1}, "coeff": 1}]], [[]]]},
    {"signature": [1, 2], "field": "Q", "components": [[[{"exps": {"x_1_1": 1}, "coeff": 0.5}]], [[]]]},
    {"signature": [1, 2], "field": "R", "components": []},
])
def test_malformed_maps(bad):
    with pytest.raises(ValueError):
        map_from_json(bad)


def test_butterfly_and_extension_roundtrip():
    for _, b in strict_butterflies(max_e=12)[:40]:
        obj = butterfly_to_json(b)
        again = butterfly_from_json(json.loads(dumps(obj)))
        assert butterfly_to_json(again) == obj
    for _, ext in central_extensions()[:40]:
        obj = extension_to_json(ext)
        again = extension_from_json(obj)
        assert extension_to_json(again) == obj


def test_extension_derives_missing_groups():
    ext = central_extensions()[0][1]
    obj = extension_to_json(ext)
    slim = {k: obj[k] for k in ("E", "embed", "proj")}
    again = extension_from_json(slim)
    assert again.c.order == ext.c.order and again.h.order == ext.h.order


def test_malformed_butterfly():
    with pytest.raises(MalformedError):
        butterfly_from_json({"source": {}, "target": {}})
