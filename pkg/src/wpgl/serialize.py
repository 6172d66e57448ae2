"""JSON interchange for polynomials, equivariant maps, groups, crossed
modules, extensions and butterflies.

Every ``*_from_json`` raises :class:`MalformedError` (or a subclass of
``ValueError``) on structurally bad input; axiom checking is left to the
callers.
"""
from __future__ import annotations

import json
from typing import Any

from .automorphism import BlockLinear, EquivariantMap, Unipotent
from .butterfly import Butterfly
from .errors import MalformedError
from .fields import Field, field_from_json
from .groups import FiniteGroup
from .poly import GradedPolynomial, parse_variable, variable_name
from .signature import WeightSignature
from .xmod import CentralExtension, CrossedModule, RightAction


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# -- polynomials and maps --------------------------------------------------------


def terms_to_json(p: GradedPolynomial) -> list[dict]:
    out = []
    for e, c in p.sorted_terms():
        exps = {variable_name(i, j): k for (i, j), k in zip(p.sig.variables, e) if k}
        out.append({"exps": exps, "coeff": p.ring.format(c)})
    return out


def poly_to_json(p: GradedPolynomial) -> dict:
    return {"signature": list(p.sig.raw_weights), "field": p.ring.to_json(), "terms": terms_to_json(p)}


def poly_from_json(obj, sig: WeightSignature | None = None, ring: Field | None = None) -> GradedPolynomial:
    if isinstance(obj, list):
        obj = {"terms": obj}
    if not isinstance(obj, dict) or "terms" not in obj:
        raise MalformedError("polynomial needs a 'terms' list")
    if "signature" in obj:
        own = WeightSignature(tuple(obj["signature"]))
        if sig is not None and own != sig:
            raise MalformedError(f"polynomial signature {own} differs from {sig}")
        sig = own
    if "field" in obj:
        own_ring = field_from_json(obj["field"])
        if ring is not None and own_ring != ring:
            raise MalformedError(f"polynomial field {own_ring} differs from {ring}")
        ring = own_ring
    if sig is None or ring is None:
        raise MalformedError("polynomial without signature or field")
    terms: dict = {}
    for t in obj["terms"]:
        if not isinstance(t, dict) or "coeff" not in t:
            raise MalformedError(f"bad term {t!r}")
        e = [0] * sig.nvars
        for name, k in t.get("exps", {}).items():
            try:
                i, j = parse_variable(name)
                idx = sig.var_index(i, j)
            except ValueError as exc:
                raise MalformedError(str(exc)) from None
            if not isinstance(k, int) or k < 0:
                raise MalformedError(f"bad exponent {k!r} for {name}")
            e[idx] = k
        try:
            c = ring.parse(t["coeff"])
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedError(f"bad coefficient {t['coeff']!r}: {exc}") from None
        e = tuple(e)
        terms[e] = terms.get(e, ring.zero) + c
    return GradedPolynomial(sig, ring, terms)


def map_to_json(f: EquivariantMap) -> dict:
    return {
        "signature": list(f.sig.raw_weights),
        "field": f.ring.to_json(),
        "components": [[terms_to_json(p) for p in row] for row in f.components],
    }


def map_from_json(obj, sig: WeightSignature | None = None, ring: Field | None = None) -> EquivariantMap:
    """Decode an automorphism file. Homogeneity errors propagate unchanged."""
    if not isinstance(obj, dict) or "components" not in obj:
        raise MalformedError("map needs 'components'")
    if "signature" in obj:
        own = WeightSignature(tuple(obj["signature"]))
        if sig is not None and own != sig:
            raise MalformedError(f"map signature {own} differs from --weights {sig}")
        sig = own
    if "field" in obj:
        own_ring = field_from_json(obj["field"])
        if ring is not None and own_ring != ring:
            raise MalformedError(f"map field {own_ring} differs from --field {ring}")
        ring = own_ring
    if sig is None or ring is None:
        raise MalformedError("map without signature or field")
    rows = obj["components"]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise MalformedError("components must be a list of lists")
    table = [[poly_from_json(p, sig, ring) for p in row] for row in rows]
    return EquivariantMap.from_table(sig, ring, table)


def block_linear_to_json(ell: BlockLinear) -> list:
    return [[[ell.ring.format(x) for x in row] for row in block] for block in ell.blocks]


def unipotent_to_json(u: Unipotent, level: int | None = None) -> dict:
    out = {"shifts": [[terms_to_json(p) for p in row] for row in u.shift_table()]}
    if level is not None:
        out["level"] = level
        out["coordinates"] = [u.ring.format(c) for c in u.coordinates(level)]
    return out


# -- finite groups -----------------------------------------------------------------


def group_from_json(obj) -> FiniteGroup:
    if not isinstance(obj, dict) or "table" not in obj:
        raise MalformedError("group needs a 'table'")
    table = obj["table"]
    if not isinstance(table, list) or any(not isinstance(r, list) for r in table):
        raise MalformedError("table must be a list of lists")
    if "order" in obj and obj["order"] != len(table):
        raise MalformedError(f"declared order {obj['order']} but table has {len(table)} rows")
    return FiniteGroup(table, generators=obj.get("generators"))


def group_to_json(g: FiniteGroup) -> dict:
    return g.to_json()


def _int_list(obj, name) -> list[int]:
    if not isinstance(obj, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in obj):
        raise MalformedError(f"{name} must be a list of integers")
    return obj


def xmod_from_json(obj) -> CrossedModule:
    try:
        g1 = group_from_json(obj["G1"])
        g0 = group_from_json(obj["G0"])
        boundary = _int_list(obj["boundary"], "boundary")
        action = obj.get("action")
    except (KeyError, TypeError) as exc:
        raise MalformedError(f"crossed module missing field {exc}") from None
    if action is None or action == "trivial":
        action = RightAction.trivial(g1, g0)
    else:
        action = RightAction(g1, g0, action)
    return CrossedModule(g1, g0, boundary, action)


def xmod_to_json(xm: CrossedModule) -> dict:
    return {
        "G1": xm.g1.to_json(),
        "G0": xm.g0.to_json(),
        "boundary": list(xm.boundary),
        "action": [list(r) for r in xm.action.table],
    }


def extension_from_json(obj) -> CentralExtension:
    """{"E": group, "embed": [...], "proj": [...]} with optional "C" and "H".

    Missing C and H are reconstructed from E through the maps.
    """
    try:
        e = group_from_json(obj["E"])
        embed = _int_list(obj["embed"], "embed")
        proj = _int_list(obj["proj"], "proj")
    except (KeyError, TypeError) as exc:
        raise MalformedError(f"extension missing field {exc}") from None
    if len(proj) != e.order or any(not 0 <= y for y in proj):
        raise MalformedError("proj must have one entry per element of E")
    if any(not 0 <= x < e.order for x in embed):
        raise MalformedError("embed has entries outside E")
    if "C" in obj:
        c = group_from_json(obj["C"])
    else:
        index = {x: i for i, x in enumerate(embed)}
        if len(index) != len(embed):
            raise MalformedError("embed is not injective")
        try:
            c = FiniteGroup([[index[e.mul(x, y)] for y in embed] for x in embed])
        except KeyError:
            raise MalformedError("image of embed is not closed under multiplication") from None
    if "H" in obj:
        h = group_from_json(obj["H"])
    else:
        n = max(proj) + 1
        lifts = [proj.index(y) if y in proj else None for y in range(n)]
        if None in lifts:
            raise MalformedError("proj is not surjective onto 0..max")
        table = [[proj[e.mul(lifts[a], lifts[b])] for b in range(n)] for a in range(n)]
        h = FiniteGroup(table)
    return CentralExtension(c, e, h, embed, proj)


def extension_to_json(ext: CentralExtension) -> dict:
    return {"C": ext.c.to_json(), "E": ext.e.to_json(), "H": ext.h.to_json(),
            "embed": list(ext.embed), "proj": list(ext.proj)}


def butterfly_from_json(obj) -> Butterfly:
    try:
        source = xmod_from_json(obj["source"])
        target = xmod_from_json(obj["target"])
        e = group_from_json(obj["E"])
        maps = {name: _int_list(obj[name], name) for name in ("kappa", "iota", "sigma", "rho")}
    except (KeyError, TypeError) as exc:
        raise MalformedError(f"butterfly missing field {exc}") from None
    return Butterfly(source, target, e, **maps)


def butterfly_to_json(b: Butterfly) -> dict:
    return {
        "source": xmod_to_json(b.source),
        "target": xmod_to_json(b.target),
        "E": b.e.to_json(),
        "kappa": list(b.kappa),
        "iota": list(b.iota),
        "sigma": list(b.sigma),
        "rho": list(b.rho),
    }
