"""Small groups, crossed modules, strict morphisms and central extensions
shared by the finite 2-group tests."""
from __future__ import annotations

import itertools
from functools import lru_cache

from wpgl.butterfly import check_strict_morphism, from_strict_morphism
from wpgl.groups import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    extend_on_generators,
    quaternion_group,
    semidirect_product,
    symmetric_group,
    trivial_group,
)
from wpgl.xmod import CentralExtension, CrossedModule, RightAction


def _dicyclic3():
    # C3 x| C4, the generator of C4 inverting C3
    c3, c4 = cyclic_group(3), cyclic_group(4)
    return semidirect_product(c3, c4, lambda h, n: n if h % 2 == 0 else (-n) % 3)


@lru_cache(maxsize=None)
def groups_upto_12():
    C = cyclic_group
    out = {f"C{n}": C(n) for n in range(1, 13)}
    out.update({
        "C2xC2": direct_product(C(2), C(2)),
        "C2xC4": direct_product(C(2), C(4)),
        "C2xC2xC2": direct_product(direct_product(C(2), C(2)), C(2)),
        "C3xC3": direct_product(C(3), C(3)),
        "C2xC6": direct_product(C(2), C(6)),
        "S3": symmetric_group(3),
        "D4": dihedral_group(4),
        "Q8": quaternion_group(),
        "D5": dihedral_group(5),
        "A4": alternating_group(4),
        "D6": dihedral_group(6),
        "Dic3": _dicyclic3(),
    })
    return out


@lru_cache(maxsize=None)
def groups_upto_16():
    C = cyclic_group
    out = dict(groups_upto_12())
    out.update({
        "D7": dihedral_group(7),
        "C14": C(14),
        "C15": C(15),
        "C16": C(16),
        "C4xC4": direct_product(C(4), C(4)),
        "C2xC8": direct_product(C(2), C(8)),
        "C2xC2xC4": direct_product(direct_product(C(2), C(2)), C(4)),
        "C2^4": direct_product(direct_product(C(2), C(2)), direct_product(C(2), C(2))),
        "D8": dihedral_group(8),
        "C2xQ8": direct_product(C(2), quaternion_group()),
        "C2xD4": direct_product(C(2), dihedral_group(4)),
        "C4:C4": semidirect_product(C(4), C(4), lambda h, n: n if h % 2 == 0 else (-n) % 4),
    })
    return out


def central_extensions():
    """Every E -> E/Z for E of order <= 16 and Z a nontrivial central subgroup."""
    out = []
    for name, e in groups_upto_16().items():
        center = set(e.center())
        for sub in e.subgroups():
            if len(sub) > 1 and set(sub) <= center:
                out.append((f"{name}/{len(sub)}", CentralExtension.from_central_subgroup(e, sub)))
    return out


@lru_cache(maxsize=None)
def crossed_modules():
    """Normal-subgroup inclusions, identities and abelian groups acted on trivially."""
    gs = groups_upto_12()
    out = []
    for name, g in gs.items():
        if g.order > 8:
            continue
        out.append((f"id[{name}]", CrossedModule.identity(g)))
        for sub in g.subgroups():
            if 1 < len(sub) < g.order and g.is_normal(sub):
                out.append((f"[{len(sub)}<|{name}]", CrossedModule.from_normal_subgroup(g, sub)))
    c1, c2, c3 = cyclic_group(1), cyclic_group(2), cyclic_group(3)
    out += [
        ("[1->C2]", CrossedModule.trivial_boundary(c1, c2)),
        ("[1->S3]", CrossedModule.trivial_boundary(c1, symmetric_group(3))),
        ("[C2->1]", CrossedModule.trivial_boundary(c2, c1)),
        ("[C2->C2]0", CrossedModule.trivial_boundary(c2, c2)),
        ("[C3->C2]0", CrossedModule.trivial_boundary(c3, c2)),
        ("[C3->C2]inv", CrossedModule(c3, c2, [0, 0, 0], RightAction(c3, c2, [[0, 0], [1, 2], [2, 1]]))),
        ("[C2->C3]0", CrossedModule.trivial_boundary(c2, c3)),
    ]
    return out


def homomorphisms(dom, cod, limit=None):
    gens = dom.generators
    found = []
    for images in itertools.product(range(cod.order), repeat=len(gens)):
        f = extend_on_generators(dom, gens, images, cod)
        if f is not None:
            found.append(f)
            if limit is not None and len(found) >= limit:
                break
    return found


def strict_morphisms(h, g, limit=None):
    out = []
    for f0 in homomorphisms(h.g0, g.g0):
        for f1 in homomorphisms(h.g1, g.g1):
            if check_strict_morphism(h, g, f1, f0).ok:
                out.append((f1, f0))
                if limit is not None and len(out) >= limit:
                    return out
    return out


@lru_cache(maxsize=None)
def strict_butterflies(max_e: int = 48):
    """from_strict_morphism over pairs of corpus crossed modules.

    Up to three strict morphisms per ordered pair, |E| = |G1||H0| <= max_e.
    """
    xms = crossed_modules()
    out = []
    for (hn, h), (gn, g) in itertools.product(xms, xms):
        if g.g1.order * h.g0.order > max_e or h.g0.order * g.g0.order > 64:
            continue
        for f1, f0 in strict_morphisms(h, g, limit=3):
            out.append((f"{hn}->{gn} f1={f1} f0={f0}", from_strict_morphism(h, g, f1, f0)))
    return out


__all__ = [
    "groups_upto_12", "groups_upto_16", "central_extensions", "crossed_modules",
    "homomorphisms", "strict_morphisms", "strict_butterflies", "trivial_group",
]
