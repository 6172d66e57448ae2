"""Structural data of small weight sequences, recomputed from the library and
compared with fixtures transcribed from the literature.

Symbolic entries (the translation parameter ``a`` of U_2, the torus
parameters ``l1, l2, ...``) are handled by running the ordinary conjugation
code over a Laurent polynomial coefficient ring.
"""
from __future__ import annotations

from .automorphism import BlockLinear, Unipotent, conj, level_basis
from .counting import count_k
from .laurent import LaurentRing
from .signature import WeightSignature
from .structure import pi0_report


def monomial_name(sig: WeightSignature, e) -> str:
    letters = "xyzwuv"
    parts = []
    for k, x in enumerate(e):
        name = letters[k] if sig.nvars <= len(letters) else f"x{k}"
        if x == 1:
            parts.append(name)
        elif x:
            parts.append(f"{name}^{x}")
    return "*".join(parts) or "1"


def coordinate_basis(sig: WeightSignature) -> list[tuple[int, int, tuple]]:
    """(level, slot, monomial) for every coordinate of U, lowest level first."""
    out = []
    for a in range(2, sig.t + 1):
        for j in range(sig.mults[a - 1]):
            for e in level_basis(sig, a):
                out.append((a, j, e))
    return out


def translation_matrix(sig: WeightSignature, a: int, b: int) -> list[list[str]]:
    """Matrix of conjugation by the U_a element with parameter ``a`` on U_b.

    Requires dim U_a = 1. Columns index the monomial basis of U_b; column j is
    the image of the j-th basis vector.
    """
    ring = LaurentRing(["a"])
    if sig.mults[a - 1] * count_k(sig, a) != 1:
        raise ValueError("translation matrix needs a one-dimensional U_a")
    g = Unipotent.from_coordinates(sig, ring, a, [ring.gen("a")])
    dim = sig.mults[b - 1] * len(level_basis(sig, b))
    cols = []
    for j in range(dim):
        unit = [ring.one if k == j else ring.zero for k in range(dim)]
        u = Unipotent.from_coordinates(sig, ring, b, unit)
        cols.append(conj(g, u).coordinates(b))
    return [[ring.format(cols[j][i]) for j in range(dim)] for i in range(dim)]


def torus_exponents(sig: WeightSignature) -> list[list[int]]:
    """Character of diag(l1, ..., lt) on each coordinate of U.

    Only meaningful when all multiplicities are 1; each basis coordinate
    must be an eigenvector, which is checked.
    """
    if any(r != 1 for r in sig.mults):
        raise ValueError("torus exponents need distinct weights")
    ring = LaurentRing([f"l{i}" for i in range(1, sig.t + 1)])
    g = BlockLinear.diagonal(sig, ring, ring.gens())
    out = []
    for a, _, e in coordinate_basis(sig):
        basis = level_basis(sig, a)
        unit = [ring.one if m == e else ring.zero for m in basis]
        image = conj(g, Unipotent.from_coordinates(sig, ring, a, unit))
        for b in range(2, sig.t + 1):
            coords = image.coordinates(b)
            for m, c in zip(level_basis(sig, b), coords):
                if (b, m) != (a, e) and c:
                    raise AssertionError("basis coordinate is not a torus eigenvector")
        c = image.coordinates(a)[basis.index(e)]
        out.append(list(c.monomial_exponents()))
    return out


def general_element(sig: WeightSignature) -> list[str]:
    """Components of a generic element of U with named coefficients a, b, c, ..."""
    names = iter("abcdefghijkmnpq")
    comps = []
    for k, (i, j) in enumerate(sig.variables):
        var = monomial_name(sig, tuple(1 if m == k else 0 for m in range(sig.nvars)))
        terms = [var] + [f"{next(names)}{monomial_name(sig, e)}" for e in level_basis(sig, i)]
        comps.append("+".join(terms))
    return comps


def describe(sig: WeightSignature, include_torus: bool = True, matrices=()) -> dict:
    rep = pi0_report(sig)
    out = {
        "signature": list(sig.raw_weights),
        "t": sig.t,
        "ranks": list(sig.mults),
        "k": list(rep.k),
        "unipotent_dims": list(rep.unipotent_dims),
        "group_shape": rep.group_shape,
        "pi0_shape": rep.pi0_shape,
        "pi1_order": rep.pi1_order,
        "split": rep.split,
        "level_bases": {str(a): [monomial_name(sig, e) for e in level_basis(sig, a)] for a in range(2, sig.t + 1)},
    }
    if sig.t >= 2 and all(r == 1 for r in sig.mults):
        out["general_element"] = general_element(sig)
    if include_torus and sig.t >= 2 and all(r == 1 for r in sig.mults):
        out["torus_exponents"] = torus_exponents(sig)
    for a, b in matrices:
        out[f"translation_matrix_{a}_{b}"] = translation_matrix(sig, a, b)
    return out


# Fixtures. ``expected`` is what the computation must reproduce; where the
# printed value disagrees with an identity that any correct value must
# satisfy, ``printed`` keeps the transcription and ``erratum`` says why the
# expected value differs.
FIXTURES = [
    {
        "id": "two weights, m < n, m does not divide n",
        "source": "G is a product of two multiplicative groups; pi0 is Gm",
        "cases": [(2, 3), (3, 5), (4, 6), (5, 7)],
        "expected": {"t": 2, "ranks": [1, 1], "unipotent_dims": [0, 0], "group_shape": "Gm^2", "pi0_shape": "Gm"},
        "pi1_is_gcd": True,
    },
    {
        "id": "two weights, m < n, m divides n",
        "source": "G = A x| (Gm x Gm), element (lambda1 x, lambda2 y + a x^(n/m)); pi0 = A x| Gm",
        "cases": [(1, 2), (2, 4), (1, 3), (3, 6), (2, 8)],
        "expected": {"t": 2, "ranks": [1, 1], "unipotent_dims": [0, 1], "group_shape": "A x| (Gm^2)",
                     "pi0_shape": "A x| Gm"},
        "torus_rule": "ratio",
    },
    {
        "id": "two equal weights",
        "source": "G = GL(2)",
        "cases": [(1, 1), (2, 2), (5, 5)],
        "expected": {"t": 1, "ranks": [2], "unipotent_dims": [0], "group_shape": "GL(2)", "pi0_shape": "PGL(2)"},
        "pi1_is_gcd": True,
    },
    {
        "id": "weights 1,2,3",
        "source": "U_2 = A, U_3 = A^2; a in U_2 acts on (b, c) by (b - ac, c); torus action on (a, b, c)",
        "cases": [(1, 2, 3)],
        "expected": {
            "k": [0, 1, 2],
            "unipotent_dims": [0, 1, 2],
            "level_bases": {"2": ["x^2"], "3": ["x^3", "x*y"]},
            "general_element": ["x", "y+ax^2", "z+bx^3+cx*y"],
            "group_shape": "A^2 x| A x| (Gm^3)",
            "translation_matrix_2_3": [["1", "-a"], ["0", "1"]],
            "torus_exponents": [[-2, 1, 0], [-3, 0, 1], [-1, -1, 1]],
        },
        "printed": {"torus_exponents": [[-2, 1, 0], [-3, 0, 1], [-2, -1, 1]]},
        "erratum": (
            "third torus character printed as l1^-2 l2^-1 l3 for the coefficient of xy; "
            "the scalar element (s, s^2, s^3) is central and must act trivially, which "
            "forces l1^-1 l2^-1 l3 (direct composition agrees)"
        ),
    },
    {
        "id": "weights 1,2,4",
        "source": "U_2 = A, U_3 = A^3; translation matrix of a on (b, c, d); torus action on (a, b, c, d)",
        "cases": [(1, 2, 4)],
        "expected": {
            "k": [0, 1, 3],
            "unipotent_dims": [0, 1, 3],
            "level_bases": {"2": ["x^2"], "3": ["x^4", "x^2*y", "y^2"]},
            "general_element": ["x", "y+ax^2", "z+bx^4+cx^2*y+dy^2"],
            "group_shape": "A^3 x| A x| (Gm^3)",
            "translation_matrix_2_3": [["1", "-a", "a^2"], ["0", "1", "-2*a"], ["0", "0", "1"]],
            "torus_exponents": [[-2, 1, 0], [-4, 0, 1], [-2, -1, 1], [0, -2, 1]],
        },
    },
]


def run_examples() -> dict:
    """Recompute every fixture; returns a payload with a flat list of diffs."""
    results = []
    diffs = []
    for fx in FIXTURES:
        for case in fx["cases"]:
            sig = WeightSignature(case)
            want = dict(fx["expected"])
            mats = [(2, 3)] if any(k.startswith("translation_matrix") for k in want) else []
            got = describe(sig, matrices=mats)
            if fx.get("torus_rule") == "ratio":
                # torus (l1, l2) scales a by l2 * l1^(-n/m)
                got["torus_exponents"] = torus_exponents(sig)
                m, n = sig.weights
                want["torus_exponents"] = [[-(n // m), 1]]
            if fx.get("pi1_is_gcd"):
                want["pi1_order"] = sig.d
            case_diffs = []
            for key, value in want.items():
                if got.get(key) != value:
                    case_diffs.append({"fixture": fx["id"], "case": list(case), "key": key,
                                       "expected": value, "computed": got.get(key)})
            diffs.extend(case_diffs)
            entry = {"fixture": fx["id"], "case": list(case), "computed": got, "match": not case_diffs}
            if "erratum" in fx:
                entry["erratum"] = fx["erratum"]
                entry["printed"] = fx["printed"]
            results.append(entry)
    return {"examples": results, "diffs": diffs, "ok": not diffs}
